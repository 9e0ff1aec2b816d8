#include "hg/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" + std::string(text) + "'");
  }
  Rat r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string rat_to_string(const Rat& x) {
  return x.get_str();
}

bool sqrt_exact(const Rat& x, Rat& root) {
  if (x < 0) return false;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rat(rn, rd);
  root.canonicalize();
  return true;
}

double to_double(const Rat& x) {
  return x.get_d();
}

double sqrt_double(const Rat& x_sq) {
  return std::sqrt(x_sq.get_d());
}

std::string approx_string(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "≈%.*f", digits, x);
  return buf;
}

std::string approx_sqrt_string(const Rat& x_sq, int digits) {
  return approx_string(sqrt_double(x_sq), digits);
}

}  // namespace hg
