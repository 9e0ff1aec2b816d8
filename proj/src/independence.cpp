#include "hg/independence.hpp"

#include <stdexcept>

namespace hg {

IndependenceVerdict non_dividing(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                 const Subspace& c) {
  IndependenceVerdict verdict;
  std::vector<Vec> ares, bres;
  ares.reserve(a.size());
  bres.reserve(b.size());
  for (const auto& v : a) ares.push_back(project_decompose(v, c).residue);
  for (const auto& v : b) bres.push_back(project_decompose(v, c).residue);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Rat p = inner(ares[i], bres[j]);
      if (p != 0) {
        verdict.independent = false;
        verdict.violations.push_back(ResidueViolation{a[i], b[j], p});
      }
    }
  }
  return verdict;
}

IndependenceVerdict star_independent(const Subspace& a_closure, const Subspace& b_closure,
                                     const Subspace& c_closure) {
  if (!a_closure.contains_subspace(c_closure)) {
    throw std::invalid_argument("star_independent: base closure is not inside the A-closure");
  }
  if (!b_closure.contains_subspace(c_closure)) {
    throw std::invalid_argument("star_independent: base closure is not inside the B-closure");
  }
  IndependenceVerdict verdict;
  for (const auto& a : a_closure.basis()) {
    Vec pb = project(a, b_closure);
    Vec pc = project(a, c_closure);
    if (pb != pc) {
      Vec diff = pb - pc;
      verdict.independent = false;
      verdict.violations.push_back(ResidueViolation{a, diff, norm_sq(diff)});
    }
  }
  return verdict;
}

double forking_margin(const std::vector<Vec>& a, const Subspace& big, const Subspace& small) {
  if (!big.contains_subspace(small)) {
    throw std::invalid_argument("forking_margin: small subspace is not inside big");
  }
  double margin = 0.0;
  for (const auto& v : a) {
    margin += sqrt_double(norm_sq(project(v, big)));
    margin -= sqrt_double(norm_sq(project(v, small)));
  }
  if (margin < 0 && margin > -1e-9) margin = 0.0;
  return margin;
}

}  // namespace hg
