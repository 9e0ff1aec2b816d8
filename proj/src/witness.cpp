#include "hg/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hg {

namespace {

const Rat kHalf(1, 2);
const Rat kQuarter(1, 4);

std::string pad2(std::size_t v) {
  std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

}  // namespace

// ---------- instability ----------

InstabilityConfig gen_instability(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gen_instability: n must be positive");
  const std::size_t dim = 2 * n;
  auto v = [&](std::size_t j) { return Vec::unit(dim, j); };          // v_1..v_n
  auto u = [&](std::size_t i) { return Vec::unit(dim, n + i - 1); };  // u_1..u_n

  std::vector<Vec> blacks{Vec(dim)};
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i > j) blacks.push_back(kHalf * (u(i) + v(j - 1)));
    }
  }

  InstabilityConfig config;
  config.n = n;
  config.structure = make_blackset(Subspace::full(dim), std::move(blacks));
  config.report.config = "instability";
  config.report.params = "n=" + std::to_string(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      Vec probe = kHalf * (u(i) + v(j - 1));
      Rat expected = i <= j ? kHalf : Rat(0);
      config.report.add(make_claim("i" + pad2(i) + ".j" + pad2(j), "instability.grid-dist",
                                   Rel::EQ, expected,
                                   dist_black_sq(probe, config.structure).dist_sq));
    }
  }
  config.report.sort_rows();
  return config;
}

// ---------- qe failure ----------

namespace {

// Shared-line consistency: pull every black's shadow on the line back to
// line coordinates from both sides, then compare the two restricted
// predicates on the shadow points and their midpoints.
std::vector<Vec> line_probes(const BlackSetStructure& side, const Vec& a_img) {
  Subspace line_img = span(side.space.ambient_dim(), {a_img});
  Subspace line = Subspace::full(1);
  std::vector<Vec> probes;
  probes.push_back(Vec(1));
  for (const auto& b : side.blacks) {
    probes.push_back(pull_back(line, {a_img}, project(b, line_img)));
  }
  return probes;
}

bool lipschitz_on_line(const BlackSetStructure& side, const Vec& a_img,
                       const std::vector<Vec>& probes) {
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t j = i + 1; j < probes.size(); ++j) {
      Vec pi = probes[i][0] * a_img;
      Vec pj = probes[j][0] * a_img;
      Rat di = dist_black_sq(pi, side).dist_sq;
      Rat dj = dist_black_sq(pj, side).dist_sq;
      if (!abs_diff_le_sqrt(di, dj, norm_sq(pi - pj))) return false;
    }
  }
  return true;
}

}  // namespace

QeFailureConfig gen_qe_failure(std::size_t ring) {
  if (ring < 2) throw std::invalid_argument("gen_qe_failure: need at least 2 ring points");

  QeFailureConfig config;

  // Left side: shared unit a = e0, off-line unit u = e1.
  {
    const std::size_t dim = 2;
    config.a_left = Vec::unit(dim, 0);
    config.c = config.a_left + kQuarter * Vec::unit(dim, 1);
    config.b = config.a_left - kQuarter * Vec::unit(dim, 1);
    config.left = make_blackset(Subspace::full(dim), {Vec(dim), config.c});
  }
  // Right side: shared unit a = e0, ring of blacks a + ¼e_i.
  {
    const std::size_t dim = ring + 1;
    config.a_right = Vec::unit(dim, 0);
    std::vector<Vec> blacks{Vec(dim)};
    for (std::size_t i = 1; i <= ring; ++i) {
      blacks.push_back(config.a_right + kQuarter * Vec::unit(dim, i));
    }
    config.right = make_blackset(Subspace::full(dim), std::move(blacks));
  }

  // Free join over the shared line. The base is NOT a certified substructure
  // of either side (each side's predicate on the line is shaped by off-line
  // blacks), so the join is assembled directly rather than through
  // amalgamate_blacksets — that mismatch is the point of this configuration.
  Subspace base = Subspace::full(1);
  config.emb = free_join(config.left.space, config.right.space, base, {config.a_left},
                         {config.a_right});
  std::vector<Vec> blacks;
  for (const auto& b : config.left.blacks) blacks.push_back(config.emb.left_map.apply(b));
  for (const auto& b : config.right.blacks) blacks.push_back(config.emb.right_map.apply(b));
  config.joined = make_blackset(config.emb.joint_space, std::move(blacks));

  WitnessReport& report = config.report;
  report.config = "qe-failure";
  report.params = "k=" + std::to_string(ring);

  // (1) each side's restriction to the shared line is internally consistent,
  // and the two restrictions agree.
  std::vector<Vec> probes = line_probes(config.left, config.a_left);
  {
    std::vector<Vec> right_probes = line_probes(config.right, config.a_right);
    probes.insert(probes.end(), right_probes.begin(), right_probes.end());
    std::sort(probes.begin(), probes.end(), lex_less);
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    const std::size_t n = probes.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        probes.push_back(kHalf * (probes[i] + probes[j]));
      }
    }
    std::sort(probes.begin(), probes.end(), lex_less);
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  }
  report.add_flag("01.restrict-left-consistent", "qe.line-restriction-lipschitz", true,
                  lipschitz_on_line(config.left, config.a_left, probes));
  report.add_flag("02.restrict-right-consistent", "qe.line-restriction-lipschitz", true,
                  lipschitz_on_line(config.right, config.a_right, probes));
  bool agree = true;
  for (const auto& t : probes) {
    Rat dl = dist_black_sq(t[0] * config.a_left, config.left).dist_sq;
    Rat dr = dist_black_sq(t[0] * config.a_right, config.right).dist_sq;
    if (dl != dr) agree = false;
  }
  report.add_flag("03.restrictions-agree", "qe.line-restrictions-agree", true, agree);

  // (2) the left predicate at the failure probe.
  report.add(make_claim("04.left-dist-b", "qe.left-dist-at-b", Rel::EQ, kQuarter,
                        dist_black_sq(config.b, config.left).dist_sq));

  // (3) in the join, b lands at squared distance 1/8 from every ring black.
  Vec b_joint = config.emb.left_map.apply(config.b);
  const Rat eighth(1, 8);
  for (std::size_t i = 1; i <= ring; ++i) {
    Vec ring_black = config.emb.right_map.apply(config.a_right +
                                                kQuarter * Vec::unit(ring + 1, i));
    report.add(make_claim("05.ring-dist.i" + pad2(i), "qe.join-ring-dist", Rel::EQ, eighth,
                          norm_sq(b_joint - ring_black)));
  }
  Rat joined_at_b = dist_black_sq(b_joint, config.joined).dist_sq;
  report.add(make_claim("06.join-dist-b", "qe.join-dist-at-b", Rel::EQ, eighth, joined_at_b));
  report.add(make_claim("07.join-undercuts-left", "qe.join-undercuts-left", Rel::LT, kQuarter,
                        joined_at_b));

  // (4) the left-in-join substructure certificate fails exactly at b.
  {
    std::vector<Vec> cert_probes = default_substructure_probes(
        config.left, config.joined, config.emb.left_basis_in_joint);
    cert_probes.push_back(config.b);
    SubstructureCertificate cert = check_substructure(
        config.left, config.joined, config.emb.left_basis_in_joint, cert_probes);
    report.add_flag("08.join-extends-left", "qe.join-extends-left-at-b", false, cert.pass);
    bool at_b = cert.violation.has_value() && cert.violation->probe == config.b;
    report.add_flag("09.violation-probe-is-b", "qe.join-extends-left-at-b", true, at_b);
  }

  // (5) the attractor is the unique nearest black to the shared unit point.
  DistanceCertificate acl = dist_black_sq(config.a_left, config.left);
  report.add(make_claim("10.acl-dist-at-a", "qe.nearest-black-dist", Rel::EQ, Rat(1, 16),
                        acl.dist_sq));
  report.add_flag("11.acl-unique-at-a", "qe.nearest-black-unique", true, acl.unique);
  report.add_flag("12.acl-witness-is-c", "qe.nearest-black-witness", true,
                  acl.witness.has_value() && *acl.witness == config.c);

  report.sort_rows();
  return config;
}

// ---------- nonsimple ----------

namespace {

std::vector<std::vector<std::size_t>> k_subsets(std::size_t k, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    if (next >= m) return;
    if (m - next < k - current.size()) return;
    current.push_back(next);
    self(self, next + 1);
    current.pop_back();
    self(self, next + 1);
  };
  rec(rec, 0);
  return out;
}

}  // namespace

NonsimpleConfig gen_nonsimple(std::size_t k, std::size_t m) {
  if (k == 0 || k > m) {
    throw std::invalid_argument("gen_nonsimple: need 1 <= k <= m (otherwise no k-subsets)");
  }

  NonsimpleConfig config;
  config.k = k;
  config.m = m;
  config.subsets = k_subsets(k, m);

  const std::size_t num_subsets = config.subsets.size();
  const std::size_t dim = k + m + num_subsets;
  auto b_vec = [&](std::size_t i) { return Vec::unit(dim, i); };          // i < k
  auto a_vec = [&](std::size_t j) { return Vec::unit(dim, k + j); };      // j < m
  auto c_vec = [&](std::size_t x) { return Vec::unit(dim, k + m + x); };  // x < #subsets
  // f_X(b_i) = a_{X[i]}: i-th basis direction pairs with the i-th smallest
  // member of X.
  auto f = [&](std::size_t x, std::size_t i) { return a_vec(config.subsets[x][i]); };

  std::vector<Vec> blacks{Vec(dim)};
  for (std::size_t x = 0; x < num_subsets; ++x) {
    for (std::size_t i = 0; i < k; ++i) {
      blacks.push_back(c_vec(x) + b_vec(i) + kHalf * f(x, i));
    }
  }
  config.structure = make_blackset(Subspace::full(dim), std::move(blacks));

  WitnessReport& report = config.report;
  report.config = "nonsimple";
  report.params = "k=" + std::to_string(k) + ",m=" + std::to_string(m);

  for (std::size_t x = 0; x < num_subsets; ++x) {
    for (std::size_t y = 0; y < num_subsets; ++y) {
      if (x == y) continue;
      for (std::size_t j : config.subsets[y]) {
        bool in_x = false;
        for (std::size_t e : config.subsets[x]) in_x |= e == j;
        if (in_x) continue;
        // j ∈ Y∖X; l = the b-index Y pairs with a_j; a_kp = f_X(b_l).
        std::size_t l = 0;
        while (config.subsets[y][l] != j) ++l;
        Vec a_kp = f(x, l);
        Vec white = c_vec(x) + b_vec(l) - kHalf * a_kp;
        Vec black = c_vec(x) + b_vec(l) + kHalf * a_vec(j);
        std::string stem = "x" + pad2(x) + ".y" + pad2(y) + ".j" + pad2(j);
        DistanceCertificate cert = dist_black_sq(white, config.structure);
        report.add(make_claim(stem + ".white", "nonsimple.flip-point-white", Rel::EQ, Rat(1),
                              cert.dist_sq));
        report.add(make_claim(stem + ".white-raw", "nonsimple.flip-point-min-raw", Rel::GE,
                              Rat(1), *cert.raw_sq));
        report.add(make_claim(stem + ".flip", "nonsimple.flip-vs-black-dist", Rel::EQ, kHalf,
                              norm_sq(white - black)));
      }
    }
  }
  report.sort_rows();
  return config;
}

// ---------- tp2 ----------

std::vector<std::vector<std::size_t>> tp2_default_funcs(std::size_t rows, std::size_t cols,
                                                        std::size_t count) {
  std::vector<std::vector<std::size_t>> funcs;
  std::vector<std::size_t> f(rows, 0);
  for (std::size_t n = 0; n < count; ++n) {
    funcs.push_back(f);
    // lexicographic successor, last row fastest
    std::size_t i = rows;
    while (i > 0) {
      --i;
      if (++f[i] < cols) break;
      f[i] = 0;
      if (i == 0) return funcs;  // wrapped: fewer than `count` exist
    }
  }
  return funcs;
}

Tp2Config gen_tp2(std::size_t rows, std::size_t cols,
                  const std::vector<std::vector<std::size_t>>& funcs) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("gen_tp2: rows and cols must be positive");
  if (funcs.empty()) throw std::invalid_argument("gen_tp2: need at least one function");
  for (const auto& f : funcs) {
    if (f.size() != rows) throw std::invalid_argument("gen_tp2: function arity != rows");
    for (std::size_t v : f) {
      if (v >= cols) throw std::invalid_argument("gen_tp2: function value out of range");
    }
  }

  Tp2Config config;
  config.rows = rows;
  config.cols = cols;
  config.funcs = funcs;

  const std::size_t dim = rows + rows * cols + funcs.size();
  auto b_vec = [&](std::size_t i) { return Vec::unit(dim, i); };
  auto c_vec = [&](std::size_t i, std::size_t j) { return Vec::unit(dim, rows + i * cols + j); };
  auto a_vec = [&](std::size_t fi) { return Vec::unit(dim, rows + rows * cols + fi); };

  std::vector<Vec> blacks{Vec(dim)};
  for (std::size_t fi = 0; fi < funcs.size(); ++fi) {
    for (std::size_t i = 0; i < rows; ++i) {
      blacks.push_back(a_vec(fi) + b_vec(i) + kHalf * c_vec(i, funcs[fi][i]));
    }
  }
  config.structure = make_blackset(Subspace::full(dim), std::move(blacks));

  WitnessReport& report = config.report;
  report.config = "tp2";
  report.params = "rows=" + std::to_string(rows) + ",cols=" + std::to_string(cols) +
                  ",funcs=" + std::to_string(funcs.size());

  // Claim 1: within a row, any two column displacements conflict at 1/2.
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t l = j + 1; l < cols; ++l) {
        report.add(make_claim(
            "row" + pad2(i) + ".c" + pad2(j) + ".c" + pad2(l), "tp2.row-conflict", Rel::EQ,
            kHalf, norm_sq(kHalf * c_vec(i, j) - (-kHalf * c_vec(i, l)))));
      }
    }
  }

  // Claim 2: the +½ pattern point is black; the −½ point is exactly white,
  // exhaustively against every black point and the origin.
  for (std::size_t fi = 0; fi < funcs.size(); ++fi) {
    for (std::size_t i = 0; i < rows; ++i) {
      std::string stem = "f" + pad2(fi) + ".row" + pad2(i);
      Vec black = a_vec(fi) + b_vec(i) + kHalf * c_vec(i, funcs[fi][i]);
      Vec white = a_vec(fi) + b_vec(i) - kHalf * c_vec(i, funcs[fi][i]);
      report.add(make_claim(stem + ".black", "tp2.pattern-point-black", Rel::EQ, Rat(0),
                            dist_black_sq(black, config.structure).dist_sq));
      DistanceCertificate cert = dist_black_sq(white, config.structure);
      report.add(make_claim(stem + ".white", "tp2.white-point", Rel::EQ, Rat(1),
                            cert.dist_sq));
      report.add(make_claim(stem + ".white-raw", "tp2.white-min-raw", Rel::GE, Rat(1),
                            *cert.raw_sq));
      report.add(make_claim(stem + ".own", "tp2.white-vs-own-black", Rel::EQ, Rat(1),
                            norm_sq(white - black)));
      report.add(make_claim(stem + ".origin", "tp2.white-vs-origin", Rel::EQ, Rat(9, 4),
                            norm_sq(white)));
      if (rows > 1) {
        std::size_t other = i == 0 ? 1 : 0;
        Vec same_f = a_vec(fi) + b_vec(other) + kHalf * c_vec(other, funcs[fi][other]);
        report.add(make_claim(stem + ".same-f", "tp2.white-vs-same-func", Rel::EQ, Rat(5, 2),
                              norm_sq(white - same_f)));
      }
      if (funcs.size() > 1) {
        Rat best(-1);
        for (std::size_t gi = 0; gi < funcs.size(); ++gi) {
          if (gi == fi) continue;
          for (std::size_t r = 0; r < rows; ++r) {
            Vec q = a_vec(gi) + b_vec(r) + kHalf * c_vec(r, funcs[gi][r]);
            Rat d = norm_sq(white - q);
            if (best < 0 || d < best) best = d;
          }
        }
        report.add(make_claim(stem + ".other-f", "tp2.white-vs-other-funcs", Rel::GE, Rat(2),
                              best));
      }
    }
  }
  report.sort_rows();
  return config;
}

// ---------- perturbation ----------

PerturbationResult perturb_black_witness(const Vec& c, const Subspace& base,
                                         const Rat& delta_prime_sq) {
  if (delta_prime_sq < 0) {
    throw std::invalid_argument("perturb_black_witness: negative squared displacement");
  }
  Decomposition d = project_decompose(c, base);
  if (d.residue.is_zero()) {
    throw std::invalid_argument(
        "perturb_black_witness: point lies in the base, no residue direction");
  }
  PerturbationResult result;
  result.original = c;
  result.delta_prime_sq = delta_prime_sq;

  Rat norm_c, delta_prime;
  if (sqrt_exact(norm_sq(d.residue), norm_c) && sqrt_exact(delta_prime_sq, delta_prime)) {
    Rat factor = 1 + delta_prime / norm_c;
    result.perturbed = d.proj + factor * d.residue;
    result.exact = true;
    return result;
  }

  double factor = 1.0 + sqrt_double(delta_prime_sq) / sqrt_double(norm_sq(d.residue));
  Vec approx(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    approx[i] = d.proj[i] + Rat(to_double(d.residue[i]) * factor);
  }
  result.perturbed = approx;
  result.exact = false;
  return result;
}

SlackConstants perturbation_slack(const Rat& eps, const Rat& L) {
  if (eps <= 0 || eps >= 1) {
    throw std::invalid_argument("perturbation_slack: eps must lie strictly between 0 and 1");
  }
  if (L < 0) throw std::invalid_argument("perturbation_slack: L must be nonnegative");
  return SlackConstants{4 * eps * (L + 2), 2 * eps * (L + 2)};
}

}  // namespace hg
