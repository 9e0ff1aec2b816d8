#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "hg/witness.hpp"
#include "hg/suites.hpp"
#include "oracles.hpp"

using hg::Rat;
using hg::Subspace;
using hg::Vec;

namespace {

Vec rv(std::initializer_list<Rat> cs) { return Vec(cs); }

const hg::ClaimRow* find_row(const hg::WitnessReport& report, const std::string& id) {
  for (const auto& row : report.rows) {
    if (row.id == id) return &row;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("order-sensitive grid: one claim per index pair, all exact") {
  hg::InstabilityConfig cfg = hg::gen_instability(2);
  CHECK(cfg.structure.space.ambient_dim() == 4);
  CHECK(cfg.report.pass());
  CHECK(cfg.report.rows.size() == 4);

  // Independent enumeration: scan the generated black list directly.
  auto u = [&](std::size_t i) { return Vec::unit(4, 2 + i - 1); };
  auto v = [&](std::size_t j) { return Vec::unit(4, j - 1); };
  for (std::size_t i = 1; i <= 2; ++i) {
    for (std::size_t j = 1; j <= 2; ++j) {
      Vec probe = Rat(1, 2) * (u(i) + v(j));
      Rat expected = i <= j ? Rat(1, 2) : Rat(0);
      CHECK(oracle::dist_sq(probe, cfg.structure.blacks).truncated == expected);
    }
  }

  const hg::ClaimRow* diag = find_row(cfg.report, "i01.j01");
  REQUIRE(diag != nullptr);
  CHECK(diag->expected == Rat(1, 2));
  CHECK(diag->computed == Rat(1, 2));
  CHECK(diag->pass);
  const hg::ClaimRow* below = find_row(cfg.report, "i02.j01");
  REQUIRE(below != nullptr);
  CHECK(below->expected == Rat(0));
  CHECK(below->pass);

  CHECK(hg::gen_instability(1).report.rows.size() == 1);
  CHECK(hg::gen_instability(1).report.pass());
  for (std::size_t n = 3; n <= 6; ++n) {
    hg::InstabilityConfig big = hg::gen_instability(n);
    CHECK(big.report.pass());
    CHECK(big.report.rows.size() == n * n);
  }
  CHECK_THROWS_AS(hg::gen_instability(0), std::invalid_argument);
}

TEST_CASE("shared-line join undercuts one side's predicate at the probe") {
  hg::QeFailureConfig cfg = hg::gen_qe_failure(3);
  CHECK(cfg.report.pass());
  CHECK(cfg.report.rows.size() == 14);  // 11 fixed rows + one per ring point

  // The left predicate at the probe: black attractor c on one side of the
  // line, probe b mirrored on the other, squared gap (1/2)² between them.
  CHECK(hg::dist_black_sq(cfg.b, cfg.left).dist_sq == Rat(1, 4));
  CHECK(oracle::dist_sq(cfg.b, cfg.left.blacks).truncated == Rat(1, 4));

  // In the join, b sits 1/8 from every embedded ring black: 1/16 along the
  // line plus two orthogonal quarter-offsets.
  Vec b_joint = cfg.emb.left_map.apply(cfg.b);
  CHECK(hg::dist_black_sq(b_joint, cfg.joined).dist_sq == Rat(1, 8));
  CHECK(oracle::dist_sq(b_joint, cfg.joined.blacks).truncated == Rat(1, 8));

  // The default substructure probes do not see the failure; appending b does.
  std::vector<Vec> probes = hg::default_substructure_probes(
      cfg.left, cfg.joined, cfg.emb.left_basis_in_joint);
  CHECK(hg::check_substructure(cfg.left, cfg.joined, cfg.emb.left_basis_in_joint, probes)
            .pass);
  probes.push_back(cfg.b);
  hg::SubstructureCertificate cert =
      hg::check_substructure(cfg.left, cfg.joined, cfg.emb.left_basis_in_joint, probes);
  CHECK_FALSE(cert.pass);
  REQUIRE(cert.violation.has_value());
  CHECK(cert.violation->probe == cfg.b);
  CHECK(cert.violation->small_sq == Rat(1, 4));
  CHECK(cert.violation->big_sq == Rat(1, 8));

  // The attractor is the unique nearest black to the shared point.
  hg::DistanceCertificate acl = hg::dist_black_sq(cfg.a_left, cfg.left);
  CHECK(acl.dist_sq == Rat(1, 16));
  CHECK(acl.unique);
  REQUIRE(acl.witness.has_value());
  CHECK(*acl.witness == cfg.c);

  CHECK(hg::gen_qe_failure(2).report.pass());
  CHECK(hg::gen_qe_failure(5).report.pass());
  CHECK_THROWS_AS(hg::gen_qe_failure(1), std::invalid_argument);
}

TEST_CASE("subset gallery: flipped points are white yet half a square from black") {
  hg::NonsimpleConfig cfg = hg::gen_nonsimple(3, 4);
  CHECK(cfg.report.pass());
  CHECK(cfg.subsets.size() == 4);
  // Ordered pairs of distinct 3-subsets of a 4-set overlap in 2 elements, so
  // each pair contributes one flipped point with three claims.
  CHECK(cfg.report.rows.size() == 4 * 3 * 3);

  // Independent check of one flipped point. X = {0,1,2} is the first subset
  // lexicographically and Y = {0,1,3} the second, so j = 3, l = 2 (a₃ sits
  // at position 2 in Y), and f_X(b₂) = a₂.
  REQUIRE(cfg.subsets[0] == std::vector<std::size_t>{0, 1, 2});
  REQUIRE(cfg.subsets[1] == std::vector<std::size_t>{0, 1, 3});
  const std::size_t dim = cfg.structure.space.ambient_dim();
  REQUIRE(dim == 3 + 4 + 4);
  Vec white = Vec::unit(dim, 3 + 4 + 0) + Vec::unit(dim, 2) -
              Rat(1, 2) * Vec::unit(dim, 3 + 2);
  oracle::BruteDist brute = oracle::dist_sq(white, cfg.structure.blacks);
  CHECK(brute.raw == Rat(1));  // nearest black is exactly one unit away
  CHECK(brute.truncated == Rat(1));
  // The counterpart point carries +½a₃ where the white point carries −½a₂:
  // it differs only in the half-coordinate, at squared distance 1/2. It is
  // deliberately NOT black here — it is the point the paired configuration
  // would blacken, which is what makes the flip invisible to the predicate.
  Vec counterpart = Vec::unit(dim, 3 + 4 + 0) + Vec::unit(dim, 2) +
                    Rat(1, 2) * Vec::unit(dim, 3 + 3);
  CHECK(hg::norm_sq(white - counterpart) == Rat(1, 2));
  CHECK(cfg.structure.blacks.end() ==
        std::find(cfg.structure.blacks.begin(), cfg.structure.blacks.end(), counterpart));
  // The white point's own pattern black (+½a₂) is in the set and attains
  // the raw minimum of exactly 1.
  Vec own_black = Vec::unit(dim, 3 + 4 + 0) + Vec::unit(dim, 2) +
                  Rat(1, 2) * Vec::unit(dim, 3 + 2);
  CHECK(cfg.structure.blacks.end() !=
        std::find(cfg.structure.blacks.begin(), cfg.structure.blacks.end(), own_black));
  CHECK(hg::norm_sq(white - own_black) == Rat(1));

  const hg::ClaimRow* row = find_row(cfg.report, "x00.y01.j03.white");
  REQUIRE(row != nullptr);
  CHECK(row->computed == Rat(1));
  const hg::ClaimRow* flip = find_row(cfg.report, "x00.y01.j03.flip");
  REQUIRE(flip != nullptr);
  CHECK(flip->computed == Rat(1, 2));

  // A single subset produces no pairs: vacuous pass.
  hg::NonsimpleConfig lone = hg::gen_nonsimple(1, 1);
  CHECK(lone.report.rows.empty());
  CHECK(lone.report.pass());

  CHECK(hg::gen_nonsimple(2, 3).report.pass());
  CHECK(hg::gen_nonsimple(3, 5).report.pass());
  CHECK_THROWS_AS(hg::gen_nonsimple(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(hg::gen_nonsimple(4, 2), std::invalid_argument);
}

TEST_CASE("function enumeration is lexicographic and stops at the limit") {
  std::vector<std::vector<std::size_t>> f22 = hg::tp2_default_funcs(2, 2, 4);
  REQUIRE(f22.size() == 4);
  CHECK(f22[0] == std::vector<std::size_t>{0, 0});
  CHECK(f22[1] == std::vector<std::size_t>{0, 1});
  CHECK(f22[2] == std::vector<std::size_t>{1, 0});
  CHECK(f22[3] == std::vector<std::size_t>{1, 1});
  // Only cols^rows functions exist; asking for more returns what there is.
  CHECK(hg::tp2_default_funcs(1, 2, 5).size() == 2);
  CHECK(hg::tp2_default_funcs(4, 4, 16).size() == 16);
}

TEST_CASE("row-and-function gallery: conflicts at 1/2, pattern points split black/white") {
  std::vector<std::vector<std::size_t>> funcs = hg::tp2_default_funcs(4, 4, 16);
  hg::Tp2Config cfg = hg::gen_tp2(4, 4, funcs);
  CHECK(cfg.report.pass());
  // 4·C(4,2) row conflicts plus seven claims per (function, row).
  CHECK(cfg.report.rows.size() == 4 * 6 + 16 * 4 * 7);
  CHECK(hg::class_value(cfg.structure) == Rat(0));

  const std::size_t dim = cfg.structure.space.ambient_dim();
  REQUIRE(dim == 4 + 16 + 16);
  auto b_vec = [&](std::size_t i) { return Vec::unit(dim, i); };
  auto c_vec = [&](std::size_t i, std::size_t j) { return Vec::unit(dim, 4 + i * 4 + j); };
  auto a_vec = [&](std::size_t fi) { return Vec::unit(dim, 4 + 16 + fi); };

  // Conflict arithmetic, directly: the two half-displacements differ by 1/2.
  CHECK(hg::norm_sq(Rat(1, 2) * c_vec(0, 0) + Rat(1, 2) * c_vec(0, 1)) == Rat(1, 2));

  // One full whiteness enumeration, independently of the report.
  const std::size_t fi = 5;
  const std::size_t row = 2;
  Vec black = a_vec(fi) + b_vec(row) + Rat(1, 2) * c_vec(row, funcs[fi][row]);
  Vec white = a_vec(fi) + b_vec(row) - Rat(1, 2) * c_vec(row, funcs[fi][row]);
  CHECK(oracle::dist_sq(black, cfg.structure.blacks).truncated == Rat(0));
  oracle::BruteDist brute = oracle::dist_sq(white, cfg.structure.blacks);
  CHECK(brute.raw == Rat(1));
  CHECK(hg::norm_sq(white) == Rat(9, 4));
  for (const auto& b : cfg.structure.blacks) {
    if (b.is_zero()) continue;
    Rat d = hg::norm_sq(white - b);
    CHECK(d >= Rat(1));
    bool same_func = false;
    for (std::size_t r = 0; r < 4; ++r) {
      if (b == a_vec(fi) + b_vec(r) + Rat(1, 2) * c_vec(r, funcs[fi][r])) same_func = true;
    }
    if (same_func && !(b == black)) CHECK(d == Rat(5, 2));
    if (!same_func) CHECK(d >= Rat(2));
  }

  const hg::ClaimRow* conflict = find_row(cfg.report, "row00.c00.c01");
  REQUIRE(conflict != nullptr);
  CHECK(conflict->computed == Rat(1, 2));
  const hg::ClaimRow* origin = find_row(cfg.report, "f05.row02.origin");
  REQUIRE(origin != nullptr);
  CHECK(origin->computed == Rat(9, 4));

  CHECK(hg::gen_tp2(1, 1, {{0}}).report.pass());
  CHECK(hg::gen_tp2(2, 3, hg::tp2_default_funcs(2, 3, 9)).report.pass());
  CHECK_THROWS_AS(hg::gen_tp2(2, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(hg::gen_tp2(2, 2, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(hg::gen_tp2(2, 2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("witness perturbation stretches the residue by the exact factor") {
  Subspace base = hg::span(2, {Vec::unit(2, 0)});

  // ‖c′‖ = 1/2 and δ′ = 1/4 scale the residue by 3/2.
  Vec c = rv({Rat(3), Rat(1, 2)});
  hg::PerturbationResult res = hg::perturb_black_witness(c, base, Rat(1, 16));
  CHECK(res.exact);
  CHECK(res.perturbed == rv({Rat(3), Rat(3, 4)}));
  // Displacement identity on squares: ‖ĉ − u′‖² = (‖c′‖ + δ′)².
  CHECK(hg::norm_sq(res.perturbed - rv({Rat(3), Rat(0)})) == Rat(9, 16));

  // Zero displacement is the identity.
  hg::PerturbationResult still = hg::perturb_black_witness(c, base, Rat(0));
  CHECK(still.exact);
  CHECK(still.perturbed == c);

  // Irrational residue norm falls back to decimals within 1e-9.
  hg::PerturbationResult approx =
      hg::perturb_black_witness(rv({Rat(1), Rat(1)}), Subspace::zero(2), Rat(1, 100));
  CHECK_FALSE(approx.exact);
  const double want = 1.0 + 0.1 / std::sqrt(2.0);
  CHECK(std::abs(hg::to_double(approx.perturbed[0]) - want) < 1e-9);
  CHECK(std::abs(hg::to_double(approx.perturbed[1]) - want) < 1e-9);

  CHECK_THROWS_AS(hg::perturb_black_witness(Vec::unit(2, 0), base, Rat(1, 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(hg::perturb_black_witness(c, base, Rat(-1)), std::invalid_argument);
}

TEST_CASE("exact perturbations satisfy the norm-sum identity on random instances") {
  // Residues along (3,4)/5 keep rational norms; displacements are random
  // rational squares.
  Subspace base = hg::span(3, {Vec::unit(3, 2)});
  hg::Rng rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    Rat t = rng.rat(4, 3);
    if (t == 0) t = Rat(1);
    Rat s = rng.rat(4, 3);
    Rat d = rng.rat(3, 4);
    Vec c = rv({Rat(3, 5) * t, Rat(4, 5) * t, s});
    hg::PerturbationResult res = hg::perturb_black_witness(c, base, d * d);
    REQUIRE(res.exact);
    Rat norm_res = t < 0 ? -t : t;
    Rat delta = d < 0 ? -d : d;
    Vec u_prime = rv({Rat(0), Rat(0), s});
    CHECK(hg::norm_sq(res.perturbed - u_prime) == (norm_res + delta) * (norm_res + delta));
  }
}

TEST_CASE("axiom slack constants") {
  hg::SlackConstants slack = hg::perturbation_slack(Rat(1, 8), Rat(2));
  CHECK(slack.delta_sq == Rat(2));
  CHECK(slack.delta_prime_sq == Rat(1));

  hg::Rng rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    Rat eps(1 + static_cast<long>(rng.below(15)), 16);
    Rat ell(static_cast<long>(rng.below(9)), 2);
    hg::SlackConstants s = hg::perturbation_slack(eps, ell);
    CHECK(s.delta_sq == 4 * eps * (ell + 2));
    CHECK(s.delta_prime_sq == 2 * eps * (ell + 2));
    CHECK(s.delta_sq == 2 * s.delta_prime_sq);
  }

  CHECK_THROWS_AS(hg::perturbation_slack(Rat(0), Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(hg::perturbation_slack(Rat(1), Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(hg::perturbation_slack(Rat(1, 2), Rat(-1)), std::invalid_argument);
}
