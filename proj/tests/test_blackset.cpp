#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hg/blackset.hpp"
#include "hg/suites.hpp"
#include "oracles.hpp"

using hg::BlackSetStructure;
using hg::Rat;
using hg::Subspace;
using hg::Vec;

namespace {

Vec rv(std::initializer_list<Rat> cs) { return Vec(cs); }

Vec random_vec(hg::Rng& rng, std::size_t dim) {
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rng.rat(3, 4);
  return v;
}

BlackSetStructure random_blackset(hg::Rng& rng, std::size_t dim, std::size_t max_blacks) {
  std::vector<Vec> blacks{Vec(dim)};
  for (std::size_t i = 0, n = rng.below(max_blacks); i < n; ++i) {
    blacks.push_back(random_vec(rng, dim));
  }
  return hg::make_blackset(Subspace::full(dim), std::move(blacks));
}

}  // namespace

TEST_CASE("construction validates membership and canonicalizes the black list") {
  CHECK_THROWS_AS(hg::make_blackset(hg::span(2, {Vec::unit(2, 0)}), {Vec::unit(2, 1)}),
                  std::invalid_argument);

  BlackSetStructure s = hg::make_blackset(
      Subspace::full(1), {rv({Rat(1)}), rv({Rat(0)}), rv({Rat(1)})});
  REQUIRE(s.blacks.size() == 2);
  CHECK(s.blacks[0] == rv({Rat(0)}));
  CHECK(s.blacks[1] == rv({Rat(1)}));
}

TEST_CASE("distance certificates match the linear-scan oracle") {
  BlackSetStructure s =
      hg::make_blackset(Subspace::full(2), {Vec(2), Vec::unit(2, 0)});

  hg::DistanceCertificate member = hg::dist_black_sq(Vec::unit(2, 0), s);
  CHECK(member.dist_sq == Rat(0));
  CHECK(member.raw_sq == Rat(0));
  CHECK(member.witness == Vec::unit(2, 0));
  CHECK(member.unique);

  // Equidistant from both blacks: certified non-unique.
  hg::DistanceCertificate mid = hg::dist_black_sq(rv({Rat(1, 2), Rat(0)}), s);
  CHECK(mid.dist_sq == Rat(1, 4));
  CHECK_FALSE(mid.unique);

  // Far away: truncated to 1 while the raw value is kept.
  hg::DistanceCertificate far = hg::dist_black_sq(rv({Rat(0), Rat(5)}), s);
  CHECK(far.dist_sq == Rat(1));
  CHECK(far.raw_sq == Rat(25));

  CHECK_THROWS_AS(hg::dist_black_sq(Vec(3), s), std::invalid_argument);

  // No blacks at all: constant distance 1, no witness.
  BlackSetStructure empty = hg::make_blackset(Subspace::full(1), {});
  hg::DistanceCertificate none = hg::dist_black_sq(rv({Rat(3)}), empty);
  CHECK(none.dist_sq == Rat(1));
  CHECK_FALSE(none.raw_sq.has_value());
  CHECK_FALSE(none.witness.has_value());

  hg::Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    BlackSetStructure t = random_blackset(rng, 1 + rng.below(4), 6);
    Vec p = random_vec(rng, t.space.ambient_dim());
    hg::DistanceCertificate cert = hg::dist_black_sq(p, t);
    oracle::BruteDist ref = oracle::dist_sq(p, t.blacks);
    CHECK(cert.dist_sq == ref.truncated);
    CHECK(cert.raw_sq == ref.raw);
    if (cert.witness) CHECK(hg::norm_sq(p - *cert.witness) == *cert.raw_sq);
  }
}

TEST_CASE("class value is the squared distance at the origin") {
  CHECK(hg::class_value(hg::make_blackset(Subspace::full(1), {Vec(1)})) == Rat(0));
  CHECK(hg::class_value(hg::make_blackset(Subspace::full(1), {rv({Rat(1)})})) == Rat(1));
  CHECK(hg::class_value(hg::make_blackset(Subspace::full(1), {rv({Rat(1, 2)})})) == Rat(1, 4));
}

TEST_CASE("square-root comparisons are decided exactly on squares") {
  // Oracle: on perfect squares x², y² the claim |x−y| ≤ √c is (x−y)² ≤ c.
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      Rat x(i, 4), y(j, 4);
      for (int c = 0; c <= 6; ++c) {
        Rat c_sq(c, 4);
        bool expected = (x - y) * (x - y) <= c_sq;
        CHECK(hg::abs_diff_le_sqrt(x * x, y * y, c_sq) == expected);
      }
    }
  }
  // Irrational norms still compare exactly: |√2 − √2| = 0 and √2 ≤ √2.
  CHECK(hg::abs_diff_le_sqrt(Rat(2), Rat(2), Rat(0)));
  CHECK(hg::abs_diff_le_sqrt(Rat(2), Rat(0), Rat(2)));
  CHECK_FALSE(hg::abs_diff_le_sqrt(Rat(2), Rat(0), Rat(199, 100)));
}

TEST_CASE("axiom certificates validate tables and the Lipschitz bound") {
  BlackSetStructure s = hg::make_blackset(
      Subspace::full(2), {Vec(2), Vec::unit(2, 0), Vec::unit(2, 1)});
  std::vector<Vec> probes = hg::default_axiom_probes(s);

  // Probe list includes every black and their midpoints.
  for (const auto& b : s.blacks) {
    CHECK(std::count(probes.begin(), probes.end(), b) == 1);
  }
  CHECK(std::count(probes.begin(), probes.end(), rv({Rat(1, 2), Rat(1, 2)})) == 1);

  hg::AxiomCertificate plain = hg::check_axioms(s, {}, probes);
  CHECK(plain.pass);
  CHECK_FALSE(plain.incomplete);
  CHECK(plain.lipschitz_pairs_checked > 0);

  // A correct self-reported table is accepted ...
  std::vector<hg::TableEntry> table;
  for (const auto& p : probes) table.push_back({p, hg::dist_black_sq(p, s).dist_sq});
  CHECK(hg::check_axioms(s, table, probes).pass);

  // ... and a single nudged entry is caught and cited.
  table[1].claimed_sq += Rat(1, 100);
  hg::AxiomCertificate faulted = hg::check_axioms(s, table, probes);
  CHECK_FALSE(faulted.pass);
  REQUIRE(faulted.table_fault.has_value());
  CHECK(faulted.table_fault->point == table[1].point);
  CHECK(faulted.table_fault->claimed_sq == table[1].claimed_sq);
  CHECK(faulted.table_fault->actual_sq == table[1].claimed_sq - Rat(1, 100));

  hg::AxiomCertificate vacuous = hg::check_axioms(s, {}, {});
  CHECK(vacuous.pass);
  CHECK(vacuous.incomplete);
}

TEST_CASE("axioms hold on random structures") {
  hg::Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    BlackSetStructure s = random_blackset(rng, 1 + rng.below(4), 5);
    std::vector<Vec> probes = hg::default_axiom_probes(s);
    for (int k = 0; k < 5; ++k) probes.push_back(random_vec(rng, s.space.ambient_dim()));
    CHECK(hg::check_axioms(s, {}, probes).pass);
  }
}

TEST_CASE("adding a black point never increases any distance") {
  hg::Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t dim = 1 + rng.below(4);
    BlackSetStructure s = random_blackset(rng, dim, 5);
    std::vector<Vec> more = s.blacks;
    more.push_back(random_vec(rng, dim));
    BlackSetStructure bigger = hg::make_blackset(s.space, more);
    for (int k = 0; k < 8; ++k) {
      Vec p = random_vec(rng, dim);
      CHECK(hg::dist_black_sq(p, bigger).dist_sq <= hg::dist_black_sq(p, s).dist_sq);
    }
  }
}

TEST_CASE("substructure certificates accept coordinate restrictions") {
  BlackSetStructure small =
      hg::make_blackset(Subspace::full(1), {Vec(1), rv({Rat(1)})});
  BlackSetStructure big = hg::make_blackset(
      Subspace::full(2), {Vec(2), Vec::unit(2, 0), Vec::unit(2, 1)});
  std::vector<Vec> images{Vec::unit(2, 0)};

  std::vector<Vec> probes = hg::default_substructure_probes(small, big, images);
  hg::SubstructureCertificate cert = hg::check_substructure(small, big, images, probes);
  CHECK(cert.pass);
  CHECK_FALSE(cert.incomplete);
  CHECK(cert.probes_checked == probes.size());

  hg::SubstructureCertificate vac = hg::check_substructure(small, big, images, {});
  CHECK(vac.pass);
  CHECK(vac.incomplete);

  CHECK_THROWS_AS(
      hg::check_substructure(small, big, {Rat(2) * Vec::unit(2, 0)}, probes),
      std::invalid_argument);
}

TEST_CASE("substructure certificates expose an off-line attractor") {
  // The big structure has a black just off the embedded line; at the shadow
  // point the line structure says 1 while the plane says 1/16.
  BlackSetStructure small = hg::make_blackset(Subspace::full(1), {Vec(1)});
  BlackSetStructure big = hg::make_blackset(
      Subspace::full(2), {Vec(2), rv({Rat(1), Rat(1, 4)})});
  std::vector<Vec> images{Vec::unit(2, 0)};

  std::vector<Vec> probes = hg::default_substructure_probes(small, big, images);
  hg::SubstructureCertificate cert = hg::check_substructure(small, big, images, probes);
  CHECK_FALSE(cert.pass);
  REQUIRE(cert.violation.has_value());
  CHECK(cert.violation->probe == rv({Rat(1)}));
  CHECK(cert.violation->small_sq == Rat(1));
  CHECK(cert.violation->big_sq == Rat(1, 16));
}

TEST_CASE("orthogonal join keeps both predicates and the right black count") {
  BlackSetStructure s1 = hg::make_blackset(Subspace::full(1), {Vec(1), rv({Rat(1)})});
  BlackSetStructure s2 = hg::make_blackset(Subspace::full(1), {Vec(1), rv({Rat(1)})});
  hg::OrthogonalJoin join = hg::join_orthogonal(s1, s2);

  CHECK(join.joined.blacks.size() == 3);  // the shared origin collapses
  CHECK(join.left_cert.pass);
  CHECK(join.right_cert.pass);
  CHECK(hg::class_value(join.joined) == Rat(0));

  // Midpoint of the two side blacks sits at squared distance 1/2.
  Vec mid = Rat(1, 2) * (join.emb.left_map.apply(rv({Rat(1)})) +
                         join.emb.right_map.apply(rv({Rat(1)})));
  CHECK(hg::dist_black_sq(mid, join.joined).dist_sq == Rat(1, 2));
  CHECK(oracle::dist_sq(mid, join.joined.blacks).truncated == Rat(1, 2));

  // Joining with a zero-dimensional structure copies the other side.
  BlackSetStructure point = hg::make_blackset(Subspace::zero(1), {Vec(1)});
  hg::OrthogonalJoin copy = hg::join_orthogonal(s1, point);
  CHECK(copy.joined.space.dim() == 1);
  CHECK(copy.joined.blacks.size() == 2);

  // A missing black origin is refused.
  BlackSetStructure off = hg::make_blackset(Subspace::full(1), {rv({Rat(1)})});
  CHECK_THROWS_AS(hg::join_orthogonal(s1, off), std::invalid_argument);
}

TEST_CASE("orthogonal join is symmetric up to swapping the two blocks") {
  hg::Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t d1 = 1 + rng.below(3);
    std::size_t d2 = 1 + rng.below(3);
    BlackSetStructure s1 = random_blackset(rng, d1, 4);
    BlackSetStructure s2 = random_blackset(rng, d2, 4);
    hg::OrthogonalJoin j12 = hg::join_orthogonal(s1, s2);
    hg::OrthogonalJoin j21 = hg::join_orthogonal(s2, s1);

    auto swap_blocks = [&](const Vec& v) {
      Vec w(v.dim());
      for (std::size_t i = 0; i < d2; ++i) w[i] = v[d1 + i];
      for (std::size_t i = 0; i < d1; ++i) w[d2 + i] = v[i];
      return w;
    };
    std::vector<Vec> swapped;
    for (const auto& b : j12.joined.blacks) swapped.push_back(swap_blocks(b));
    std::sort(swapped.begin(), swapped.end(), hg::lex_less);
    CHECK(swapped == j21.joined.blacks);
  }
}

TEST_CASE("the amalgam formula reproduces the union distance in the worked example") {
  BlackSetStructure base = hg::make_blackset(Subspace::zero(1), {Vec(1)});
  BlackSetStructure left = hg::make_blackset(Subspace::full(1), {Vec(1), rv({Rat(1)})});
  BlackSetStructure right = hg::make_blackset(Subspace::full(1), {Vec(1), rv({Rat(1)})});

  hg::BlackSetAmalgam am = hg::amalgamate_blacksets(base, left, right, {}, {});
  CHECK(am.base_in_left.pass);
  CHECK(am.base_in_right.pass);

  Vec e1 = am.emb.left_map.apply(rv({Rat(1)}));
  Vec e2 = am.emb.right_map.apply(rv({Rat(1)}));

  // Both branch terms evaluate to 1 at the cross point, as does the union:
  // the nearest black is an embedded side black one unit away, while the
  // shared origin sits at squared distance 2.
  Vec cross = e1 + e2;
  CHECK(am.formula_dist_sq(cross) == Rat(1));
  CHECK(hg::dist_black_sq(cross, am.joined).dist_sq == Rat(1));
  CHECK(oracle::dist_sq(cross, am.joined.blacks).raw == Rat(1));
  CHECK(hg::norm_sq(cross) == Rat(2));

  // On an embedded side the amalgam distance is the side distance.
  for (const Rat& t : {Rat(1, 2), Rat(3, 4), Rat(-1, 2), Rat(2)}) {
    Vec p = am.emb.left_map.apply(rv({t}));
    CHECK(am.formula_dist_sq(p) == hg::dist_black_sq(rv({t}), left).dist_sq);
    CHECK(hg::dist_black_sq(p, am.joined).dist_sq ==
          hg::dist_black_sq(rv({t}), left).dist_sq);
  }
}

TEST_CASE("amalgamating a structure with itself over itself changes nothing") {
  BlackSetStructure s0 = hg::make_blackset(Subspace::zero(1), {Vec(1)});
  hg::BlackSetAmalgam am = hg::amalgamate_blacksets(s0, s0, s0, {}, {});
  CHECK(am.joined.space.dim() == 0);
  REQUIRE(am.joined.blacks.size() == 1);
  CHECK(am.joined.blacks[0].is_zero());
}

TEST_CASE("amalgam construction rejects inconsistent inputs") {
  BlackSetStructure base = hg::make_blackset(Subspace::full(1), {Vec(1)});
  BlackSetStructure fits =
      hg::make_blackset(Subspace::full(2), {Vec(2), Vec::unit(2, 1)});
  // The base line runs straight into an off-line attractor: not a
  // substructure, so the amalgam must refuse.
  BlackSetStructure attractor = hg::make_blackset(
      Subspace::full(2), {Vec(2), rv({Rat(1), Rat(1, 4)})});
  CHECK_THROWS_AS(hg::amalgamate_blacksets(base, attractor, fits, {Vec::unit(2, 0)},
                                           {Vec::unit(2, 0)}),
                  std::invalid_argument);

  // Sides that disagree at the shared origin are refused (the origin is
  // always on the default probe grid, so this surfaces as a substructure
  // violation before the class comparison even runs).
  BlackSetStructure base_off = hg::make_blackset(Subspace::full(1), {rv({Rat(2)})});
  BlackSetStructure side_off =
      hg::make_blackset(Subspace::full(2), {rv({Rat(2), Rat(0)})});
  BlackSetStructure side_on =
      hg::make_blackset(Subspace::full(2), {Vec(2), rv({Rat(2), Rat(0)})});
  CHECK_THROWS_AS(hg::amalgamate_blacksets(base_off, side_off, side_on, {Vec::unit(2, 0)},
                                           {Vec::unit(2, 0)}),
                  std::invalid_argument);
}

TEST_CASE("amalgam formula equals the union distance on random substructure instances") {
  hg::Rng rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    // Base: a full line with blacks {0, 2}; sides extend it by one fresh
    // coordinate each and add a far-out black in the fresh direction, which
    // cannot disturb any base distance (everything new is at least 1 away).
    BlackSetStructure base =
        hg::make_blackset(Subspace::full(1), {Vec(1), rv({Rat(2)})});
    std::vector<Vec> left_blacks{Vec(2), rv({Rat(2), Rat(0)})};
    left_blacks.push_back(rv({rng.rat(2, 2), Rat(2) + rng.rat(1, 2)}));
    BlackSetStructure left = hg::make_blackset(Subspace::full(2), left_blacks);
    std::vector<Vec> right_blacks{Vec(2), rv({Rat(2), Rat(0)})};
    right_blacks.push_back(rv({rng.rat(2, 2), Rat(2) + rng.rat(1, 2)}));
    BlackSetStructure right = hg::make_blackset(Subspace::full(2), right_blacks);

    hg::BlackSetAmalgam am = hg::amalgamate_blacksets(
        base, left, right, {Vec::unit(2, 0)}, {Vec::unit(2, 0)});

    std::vector<Vec> probes = hg::default_axiom_probes(am.joined);
    for (int k = 0; k < 10; ++k) {
      probes.push_back(hg::project(random_vec(rng, am.emb.joint_ambient_dim),
                                   am.emb.joint_space));
    }
    for (const auto& p : probes) {
      oracle::BruteDist ref = oracle::dist_sq(p, am.joined.blacks);
      CHECK(am.formula_dist_sq(p) == ref.truncated);
      CHECK(hg::dist_black_sq(p, am.joined).dist_sq == ref.truncated);
    }

    // Restriction to either side on that side's default probe grid.
    hg::SubstructureCertificate lc = hg::check_substructure(
        left, am.joined, am.emb.left_basis_in_joint,
        hg::default_substructure_probes(left, am.joined, am.emb.left_basis_in_joint));
    hg::SubstructureCertificate rc = hg::check_substructure(
        right, am.joined, am.emb.right_basis_in_joint,
        hg::default_substructure_probes(right, am.joined, am.emb.right_basis_in_joint));
    CHECK(lc.pass);
    CHECK(rc.pass);
  }
}

TEST_CASE("independent union joins several parts over a shared base") {
  BlackSetStructure base = hg::make_blackset(Subspace::zero(1), {Vec(1)});
  std::vector<BlackSetStructure> parts(
      3, hg::make_blackset(Subspace::full(1), {Vec(1), rv({Rat(1)})}));
  std::vector<std::vector<Vec>> base_images(3);

  hg::IndependentUnion u = hg::independent_union_amalgam(base, parts, base_images);
  CHECK(u.joined.space.dim() == 3);
  CHECK(u.joined.blacks.size() == 4);
  for (const auto& cert : u.part_certs) CHECK(cert.pass);

  // The all-ones corner: raw squared distance 2 to each unit black,
  // truncated to 1.
  Vec corner(u.joined.space.ambient_dim());
  for (std::size_t i = 0; i < 3; ++i) {
    corner = corner + hg::push_forward(parts[i].space, u.part_images[i], rv({Rat(1)}));
  }
  hg::DistanceCertificate cert = hg::dist_black_sq(corner, u.joined);
  CHECK(cert.dist_sq == Rat(1));
  CHECK(cert.raw_sq == Rat(2));
  CHECK(oracle::dist_sq(corner, u.joined.blacks).raw == Rat(2));

  // With two parts the union is exactly the binary amalgam.
  hg::IndependentUnion two = hg::independent_union_amalgam(
      base, {parts[0], parts[1]}, {{}, {}});
  hg::BlackSetAmalgam am = hg::amalgamate_blacksets(base, parts[0], parts[1], {}, {});
  CHECK(two.joined.blacks == am.joined.blacks);
  CHECK(two.joined.space.dim() == am.joined.space.dim());

  CHECK_THROWS_AS(hg::independent_union_amalgam(base, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(hg::independent_union_amalgam(base, parts, {{}, {}}),
                  std::invalid_argument);
}
