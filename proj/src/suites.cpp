#include "hg/suites.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hg/blackset.hpp"
#include "hg/independence.hpp"
#include "hg/linalg.hpp"
#include "hg/pairs.hpp"
#include "hg/witness.hpp"

namespace hg {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  return static_cast<std::size_t>(next() % n);
}

Rat Rng::rat(unsigned max_num, unsigned max_den) {
  long num = static_cast<long>(below(2 * static_cast<std::size_t>(max_num) + 1)) -
             static_cast<long>(max_num);
  unsigned long den = below(max_den) + 1;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::string pad3(std::size_t v) {
  std::string s = std::to_string(v);
  while (s.size() < 3) s = "0" + s;
  return s;
}

Vec embed_into(const Vec& v, std::size_t ambient) {
  Vec out(ambient);
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i];
  return out;
}

struct SignedPerm {
  std::vector<std::size_t> perm;
  std::vector<int> sign;
};

SignedPerm random_signed_perm(Rng& rng, std::size_t n) {
  SignedPerm sp;
  sp.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) sp.perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(sp.perm[i - 1], sp.perm[rng.below(i)]);
  sp.sign.resize(n);
  for (std::size_t i = 0; i < n; ++i) sp.sign[i] = rng.below(2) == 0 ? 1 : -1;
  return sp;
}

// Signed-permutation image of a base-block vector, padded to `ambient`.
Vec apply_signed_perm(const SignedPerm& sp, const Vec& v, std::size_t ambient) {
  Vec out(ambient);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out[sp.perm[i]] = sp.sign[i] == 1 ? v[i] : -v[i];
  }
  return out;
}

Vec random_vec_on(Rng& rng, std::size_t dim, const std::vector<std::size_t>& support,
                  unsigned max_num, unsigned max_den) {
  Vec v(dim);
  for (std::size_t c : support) v[c] = rng.rat(max_num, max_den);
  return v;
}

std::vector<std::size_t> coord_range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

std::vector<std::size_t> coord_union(std::vector<std::size_t> a,
                                     const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Vec random_member(Rng& rng, const Subspace& s, unsigned max_num, unsigned max_den) {
  Vec v(s.ambient_dim());
  for (const auto& b : s.basis()) v = v + rng.rat(max_num, max_den) * b;
  return v;
}

Subspace span_union(std::size_t ambient, const std::vector<const std::vector<Vec>*>& parts) {
  std::vector<Vec> all;
  for (const auto* p : parts) all.insert(all.end(), p->begin(), p->end());
  return span(ambient, all);
}

struct FuzzDims {
  std::size_t d0, dl, dr;
};

FuzzDims draw_dims(Rng& rng, std::size_t max_dim) {
  if (max_dim < 3) throw std::invalid_argument("fuzz suites need fuzz_max_dim >= 3");
  FuzzDims d;
  d.d0 = 1 + rng.below(std::min<std::size_t>(2, max_dim - 2));
  std::size_t room = max_dim - d.d0;
  d.dl = 1 + rng.below(std::min<std::size_t>(2, room - 1));
  d.dr = 1 + rng.below(std::min<std::size_t>(2, room - d.dl));
  return d;
}

// Side black set on top of an embedded copy of the base blacks. Every extra
// is either a base black displaced into the fresh coordinate block, or an
// arbitrary point whose fresh-block displacement has squared norm ≥ 1; both
// shapes provably leave the predicate unchanged on the base copy, so the
// side is a genuine substructure extension by construction.
std::vector<Vec> side_blacks(Rng& rng, const std::vector<Vec>& embedded_base,
                             std::size_t d0, std::size_t side_dim, std::size_t max_blacks,
                             unsigned max_den) {
  std::vector<Vec> blacks = embedded_base;
  std::size_t extras = 1 + rng.below(2);
  for (std::size_t e = 0; e < extras && blacks.size() < max_blacks; ++e) {
    if (rng.below(2) == 0) {
      Vec q(side_dim);
      for (std::size_t c = d0; c < side_dim; ++c) q[c] = rng.rat(2, max_den);
      if (q.is_zero()) q[d0] = Rat(1);
      blacks.push_back(blacks[rng.below(embedded_base.size())] + q);
    } else {
      Vec w(side_dim);
      for (std::size_t c = 0; c < d0; ++c) w[c] = rng.rat(2, max_den);
      w[d0] = Rat(1);
      for (std::size_t c = d0 + 1; c < side_dim; ++c) w[c] = rng.rat(2, max_den);
      blacks.push_back(w);
    }
  }
  return blacks;
}

// The injected wrong computation: the joined distance scored through the
// WORSE of the two side branches instead of the better one.
Rat flipped_formula(const BlackSetAmalgam& am, const Vec& v) {
  Vec on_left =
      pull_back(am.left.space, am.emb.left_basis_in_joint, project(v, am.emb.left_in_joint));
  Vec on_right =
      pull_back(am.right.space, am.emb.right_basis_in_joint, project(v, am.emb.right_in_joint));
  Rat term_left =
      dist_black_sq(on_left, am.left).dist_sq + norm_sq(project(v, am.right_residue));
  Rat term_right =
      dist_black_sq(on_right, am.right).dist_sq + norm_sq(project(v, am.left_residue));
  Rat worse = term_left < term_right ? term_right : term_left;
  const Rat one(1);
  return worse < one ? worse : one;
}

std::string fuzz_params(const SuiteParams& p) {
  std::string s = "instances=" + std::to_string(p.fuzz_instances) +
                  ",seed=" + std::to_string(p.seed);
  if (p.fault == Fault::amalgam_sign_flip) s += ",fault=amalgam-sign-flip";
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "instability", "qe-failure",        "nonsimple", "tp2",
      "amalgam-fuzz", "pair-fuzz", "independence-fuzz"};
  return names;
}

WitnessReport suite_instability(const SuiteParams& p) {
  return gen_instability(p.instability_n).report;
}

WitnessReport suite_qe_failure(const SuiteParams& p) { return gen_qe_failure(p.qe_ring).report; }

WitnessReport suite_nonsimple(const SuiteParams& p) {
  return gen_nonsimple(p.nonsimple_k, p.nonsimple_m).report;
}

WitnessReport suite_tp2(const SuiteParams& p) {
  return gen_tp2(p.tp2_rows, p.tp2_cols,
                 tp2_default_funcs(p.tp2_rows, p.tp2_cols, p.tp2_funcs))
      .report;
}

WitnessReport suite_amalgam_fuzz(const SuiteParams& p) {
  WitnessReport rep;
  rep.config = "amalgam-fuzz";
  rep.params = fuzz_params(p);
  Rng rng(p.seed);
  const unsigned max_den = static_cast<unsigned>(p.fuzz_max_den);

  for (std::size_t inst = 0; inst < p.fuzz_instances; ++inst) {
    const std::string id = "inst" + pad3(inst);
    FuzzDims dims = draw_dims(rng, p.fuzz_max_dim);

    std::vector<Vec> base_blacks;
    base_blacks.push_back(Vec(dims.d0));  // class 0: the origin is black
    std::size_t nb = rng.below(3);
    for (std::size_t i = 0; i < nb; ++i) {
      base_blacks.push_back(random_vec_on(rng, dims.d0, coord_range(0, dims.d0), 2, max_den));
    }
    BlackSetStructure base = make_blackset(Subspace::full(dims.d0), std::move(base_blacks));

    const std::size_t ld = dims.d0 + dims.dl;
    std::vector<Vec> base_in_left;
    std::vector<Vec> left_base_blacks;
    for (std::size_t i = 0; i < dims.d0; ++i) base_in_left.push_back(Vec::unit(ld, i));
    for (const auto& b : base.blacks) left_base_blacks.push_back(embed_into(b, ld));
    BlackSetStructure left = make_blackset(
        Subspace::full(ld),
        side_blacks(rng, left_base_blacks, dims.d0, ld, p.fuzz_max_blacks, max_den));

    const std::size_t rd = dims.d0 + dims.dr;
    SignedPerm sp = random_signed_perm(rng, dims.d0);
    std::vector<Vec> base_in_right;
    std::vector<Vec> right_base_blacks;
    for (std::size_t i = 0; i < dims.d0; ++i) {
      base_in_right.push_back(apply_signed_perm(sp, Vec::unit(dims.d0, i), rd));
    }
    for (const auto& b : base.blacks) right_base_blacks.push_back(apply_signed_perm(sp, b, rd));
    BlackSetStructure right = make_blackset(
        Subspace::full(rd),
        side_blacks(rng, right_base_blacks, dims.d0, rd, p.fuzz_max_blacks, max_den));

    BlackSetAmalgam am = amalgamate_blacksets(base, left, right, base_in_left, base_in_right);

    std::vector<Vec> probes = default_axiom_probes(am.joined);
    for (std::size_t k = 0; k < 20; ++k) {
      probes.push_back(random_member(rng, am.emb.joint_space, 2, max_den));
    }

    std::size_t mismatches = 0;
    std::string first_bad;
    const bool faulted = p.fault == Fault::amalgam_sign_flip;
    for (const auto& v : probes) {
      Rat via_formula = faulted ? flipped_formula(am, v) : am.formula_dist_sq(v);
      Rat via_union = dist_black_sq(v, am.joined).dist_sq;
      if (via_formula != via_union) {
        if (mismatches == 0) first_bad = vec_to_string(v);
        ++mismatches;
      }
    }
    ClaimRow formula_row = make_claim(id + ".formula-vs-union", "amalgam.formula-vs-union",
                                      Rel::EQ, Rat(0), Rat(static_cast<long>(mismatches)));
    if (!first_bad.empty()) formula_row.note = "first mismatch at " + first_bad;
    rep.add(std::move(formula_row));

    auto left_probes = default_substructure_probes(left, am.joined, am.emb.left_basis_in_joint);
    auto left_cert = check_substructure(left, am.joined, am.emb.left_basis_in_joint, left_probes);
    rep.add_flag(id + ".restrict-left", "amalgam.restrict-left", true, left_cert.pass);

    auto right_probes =
        default_substructure_probes(right, am.joined, am.emb.right_basis_in_joint);
    auto right_cert =
        check_substructure(right, am.joined, am.emb.right_basis_in_joint, right_probes);
    rep.add_flag(id + ".restrict-right", "amalgam.restrict-right", true, right_cert.pass);

    rep.add(make_claim(id + ".class", "amalgam.class-preserved", Rel::EQ, class_value(base),
                       class_value(am.joined)));
  }

  rep.sort_rows();
  return rep;
}

WitnessReport suite_pair_fuzz(const SuiteParams& p) {
  WitnessReport rep;
  rep.config = "pair-fuzz";
  rep.params = fuzz_params(p);
  Rng rng(p.seed);
  const unsigned max_den = static_cast<unsigned>(p.fuzz_max_den);

  for (std::size_t inst = 0; inst < p.fuzz_instances; ++inst) {
    const std::string id = "inst" + pad3(inst);
    FuzzDims dims = draw_dims(rng, p.fuzz_max_dim);

    std::vector<Vec> g0_gens;
    std::size_t k0 = rng.below(dims.d0 + 1);
    for (std::size_t i = 0; i < k0; ++i) {
      g0_gens.push_back(random_vec_on(rng, dims.d0, coord_range(0, dims.d0), 2, max_den));
    }
    ProjectionPairStructure base =
        make_pair_structure(Subspace::full(dims.d0), span(dims.d0, g0_gens));

    const std::size_t ld = dims.d0 + dims.dl;
    std::vector<Vec> gl_gens;
    for (const auto& b : base.g.basis()) gl_gens.push_back(embed_into(b, ld));
    std::size_t kl = rng.below(dims.dl + 1);
    for (std::size_t i = 0; i < kl; ++i) {
      gl_gens.push_back(random_vec_on(rng, ld, coord_range(dims.d0, ld), 2, max_den));
    }
    ProjectionPairStructure left = make_pair_structure(Subspace::full(ld), span(ld, gl_gens));
    std::vector<Vec> base_in_left;
    for (std::size_t i = 0; i < dims.d0; ++i) base_in_left.push_back(Vec::unit(ld, i));

    const std::size_t rd = dims.d0 + dims.dr;
    SignedPerm sp = random_signed_perm(rng, dims.d0);
    std::vector<Vec> gr_gens;
    for (const auto& b : base.g.basis()) gr_gens.push_back(apply_signed_perm(sp, b, rd));
    std::size_t kr = rng.below(dims.dr + 1);
    for (std::size_t i = 0; i < kr; ++i) {
      gr_gens.push_back(random_vec_on(rng, rd, coord_range(dims.d0, rd), 2, max_den));
    }
    ProjectionPairStructure right = make_pair_structure(Subspace::full(rd), span(rd, gr_gens));
    std::vector<Vec> base_in_right;
    for (std::size_t i = 0; i < dims.d0; ++i) {
      base_in_right.push_back(apply_signed_perm(sp, Vec::unit(dims.d0, i), rd));
    }

    PairAmalgam am = amalgamate_pairs(base, left, right, base_in_left, base_in_right);

    std::size_t bad_welldef = 0;
    for (std::size_t t = 0; t < 3; ++t) {
      Vec v1 = random_member(rng, am.emb.left_in_joint, 2, max_den);
      Vec v2 = random_member(rng, am.emb.right_in_joint, 2, max_den);
      Vec h = random_member(rng, am.emb.base_in_joint, 2, max_den);
      Vec shifted =
          project(v1 + h, am.g_left_in_joint) + project(v2 - h, am.g_right_in_joint);
      Vec plain = project(v1, am.g_left_in_joint) + project(v2, am.g_right_in_joint);
      Vec direct = apply_projection(v1 + v2, am.joined).image;
      if (!(shifted == plain && plain == direct)) ++bad_welldef;
    }
    rep.add(make_claim(id + ".well-defined", "pair.amalgam-well-defined", Rel::EQ, Rat(0),
                       Rat(static_cast<long>(bad_welldef))));

    std::size_t bad_idem = 0, bad_selfadj = 0, bad_formula = 0;
    for (std::size_t t = 0; t < 3; ++t) {
      Vec u = random_member(rng, am.emb.joint_space, 2, max_den);
      Vec v = random_member(rng, am.emb.joint_space, 2, max_den);
      Vec pu = apply_projection(u, am.joined).image;
      Vec pv = apply_projection(v, am.joined).image;
      if (apply_projection(pu, am.joined).image != pu) ++bad_idem;
      if (inner(pu, v) != inner(u, pv)) ++bad_selfadj;
      if (am.formula_projection(u) != pu) ++bad_formula;
    }
    rep.add(make_claim(id + ".idempotent", "pair.idempotent", Rel::EQ, Rat(0),
                       Rat(static_cast<long>(bad_idem))));
    rep.add(make_claim(id + ".self-adjoint", "pair.self-adjoint", Rel::EQ, Rat(0),
                       Rat(static_cast<long>(bad_selfadj))));
    rep.add(make_claim(id + ".formula-vs-direct", "pair.amalgam-formula", Rel::EQ, Rat(0),
                       Rat(static_cast<long>(bad_formula))));

    bool left_ok = true, right_ok = true;
    try {
      require_sub_pair(left, am.joined, am.emb.left_basis_in_joint);
    } catch (const std::exception&) {
      left_ok = false;
    }
    try {
      require_sub_pair(right, am.joined, am.emb.right_basis_in_joint);
    } catch (const std::exception&) {
      right_ok = false;
    }
    rep.add_flag(id + ".restrict-left", "pair.restrict-side", true, left_ok);
    rep.add_flag(id + ".restrict-right", "pair.restrict-side", true, right_ok);
  }

  rep.sort_rows();
  return rep;
}

WitnessReport suite_independence_fuzz(const SuiteParams& p) {
  WitnessReport rep;
  rep.config = "independence-fuzz";
  rep.params = fuzz_params(p);
  Rng rng(p.seed);
  const unsigned max_den = static_cast<unsigned>(p.fuzz_max_den);
  if (p.fuzz_max_dim < 3) throw std::invalid_argument("fuzz suites need fuzz_max_dim >= 3");

  std::size_t bad_sym = 0, bad_triv = 0, bad_trans = 0, bad_mono = 0;
  std::string note_sym, note_triv, note_trans, note_mono;
  double max_indep_margin = 0.0;
  std::size_t indep_count = 0;

  for (std::size_t inst = 0; inst < p.fuzz_instances; ++inst) {
    const std::size_t n = 3 + rng.below(p.fuzz_max_dim - 2);
    const bool structured = inst % 2 == 0;

    // --- symmetry / triviality / margin instance: lists A, B over a base C.
    std::vector<Vec> a_list, b_list;
    Subspace c = Subspace::zero(n);
    if (structured) {
      // C a full coordinate block, A and B confined to disjoint side blocks:
      // residues are orthogonal by construction, so this half of the stream
      // is guaranteed independent and feeds the margin claim.
      std::size_t ic = n >= 4 ? rng.below(2) : 0;
      std::size_t avail = n - ic;
      std::size_t ia = 1 + rng.below(std::min<std::size_t>(2, avail - 1));
      std::size_t ib = 1 + rng.below(std::min<std::size_t>(2, avail - ia));
      std::vector<Vec> c_gens;
      for (std::size_t i = 0; i < ic; ++i) c_gens.push_back(Vec::unit(n, i));
      c = span(n, c_gens);
      auto a_support = coord_range(0, ic + ia);
      auto b_support = coord_union(coord_range(0, ic), coord_range(ic + ia, ic + ia + ib));
      std::size_t na = 1 + rng.below(2), nbv = 1 + rng.below(2);
      for (std::size_t i = 0; i < na; ++i)
        a_list.push_back(random_vec_on(rng, n, a_support, 2, max_den));
      for (std::size_t i = 0; i < nbv; ++i)
        b_list.push_back(random_vec_on(rng, n, b_support, 2, max_den));
    } else {
      if (rng.below(2) == 0) {
        c = span(n, {random_vec_on(rng, n, coord_range(0, n), 2, max_den)});
      }
      std::size_t na = 1 + rng.below(2), nbv = 1 + rng.below(2);
      for (std::size_t i = 0; i < na; ++i)
        a_list.push_back(random_vec_on(rng, n, coord_range(0, n), 2, max_den));
      for (std::size_t i = 0; i < nbv; ++i)
        b_list.push_back(random_vec_on(rng, n, coord_range(0, n), 2, max_den));
    }

    bool ab = non_dividing(a_list, b_list, c).independent;
    bool ba = non_dividing(b_list, a_list, c).independent;
    if (ab != ba && bad_sym++ == 0) note_sym = "first asymmetry at instance " + pad3(inst);

    bool singletons = true;
    for (const auto& a : a_list) {
      singletons = singletons && non_dividing({a}, b_list, c).independent;
    }
    if (ab != singletons && bad_triv++ == 0) {
      note_triv = "first disagreement at instance " + pad3(inst);
    }

    const std::vector<Vec>& c_basis = c.basis();
    Subspace big = span_union(n, {&b_list, &c_basis});
    double margin = forking_margin(a_list, big, c);
    if (ab) {
      ++indep_count;
      max_indep_margin = std::max(max_indep_margin, margin);
    }

    // --- transitivity / monotonicity instance: lists A, B, D over C.
    std::vector<Vec> ta, tb, td;
    Subspace tc = Subspace::zero(n);
    if (structured) {
      std::size_t ic = n >= 4 ? rng.below(2) : 0;
      std::vector<Vec> c_gens;
      for (std::size_t i = 0; i < ic; ++i) c_gens.push_back(Vec::unit(n, i));
      tc = span(n, c_gens);
      ta.push_back(random_vec_on(rng, n, coord_range(0, ic + 1), 2, max_den));
      tb.push_back(random_vec_on(
          rng, n, coord_union(coord_range(0, ic), coord_range(ic + 1, ic + 2)), 2, max_den));
      td.push_back(random_vec_on(
          rng, n, coord_union(coord_range(0, ic), coord_range(ic + 2, ic + 3)), 2, max_den));
    } else {
      if (rng.below(2) == 0) {
        tc = span(n, {random_vec_on(rng, n, coord_range(0, n), 2, max_den)});
      }
      ta.push_back(random_vec_on(rng, n, coord_range(0, n), 2, max_den));
      tb.push_back(random_vec_on(rng, n, coord_range(0, n), 2, max_den));
      td.push_back(random_vec_on(rng, n, coord_range(0, n), 2, max_den));
    }
    const std::vector<Vec>& tc_basis = tc.basis();
    Subspace a_cl = span_union(n, {&ta, &tc_basis});
    Subspace bd_cl = span_union(n, {&tb, &td, &tc_basis});
    Subspace b_cl = span_union(n, {&tb, &tc_basis});
    Subspace ab_cl = span_union(n, {&ta, &tb, &tc_basis});
    Subspace db_cl = span_union(n, {&td, &tb, &tc_basis});
    bool t1 = star_independent(a_cl, bd_cl, tc).independent;
    bool t2 = star_independent(a_cl, b_cl, tc).independent;
    bool t3 = star_independent(ab_cl, db_cl, b_cl).independent;
    if (t1 != (t2 && t3) && bad_trans++ == 0) {
      note_trans = "first violation at instance " + pad3(inst);
    }
    if (t1) {
      std::vector<Vec> a_sub = {ta[0]};
      Subspace a_sub_cl = span_union(n, {&a_sub, &tc_basis});
      bool mono_ok = t2 && star_independent(a_sub_cl, bd_cl, tc).independent;
      if (!mono_ok && bad_mono++ == 0) {
        note_mono = "first violation at instance " + pad3(inst);
      }
    }
  }

  // Curated dependent instances: every residue inner product has magnitude
  // ≥ 1/4, so each margin must clear the 10⁻³ floor comfortably.
  struct DepCase {
    std::vector<Vec> a, b;
    Subspace c;
  };
  const Rat q1(1, 4);
  std::vector<DepCase> dep;
  dep.push_back({{Vec{Rat(1), Rat(1)}}, {Vec{Rat(0), Rat(1)}},
                 span(2, {Vec{Rat(1), Rat(0)}})});
  dep.push_back({{Vec{Rat(1), Rat(1), Rat(0)}}, {Vec{Rat(1), Rat(0), Rat(1)}},
                 Subspace::zero(3)});
  dep.push_back({{Vec{Rat(1), Rat(2), Rat(0)}}, {Vec{Rat(0), Rat(1), Rat(1)}},
                 Subspace::zero(3)});
  dep.push_back({{Vec{Rat(1), q1}}, {Vec{Rat(0), Rat(1)}}, Subspace::zero(2)});
  dep.push_back({{Vec{Rat(1), Rat(1), Rat(0)}, Vec{Rat(1), Rat(0), Rat(-1)}},
                 {Vec{Rat(0), Rat(1), Rat(1)}}, span(3, {Vec{Rat(1), Rat(0), Rat(0)}})});

  double min_dep_margin = -1.0;
  for (const auto& d : dep) {
    const std::vector<Vec>& cb = d.c.basis();
    Subspace big = span_union(d.c.ambient_dim(), {&d.b, &cb});
    double margin = forking_margin(d.a, big, d.c);
    if (min_dep_margin < 0.0 || margin < min_dep_margin) min_dep_margin = margin;
  }

  auto count_row = [](std::string id, std::string anchor, std::size_t bad, std::string note) {
    ClaimRow row = make_claim(std::move(id), std::move(anchor), Rel::EQ, Rat(0),
                              Rat(static_cast<long>(bad)));
    row.note = std::move(note);
    return row;
  };
  rep.add(count_row("symmetry", "indep.symmetry", bad_sym, note_sym));
  rep.add(count_row("triviality", "indep.triviality", bad_triv, note_triv));
  rep.add(count_row("transitivity", "indep.transitivity", bad_trans, note_trans));
  rep.add(count_row("monotonicity", "indep.monotonicity", bad_mono, note_mono));

  ClaimRow indep_margin = make_claim("margin-independent-max", "indep.margin-zero", Rel::LT,
                                     Rat(1, 1000000000), Rat(max_indep_margin));
  indep_margin.approx = true;
  rep.add(std::move(indep_margin));
  rep.add(make_claim("margin-independent-count", "indep.margin-zero", Rel::GE, Rat(1),
                     Rat(static_cast<long>(indep_count))));
  ClaimRow dep_margin = make_claim("margin-dependent-min", "indep.margin-dependent", Rel::GE,
                                   Rat(1, 1000), Rat(min_dep_margin));
  dep_margin.approx = true;
  rep.add(std::move(dep_margin));

  rep.sort_rows();
  return rep;
}

std::vector<WitnessReport> run_suites(const std::string& name, const SuiteParams& p) {
  using Runner = WitnessReport (*)(const SuiteParams&);
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"instability", suite_instability},
      {"qe-failure", suite_qe_failure},
      {"nonsimple", suite_nonsimple},
      {"tp2", suite_tp2},
      {"amalgam-fuzz", suite_amalgam_fuzz},
      {"pair-fuzz", suite_pair_fuzz},
      {"independence-fuzz", suite_independence_fuzz},
  };
  std::vector<WitnessReport> out;
  if (name == "all") {
    for (const auto& entry : table) out.push_back(entry.second(p));
    return out;
  }
  for (const auto& entry : table) {
    if (entry.first == name) {
      out.push_back(entry.second(p));
      return out;
    }
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace hg
