#pragma once

#include <vector>

#include "hg/linalg.hpp"

namespace hg {

// A pair whose residues over the base fail to be orthogonal. For the
// star-variant, `b` holds the discrepancy vector P_B(a) − P_C(a) and
// `residue_inner` its squared norm; either way a recorded value is nonzero.
struct ResidueViolation {
  Vec a;
  Vec b;
  Rat residue_inner;
};

struct IndependenceVerdict {
  bool independent = true;
  std::vector<ResidueViolation> violations;
};

// Exact non-dividing check: A is independent from B over the subspace C iff
// every residue pair is orthogonal, ⟨a − P_C(a), b − P_C(b)⟩ = 0.
IndependenceVerdict non_dividing(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                 const Subspace& c);

// Closure-level independence: caller supplies the closed spans (computing
// closures is the caller's job, e.g. pair_dcl). Requires c ⊆ a_closure and
// c ⊆ b_closure; holds iff P_{b_closure} and P_c agree on every basis
// vector of a_closure.
IndependenceVerdict star_independent(const Subspace& a_closure, const Subspace& b_closure,
                                     const Subspace& c_closure);

// Σ‖P_big(aᵢ)‖ − Σ‖P_small(aᵢ)‖ as a decimal (the one tolerance-based
// quantity in the library; every norm enters through its exact square).
// Mathematically nonnegative when small ⊆ big; tiny negative float noise is
// clamped to zero. Tolerance for "zero" is 1e-9.
double forking_margin(const std::vector<Vec>& a, const Subspace& big, const Subspace& small);

}  // namespace hg
