#pragma once

#include <cstddef>
#include <vector>

#include "hg/blackset.hpp"
#include "hg/linalg.hpp"
#include "hg/report.hpp"

namespace hg {

// Parametric counterexample configurations. Each generator builds a concrete
// finite structure and verifies its full grid of frozen distance claims;
// the returned report is the artifact of record for those claims.

// 2n dimensions, orthonormal v₁..vₙ, u₁..uₙ; blacks {(uᵢ+vⱼ)/2 : i > j} ∪ {0}.
// The order-sensitive grid: d((uᵢ+vⱼ)/2)² is 1/2 for i ≤ j and 0 for i > j.
struct InstabilityConfig {
  BlackSetStructure structure;
  std::size_t n = 0;
  WitnessReport report;
};

InstabilityConfig gen_instability(std::size_t n);

// Two structures sharing a unit vector a: the left one has a single black
// attractor c = a + ¼u just off the shared line, the right one a ring of
// `ring` blacks at the same off-line distance. Each side restricts to the
// shared line consistently, yet the free join pulls the left probe
// b = a − ¼u from squared distance 1/4 down to 1/8 — the join does not
// extend the left predicate, witnessed at b.
struct QeFailureConfig {
  BlackSetStructure left, right;
  Vec a_left, a_right;  // the shared unit point in each side's coordinates
  Vec b;                // failure probe, left coordinates
  Vec c;                // attractor black, left coordinates
  BlackSetStructure joined;
  AmalgamEmbedding emb;
  WitnessReport report;
};

QeFailureConfig gen_qe_failure(std::size_t ring);

// Basis {bᵢ : i<k} ∪ {aⱼ : j<m} ∪ {c_X : X a k-subset of {0..m-1}};
// f_X sends bᵢ to the i-th smallest a-index of X; blacks
// {c_X + bᵢ + ½f_X(bᵢ)} ∪ {0}. For ordered pairs X ≠ Y and j ∈ Y∖X the
// flipped point c_X + b_ℓ − ½a_{k′} is exactly white (truncated distance 1)
// yet sits at squared distance 1/2 from the matching +½a_j black.
struct NonsimpleConfig {
  BlackSetStructure structure;
  std::size_t k = 0, m = 0;
  std::vector<std::vector<std::size_t>> subsets;  // k-subsets, lexicographic
  WitnessReport report;
};

NonsimpleConfig gen_nonsimple(std::size_t k, std::size_t m);

// Basis {bᵢ : i<rows} ∪ {c_{i,j}} ∪ {a_f : f ∈ funcs}; blacks
// {a_f + bᵢ + ½c_{i,f(i)}} ∪ {0}. Row conflicts: the two displacements
// +½c_{i,j}, −½c_{i,l} differ by squared distance 1/2; per-function pattern:
// the +½ point is black, the −½ point is exactly white.
struct Tp2Config {
  BlackSetStructure structure;
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::size_t>> funcs;
  WitnessReport report;
};

Tp2Config gen_tp2(std::size_t rows, std::size_t cols,
                  const std::vector<std::vector<std::size_t>>& funcs);

// First `count` functions rows→cols in lexicographic enumeration.
std::vector<std::vector<std::size_t>> tp2_default_funcs(std::size_t rows, std::size_t cols,
                                                        std::size_t count);

// ---------- perturbation machinery ----------

struct PerturbationResult {
  Vec original;
  Vec perturbed;
  Rat delta_prime_sq;
  bool exact = false;  // false: computed through decimals, tolerance 1e-9
};

// Pushes c away from `base` along its own residue direction: with
// u′ = P_base(c), c′ = c − u′, returns ĉ = u′ + (1 + δ′/‖c′‖)·c′. Exact iff
// both ‖c′‖² and delta_prime_sq are perfect rational squares; the exact
// branch satisfies ‖ĉ − u′‖² = (‖c′‖ + δ′)² identically.
PerturbationResult perturb_black_witness(const Vec& c, const Subspace& base,
                                         const Rat& delta_prime_sq);

// Quantitative slack for the witness axiom: how far a near-witness may be
// displaced while keeping every axiom inequality satisfied.
struct SlackConstants {
  Rat delta_sq;        // 4·eps·(L+2)
  Rat delta_prime_sq;  // 2·eps·(L+2)
};

SlackConstants perturbation_slack(const Rat& eps, const Rat& L);

}  // namespace hg
