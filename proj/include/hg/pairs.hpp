#pragma once

#include <utility>
#include <vector>

#include "hg/independence.hpp"
#include "hg/linalg.hpp"

namespace hg {

// A Hilbert space expanded by an orthogonal projection. The projection is
// stored through its image subspace g ⊆ space, so idempotence and
// self-adjointness hold by construction instead of by matrix bookkeeping.
struct ProjectionPairStructure {
  Subspace space;
  Subspace g;
};

// Validates g ⊆ space (same ambient) and returns the structure.
ProjectionPairStructure make_pair_structure(Subspace space, Subspace g);

struct ProjectionImage {
  Vec image;    // P(v)
  Rat dist_sq;  // squared distance from v to the image subspace = ‖v − P(v)‖²
};

// P(v) plus its squared recovery distance. v must lie in the structure's
// space (membership is the caller's contract; dimension is checked).
ProjectionImage apply_projection(const Vec& v, const ProjectionPairStructure& pp);

// Decides whether x is the projection of v, by two routes at once:
// directly (x ∈ image and ‖v−x‖² = d²(v, image)) and via the Pythagoras
// identity ‖P(v)−x‖² = ‖v−x‖² − d²(v,image), valid whenever x ∈ image.
struct RecoveryCertificate {
  bool holds;          // x is exactly P(v)
  Rat x_dist_sq;       // squared distance from x to the image subspace
  Rat vx_sq;           // ‖v − x‖²
  Rat dv_sq;           // squared distance from v to the image subspace
  Rat gap_sq;          // ‖P(v) − x‖²
  bool pythagoras_ok;  // gap_sq == vx_sq − dv_sq (checked when x ∈ image)
};

RecoveryCertificate verify_projection_recovery(const Vec& v, const Vec& x,
                                               const ProjectionPairStructure& pp);

// Embedding of one pair structure into another, given by the images of the
// small structure's space basis. Checked: isometry, images inside the big
// space, and compatibility P_big(emb(b)) = emb(P_small(b)) on the basis.
void require_sub_pair(const ProjectionPairStructure& small,
                      const ProjectionPairStructure& big,
                      const std::vector<Vec>& images);

// Free amalgam of two pair structures over a common base. The joined
// projection is the orthogonal projection onto span(emb G₁ ∪ emb G₂);
// formula_projection evaluates the same operator through the three-way
// decomposition v = u₀ + u₁ + u₂ (base / left residue / right residue),
// which is the independent route used by tests.
struct PairAmalgam {
  ProjectionPairStructure joined;
  AmalgamEmbedding emb;
  Subspace g_base_in_joint;
  Subspace g_left_in_joint;
  Subspace g_right_in_joint;
  Subspace left_residue;   // emb(H₁) ∩ emb(H₀)^⊥
  Subspace right_residue;  // emb(H₂) ∩ emb(H₀)^⊥

  Vec formula_projection(const Vec& joint_point) const;
};

PairAmalgam amalgamate_pairs(const ProjectionPairStructure& base,
                             const ProjectionPairStructure& left,
                             const ProjectionPairStructure& right,
                             const std::vector<Vec>& base_in_left,
                             const std::vector<Vec>& base_in_right);

// Quantifier-free type of a tuple: the pair (Gram of projections, Gram of
// residues). Two tuples have the same type iff both Grams agree.
using PairType = std::pair<GramMatrix, GramMatrix>;

PairType pair_type(const std::vector<Vec>& tuple, const ProjectionPairStructure& pp);
bool pair_types_equal(const PairType& a, const PairType& b);

// Definable closure of a finite set: span(A ∪ P(A)). Idempotent.
Subspace pair_dcl(const std::vector<Vec>& a, const ProjectionPairStructure& pp);

// Independence for the expanded structure: ordinary non-dividing of the
// P-augmented tuples over the P-augmented base.
IndependenceVerdict pair_independent(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                     const std::vector<Vec>& c,
                                     const ProjectionPairStructure& pp);

// Finite stand-in for the genericity axioms: the image and its complement
// each hold at least n independent directions.
bool genericity_witnesses(const ProjectionPairStructure& pp, std::size_t n);

}  // namespace hg
