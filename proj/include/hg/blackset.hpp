#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hg/linalg.hpp"

namespace hg {

// A Hilbert space expanded by the distance-to-a-finite-black-set predicate
// d(v) = min(1, dist(v, blacks)). Everything distance-like is carried as an
// exact SQUARED rational; min(1,d)² = min(1,d²) makes truncation exact.
struct BlackSetStructure {
  Subspace space;
  std::vector<Vec> blacks;  // sorted lexicographically, duplicates removed
};

// Validates membership of every black point in the space, sorts and dedupes.
BlackSetStructure make_blackset(Subspace space, std::vector<Vec> blacks);

struct DistanceCertificate {
  Vec point;
  Rat dist_sq;                 // min(1, min‖v−b‖²)
  std::optional<Rat> raw_sq;   // untruncated min‖v−b‖²; empty iff no blacks
  std::optional<Vec> witness;  // a black attaining the raw minimum
  bool unique = false;         // exactly one black attains the raw minimum
};

DistanceCertificate dist_black_sq(const Vec& v, const BlackSetStructure& s);

// Squared class value d(0)²; structures amalgamate only when these agree.
Rat class_value(const BlackSetStructure& s);

struct TableEntry {
  Vec point;
  Rat claimed_sq;
};

struct TableFault {
  Vec point;
  Rat claimed_sq;
  Rat actual_sq;
};

// Axiom certificate over a finite probe set: validates an optional claimed
// distance table, checks the 1-Lipschitz inequality on all probe pairs in
// exact squared form, and requires a witness black for every probe with
// d < 1. An empty probe list yields a vacuous pass flagged incomplete.
struct AxiomCertificate {
  bool pass = true;
  bool incomplete = false;
  std::size_t lipschitz_pairs_checked = 0;
  std::size_t witnesses_checked = 0;
  std::optional<TableFault> table_fault;
  std::vector<std::string> issues;
};

AxiomCertificate check_axioms(const BlackSetStructure& s,
                              const std::vector<TableEntry>& table,
                              const std::vector<Vec>& probes);

// Default probe set for a structure: blacks plus their pairwise midpoints.
std::vector<Vec> default_axiom_probes(const BlackSetStructure& s);

// |√A − √B| ≤ √C decided exactly on the squares (two-case quadratic
// criterion; no roots are ever taken).
bool abs_diff_le_sqrt(const Rat& a_sq, const Rat& b_sq, const Rat& c_sq);

// ---------- substructure certification ----------

struct SubstructureViolation {
  Vec probe;    // in the small structure's coordinates
  Rat small_sq;
  Rat big_sq;
};

// Probe-based and therefore sound but incomplete: PASS certifies agreement
// on the probes only. An empty probe list passes vacuously and is flagged.
struct SubstructureCertificate {
  bool pass = true;
  bool incomplete = false;
  std::size_t probes_checked = 0;
  std::optional<SubstructureViolation> violation;
};

// Default probes: the small structure's blacks, the projections of the big
// structure's blacks onto the embedded copy (pulled back), and all pairwise
// midpoints of those points.
std::vector<Vec> default_substructure_probes(const BlackSetStructure& small,
                                             const BlackSetStructure& big,
                                             const std::vector<Vec>& images);

SubstructureCertificate check_substructure(const BlackSetStructure& small,
                                           const BlackSetStructure& big,
                                           const std::vector<Vec>& images,
                                           const std::vector<Vec>& probes);

// ---------- joins and amalgams ----------

// Orthogonal join of two structures that both have a black at the origin
// (squared class value 0); the base is the zero subspace.
struct OrthogonalJoin {
  BlackSetStructure joined;
  AmalgamEmbedding emb;
  SubstructureCertificate left_cert, right_cert;  // sides keep their predicate
};

OrthogonalJoin join_orthogonal(const BlackSetStructure& s1, const BlackSetStructure& s2);

// Free amalgam over a common base. The joined predicate is induced by the
// union of the embedded black sets; formula_dist_sq evaluates the
// closed-form route
//   d₃(v)² = min(1, d₁(P_L v)² + ‖Q_R v‖², d₂(P_R v)² + ‖Q_L v‖²)
// where Q_L, Q_R are the projections onto the two residue blocks. Tests
// compare it against the union-oracle route point for point.
struct BlackSetAmalgam {
  BlackSetStructure joined;
  AmalgamEmbedding emb;
  BlackSetStructure base, left, right;
  Subspace left_residue;   // emb(H₁) ∩ emb(H₀)^⊥
  Subspace right_residue;  // emb(H₂) ∩ emb(H₀)^⊥
  SubstructureCertificate base_in_left, base_in_right;

  Rat formula_dist_sq(const Vec& joint_point) const;
};

BlackSetAmalgam amalgamate_blacksets(const BlackSetStructure& base,
                                     const BlackSetStructure& left,
                                     const BlackSetStructure& right,
                                     const std::vector<Vec>& base_in_left,
                                     const std::vector<Vec>& base_in_right);

// n-ary independent union over a shared base: repeated free amalgamation.
// part_images[i] maps part i's space basis into the final joint space;
// part_certs[i] re-checks that part i kept its predicate (default probes).
struct IndependentUnion {
  BlackSetStructure joined;
  std::vector<std::vector<Vec>> part_images;
  std::vector<Vec> base_images;
  std::vector<SubstructureCertificate> part_certs;
};

IndependentUnion independent_union_amalgam(const BlackSetStructure& base,
                                           const std::vector<BlackSetStructure>& parts,
                                           const std::vector<std::vector<Vec>>& base_in_parts);

}  // namespace hg
