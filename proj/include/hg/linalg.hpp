#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hg/rational.hpp"

namespace hg {

// ============================================================
// Vectors
// ============================================================

// Dense rational vector in ambient coordinates.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : coords_(dim, Rat(0)) {}
  Vec(std::initializer_list<Rat> cs) : coords_(cs) {}
  explicit Vec(std::vector<Rat> cs) : coords_(std::move(cs)) {}

  static Vec unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator*(const Rat& s) const;
  Vec operator-() const;
  bool operator==(const Vec& o) const { return coords_ == o.coords_; }
  bool operator!=(const Vec& o) const { return !(*this == o); }

 private:
  std::vector<Rat> coords_;
};

Vec operator*(const Rat& s, const Vec& v);

Rat inner(const Vec& a, const Vec& b);
Rat norm_sq(const Vec& v);

// Strict lexicographic coordinate order; used for canonical black-set order.
bool lex_less(const Vec& a, const Vec& b);

// "1/2,0,-3" — the same shape the CLI accepts for --point.
std::string vec_to_string(const Vec& v);
Vec vec_from_string(std::string_view text);

// ============================================================
// Subspaces
// ============================================================

// A linear subspace of R^ambient, stored as a pairwise-orthogonal list of
// nonzero integer-primitive vectors (NOT normalized: lengths stay rational
// only in squared form, so nothing irrational ever enters).
class Subspace {
 public:
  Subspace() = default;  // the zero space of the zero-dimensional ambient
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  // Caller promises the vectors are pairwise orthogonal and nonzero;
  // verified, then each is rescaled to its primitive integer form.
  static Subspace from_orthogonal(std::size_t ambient_dim, std::vector<Vec> basis);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains_subspace(const Subspace& other) const;
  bool operator==(const Subspace& o) const {
    return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
  }

 private:
  Subspace(std::size_t ambient_dim, std::vector<Vec> basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> basis_;
};

// Gram–Schmidt span. Denominators are cleared at every step, so basis
// vectors are primitive integer vectors; zero residues are dropped.
Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
// Convenience overload; throws std::invalid_argument on an empty list
// (no ambient dimension to infer).
Subspace span(const std::vector<Vec>& vectors);

struct Decomposition {
  Vec proj;     // in the subspace
  Vec residue;  // orthogonal to it; proj + residue == input
};

Decomposition project_decompose(const Vec& v, const Subspace& s);
Vec project(const Vec& v, const Subspace& s);

// Orthogonal complement of `small` inside `big`; requires small ⊆ big.
Subspace relative_complement(const Subspace& big, const Subspace& small);

// span of the union of two subspaces (same ambient).
Subspace join_spans(const Subspace& a, const Subspace& b);

// ============================================================
// Gram matrices
// ============================================================

// Symmetric matrix of pairwise inner products. Equality of Gram matrices is
// equality of quantifier-free metric type for the generating tuples.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(std::size_t n) : n_(n), entries_(n * n, Rat(0)) {}

  std::size_t size() const { return n_; }
  const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Rat& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  bool operator==(const GramMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }
  bool operator!=(const GramMatrix& o) const { return !(*this == o); }

  // Exact rational Cholesky-style elimination with pivot skipping: a zero
  // pivot forces its whole row/column to vanish, a negative pivot refutes.
  bool is_psd() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rat> entries_;
};

GramMatrix gram_of_tuple(const std::vector<Vec>& vectors);

// ============================================================
// Linear maps and free joins
// ============================================================

// Dense rows × cols rational matrix acting on column vectors.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), m_(rows * cols, Rat(0)) {}

  static LinearMap identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rat& at(std::size_t r, std::size_t c) const { return m_[r * cols_ + c]; }
  Rat& at(std::size_t r, std::size_t c) { return m_[r * cols_ + c]; }

  Vec apply(const Vec& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> m_;
};

// Result of joining two spaces freely over a common base: the joint ambient
// is R^(dimL + dimR); left_map is the block inclusion and right_map carries
// the base components across while padding residues into the second block.
// Both maps are isometric on their subspace and agree vector-for-vector on
// the embedded base.
struct AmalgamEmbedding {
  Subspace base;             // base in its own coordinates
  LinearMap left_map;        // left ambient  -> joint ambient
  LinearMap right_map;       // right ambient -> joint ambient
  std::size_t joint_ambient_dim = 0;
  Subspace joint_space;      // span of both embedded spaces
  Subspace base_in_joint;
  Subspace left_in_joint;
  Subspace right_in_joint;
  std::vector<Vec> left_basis_in_joint;   // images of left.basis(), in order
  std::vector<Vec> right_basis_in_joint;  // images of right.basis(), in order

  std::size_t joint_dim() const { return joint_space.dim(); }
};

// base_left / base_right give the images of base.basis() inside the left and
// right ambients. Each image list must consist of members of the respective
// space and preserve the base Gram matrix (isometry). Verifies afterwards
// that the two embedded copies intersect exactly in the base (rank check)
// and that the two residue blocks are orthogonal.
AmalgamEmbedding free_join(const Subspace& left, const Subspace& right,
                           const Subspace& base,
                           const std::vector<Vec>& base_left,
                           const std::vector<Vec>& base_right);

// Inner-product-preservation check for an embedding given by basis images.
bool is_isometric_embedding(const Subspace& source, const std::vector<Vec>& images);

// Inverse of an isometric embedding on its image: expresses `y` (a member of
// the embedded copy) back in source coordinates.
Vec pull_back(const Subspace& source, const std::vector<Vec>& images, const Vec& y);

// Image of an arbitrary member of `source` under the embedding determined by
// basis images (linear extension).
Vec push_forward(const Subspace& source, const std::vector<Vec>& images, const Vec& v);

}  // namespace hg
