#include "hg/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace hg {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_same_dim(const Vec& a, const Vec& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

// Rescales to the primitive integer representative with positive leading
// coordinate: multiply by the lcm of denominators, divide by the gcd of
// numerators. Keeps Gram–Schmidt output from snowballing.
Vec primitive(const Vec& v) {
  mpz_class den_lcm = 1;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v[i].get_den().get_mpz_t());
  }
  mpz_class num_gcd = 0;
  std::vector<Rat> scaled(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    Rat s = v[i] * Rat(den_lcm);
    s.canonicalize();
    scaled[i] = s;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), s.get_num().get_mpz_t());
  }
  if (num_gcd == 0) return Vec(std::move(scaled));  // zero vector
  int sign = 0;
  for (std::size_t i = 0; i < v.dim() && sign == 0; ++i) {
    sign = sgn(scaled[i]);
  }
  mpz_class divisor = sign < 0 ? mpz_class(-num_gcd) : num_gcd;
  for (auto& c : scaled) {
    c /= Rat(divisor);
    c.canonicalize();
  }
  return Vec(std::move(scaled));
}

}  // namespace

// ---------- Vec ----------

Vec Vec::unit(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw std::invalid_argument("unit vector axis out of range");
  Vec v(dim);
  v[axis] = 1;
  return v;
}

bool Vec::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

Vec Vec::operator+(const Vec& o) const {
  require_same_dim(*this, o, "vector sum");
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = coords_[i] + o[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  require_same_dim(*this, o, "vector difference");
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = coords_[i] - o[i];
  return r;
}

Vec Vec::operator*(const Rat& s) const {
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = coords_[i] * s;
  return r;
}

Vec Vec::operator-() const {
  return *this * Rat(-1);
}

Vec operator*(const Rat& s, const Vec& v) { return v * s; }

Rat inner(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "inner product");
  Rat acc(0);
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat norm_sq(const Vec& v) { return inner(v, v); }

bool lex_less(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string vec_to_string(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ',';
    out += rat_to_string(v[i]);
  }
  return out;
}

Vec vec_from_string(std::string_view text) {
  std::vector<Rat> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = comma == std::string_view::npos
                               ? text.substr(start)
                               : text.substr(start, comma - start);
    coords.push_back(rat_from_string(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Vec(std::move(coords));
}

// ---------- Subspace ----------

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, {});
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vec> basis;
  basis.reserve(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(Vec::unit(ambient_dim, i));
  return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::from_orthogonal(std::size_t ambient_dim, std::vector<Vec> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    require(basis[i].dim() == ambient_dim, "basis vector has wrong ambient dimension");
    require(!basis[i].is_zero(), "basis vector is zero");
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      require(inner(basis[i], basis[j]) == 0, "basis vectors are not pairwise orthogonal");
    }
  }
  for (auto& b : basis) b = primitive(b);
  return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains(const Vec& v) const {
  return project_decompose(v, *this).residue.is_zero();
}

bool Subspace::contains_subspace(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim_) return false;
  for (const auto& b : other.basis()) {
    if (!contains(b)) return false;
  }
  return true;
}

Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  std::vector<Vec> basis;
  for (const auto& v : vectors) {
    require(v.dim() == ambient_dim, "span: vector has wrong ambient dimension");
    Vec r = v;
    for (const auto& b : basis) {
      r = r - (inner(r, b) / norm_sq(b)) * b;
    }
    if (!r.is_zero()) basis.push_back(primitive(r));
  }
  return Subspace::from_orthogonal(ambient_dim, std::move(basis));
}

Subspace span(const std::vector<Vec>& vectors) {
  require(!vectors.empty(), "span: empty list has no ambient dimension");
  return span(vectors.front().dim(), vectors);
}

Decomposition project_decompose(const Vec& v, const Subspace& s) {
  if (v.dim() != s.ambient_dim()) {
    throw std::invalid_argument("project: point dimension " + std::to_string(v.dim()) +
                                " does not match ambient " + std::to_string(s.ambient_dim()));
  }
  Vec proj(v.dim());
  for (const auto& b : s.basis()) {
    proj = proj + (inner(v, b) / norm_sq(b)) * b;
  }
  return Decomposition{proj, v - proj};
}

Vec project(const Vec& v, const Subspace& s) {
  return project_decompose(v, s).proj;
}

Subspace relative_complement(const Subspace& big, const Subspace& small) {
  require(big.ambient_dim() == small.ambient_dim(),
          "relative_complement: ambient dimensions differ");
  require(big.contains_subspace(small), "relative_complement: small is not inside big");
  std::vector<Vec> residues;
  for (const auto& b : big.basis()) {
    Vec r = project_decompose(b, small).residue;
    if (!r.is_zero()) residues.push_back(r);
  }
  Subspace result = span(big.ambient_dim(), residues);
  if (result.dim() + small.dim() != big.dim()) {
    throw std::logic_error("relative_complement: rank bookkeeping failed");
  }
  return result;
}

Subspace join_spans(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), "join_spans: ambient dimensions differ");
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return span(a.ambient_dim(), all);
}

// ---------- GramMatrix ----------

GramMatrix gram_of_tuple(const std::vector<Vec>& vectors) {
  GramMatrix g(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      Rat p = inner(vectors[i], vectors[j]);
      g.at(i, j) = p;
      g.at(j, i) = p;
    }
  }
  return g;
}

bool GramMatrix::is_psd() const {
  // Symmetric elimination over the rationals. Invariant: the working matrix
  // stays the Gram matrix of some tuple iff every pivot is nonnegative and
  // zero pivots kill their whole row.
  GramMatrix w = *this;
  const std::size_t n = n_;
  for (std::size_t k = 0; k < n; ++k) {
    const Rat& pivot = w.at(k, k);
    if (pivot < 0) return false;
    if (pivot == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (w.at(k, j) != 0) return false;
      }
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat factor = w.at(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) {
        w.at(i, j) -= factor * w.at(k, j);
      }
    }
  }
  return true;
}

// ---------- LinearMap ----------

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec LinearMap::apply(const Vec& v) const {
  if (v.dim() != cols_) {
    throw std::invalid_argument("linear map applied to vector of wrong dimension");
  }
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat acc(0);
    for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

// ---------- embeddings ----------

bool is_isometric_embedding(const Subspace& source, const std::vector<Vec>& images) {
  if (images.size() != source.dim()) return false;
  return gram_of_tuple(source.basis()) == gram_of_tuple(images);
}

Vec pull_back(const Subspace& source, const std::vector<Vec>& images, const Vec& y) {
  require(images.size() == source.dim(), "pull_back: image count != source dim");
  Vec out(source.ambient_dim());
  for (std::size_t i = 0; i < images.size(); ++i) {
    Rat coeff = inner(y, images[i]) / norm_sq(source.basis()[i]);
    out = out + coeff * source.basis()[i];
  }
  return out;
}

Vec push_forward(const Subspace& source, const std::vector<Vec>& images, const Vec& v) {
  require(images.size() == source.dim(), "push_forward: image count != source dim");
  require(!images.empty() || source.dim() == 0, "push_forward: no images");
  std::size_t target_dim = images.empty() ? 0 : images.front().dim();
  Vec out(target_dim);
  for (std::size_t i = 0; i < images.size(); ++i) {
    Rat coeff = inner(v, source.basis()[i]) / norm_sq(source.basis()[i]);
    out = out + coeff * images[i];
  }
  return out;
}

// ---------- free_join ----------

AmalgamEmbedding free_join(const Subspace& left, const Subspace& right,
                           const Subspace& base,
                           const std::vector<Vec>& base_left,
                           const std::vector<Vec>& base_right) {
  require(base_left.size() == base.dim(), "free_join: wrong number of left base images");
  require(base_right.size() == base.dim(), "free_join: wrong number of right base images");
  for (const auto& img : base_left) {
    require(left.contains(img), "free_join: left base image is outside the left space");
  }
  for (const auto& img : base_right) {
    require(right.contains(img), "free_join: right base image is outside the right space");
  }
  require(is_isometric_embedding(base, base_left),
          "free_join: left base embedding is not isometric");
  require(is_isometric_embedding(base, base_right),
          "free_join: right base embedding is not isometric");

  const std::size_t dl = left.ambient_dim();
  const std::size_t dr = right.ambient_dim();
  const std::size_t dj = dl + dr;

  // Left map: block inclusion into the first dl coordinates.
  LinearMap lmap(dj, dl);
  for (std::size_t i = 0; i < dl; ++i) lmap.at(i, i) = 1;

  // Right map: transfer the base component onto the embedded left copy of
  // the base, pad the rest into the second block. Columns are computed from
  //   M e_j = Σ_i (g_i[j] / ‖f_i‖²) · L(base_left_i)
  //         + pad(e_j − Σ_i (g_i[j] / ‖f_i‖²) g_i)
  // where f_i runs over base.basis() and g_i over base_right.
  LinearMap rmap(dj, dr);
  for (std::size_t j = 0; j < dr; ++j) {
    Vec col(dj);
    Vec residual = Vec::unit(dr, j);
    for (std::size_t i = 0; i < base.dim(); ++i) {
      Rat coeff = base_right[i][j] / norm_sq(base.basis()[i]);
      col = col + coeff * lmap.apply(base_left[i]);
      residual = residual - coeff * base_right[i];
    }
    for (std::size_t r = 0; r < dr; ++r) col[dl + r] += residual[r];
    for (std::size_t r = 0; r < dj; ++r) rmap.at(r, j) = col[r];
  }

  std::vector<Vec> left_imgs, right_imgs, base_imgs;
  for (const auto& b : left.basis()) left_imgs.push_back(lmap.apply(b));
  for (const auto& b : right.basis()) right_imgs.push_back(rmap.apply(b));
  for (std::size_t i = 0; i < base.dim(); ++i) {
    Vec via_left = lmap.apply(base_left[i]);
    Vec via_right = rmap.apply(base_right[i]);
    if (via_left != via_right) {
      throw std::logic_error("free_join: the two maps disagree on the base");
    }
    base_imgs.push_back(via_left);
  }

  if (gram_of_tuple(right.basis()) != gram_of_tuple(right_imgs)) {
    throw std::logic_error("free_join: right map is not isometric on the right space");
  }

  Subspace left_in_joint = Subspace::from_orthogonal(dj, left_imgs);
  Subspace right_in_joint = Subspace::from_orthogonal(dj, right_imgs);
  Subspace base_in_joint = Subspace::from_orthogonal(dj, base_imgs);

  std::vector<Vec> all = left_imgs;
  all.insert(all.end(), right_imgs.begin(), right_imgs.end());
  Subspace joint_space = span(dj, all);
  if (joint_space.dim() + base.dim() != left.dim() + right.dim()) {
    throw std::logic_error("free_join: embedded images overlap beyond the base");
  }

  // Residue blocks must be orthogonal — the defining property of a free join.
  Subspace left_res = relative_complement(left_in_joint, base_in_joint);
  Subspace right_res = relative_complement(right_in_joint, base_in_joint);
  for (const auto& a : left_res.basis()) {
    for (const auto& b : right_res.basis()) {
      if (inner(a, b) != 0) {
        throw std::logic_error("free_join: residue blocks are not orthogonal");
      }
    }
  }

  AmalgamEmbedding emb;
  emb.base = base;
  emb.left_map = std::move(lmap);
  emb.right_map = std::move(rmap);
  emb.joint_ambient_dim = dj;
  emb.joint_space = std::move(joint_space);
  emb.base_in_joint = std::move(base_in_joint);
  emb.left_in_joint = std::move(left_in_joint);
  emb.right_in_joint = std::move(right_in_joint);
  emb.left_basis_in_joint = std::move(left_imgs);
  emb.right_basis_in_joint = std::move(right_imgs);
  return emb;
}

}  // namespace hg
