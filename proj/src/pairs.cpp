#include "hg/pairs.hpp"

#include <stdexcept>

namespace hg {

ProjectionPairStructure make_pair_structure(Subspace space, Subspace g) {
  if (space.ambient_dim() != g.ambient_dim()) {
    throw std::invalid_argument("pair structure: space and image use different ambients");
  }
  if (!space.contains_subspace(g)) {
    throw std::invalid_argument("pair structure: projection image is not inside the space");
  }
  return ProjectionPairStructure{std::move(space), std::move(g)};
}

ProjectionImage apply_projection(const Vec& v, const ProjectionPairStructure& pp) {
  Decomposition d = project_decompose(v, pp.g);
  return ProjectionImage{d.proj, norm_sq(d.residue)};
}

RecoveryCertificate verify_projection_recovery(const Vec& v, const Vec& x,
                                               const ProjectionPairStructure& pp) {
  RecoveryCertificate cert;
  Decomposition dx = project_decompose(x, pp.g);
  Decomposition dv = project_decompose(v, pp.g);
  cert.x_dist_sq = norm_sq(dx.residue);
  cert.vx_sq = norm_sq(v - x);
  cert.dv_sq = norm_sq(dv.residue);
  cert.gap_sq = norm_sq(dv.proj - x);
  cert.holds = cert.x_dist_sq == 0 && cert.vx_sq == cert.dv_sq;
  cert.pythagoras_ok = cert.x_dist_sq != 0 || cert.gap_sq == cert.vx_sq - cert.dv_sq;
  return cert;
}

void require_sub_pair(const ProjectionPairStructure& small,
                      const ProjectionPairStructure& big,
                      const std::vector<Vec>& images) {
  if (!is_isometric_embedding(small.space, images)) {
    throw std::invalid_argument("sub-pair embedding is not isometric");
  }
  for (const auto& img : images) {
    if (!big.space.contains(img)) {
      throw std::invalid_argument("sub-pair embedding leaves the big space");
    }
  }
  // The big projection must restrict to the small one: on every basis
  // vector, projecting the image equals embedding the projection.
  for (std::size_t i = 0; i < images.size(); ++i) {
    Vec lhs = project(images[i], big.g);
    Vec small_proj = project(small.space.basis()[i], small.g);
    Vec rhs = push_forward(small.space, images, small_proj);
    if (lhs != rhs) {
      throw std::invalid_argument("sub-pair embedding: projections do not restrict");
    }
  }
}

PairAmalgam amalgamate_pairs(const ProjectionPairStructure& base,
                             const ProjectionPairStructure& left,
                             const ProjectionPairStructure& right,
                             const std::vector<Vec>& base_in_left,
                             const std::vector<Vec>& base_in_right) {
  require_sub_pair(base, left, base_in_left);
  require_sub_pair(base, right, base_in_right);

  AmalgamEmbedding emb =
      free_join(left.space, right.space, base.space, base_in_left, base_in_right);

  auto map_subspace = [](const Subspace& src, const LinearMap& m, std::size_t dj) {
    std::vector<Vec> imgs;
    imgs.reserve(src.dim());
    for (const auto& b : src.basis()) imgs.push_back(m.apply(b));
    return Subspace::from_orthogonal(dj, imgs);
  };

  Subspace g_left = map_subspace(left.g, emb.left_map, emb.joint_ambient_dim);
  Subspace g_right = map_subspace(right.g, emb.right_map, emb.joint_ambient_dim);

  std::vector<Vec> g_base_imgs;
  for (const auto& b : base.g.basis()) {
    g_base_imgs.push_back(emb.left_map.apply(push_forward(base.space, base_in_left, b)));
  }
  Subspace g_base = Subspace::from_orthogonal(emb.joint_ambient_dim, g_base_imgs);

  Subspace g_joined = join_spans(g_left, g_right);

  PairAmalgam am;
  am.left_residue = relative_complement(emb.left_in_joint, emb.base_in_joint);
  am.right_residue = relative_complement(emb.right_in_joint, emb.base_in_joint);
  am.joined = make_pair_structure(emb.joint_space, g_joined);
  am.emb = std::move(emb);
  am.g_base_in_joint = std::move(g_base);
  am.g_left_in_joint = std::move(g_left);
  am.g_right_in_joint = std::move(g_right);
  return am;
}

Vec PairAmalgam::formula_projection(const Vec& joint_point) const {
  // Independent evaluation route: split v = u₀ + u₁ + u₂ along
  // base / left residue / right residue, project each part inside its own
  // block, and add the three results.
  Vec u0 = project(joint_point, emb.base_in_joint);
  Vec u1 = project(joint_point, left_residue);
  Vec u2 = project(joint_point, right_residue);
  return project(u0, g_base_in_joint) + project(u1, g_left_in_joint) +
         project(u2, g_right_in_joint);
}

PairType pair_type(const std::vector<Vec>& tuple, const ProjectionPairStructure& pp) {
  std::vector<Vec> projections, residues;
  projections.reserve(tuple.size());
  residues.reserve(tuple.size());
  for (const auto& v : tuple) {
    Decomposition d = project_decompose(v, pp.g);
    projections.push_back(d.proj);
    residues.push_back(d.residue);
  }
  return PairType{gram_of_tuple(projections), gram_of_tuple(residues)};
}

bool pair_types_equal(const PairType& a, const PairType& b) {
  return a.first == b.first && a.second == b.second;
}

Subspace pair_dcl(const std::vector<Vec>& a, const ProjectionPairStructure& pp) {
  std::vector<Vec> generators = a;
  for (const auto& v : a) generators.push_back(project(v, pp.g));
  return span(pp.space.ambient_dim(), generators);
}

IndependenceVerdict pair_independent(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                     const std::vector<Vec>& c,
                                     const ProjectionPairStructure& pp) {
  auto augment = [&pp](const std::vector<Vec>& xs) {
    std::vector<Vec> out = xs;
    for (const auto& v : xs) out.push_back(project(v, pp.g));
    return out;
  };
  return non_dividing(augment(a), augment(b), pair_dcl(c, pp));
}

bool genericity_witnesses(const ProjectionPairStructure& pp, std::size_t n) {
  return pp.g.dim() >= n && pp.space.dim() - pp.g.dim() >= n;
}

}  // namespace hg
