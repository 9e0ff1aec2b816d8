#include "hg/blackset.hpp"

#include <algorithm>
#include <stdexcept>

namespace hg {

namespace {

const Rat kOne(1);

std::vector<Vec> sorted_unique(std::vector<Vec> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

void append_midpoints(std::vector<Vec>& points) {
  const std::size_t n = points.size();
  const Rat half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      points.push_back(half * (points[i] + points[j]));
    }
  }
}

}  // namespace

BlackSetStructure make_blackset(Subspace space, std::vector<Vec> blacks) {
  for (const auto& b : blacks) {
    if (!space.contains(b)) {
      throw std::invalid_argument("black point (" + vec_to_string(b) +
                                  ") is outside the structure's space");
    }
  }
  return BlackSetStructure{std::move(space), sorted_unique(std::move(blacks))};
}

DistanceCertificate dist_black_sq(const Vec& v, const BlackSetStructure& s) {
  if (v.dim() != s.space.ambient_dim()) {
    throw std::invalid_argument("dist_black_sq: point dimension does not match ambient");
  }
  DistanceCertificate cert;
  cert.point = v;
  if (s.blacks.empty()) {
    cert.dist_sq = kOne;
    return cert;
  }
  Rat best = norm_sq(v - s.blacks.front());
  std::size_t best_index = 0;
  std::size_t ties = 1;
  for (std::size_t i = 1; i < s.blacks.size(); ++i) {
    Rat d = norm_sq(v - s.blacks[i]);
    int c = cmp(d, best);
    if (c < 0) {
      best = d;
      best_index = i;
      ties = 1;
    } else if (c == 0) {
      ++ties;
    }
  }
  cert.raw_sq = best;
  cert.dist_sq = best < kOne ? best : kOne;
  cert.witness = s.blacks[best_index];
  cert.unique = ties == 1;
  return cert;
}

Rat class_value(const BlackSetStructure& s) {
  return dist_black_sq(Vec(s.space.ambient_dim()), s).dist_sq;
}

bool abs_diff_le_sqrt(const Rat& a_sq, const Rat& b_sq, const Rat& c_sq) {
  // |√A − √B| ≤ √C  ⟺  A + B − C ≤ 2√(AB)  ⟺  A+B−C ≤ 0  ∨  (A+B−C)² ≤ 4AB.
  Rat lhs = a_sq + b_sq - c_sq;
  if (lhs <= 0) return true;
  return lhs * lhs <= 4 * a_sq * b_sq;
}

std::vector<Vec> default_axiom_probes(const BlackSetStructure& s) {
  std::vector<Vec> probes = s.blacks;
  append_midpoints(probes);
  return sorted_unique(std::move(probes));
}

AxiomCertificate check_axioms(const BlackSetStructure& s,
                              const std::vector<TableEntry>& table,
                              const std::vector<Vec>& probes) {
  AxiomCertificate cert;
  for (const auto& entry : table) {
    Rat actual = dist_black_sq(entry.point, s).dist_sq;
    if (actual != entry.claimed_sq) {
      cert.pass = false;
      cert.table_fault = TableFault{entry.point, entry.claimed_sq, actual};
      cert.issues.push_back("table claims d(" + vec_to_string(entry.point) + ")^2 = " +
                            rat_to_string(entry.claimed_sq) + " but the structure gives " +
                            rat_to_string(actual));
      return cert;
    }
  }
  if (probes.empty()) {
    cert.incomplete = true;
    return cert;
  }
  std::vector<Rat> dist(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) {
    DistanceCertificate d = dist_black_sq(probes[i], s);
    dist[i] = d.dist_sq;
    if (d.dist_sq < kOne) {
      ++cert.witnesses_checked;
      if (!d.witness.has_value() || norm_sq(probes[i] - *d.witness) != d.dist_sq) {
        cert.pass = false;
        cert.issues.push_back("no witness black attains d(" + vec_to_string(probes[i]) + ")");
        return cert;
      }
    }
  }
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t j = i + 1; j < probes.size(); ++j) {
      ++cert.lipschitz_pairs_checked;
      if (!abs_diff_le_sqrt(dist[i], dist[j], norm_sq(probes[i] - probes[j]))) {
        cert.pass = false;
        cert.issues.push_back("Lipschitz bound fails between " + vec_to_string(probes[i]) +
                              " and " + vec_to_string(probes[j]));
        return cert;
      }
    }
  }
  return cert;
}

// ---------- substructure certification ----------

std::vector<Vec> default_substructure_probes(const BlackSetStructure& small,
                                             const BlackSetStructure& big,
                                             const std::vector<Vec>& images) {
  std::vector<Vec> probes = small.blacks;
  probes.push_back(Vec(small.space.ambient_dim()));  // origin: pins the class
  Subspace embedded = Subspace::from_orthogonal(big.space.ambient_dim(), images);
  for (const auto& b : big.blacks) {
    probes.push_back(pull_back(small.space, images, project(b, embedded)));
  }
  probes = sorted_unique(std::move(probes));
  append_midpoints(probes);
  return sorted_unique(std::move(probes));
}

SubstructureCertificate check_substructure(const BlackSetStructure& small,
                                           const BlackSetStructure& big,
                                           const std::vector<Vec>& images,
                                           const std::vector<Vec>& probes) {
  if (!is_isometric_embedding(small.space, images)) {
    throw std::invalid_argument("check_substructure: embedding is not isometric");
  }
  for (const auto& img : images) {
    if (!big.space.contains(img)) {
      throw std::invalid_argument("check_substructure: embedding leaves the big space");
    }
  }
  SubstructureCertificate cert;
  if (probes.empty()) {
    cert.incomplete = true;
    return cert;
  }
  for (const auto& p : probes) {
    if (!small.space.contains(p)) {
      throw std::invalid_argument("check_substructure: probe (" + vec_to_string(p) +
                                  ") is outside the small structure's space");
    }
    Rat small_sq = dist_black_sq(p, small).dist_sq;
    // A zero-dimensional small space embeds its only member at the origin;
    // push_forward cannot infer the target ambient from an empty image list.
    Vec embedded = images.empty() ? Vec(big.space.ambient_dim())
                                  : push_forward(small.space, images, p);
    Rat big_sq = dist_black_sq(embedded, big).dist_sq;
    ++cert.probes_checked;
    if (small_sq != big_sq) {
      cert.pass = false;
      cert.violation = SubstructureViolation{p, small_sq, big_sq};
      return cert;
    }
  }
  return cert;
}

// ---------- joins and amalgams ----------

OrthogonalJoin join_orthogonal(const BlackSetStructure& s1, const BlackSetStructure& s2) {
  if (class_value(s1) != 0 || class_value(s2) != 0) {
    throw std::invalid_argument("join_orthogonal: both structures must have a black origin");
  }
  Subspace base = Subspace::zero(s1.space.ambient_dim());
  AmalgamEmbedding emb = free_join(s1.space, s2.space, base, {}, {});

  std::vector<Vec> blacks;
  for (const auto& b : s1.blacks) blacks.push_back(emb.left_map.apply(b));
  for (const auto& b : s2.blacks) blacks.push_back(emb.right_map.apply(b));

  OrthogonalJoin join;
  join.joined = make_blackset(emb.joint_space, std::move(blacks));

  auto side_cert = [&join](const BlackSetStructure& side, const std::vector<Vec>& images) {
    std::vector<Vec> probes = side.blacks;
    append_midpoints(probes);
    return check_substructure(side, join.joined, images, sorted_unique(std::move(probes)));
  };
  join.left_cert = side_cert(s1, emb.left_basis_in_joint);
  join.right_cert = side_cert(s2, emb.right_basis_in_joint);
  if (!join.left_cert.pass || !join.right_cert.pass) {
    throw std::logic_error("join_orthogonal: a side failed to keep its predicate");
  }
  join.emb = std::move(emb);
  return join;
}

BlackSetAmalgam amalgamate_blacksets(const BlackSetStructure& base,
                                     const BlackSetStructure& left,
                                     const BlackSetStructure& right,
                                     const std::vector<Vec>& base_in_left,
                                     const std::vector<Vec>& base_in_right) {
  SubstructureCertificate cert_left = check_substructure(
      base, left, base_in_left, default_substructure_probes(base, left, base_in_left));
  if (!cert_left.pass) {
    throw std::invalid_argument(
        "amalgamate_blacksets: base is not a substructure of the left side; probe (" +
        vec_to_string(cert_left.violation->probe) + ") separates " +
        rat_to_string(cert_left.violation->small_sq) + " from " +
        rat_to_string(cert_left.violation->big_sq));
  }
  SubstructureCertificate cert_right = check_substructure(
      base, right, base_in_right, default_substructure_probes(base, right, base_in_right));
  if (!cert_right.pass) {
    throw std::invalid_argument(
        "amalgamate_blacksets: base is not a substructure of the right side; probe (" +
        vec_to_string(cert_right.violation->probe) + ") separates " +
        rat_to_string(cert_right.violation->small_sq) + " from " +
        rat_to_string(cert_right.violation->big_sq));
  }
  if (class_value(left) != class_value(right) || class_value(left) != class_value(base)) {
    throw std::invalid_argument("amalgamate_blacksets: class values disagree");
  }

  AmalgamEmbedding emb = free_join(left.space, right.space, base.space,
                                   base_in_left, base_in_right);

  std::vector<Vec> blacks;
  for (const auto& b : left.blacks) blacks.push_back(emb.left_map.apply(b));
  for (const auto& b : right.blacks) blacks.push_back(emb.right_map.apply(b));

  BlackSetAmalgam am;
  am.joined = make_blackset(emb.joint_space, std::move(blacks));
  am.left_residue = relative_complement(emb.left_in_joint, emb.base_in_joint);
  am.right_residue = relative_complement(emb.right_in_joint, emb.base_in_joint);
  am.base = base;
  am.left = left;
  am.right = right;
  am.base_in_left = std::move(cert_left);
  am.base_in_right = std::move(cert_right);
  am.emb = std::move(emb);
  return am;
}

Rat BlackSetAmalgam::formula_dist_sq(const Vec& joint_point) const {
  Vec on_left = pull_back(left.space, emb.left_basis_in_joint,
                          project(joint_point, emb.left_in_joint));
  Vec on_right = pull_back(right.space, emb.right_basis_in_joint,
                           project(joint_point, emb.right_in_joint));
  Rat term_left = dist_black_sq(on_left, left).dist_sq +
                  norm_sq(project(joint_point, right_residue));
  Rat term_right = dist_black_sq(on_right, right).dist_sq +
                   norm_sq(project(joint_point, left_residue));
  Rat best = term_left < term_right ? term_left : term_right;
  return best < kOne ? best : kOne;
}

IndependentUnion independent_union_amalgam(const BlackSetStructure& base,
                                           const std::vector<BlackSetStructure>& parts,
                                           const std::vector<std::vector<Vec>>& base_in_parts) {
  if (parts.empty()) {
    throw std::invalid_argument("independent_union_amalgam: no parts to join");
  }
  if (base_in_parts.size() != parts.size()) {
    throw std::invalid_argument("independent_union_amalgam: one base embedding per part required");
  }

  IndependentUnion result;
  result.joined = parts.front();
  result.base_images = base_in_parts.front();
  result.part_images.push_back(parts.front().space.basis());

  for (std::size_t i = 1; i < parts.size(); ++i) {
    BlackSetAmalgam am = amalgamate_blacksets(base, result.joined, parts[i],
                                              result.base_images, base_in_parts[i]);
    for (auto& images : result.part_images) {
      for (auto& img : images) img = am.emb.left_map.apply(img);
    }
    for (auto& img : result.base_images) img = am.emb.left_map.apply(img);
    std::vector<Vec> new_images;
    for (const auto& b : parts[i].space.basis()) new_images.push_back(am.emb.right_map.apply(b));
    result.part_images.push_back(std::move(new_images));
    result.joined = std::move(am.joined);
  }

  // Parts may meet only in the base: pairwise rank check.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      std::vector<Vec> both = result.part_images[i];
      both.insert(both.end(), result.part_images[j].begin(), result.part_images[j].end());
      Subspace sum = span(result.joined.space.ambient_dim(), both);
      if (sum.dim() + base.space.dim() != parts[i].space.dim() + parts[j].space.dim()) {
        throw std::logic_error("independent_union_amalgam: parts overlap beyond the base");
      }
    }
  }

  for (std::size_t i = 0; i < parts.size(); ++i) {
    result.part_certs.push_back(check_substructure(
        parts[i], result.joined, result.part_images[i],
        default_substructure_probes(parts[i], result.joined, result.part_images[i])));
  }
  return result;
}

}  // namespace hg
