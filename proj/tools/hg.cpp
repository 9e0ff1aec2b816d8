// hg — build, persist, join, and verify finitely presented Hilbert-space
// structures expanded by a projection or a black-set distance predicate.
//
// Exit codes: 0 success / all claims pass, 1 a computation or claim failed,
// 2 usage error (bad flags, malformed input, out-of-bounds parameters).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hg/blackset.hpp"
#include "hg/independence.hpp"
#include "hg/io.hpp"
#include "hg/linalg.hpp"
#include "hg/pairs.hpp"
#include "hg/rational.hpp"
#include "hg/report.hpp"
#include "hg/suites.hpp"
#include "hg/witness.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kUsage;
}

int failed(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kFailed;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

hg::StructureDoc load_doc(const std::string& path) {
  return hg::parse_structure(read_file(path));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

// One vector per significant line, "p/q,p/q,…"; '#' starts a comment line.
std::vector<hg::Vec> load_probe_file(const std::string& path) {
  std::vector<hg::Vec> probes;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t stop = line.find_last_not_of(" \t\r");
    probes.push_back(hg::vec_from_string(line.substr(start, stop - start + 1)));
  }
  return probes;
}

// The CLI's embedding convention: a structure on R^k includes into one on
// R^n (k ≤ n) by padding coordinates with zeros.
std::vector<hg::Vec> inclusion_images(const hg::Subspace& small, std::size_t big_dim) {
  std::vector<hg::Vec> images;
  for (const auto& b : small.basis()) {
    hg::Vec v(big_dim);
    for (std::size_t i = 0; i < b.dim(); ++i) v[i] = b[i];
    images.push_back(v);
  }
  return images;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

struct VerifyBounds {
  std::size_t n = 10, ring = 3, k = 3, m = 4, rows = 4, cols = 4, funcs = 16;
  std::size_t instances = 100, fuzz_dim = 6, fuzz_den = 4, fuzz_blacks = 8;
  std::uint64_t seed = 0;
};

// Documented parameter bounds; anything outside is a usage error.
std::string check_bounds(const VerifyBounds& b) {
  if (b.n < 1 || b.n > 10) return "--n must be in 1..10";
  if (b.ring < 1 || b.ring > 8) return "--ring must be in 1..8";
  if (b.k < 1 || b.k > 3) return "--k must be in 1..3";
  if (b.m < b.k || b.m > 5) return "--m must be in k..5";
  if (b.rows < 1 || b.rows > 4) return "--rows must be in 1..4";
  if (b.cols < 1 || b.cols > 4) return "--cols must be in 1..4";
  std::size_t cap = 1;
  for (std::size_t i = 0; i < b.rows; ++i) cap *= b.cols;
  if (b.funcs < 1 || b.funcs > 32 || b.funcs > cap) {
    return "--funcs must be in 1..32 and at most cols^rows";
  }
  if (b.instances < 1 || b.instances > 999) return "--instances must be in 1..999";
  if (b.fuzz_dim < 3 || b.fuzz_dim > 8) return "--fuzz-dim must be in 3..8";
  if (b.fuzz_den < 1 || b.fuzz_den > 16) return "--fuzz-den must be in 1..16";
  if (b.fuzz_blacks < 4 || b.fuzz_blacks > 64) return "--fuzz-blacks must be in 4..64";
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finitely presented Hilbert-space structures with predicates"};
  app.require_subcommand(1);

  // ---- new ----
  std::string new_kind, new_out;
  std::size_t new_dim = 0;
  auto* cmd_new = app.add_subcommand("new", "write a fresh structure file");
  cmd_new->add_option("kind", new_kind, "hilbert | pair | blackset")->required();
  cmd_new->add_option("--dim", new_dim, "ambient dimension")->required();
  cmd_new->add_option("--out", new_out, "output file (default stdout)");

  // ---- show ----
  std::string show_file, show_format = "text";
  auto* cmd_show = app.add_subcommand("show", "summarize a structure file");
  cmd_show->add_option("file", show_file)->required();
  cmd_show->add_option("--format", show_format, "text | machine");

  // ---- dist ----
  std::string dist_file, dist_point, dist_format = "text";
  auto* cmd_dist = app.add_subcommand("dist", "truncated distance to the black set");
  cmd_dist->add_option("file", dist_file)->required();
  cmd_dist->add_option("point", dist_point, "point as p/q,p/q,…")->required();
  cmd_dist->add_option("--format", dist_format, "text | machine");

  // ---- project ----
  std::string proj_file, proj_point, proj_format = "text";
  auto* cmd_project = app.add_subcommand("project", "orthogonal projection of a point");
  cmd_project->add_option("file", proj_file)->required();
  cmd_project->add_option("point", proj_point, "point as p/q,p/q,…")->required();
  cmd_project->add_option("--format", proj_format, "text | machine");

  // ---- join ----
  std::string join_left, join_right, join_out;
  auto* cmd_join =
      app.add_subcommand("join", "orthogonal join of two class-0 black-set structures");
  cmd_join->add_option("left", join_left)->required();
  cmd_join->add_option("right", join_right)->required();
  cmd_join->add_option("--out", join_out, "output file (default stdout)");

  // ---- amalgamate ----
  std::string am_base, am_left, am_right, am_out;
  auto* cmd_am = app.add_subcommand(
      "amalgamate", "free amalgam of two structures over a common base (coordinate inclusion)");
  cmd_am->add_option("base", am_base)->required();
  cmd_am->add_option("left", am_left)->required();
  cmd_am->add_option("right", am_right)->required();
  cmd_am->add_option("--out", am_out, "output file (default stdout)");

  // ---- check-substructure ----
  std::string sub_small, sub_big, sub_probes, sub_format = "text";
  auto* cmd_sub = app.add_subcommand(
      "check-substructure", "certify that one structure restricts to another (inclusion)");
  cmd_sub->add_option("small", sub_small)->required();
  cmd_sub->add_option("big", sub_big)->required();
  cmd_sub->add_option("--probes", sub_probes, "extra probe file, one p/q,… vector per line");
  cmd_sub->add_option("--format", sub_format, "text | machine");

  // ---- independence ----
  std::string ind_file, ind_format = "text";
  std::vector<std::string> ind_a, ind_b, ind_c;
  auto* cmd_ind = app.add_subcommand("independence", "non-dividing check and forking margin");
  cmd_ind->add_option("file", ind_file)->required();
  cmd_ind->add_option("--a", ind_a, "tuple A vector (repeatable)")->required();
  cmd_ind->add_option("--b", ind_b, "tuple B vector (repeatable)")->required();
  cmd_ind->add_option("--c", ind_c, "base C vector (repeatable; empty means the zero space)");
  cmd_ind->add_option("--format", ind_format, "text | machine");

  // ---- gen ----
  std::string gen_config, gen_out;
  VerifyBounds gen_params;
  auto* cmd_gen = app.add_subcommand(
      "gen", "generate a named counterexample configuration as a structure file");
  cmd_gen->add_option("config", gen_config, "instability | qe-failure | nonsimple | tp2")
      ->required();
  cmd_gen->add_option("--n", gen_params.n, "instability size (default 10)");
  cmd_gen->add_option("--ring", gen_params.ring, "qe-failure ring size (default 3)");
  cmd_gen->add_option("--k", gen_params.k, "nonsimple subset size (default 3)");
  cmd_gen->add_option("--m", gen_params.m, "nonsimple ground size (default 4)");
  cmd_gen->add_option("--rows", gen_params.rows, "tp2 rows (default 4)");
  cmd_gen->add_option("--cols", gen_params.cols, "tp2 columns (default 4)");
  cmd_gen->add_option("--funcs", gen_params.funcs, "tp2 function count (default 16)");
  cmd_gen->add_option("--out", gen_out, "output file (default stdout)");

  // ---- verify ----
  std::string verify_suite, verify_format = "text";
  VerifyBounds verify_params;
  bool inject_fault = false;
  auto* cmd_verify = app.add_subcommand("verify", "run a claim suite and report every claim");
  cmd_verify
      ->add_option("suite", verify_suite,
                   "instability | qe-failure | nonsimple | tp2 | amalgam-fuzz | pair-fuzz | "
                   "independence-fuzz | all")
      ->required();
  cmd_verify->add_option("--n", verify_params.n, "instability size (default 10)");
  cmd_verify->add_option("--ring", verify_params.ring, "qe-failure ring size (default 3)");
  cmd_verify->add_option("--k", verify_params.k, "nonsimple subset size (default 3)");
  cmd_verify->add_option("--m", verify_params.m, "nonsimple ground size (default 4)");
  cmd_verify->add_option("--rows", verify_params.rows, "tp2 rows (default 4)");
  cmd_verify->add_option("--cols", verify_params.cols, "tp2 columns (default 4)");
  cmd_verify->add_option("--funcs", verify_params.funcs, "tp2 function count (default 16)");
  cmd_verify->add_option("--instances", verify_params.instances,
                         "fuzz instances per suite (default 100)");
  cmd_verify->add_option("--seed", verify_params.seed, "fuzz seed (default 0)");
  cmd_verify->add_option("--fuzz-dim", verify_params.fuzz_dim,
                         "fuzz ambient bound (default 6)");
  cmd_verify->add_option("--fuzz-den", verify_params.fuzz_den,
                         "fuzz denominator bound (default 4)");
  cmd_verify->add_option("--fuzz-blacks", verify_params.fuzz_blacks,
                         "fuzz black-set size bound (default 8)");
  cmd_verify->add_flag("--inject-fault", inject_fault,
                       "score the amalgam fuzz suite with a deliberately wrong formula");
  cmd_verify->add_option("--format", verify_format, "text | machine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  auto check_format = [&](const std::string& f) { return f == "text" || f == "machine"; };

  try {
    // ---------------- new ----------------
    if (cmd_new->parsed()) {
      auto kind = hg::kind_from_string(new_kind);
      if (!kind) return usage("unknown kind '" + new_kind + "'");
      if (new_dim < 1 || new_dim > hg::max_ambient_dim()) {
        return usage("--dim must be in 1.." + std::to_string(hg::max_ambient_dim()) +
                     " (HG_MAX_DIM)");
      }
      hg::StructureDoc doc;
      switch (*kind) {
        case hg::Kind::hilbert:
          doc = hg::doc_from_space(hg::Subspace::full(new_dim));
          break;
        case hg::Kind::pair:
          doc = hg::doc_from_pair(
              hg::make_pair_structure(hg::Subspace::full(new_dim), hg::Subspace::zero(new_dim)));
          break;
        case hg::Kind::blackset:
          // Seeded with a black at the origin: the canonical class-0 start.
          doc = hg::doc_from_blackset(
              hg::make_blackset(hg::Subspace::full(new_dim), {hg::Vec(new_dim)}));
          break;
      }
      emit(hg::serialize_structure(doc), new_out);
      return kOk;
    }

    // ---------------- show ----------------
    if (cmd_show->parsed()) {
      if (!check_format(show_format)) return usage("--format must be text or machine");
      hg::StructureDoc doc;
      try {
        doc = load_doc(show_file);
      } catch (const std::exception& e) {
        return usage(show_file + ": " + e.what());
      }
      if (show_format == "machine") {
        std::cout << hg::serialize_structure(doc);
        return kOk;
      }
      std::cout << "kind: " << hg::kind_to_string(doc.kind) << "\n";
      std::cout << "ambient dimension: " << doc.dim << "\n";
      std::cout << "space dimension: " << doc.space.dim() << "\n";
      if (doc.kind == hg::Kind::pair) {
        std::cout << "projection image dimension: " << doc.pair->g.dim() << "\n";
      }
      if (doc.kind == hg::Kind::blackset) {
        std::cout << "black points: " << doc.blackset->blacks.size() << "\n";
        hg::Rat cls = hg::class_value(*doc.blackset);
        std::cout << "class value d(0)^2: " << hg::rat_to_string(cls) << " ("
                  << hg::approx_sqrt_string(cls) << ")\n";
      }
      return kOk;
    }

    // ---------------- dist ----------------
    if (cmd_dist->parsed()) {
      if (!check_format(dist_format)) return usage("--format must be text or machine");
      hg::StructureDoc doc;
      hg::Vec point;
      try {
        doc = load_doc(dist_file);
        point = hg::vec_from_string(dist_point);
      } catch (const std::exception& e) {
        return usage(e.what());
      }
      if (doc.kind != hg::Kind::blackset) return usage("dist needs a blackset structure");
      if (point.dim() != doc.dim) {
        return usage("point has " + std::to_string(point.dim()) + " coordinates, expected " +
                     std::to_string(doc.dim));
      }
      if (!doc.space.contains(point)) return usage("point lies outside the structure's space");
      hg::DistanceCertificate cert = hg::dist_black_sq(point, *doc.blackset);
      if (dist_format == "machine") {
        std::cout << hg::rat_to_string(cert.dist_sq) << '\t'
                  << (cert.raw_sq ? hg::rat_to_string(*cert.raw_sq) : "-") << '\t'
                  << (cert.witness ? hg::vec_to_string(*cert.witness) : "-") << '\t'
                  << (cert.unique ? "1" : "0") << "\n";
        return kOk;
      }
      std::cout << "dist_sq = " << hg::rat_to_string(cert.dist_sq) << " ("
                << hg::approx_sqrt_string(cert.dist_sq) << ")\n";
      if (cert.raw_sq) std::cout << "raw_sq = " << hg::rat_to_string(*cert.raw_sq) << "\n";
      if (cert.witness) std::cout << "witness = " << hg::vec_to_string(*cert.witness) << "\n";
      std::cout << "unique = " << yes_no(cert.unique) << "\n";
      return kOk;
    }

    // ---------------- project ----------------
    if (cmd_project->parsed()) {
      if (!check_format(proj_format)) return usage("--format must be text or machine");
      hg::StructureDoc doc;
      hg::Vec point;
      try {
        doc = load_doc(proj_file);
        point = hg::vec_from_string(proj_point);
      } catch (const std::exception& e) {
        return usage(e.what());
      }
      if (point.dim() != doc.dim) {
        return usage("point has " + std::to_string(point.dim()) + " coordinates, expected " +
                     std::to_string(doc.dim));
      }
      hg::Vec image;
      hg::Rat dist_sq;
      if (doc.kind == hg::Kind::pair) {
        if (!doc.space.contains(point)) {
          return usage("point lies outside the structure's space");
        }
        hg::ProjectionImage pi = hg::apply_projection(point, *doc.pair);
        image = pi.image;
        dist_sq = pi.dist_sq;
      } else if (doc.kind == hg::Kind::hilbert) {
        hg::Decomposition d = hg::project_decompose(point, doc.space);
        image = d.proj;
        dist_sq = hg::norm_sq(d.residue);
      } else {
        return usage("project needs a pair or hilbert structure");
      }
      if (proj_format == "machine") {
        std::cout << hg::vec_to_string(image) << '\t' << hg::rat_to_string(dist_sq) << "\n";
        return kOk;
      }
      std::cout << "projection = " << hg::vec_to_string(image) << "\n";
      std::cout << "dist_sq = " << hg::rat_to_string(dist_sq) << " ("
                << hg::approx_sqrt_string(dist_sq) << ")\n";
      return kOk;
    }

    // ---------------- join ----------------
    if (cmd_join->parsed()) {
      hg::StructureDoc d1, d2;
      try {
        d1 = load_doc(join_left);
        d2 = load_doc(join_right);
      } catch (const std::exception& e) {
        return usage(e.what());
      }
      if (d1.kind != hg::Kind::blackset || d2.kind != hg::Kind::blackset) {
        return usage("join needs two blackset structures");
      }
      hg::OrthogonalJoin oj = hg::join_orthogonal(*d1.blackset, *d2.blackset);
      emit(hg::serialize_structure(hg::doc_from_blackset(oj.joined)), join_out);
      std::cerr << "joined: ambient " << oj.joined.space.ambient_dim() << ", "
                << oj.joined.blacks.size() << " black points; side certificates: "
                << (oj.left_cert.pass ? "pass" : "FAIL") << "/"
                << (oj.right_cert.pass ? "pass" : "FAIL") << "\n";
      return kOk;
    }

    // ---------------- amalgamate ----------------
    if (cmd_am->parsed()) {
      hg::StructureDoc base, left, right;
      try {
        base = load_doc(am_base);
        left = load_doc(am_left);
        right = load_doc(am_right);
      } catch (const std::exception& e) {
        return usage(e.what());
      }
      if (base.kind != left.kind || base.kind != right.kind) {
        return usage("amalgamate needs three structures of the same kind");
      }
      if (base.dim > left.dim || base.dim > right.dim) {
        return usage("the base must have ambient dimension at most each side's");
      }
      std::vector<hg::Vec> into_left = inclusion_images(base.space, left.dim);
      std::vector<hg::Vec> into_right = inclusion_images(base.space, right.dim);
      if (base.kind == hg::Kind::blackset) {
        hg::BlackSetAmalgam am = hg::amalgamate_blacksets(*base.blackset, *left.blackset,
                                                          *right.blackset, into_left, into_right);
        emit(hg::serialize_structure(hg::doc_from_blackset(am.joined)), am_out);
        std::cerr << "amalgam: ambient " << am.joined.space.ambient_dim() << ", dimension "
                  << am.joined.space.dim() << ", " << am.joined.blacks.size()
                  << " black points, class "
                  << hg::rat_to_string(hg::class_value(am.joined)) << "\n";
        return kOk;
      }
      if (base.kind == hg::Kind::pair) {
        hg::PairAmalgam am =
            hg::amalgamate_pairs(*base.pair, *left.pair, *right.pair, into_left, into_right);
        emit(hg::serialize_structure(hg::doc_from_pair(am.joined)), am_out);
        std::cerr << "amalgam: ambient " << am.joined.space.ambient_dim() << ", dimension "
                  << am.joined.space.dim() << ", image dimension " << am.joined.g.dim() << "\n";
        return kOk;
      }
      return usage("amalgamate needs pair or blackset structures");
    }

    // ---------------- check-substructure ----------------
    if (cmd_sub->parsed()) {
      if (!check_format(sub_format)) return usage("--format must be text or machine");
      hg::StructureDoc small, big;
      std::vector<hg::Vec> extra_probes;
      try {
        small = load_doc(sub_small);
        big = load_doc(sub_big);
        if (!sub_probes.empty()) extra_probes = load_probe_file(sub_probes);
      } catch (const std::exception& e) {
        return usage(e.what());
      }
      if (small.kind != big.kind) return usage("both structures must have the same kind");
      if (small.dim > big.dim) {
        return usage("the small structure must fit inside the big one (inclusion)");
      }
      std::vector<hg::Vec> images = inclusion_images(small.space, big.dim);
      if (small.kind == hg::Kind::blackset) {
        std::vector<hg::Vec> probes =
            hg::default_substructure_probes(*small.blackset, *big.blackset, images);
        probes.insert(probes.end(), extra_probes.begin(), extra_probes.end());
        hg::SubstructureCertificate cert =
            hg::check_substructure(*small.blackset, *big.blackset, images, probes);
        if (sub_format == "machine") {
          std::cout << (cert.pass ? "PASS" : "FAIL") << '\t' << cert.probes_checked << '\t'
                    << (cert.violation ? hg::vec_to_string(cert.violation->probe) : "-") << "\n";
        } else {
          std::cout << (cert.pass ? "pass" : "FAIL") << " (" << cert.probes_checked
                    << " probes";
          if (cert.incomplete) std::cout << ", incomplete";
          std::cout << ")\n";
          if (cert.violation) {
            std::cout << "violation at " << hg::vec_to_string(cert.violation->probe)
                      << ": small dist_sq " << hg::rat_to_string(cert.violation->small_sq)
                      << ", big dist_sq " << hg::rat_to_string(cert.violation->big_sq) << "\n";
          }
        }
        return cert.pass ? kOk : kFailed;
      }
      if (small.kind == hg::Kind::pair) {
        bool ok = true;
        std::string why;
        try {
          hg::require_sub_pair(*small.pair, *big.pair, images);
        } catch (const std::exception& e) {
          ok = false;
          why = e.what();
        }
        if (sub_format == "machine") {
          std::cout << (ok ? "PASS" : "FAIL") << "\t-\t-\n";
        } else {
          std::cout << (ok ? "pass" : "FAIL") << "\n";
          if (!ok) std::cout << why << "\n";
        }
        return ok ? kOk : kFailed;
      }
      return usage("check-substructure needs pair or blackset structures");
    }

    // ---------------- independence ----------------
    if (cmd_ind->parsed()) {
      if (!check_format(ind_format)) return usage("--format must be text or machine");
      hg::StructureDoc doc;
      std::vector<hg::Vec> a_list, b_list, c_list;
      try {
        doc = load_doc(ind_file);
        for (const auto& s : ind_a) a_list.push_back(hg::vec_from_string(s));
        for (const auto& s : ind_b) b_list.push_back(hg::vec_from_string(s));
        for (const auto& s : ind_c) c_list.push_back(hg::vec_from_string(s));
      } catch (const std::exception& e) {
        return usage(e.what());
      }
      auto check_members = [&](const std::vector<hg::Vec>& vs) -> std::string {
        for (const auto& v : vs) {
          if (v.dim() != doc.dim) return "vector " + hg::vec_to_string(v) + " has the wrong dimension";
          if (!doc.space.contains(v)) {
            return "vector " + hg::vec_to_string(v) + " lies outside the structure's space";
          }
        }
        return "";
      };
      for (const auto* vs : {&a_list, &b_list, &c_list}) {
        std::string err = check_members(*vs);
        if (!err.empty()) return usage(err);
      }
      hg::Subspace c = hg::span(doc.dim, c_list);
      hg::IndependenceVerdict verdict = hg::non_dividing(a_list, b_list, c);
      std::vector<hg::Vec> big_gens = b_list;
      big_gens.insert(big_gens.end(), c.basis().begin(), c.basis().end());
      double margin = hg::forking_margin(a_list, hg::span(doc.dim, big_gens), c);
      bool pair_verdict = false;
      if (doc.kind == hg::Kind::pair) {
        pair_verdict = hg::pair_independent(a_list, b_list, c_list, *doc.pair).independent;
      }
      if (ind_format == "machine") {
        std::cout << (verdict.independent ? "1" : "0") << '\t';
        if (doc.kind == hg::Kind::pair) {
          std::cout << (pair_verdict ? "1" : "0");
        } else {
          std::cout << "-";
        }
        std::cout << '\t' << hg::approx_string(margin) << "\n";
        return kOk;
      }
      std::cout << "independent: " << yes_no(verdict.independent) << "\n";
      for (const auto& v : verdict.violations) {
        std::cout << "  residue conflict: a=" << hg::vec_to_string(v.a)
                  << " b=" << hg::vec_to_string(v.b)
                  << " inner=" << hg::rat_to_string(v.residue_inner) << "\n";
      }
      if (doc.kind == hg::Kind::pair) {
        std::cout << "pair-independent: " << yes_no(pair_verdict) << "\n";
      }
      std::cout << "forking margin " << hg::approx_string(margin) << "\n";
      return kOk;
    }

    // ---------------- gen ----------------
    if (cmd_gen->parsed()) {
      std::string bounds_err = check_bounds(gen_params);
      if (!bounds_err.empty()) return usage(bounds_err);
      hg::StructureDoc doc;
      bool self_check = true;
      if (gen_config == "instability") {
        hg::InstabilityConfig cfg = hg::gen_instability(gen_params.n);
        self_check = cfg.report.pass();
        doc = hg::doc_from_blackset(cfg.structure);
      } else if (gen_config == "qe-failure") {
        hg::QeFailureConfig cfg = hg::gen_qe_failure(gen_params.ring);
        self_check = cfg.report.pass();
        doc = hg::doc_from_blackset(cfg.joined);
      } else if (gen_config == "nonsimple") {
        hg::NonsimpleConfig cfg = hg::gen_nonsimple(gen_params.k, gen_params.m);
        self_check = cfg.report.pass();
        doc = hg::doc_from_blackset(cfg.structure);
      } else if (gen_config == "tp2") {
        hg::Tp2Config cfg = hg::gen_tp2(
            gen_params.rows, gen_params.cols,
            hg::tp2_default_funcs(gen_params.rows, gen_params.cols, gen_params.funcs));
        self_check = cfg.report.pass();
        doc = hg::doc_from_blackset(cfg.structure);
      } else {
        return usage("unknown configuration '" + gen_config + "'");
      }
      emit(hg::serialize_structure(doc), gen_out);
      if (!self_check) return failed("generated configuration failed its own claim grid");
      return kOk;
    }

    // ---------------- verify ----------------
    if (cmd_verify->parsed()) {
      if (!check_format(verify_format)) return usage("--format must be text or machine");
      std::string bounds_err = check_bounds(verify_params);
      if (!bounds_err.empty()) return usage(bounds_err);
      hg::SuiteParams params;
      params.instability_n = verify_params.n;
      params.qe_ring = verify_params.ring;
      params.nonsimple_k = verify_params.k;
      params.nonsimple_m = verify_params.m;
      params.tp2_rows = verify_params.rows;
      params.tp2_cols = verify_params.cols;
      params.tp2_funcs = verify_params.funcs;
      params.fuzz_instances = verify_params.instances;
      params.fuzz_max_dim = verify_params.fuzz_dim;
      params.fuzz_max_den = verify_params.fuzz_den;
      params.fuzz_max_blacks = verify_params.fuzz_blacks;
      params.seed = verify_params.seed;
      params.fault = inject_fault ? hg::Fault::amalgam_sign_flip : hg::Fault::none;
      std::vector<hg::WitnessReport> reports;
      try {
        reports = hg::run_suites(verify_suite, params);
      } catch (const std::invalid_argument& e) {
        return usage(e.what());
      }
      bool all_pass = true;
      std::ostringstream out;
      for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass();
        if (verify_format == "machine") {
          out << hg::render_machine(rep);
        } else {
          out << hg::render_text(rep) << "\n";
        }
      }
      std::cout << out.str();
      return all_pass ? kOk : kFailed;
    }
  } catch (const hg::ParseError& e) {
    return usage(e.what());
  } catch (const std::exception& e) {
    return failed(e.what());
  }

  return usage("no command given");
}
