#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hg/rational.hpp"
#include "hg/report.hpp"

namespace hg {

// Deterministic 64-bit stream (splitmix64). Verification reports must be
// byte-identical for a fixed seed on every platform, so no standard-library
// distributions are used anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Draw in [0, n); n must be positive. The modulo bias is irrelevant at
  // these sizes and keeps the stream platform-stable.
  std::size_t below(std::size_t n);
  // Signed rational with |numerator| ≤ max_num and denominator ≤ max_den.
  Rat rat(unsigned max_num, unsigned max_den);

 private:
  std::uint64_t state_;
};

// A deliberately wrong computation the harness can substitute, to prove a
// FAIL path actually fails: amalgam_sign_flip makes the amalgam fuzz suite
// score the two-branch distance with the worse branch instead of the better.
enum class Fault { none, amalgam_sign_flip };

struct SuiteParams {
  std::size_t instability_n = 10;
  std::size_t qe_ring = 3;
  std::size_t nonsimple_k = 3;
  std::size_t nonsimple_m = 4;
  std::size_t tp2_rows = 4;
  std::size_t tp2_cols = 4;
  std::size_t tp2_funcs = 16;
  std::size_t fuzz_instances = 100;
  std::size_t fuzz_max_dim = 6;     // ambient bound for generated instances
  std::size_t fuzz_max_den = 4;     // denominator bound for random rationals
  std::size_t fuzz_max_blacks = 8;  // per-structure black-set size bound
  std::uint64_t seed = 0;
  Fault fault = Fault::none;
};

// The seven concrete suites in canonical order ("all" is accepted by
// run_suites but is not itself a member).
const std::vector<std::string>& suite_names();

WitnessReport suite_instability(const SuiteParams& p);
WitnessReport suite_qe_failure(const SuiteParams& p);
WitnessReport suite_nonsimple(const SuiteParams& p);
WitnessReport suite_tp2(const SuiteParams& p);
WitnessReport suite_amalgam_fuzz(const SuiteParams& p);
WitnessReport suite_pair_fuzz(const SuiteParams& p);
WitnessReport suite_independence_fuzz(const SuiteParams& p);

// `name` is a member of suite_names() or "all"; throws std::invalid_argument
// otherwise. Reports come back in canonical suite order.
std::vector<WitnessReport> run_suites(const std::string& name, const SuiteParams& p);

}  // namespace hg
