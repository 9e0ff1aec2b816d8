#pragma once

#include <string>
#include <vector>

#include "hg/rational.hpp"

namespace hg {

enum class Rel { EQ, GE, LE, LT, GT };

std::string rel_to_string(Rel rel);
bool rel_holds(Rel rel, const Rat& computed, const Rat& expected);

// One verified claim. Values are exact rationals (squared quantities unless
// the anchor says otherwise); rows flagged approx hold dyadic rationals that
// came from a decimal computation and render as ≈decimals.
struct ClaimRow {
  std::string id;      // stable within its suite; reports sort by it
  std::string anchor;  // names the mathematical fact being checked
  Rel rel = Rel::EQ;
  Rat expected;
  Rat computed;
  bool approx = false;
  bool pass = false;
  std::string note;  // shown for failures in text mode
};

ClaimRow make_claim(std::string id, std::string anchor, Rel rel, Rat expected, Rat computed);

struct WitnessReport {
  std::string config;  // suite name, e.g. "instability"
  std::string params;  // canonical parameter string, e.g. "n=4"
  std::vector<ClaimRow> rows;

  bool pass() const;
  std::size_t failed() const;
  void add(ClaimRow row);
  // Boolean claims: expected "holds"/"fails" encoded as 1/0.
  void add_flag(std::string id, std::string anchor, bool expected, bool computed);
  void sort_rows();  // by id; report order is fixed regardless of evaluation order
};

std::string render_text(const WitnessReport& report);
std::string render_machine(const WitnessReport& report);  // one TSV line per claim

}  // namespace hg
