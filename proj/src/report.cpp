#include "hg/report.hpp"

#include <algorithm>
#include <sstream>

namespace hg {

std::string rel_to_string(Rel rel) {
  switch (rel) {
    case Rel::EQ: return "==";
    case Rel::GE: return ">=";
    case Rel::LE: return "<=";
    case Rel::LT: return "<";
    case Rel::GT: return ">";
  }
  return "?";
}

bool rel_holds(Rel rel, const Rat& computed, const Rat& expected) {
  switch (rel) {
    case Rel::EQ: return computed == expected;
    case Rel::GE: return computed >= expected;
    case Rel::LE: return computed <= expected;
    case Rel::LT: return computed < expected;
    case Rel::GT: return computed > expected;
  }
  return false;
}

ClaimRow make_claim(std::string id, std::string anchor, Rel rel, Rat expected, Rat computed) {
  ClaimRow row;
  row.id = std::move(id);
  row.anchor = std::move(anchor);
  row.rel = rel;
  row.expected = std::move(expected);
  row.computed = std::move(computed);
  row.pass = rel_holds(row.rel, row.computed, row.expected);
  return row;
}

bool WitnessReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ClaimRow& r) { return r.pass; });
}

std::size_t WitnessReport::failed() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ClaimRow& r) { return !r.pass; }));
}

void WitnessReport::add(ClaimRow row) { rows.push_back(std::move(row)); }

void WitnessReport::add_flag(std::string id, std::string anchor, bool expected, bool computed) {
  add(make_claim(std::move(id), std::move(anchor), Rel::EQ, Rat(expected ? 1 : 0),
                 Rat(computed ? 1 : 0)));
}

void WitnessReport::sort_rows() {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ClaimRow& a, const ClaimRow& b) { return a.id < b.id; });
}

namespace {

std::string value_string(const Rat& value, bool approx) {
  if (!approx) return rat_to_string(value);
  return approx_string(to_double(value));
}

}  // namespace

std::string render_text(const WitnessReport& report) {
  std::ostringstream out;
  out << "suite " << report.config;
  if (!report.params.empty()) out << " (" << report.params << ")";
  out << ": " << report.rows.size() << " claims\n";
  for (const auto& row : report.rows) {
    out << (row.pass ? "[PASS] " : "[FAIL] ") << row.id << "  " << row.anchor << "  expected "
        << rel_to_string(row.rel) << " " << value_string(row.expected, row.approx)
        << "  computed " << value_string(row.computed, row.approx);
    if (!row.pass && !row.note.empty()) out << "  (" << row.note << ")";
    out << "\n";
  }
  out << (report.pass() ? "all claims hold" : std::to_string(report.failed()) + " claim(s) FAILED")
      << "\n";
  return out.str();
}

std::string render_machine(const WitnessReport& report) {
  std::ostringstream out;
  for (const auto& row : report.rows) {
    out << report.config << '\t' << row.id << '\t' << row.anchor << '\t'
        << rel_to_string(row.rel) << value_string(row.expected, row.approx) << '\t'
        << value_string(row.computed, row.approx) << '\t' << (row.pass ? "PASS" : "FAIL")
        << '\n';
  }
  return out.str();
}

}  // namespace hg
