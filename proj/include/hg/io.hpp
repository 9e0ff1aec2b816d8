#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hg/blackset.hpp"
#include "hg/linalg.hpp"
#include "hg/pairs.hpp"

namespace hg {

enum class Kind { hilbert, pair, blackset };

std::string kind_to_string(Kind kind);
std::optional<Kind> kind_from_string(std::string_view text);

// In-memory form of a structure file: a plain space, a projection pair, or
// a black-set structure. `space` always carries the ambient space; the
// optional payloads are present exactly when the kind calls for them.
struct StructureDoc {
  Kind kind = Kind::hilbert;
  std::size_t dim = 0;
  Subspace space;
  std::optional<ProjectionPairStructure> pair;
  std::optional<BlackSetStructure> blackset;

  bool operator==(const StructureDoc& o) const;
  bool operator!=(const StructureDoc& o) const { return !(*this == o); }
};

StructureDoc doc_from_space(Subspace space);
StructureDoc doc_from_pair(ProjectionPairStructure pp);
StructureDoc doc_from_blackset(BlackSetStructure s);

// Syntax or invariant failure, carrying a 1-based source position; what()
// reads "line L, col C: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_, col_;
};

// Line-oriented grammar:
//   KIND blackset            (or: hilbert, pair)
//   FORMAT 1                 (optional; version 1 is the only one)
//   DIM 4
//   VEC name p/q p/q …       (rationals; integers may omit /q)
//   SECTION BASIS            (optional; omitted means the full space)
//   name
//   SECTION BLACKS           (blackset only; SECTION G for pairs)
//   name
// Full-line comments start with '#'. VEC lines precede the sections; BASIS
// and G vectors must be pairwise orthogonal; every section entry names a
// declared vector of matching dimension. Violations raise ParseError with
// the offending position, named by section.
StructureDoc parse_structure(std::string_view text);

// Canonical form: fixed header order, basis/G/black vectors renamed to
// b0…/g0…/n0…, blacks sorted, fractions reduced. Equal documents serialize
// to identical bytes, and parse(serialize(d)) == d.
std::string serialize_structure(const StructureDoc& doc);

// Ambient-dimension cap: the HG_MAX_DIM environment variable, read at each
// call, falling back to 512 when unset or unparsable.
std::size_t max_ambient_dim();

}  // namespace hg
