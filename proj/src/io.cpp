#include "hg/io.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace hg {

std::string kind_to_string(Kind kind) {
  switch (kind) {
    case Kind::hilbert: return "hilbert";
    case Kind::pair: return "pair";
    case Kind::blackset: return "blackset";
  }
  return "?";
}

std::optional<Kind> kind_from_string(std::string_view text) {
  if (text == "hilbert") return Kind::hilbert;
  if (text == "pair") return Kind::pair;
  if (text == "blackset") return Kind::blackset;
  return std::nullopt;
}

bool StructureDoc::operator==(const StructureDoc& o) const {
  if (kind != o.kind || dim != o.dim || !(space == o.space)) return false;
  switch (kind) {
    case Kind::hilbert: return true;
    case Kind::pair: return pair->g == o.pair->g;
    case Kind::blackset: return blackset->blacks == o.blackset->blacks;
  }
  return false;
}

StructureDoc doc_from_space(Subspace space) {
  StructureDoc doc;
  doc.kind = Kind::hilbert;
  doc.dim = space.ambient_dim();
  doc.space = std::move(space);
  return doc;
}

StructureDoc doc_from_pair(ProjectionPairStructure pp) {
  StructureDoc doc;
  doc.kind = Kind::pair;
  doc.dim = pp.space.ambient_dim();
  doc.space = pp.space;
  doc.pair = std::move(pp);
  return doc;
}

StructureDoc doc_from_blackset(BlackSetStructure s) {
  StructureDoc doc;
  doc.kind = Kind::blackset;
  doc.dim = s.space.ambient_dim();
  doc.space = s.space;
  doc.blackset = std::move(s);
  return doc;
}

ParseError::ParseError(std::size_t line, std::size_t col, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                         ": " + message),
      line_(line),
      col_(col) {}

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view raw =
        end == std::string_view::npos ? text.substr(pos) : text.substr(pos, end - pos);
    ++number;
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty() && line.tokens.front().text[0] == '#') line.tokens.clear();
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

struct NamedVec {
  Vec vec;
  std::size_t line, col;
};

struct SectionEntry {
  std::string name;
  std::size_t line, col;
};

struct Section {
  std::string name;
  std::size_t line, col;  // position of the SECTION header
  std::vector<SectionEntry> entries;
};

}  // namespace

std::size_t max_ambient_dim() {
  const char* env = std::getenv("HG_MAX_DIM");
  if (env == nullptr || *env == '\0') return 512;
  char* tail = nullptr;
  unsigned long value = std::strtoul(env, &tail, 10);
  if (tail == env || *tail != '\0' || value == 0) return 512;
  return static_cast<std::size_t>(value);
}

StructureDoc parse_structure(std::string_view text) {
  std::vector<Line> lines = significant_lines(text);
  std::size_t at = 0;
  auto have = [&]() { return at < lines.size(); };
  auto head = [&]() -> const Line& { return lines[at]; };

  if (!have()) throw ParseError(1, 1, "empty input: expected a KIND line");
  if (head().tokens[0].text != "KIND") {
    throw ParseError(head().number, head().tokens[0].col, "expected a KIND line first");
  }
  if (head().tokens.size() != 2) {
    throw ParseError(head().number, head().tokens[0].col, "KIND takes exactly one value");
  }
  auto kind = kind_from_string(head().tokens[1].text);
  if (!kind) {
    throw ParseError(head().number, head().tokens[1].col,
                     "unknown kind '" + head().tokens[1].text +
                         "' (expected hilbert, pair, or blackset)");
  }
  const std::size_t kind_line = head().number;
  ++at;

  if (have() && head().tokens[0].text == "FORMAT") {
    if (head().tokens.size() != 2 || head().tokens[1].text != "1") {
      throw ParseError(head().number, head().tokens[0].col,
                       "unsupported FORMAT (this reader handles version 1)");
    }
    ++at;
  }

  if (!have() || head().tokens[0].text != "DIM") {
    std::size_t ln = have() ? head().number : kind_line;
    std::size_t cl = have() ? head().tokens[0].col : 1;
    throw ParseError(ln, cl, "expected a DIM line after the header");
  }
  if (head().tokens.size() != 2) {
    throw ParseError(head().number, head().tokens[0].col, "DIM takes exactly one value");
  }
  std::size_t dim = 0;
  {
    const Token& t = head().tokens[1];
    char* tail = nullptr;
    unsigned long value = std::strtoul(t.text.c_str(), &tail, 10);
    if (tail == t.text.c_str() || *tail != '\0' || value == 0) {
      throw ParseError(head().number, t.col, "DIM must be a positive integer");
    }
    dim = static_cast<std::size_t>(value);
    if (dim > max_ambient_dim()) {
      throw ParseError(head().number, t.col,
                       "DIM " + t.text + " exceeds the HG_MAX_DIM cap (" +
                           std::to_string(max_ambient_dim()) + ")");
    }
  }
  ++at;

  std::map<std::string, NamedVec> vecs;
  while (have() && head().tokens[0].text == "VEC") {
    const Line& line = head();
    if (line.tokens.size() < 2) {
      throw ParseError(line.number, line.tokens[0].col, "VEC needs a name and coordinates");
    }
    const Token& name = line.tokens[1];
    if (vecs.count(name.text) != 0) {
      throw ParseError(line.number, name.col, "duplicate vector name '" + name.text + "'");
    }
    std::vector<Rat> coords;
    for (std::size_t i = 2; i < line.tokens.size(); ++i) {
      try {
        coords.push_back(rat_from_string(line.tokens[i].text));
      } catch (const std::exception&) {
        throw ParseError(line.number, line.tokens[i].col,
                         "cannot read '" + line.tokens[i].text + "' as a rational");
      }
    }
    vecs.emplace(name.text, NamedVec{Vec(std::move(coords)), line.number, name.col});
    ++at;
  }

  std::vector<Section> sections;
  while (have()) {
    const Line& line = head();
    const Token& first = line.tokens[0];
    if (first.text == "SECTION") {
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, first.col, "SECTION takes exactly one name");
      }
      const Token& name = line.tokens[1];
      if (name.text != "BASIS" && name.text != "G" && name.text != "BLACKS") {
        throw ParseError(line.number, name.col, "unknown section '" + name.text + "'");
      }
      for (const auto& s : sections) {
        if (s.name == name.text) {
          throw ParseError(line.number, name.col, "duplicate section '" + name.text + "'");
        }
      }
      sections.push_back(Section{name.text, line.number, name.col, {}});
      ++at;
      continue;
    }
    if (first.text == "VEC") {
      throw ParseError(line.number, first.col, "VEC lines must precede the SECTION blocks");
    }
    if (first.text == "KIND" || first.text == "DIM" || first.text == "FORMAT") {
      throw ParseError(line.number, first.col, "unexpected " + first.text + " line");
    }
    if (sections.empty()) {
      throw ParseError(line.number, first.col,
                       "expected VEC or SECTION, got '" + first.text + "'");
    }
    if (line.tokens.size() != 1) {
      throw ParseError(line.number, line.tokens[1].col,
                       "section entries are single vector names");
    }
    sections.back().entries.push_back(SectionEntry{first.text, line.number, first.col});
    ++at;
  }

  // Section admissibility per kind.
  for (const auto& s : sections) {
    if (s.name == "G" && *kind != Kind::pair) {
      throw ParseError(s.line, s.col, "G: section is only valid for pair structures");
    }
    if (s.name == "BLACKS" && *kind != Kind::blackset) {
      throw ParseError(s.line, s.col, "BLACKS: section is only valid for blackset structures");
    }
  }

  auto find_section = [&](const std::string& name) -> const Section* {
    for (const auto& s : sections) {
      if (s.name == name) return &s;
    }
    return nullptr;
  };

  auto resolve = [&](const Section& s) {
    std::vector<Vec> out;
    for (const auto& entry : s.entries) {
      auto it = vecs.find(entry.name);
      if (it == vecs.end()) {
        throw ParseError(entry.line, entry.col,
                         s.name + ": vector '" + entry.name + "' is not declared");
      }
      if (it->second.vec.dim() != dim) {
        throw ParseError(entry.line, entry.col,
                         s.name + ": vector '" + entry.name + "' has " +
                             std::to_string(it->second.vec.dim()) +
                             " coordinates, expected " + std::to_string(dim));
      }
      out.push_back(it->second.vec);
    }
    return out;
  };

  Subspace space = Subspace::full(dim);
  if (const Section* basis = find_section("BASIS")) {
    std::vector<Vec> vs = resolve(*basis);
    try {
      space = Subspace::from_orthogonal(dim, std::move(vs));
    } catch (const std::exception& e) {
      throw ParseError(basis->line, basis->col, "BASIS: " + std::string(e.what()));
    }
  }

  StructureDoc doc;
  doc.kind = *kind;
  doc.dim = dim;
  doc.space = space;

  if (*kind == Kind::pair) {
    const Section* g = find_section("G");
    if (g == nullptr) throw ParseError(kind_line, 1, "pair structure needs a SECTION G");
    std::vector<Vec> vs = resolve(*g);
    Subspace g_space = Subspace::zero(dim);
    try {
      g_space = Subspace::from_orthogonal(dim, std::move(vs));
    } catch (const std::exception& e) {
      throw ParseError(g->line, g->col, "G: " + std::string(e.what()));
    }
    try {
      doc.pair = make_pair_structure(space, std::move(g_space));
    } catch (const std::exception& e) {
      throw ParseError(g->line, g->col, "G: " + std::string(e.what()));
    }
  } else if (*kind == Kind::blackset) {
    const Section* blacks = find_section("BLACKS");
    if (blacks == nullptr) {
      throw ParseError(kind_line, 1, "blackset structure needs a SECTION BLACKS");
    }
    std::vector<Vec> vs = resolve(*blacks);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!space.contains(vs[i])) {
        const auto& entry = blacks->entries[i];
        throw ParseError(entry.line, entry.col,
                         "BLACKS: vector '" + entry.name + "' lies outside the space");
      }
    }
    doc.blackset = make_blackset(space, std::move(vs));
  }

  return doc;
}

std::string serialize_structure(const StructureDoc& doc) {
  std::ostringstream out;
  out << "KIND " << kind_to_string(doc.kind) << "\n";
  out << "FORMAT 1\n";
  out << "DIM " << doc.dim << "\n";

  const bool full_space = doc.space == Subspace::full(doc.dim);
  auto write_vec = [&](const std::string& name, const Vec& v) {
    out << "VEC " << name;
    for (std::size_t i = 0; i < v.dim(); ++i) out << ' ' << rat_to_string(v[i]);
    out << "\n";
  };

  if (!full_space) {
    for (std::size_t i = 0; i < doc.space.dim(); ++i) {
      write_vec("b" + std::to_string(i), doc.space.basis()[i]);
    }
  }
  if (doc.kind == Kind::pair) {
    for (std::size_t i = 0; i < doc.pair->g.dim(); ++i) {
      write_vec("g" + std::to_string(i), doc.pair->g.basis()[i]);
    }
  }
  if (doc.kind == Kind::blackset) {
    for (std::size_t i = 0; i < doc.blackset->blacks.size(); ++i) {
      write_vec("n" + std::to_string(i), doc.blackset->blacks[i]);
    }
  }

  if (!full_space) {
    out << "SECTION BASIS\n";
    for (std::size_t i = 0; i < doc.space.dim(); ++i) out << "b" << i << "\n";
  }
  if (doc.kind == Kind::pair) {
    out << "SECTION G\n";
    for (std::size_t i = 0; i < doc.pair->g.dim(); ++i) out << "g" << i << "\n";
  }
  if (doc.kind == Kind::blackset) {
    out << "SECTION BLACKS\n";
    for (std::size_t i = 0; i < doc.blackset->blacks.size(); ++i) out << "n" << i << "\n";
  }

  return out.str();
}

}  // namespace hg
