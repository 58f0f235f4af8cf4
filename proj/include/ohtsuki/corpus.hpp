#pragma once

/// Corpus files: one entry per line,
///   name | notation | data | framings | expected
/// with '#' starting a comment. notation is "braid" or "pd"; framings is a
/// comma separated list (may be empty); expected is a list of key=value
/// tokens with exact integer or rational values.

#include "ohtsuki/diagram_io.hpp"
#include "ohtsuki/diagram_ops.hpp"
#include "ohtsuki/errors.hpp"
#include "ohtsuki/rational.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ohtsuki {

struct CorpusEntry {
  std::string name;
  std::string notation;  // "braid" | "pd"
  std::string data;
  std::vector<int> framings;
  std::map<std::string, Rational> expected;
  int line = 0;

  std::string diagram_text() const { return notation == "braid" ? "braid:" + data : "pd:" + data; }
  LinkDiagram diagram() const { return parse_diagram(diagram_text()); }
  bool framed() const { return !framings.empty(); }
  FramedLink framed_link() const { return FramedLink(diagram(), framings); }
  std::optional<Rational> expect(const std::string& key) const {
    auto it = expected.find(key);
    if (it == expected.end()) return std::nullopt;
    return it->second;
  }
};

namespace detail {
inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}
}  // namespace detail

/// Parses and validates every entry (each must yield a diagram, framings
/// must match the component count). Errors carry the line number.
inline std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) -> CorpusError {
      return CorpusError("corpus line " + std::to_string(lineno) + ": " + why, lineno);
    };
    auto fields = detail::split(line, '|');
    if (fields.size() < 3 || fields.size() > 5) throw fail("expected 3 to 5 '|' separated fields");
    CorpusEntry e;
    e.line = lineno;
    e.name = fields[0];
    e.notation = fields[1];
    e.data = fields[2];
    if (e.name.empty()) throw fail("empty name");
    if (e.notation != "braid" && e.notation != "pd") throw fail("notation must be 'braid' or 'pd'");
    if (fields.size() > 3 && !fields[3].empty()) {
      for (const auto& f : detail::split(fields[3], ',')) {
        try {
          std::size_t used = 0;
          int v = std::stoi(f, &used);
          if (used != f.size()) throw fail("bad framing '" + f + "'");
          e.framings.push_back(v);
        } catch (const std::logic_error&) {
          throw fail("bad framing '" + f + "'");
        }
      }
    }
    if (fields.size() > 4) {
      std::istringstream tokens(fields[4]);
      std::string tok;
      while (tokens >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw fail("expected key=value, got '" + tok + "'");
        try {
          e.expected[tok.substr(0, eq)] = parse_rational(tok.substr(eq + 1));
        } catch (const std::exception&) {
          throw fail("bad value in '" + tok + "'");
        }
      }
    }
    LinkDiagram d;
    try {
      d = e.diagram();
    } catch (const ParseError& err) {
      throw fail(err.what());
    }
    if (e.framed() && static_cast<int>(e.framings.size()) != d.component_count())
      throw fail("framing count does not match the number of components");
    for (const auto& other : out)
      if (other.name == e.name) throw fail("duplicate entry name '" + e.name + "'");
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file " + path);
  return parse_corpus(in);
}

inline const CorpusEntry& find_entry(const std::vector<CorpusEntry>& corpus, const std::string& name) {
  for (const auto& e : corpus)
    if (e.name == name) return e;
  throw ParseError("no corpus entry named '" + name + "'");
}

}  // namespace ohtsuki
