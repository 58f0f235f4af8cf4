#pragma once

/// Text notations for link diagrams.
///
///   PD:    "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)". Each X lists the incoming
///          under-edge first, then the other three counterclockwise. Edge
///          labels follow the orientation (consecutive along a component,
///          wrapping from its largest label to its smallest).
///   braid: "braid:<strands>:<letters>", letters comma separated; +k is the
///          generator sigma_k, -k its inverse. sigma_k is drawn as the
///          left-handed crossing (crossing sign -1), so "braid:2:1,1,1" is
///          the trefoil with V = t + t^3 - t^4.

#include "ohtsuki/errors.hpp"
#include "ohtsuki/link_diagram.hpp"

#include <cctype>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace ohtsuki {

struct BraidWord {
  int strand_count = 1;
  std::vector<int> letters;
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Appends sigma_{|letter|}^{+-1} acting on positions (k-1, k). `pos` holds
/// the raw edge currently at each position, `label` its component label.
inline void add_braid_letter(DiagramBuilder& b, std::vector<int>& pos, std::vector<int>& label,
                             int letter, int& next_id) {
  const int k = letter > 0 ? letter : -letter;
  const int left = pos[k - 1], right = pos[k];
  const int out_a = next_id++;  // strand from the left, ends on the right
  const int out_b = next_id++;  // strand from the right, ends on the left
  b.set_component(out_a, label[k - 1]);
  b.set_component(out_b, label[k]);
  if (letter > 0) {
    // left-handed: the right-to-left strand passes over
    b.add_crossing({{left, right, out_a, out_b}, -1});
  } else {
    b.add_crossing({{right, out_a, out_b, left}, +1});
  }
  pos[k - 1] = out_b;
  pos[k] = out_a;
  std::swap(label[k - 1], label[k]);
}

}  // namespace detail

inline LinkDiagram braid_closure(const BraidWord& w) {
  const int n = w.strand_count;
  if (n < 1) throw ParseError("braid needs at least one strand");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);  // perm[position] = starting position
  for (int letter : w.letters) {
    int k = letter > 0 ? letter : -letter;
    if (letter == 0 || k >= n)
      throw ParseError("braid letter " + std::to_string(letter) + " out of range for " +
                       std::to_string(n) + " strands");
    std::swap(perm[k - 1], perm[k]);
  }
  // cycles of the closure, numbered by their smallest starting position
  std::vector<int> cycle(n, -1);
  int cycles = 0;
  for (int s = 0; s < n; ++s) {
    if (cycle[s] >= 0) continue;
    int cur = s;
    while (cycle[cur] < 0) {
      cycle[cur] = cycles;
      // the strand starting at `cur` ends at the position p with perm[p] == cur,
      // and closes up to start again at p
      cur = static_cast<int>(std::find(perm.begin(), perm.end(), cur) - perm.begin());
    }
    ++cycles;
  }
  DiagramBuilder b;
  std::vector<int> pos(n), label(n);
  int next_id = n;
  for (int q = 0; q < n; ++q) {
    pos[q] = q;
    label[q] = cycle[q];
    b.set_component(q, cycle[q]);
  }
  for (int letter : w.letters) detail::add_braid_letter(b, pos, label, letter, next_id);
  for (int q = 0; q < n; ++q) b.merge(pos[q], q);
  return b.build_labelled(cycles);
}

inline BraidWord parse_braid(const std::string& text) {
  std::string body = detail::trim(text);
  if (body.rfind("braid:", 0) != 0) throw ParseError("braid text must start with 'braid:'");
  body = body.substr(6);
  auto colon = body.find(':');
  if (colon == std::string::npos) throw ParseError("braid text needs 'braid:<strands>:<letters>'");
  BraidWord w;
  try {
    std::size_t used = 0;
    std::string count = detail::trim(body.substr(0, colon));
    w.strand_count = std::stoi(count, &used);
    if (used != count.size()) throw ParseError("bad strand count '" + count + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad strand count in '" + text + "'");
  }
  std::stringstream letters(body.substr(colon + 1));
  std::string item;
  while (std::getline(letters, item, ',')) {
    item = detail::trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw ParseError("bad braid letter '" + item + "'");
      w.letters.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad braid letter '" + item + "'");
    }
  }
  if (w.strand_count < 1) throw ParseError("braid needs at least one strand");
  for (int l : w.letters)
    if (l == 0 || std::abs(l) >= w.strand_count)
      throw ParseError("braid letter " + std::to_string(l) + " out of range");
  return w;
}

/// Parses PD text. Orientation comes from the under-strands (a -> c) and is
/// propagated along edges; over-strands on components that never pass under
/// fall back to the label numbering.
inline LinkDiagram parse_pd(const std::string& text) {
  static const std::regex token(R"(X\s*[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]])");
  std::vector<std::array<int, 4>> raw;
  std::string rest;
  auto begin = std::sregex_iterator(text.begin(), text.end(), token);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    rest += text.substr(last, it->position() - last);
    last = it->position() + it->length();
    std::array<int, 4> c{};
    for (int s = 0; s < 4; ++s) c[s] = std::stoi((*it)[s + 1].str());
    raw.push_back(c);
  }
  rest += text.substr(last);
  for (char ch : rest)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',')
      throw ParseError("unexpected text in PD code: '" + detail::trim(rest) + "'");
  if (raw.empty()) return LinkDiagram();

  std::map<int, std::vector<SlotRef>> occurrences;
  for (int x = 0; x < static_cast<int>(raw.size()); ++x)
    for (int s = 0; s < 4; ++s) {
      if (raw[x][s] <= 0) throw ParseError("PD edge labels must be positive");
      occurrences[raw[x][s]].push_back({x, s});
    }
  for (const auto& [label, occ] : occurrences)
    if (occ.size() != 2)
      throw ParseError("edge label " + std::to_string(label) + " appears " +
                       std::to_string(occ.size()) + " times (expected 2)");

  // +1 incoming, -1 outgoing, 0 unknown, per (crossing, slot)
  std::vector<std::array<int, 4>> dir(raw.size(), std::array<int, 4>{1, 0, -1, 0});
  auto assign = [&](int x, int s, int v, std::vector<SlotRef>& work) {
    if (dir[x][s] == v) return;
    if (dir[x][s] != 0)
      throw ParseError("inconsistent orientation at edge " + std::to_string(raw[x][s]));
    dir[x][s] = v;
    work.push_back({x, s});
  };
  auto propagate = [&](std::vector<SlotRef> work) {
    while (!work.empty()) {
      SlotRef r = work.back();
      work.pop_back();
      int v = dir[r.crossing][r.slot];
      for (const SlotRef& o : occurrences[raw[r.crossing][r.slot]])
        if (o.crossing != r.crossing || o.slot != r.slot) assign(o.crossing, o.slot, -v, work);
      if (r.slot == 1 || r.slot == 3) assign(r.crossing, 4 - r.slot, -v, work);
    }
  };
  {
    std::vector<SlotRef> work;
    for (int x = 0; x < static_cast<int>(raw.size()); ++x) {
      work.push_back({x, 0});
      work.push_back({x, 2});
    }
    propagate(work);
  }
  for (int x = 0; x < static_cast<int>(raw.size()); ++x) {
    if (dir[x][1] != 0) continue;
    const int b = raw[x][1], d = raw[x][3];
    bool b_in;
    if (b + 1 == d)
      b_in = true;
    else if (d + 1 == b)
      b_in = false;
    else
      b_in = b > d;  // wrap-around from the largest label of a component
    std::vector<SlotRef> work;
    assign(x, 1, b_in ? 1 : -1, work);
    propagate(work);
  }

  DiagramBuilder builder;
  for (int x = 0; x < static_cast<int>(raw.size()); ++x) {
    Crossing c{raw[x], dir[x][3] == 1 ? +1 : -1};
    builder.add_crossing(c);
  }
  try {
    return builder.build_traced(0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid PD code: ") + e.what());
  }
}

/// Dispatches on the notation prefix: "braid:..." or "pd:..." (a bare PD
/// code is accepted too).
inline LinkDiagram parse_diagram(const std::string& text) {
  std::string t = detail::trim(text);
  if (t.rfind("braid:", 0) == 0) return braid_closure(parse_braid(t));
  if (t.rfind("pd:", 0) == 0) t = t.substr(3);
  return parse_pd(t);
}

/// PD text with 1-based labels; crossing-free components are not
/// representable and are reported separately by the caller.
inline std::string to_pd(const LinkDiagram& d) {
  std::ostringstream os;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& e = d.crossing(x).edges;
    os << (x ? " " : "") << "X(" << e[0] + 1 << "," << e[1] + 1 << "," << e[2] + 1 << ","
       << e[3] + 1 << ")";
  }
  return os.str();
}

}  // namespace ohtsuki
