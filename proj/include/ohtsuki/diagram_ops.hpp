#pragma once

/// Linking data, sublinks, crossing changes, and 0-framed cables.

#include "ohtsuki/diagram_io.hpp"
#include "ohtsuki/link_diagram.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace ohtsuki {

/// Entry xi is the number of parallel copies of component xi.
using CableTuple = std::vector<int>;

struct FramedLink {
  LinkDiagram diagram;
  std::vector<int> framings;

  FramedLink() = default;
  FramedLink(LinkDiagram d, std::vector<int> f) : diagram(std::move(d)), framings(std::move(f)) {
    if (static_cast<int>(framings.size()) != diagram.component_count())
      throw std::invalid_argument("need one framing per component");
  }
  bool is_unit_framed() const {
    for (int f : framings)
      if (f != 1 && f != -1) return false;
    return true;
  }
  /// f_L, the product of all framings.
  int framing_product() const {
    int p = 1;
    for (int f : framings) p *= f;
    return p;
  }
};

/// Symmetric; off-diagonal entries are linking numbers, diagonal is 0.
inline std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d) {
  const int n = d.component_count();
  std::vector<std::vector<int>> twice(n, std::vector<int>(n, 0));
  for (int x = 0; x < d.crossing_count(); ++x) {
    int a = d.under_component(x), b = d.over_component(x);
    if (a == b) continue;
    twice[a][b] += d.crossing(x).sign;
    twice[b][a] += d.crossing(x).sign;
  }
  for (auto& row : twice)
    for (int& v : row) {
      if (v % 2 != 0) throw std::logic_error("odd crossing count between two components");
      v /= 2;
    }
  return twice;
}

inline bool is_asl(const LinkDiagram& d) {
  for (const auto& row : linking_matrix(d))
    for (int v : row)
      if (v != 0) return false;
  return true;
}

inline int self_writhe(const LinkDiagram& d, int component) {
  if (component < 0 || component >= d.component_count())
    throw std::out_of_range("component index out of range");
  int w = 0;
  for (int x = 0; x < d.crossing_count(); ++x)
    if (d.under_component(x) == component && d.over_component(x) == component)
      w += d.crossing(x).sign;
  return w;
}

/// Keeps the components with keep[i] true, splicing surviving strands
/// straight through the crossings of deleted ones. Component order is kept.
inline LinkDiagram sublink(const LinkDiagram& d, const std::vector<bool>& keep) {
  if (static_cast<int>(keep.size()) != d.component_count())
    throw std::invalid_argument("sublink mask has wrong length");
  std::vector<int> new_index(d.component_count(), -1);
  int kept = 0;
  for (int c = 0; c < d.component_count(); ++c)
    if (keep[c]) new_index[c] = kept++;
  DiagramBuilder b;
  for (int e = 0; e < d.edge_count(); ++e) {
    int c = new_index[d.component_of_edge(e)];
    if (c >= 0) b.set_component(e, c);
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    const Crossing& c = d.crossing(x);
    const bool ku = keep[d.under_component(x)], ko = keep[d.over_component(x)];
    if (ku && ko)
      b.add_crossing(c);
    else if (ku)
      b.merge(c.edges[0], c.edges[2]);
    else if (ko)
      b.merge(c.edges[c.in_over_slot()], c.edges[c.out_over_slot()]);
  }
  return b.build_labelled(kept);
}

inline LinkDiagram sublink_of(const LinkDiagram& d, const std::vector<int>& components) {
  std::vector<bool> keep(d.component_count(), false);
  for (int c : components) keep.at(c) = true;
  return sublink(d, keep);
}

/// Changes crossing x from over to under, keeping edge ids and orientation.
inline Crossing switched(const Crossing& c) {
  const auto& e = c.edges;
  if (c.sign > 0) return {{e[3], e[0], e[1], e[2]}, -1};
  return {{e[1], e[2], e[3], e[0]}, +1};
}

namespace detail {
inline std::vector<int> edge_components(const LinkDiagram& d) {
  std::vector<int> comp(d.edge_count());
  for (int e = 0; e < d.edge_count(); ++e) comp[e] = d.component_of_edge(e);
  return comp;
}
}  // namespace detail

inline LinkDiagram switch_crossing(const LinkDiagram& d, int x) {
  std::vector<Crossing> cs = d.crossings();
  cs.at(x) = switched(cs.at(x));
  return LinkDiagram(std::move(cs), detail::edge_components(d), d.component_count());
}

inline LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> cs = d.crossings();
  for (auto& c : cs) c = switched(c);
  return LinkDiagram(std::move(cs), detail::edge_components(d), d.component_count());
}

/// Orientation-respecting smoothing of crossing x. Components are
/// re-traced (the count changes by one); crossing-free components come last.
inline LinkDiagram smooth_crossing(const LinkDiagram& d, int x) {
  const Crossing& c = d.crossing(x);
  std::vector<bool> has_edge(d.component_count(), false);
  for (int e = 0; e < d.edge_count(); ++e) has_edge[d.component_of_edge(e)] = true;
  int free_loops = 0;
  for (bool h : has_edge) free_loops += h ? 0 : 1;
  DiagramBuilder b;
  for (int y = 0; y < d.crossing_count(); ++y)
    if (y != x) b.add_crossing(d.crossing(y));
  b.merge(c.edges[0], c.edges[c.out_over_slot()]);
  b.merge(c.edges[c.in_over_slot()], c.edges[2]);
  free_loops += b.crossing_free_classes({c.edges[0], c.edges[2]});
  return b.build_traced(free_loops);
}

/// Disjoint (split) union; components of `b` follow those of `a`.
inline LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<Crossing> cs = a.crossings();
  std::vector<int> comp = detail::edge_components(a);
  for (Crossing c : b.crossings()) {
    for (int& e : c.edges) e += a.edge_count();
    cs.push_back(c);
  }
  for (int e = 0; e < b.edge_count(); ++e) comp.push_back(b.component_of_edge(e) + a.component_count());
  return DiagramBuilder::canonical(std::move(cs), comp, a.component_count() + b.component_count(), 0);
}

/// Replaces component xi by t[xi] parallel copies (blackboard parallel) and
/// inserts -w_xi full twists among them, w_xi the self-writhe, so copies of
/// the same component have linking number zero. Copies of component xi are
/// numbered consecutively, copy 0 on the right of the original strand.
inline LinkDiagram cable(const LinkDiagram& d, const CableTuple& t) {
  const int mu = d.component_count();
  if (static_cast<int>(t.size()) != mu) throw std::invalid_argument("cable tuple has wrong length");
  for (int v : t)
    if (v < 0) throw std::invalid_argument("cable tuple entries must be non-negative");
  bool all_ones = true;
  for (int v : t) all_ones = all_ones && v == 1;
  if (all_ones) return d;

  std::vector<int> offset(mu, 0), writhe(mu, 0), twist_edge(mu, -1);
  int total = 0;
  for (int c = 0; c < mu; ++c) {
    offset[c] = total;
    total += t[c];
    writhe[c] = self_writhe(d, c);
  }
  for (int c = 0; c < mu; ++c)
    if (t[c] >= 2 && writhe[c] != 0) twist_edge[c] = d.component_edges(c).front();

  DiagramBuilder b;
  int next_id = 0;
  // copy_id[e][2*p + side], side 0 = tail end, 1 = head end
  std::vector<std::vector<int>> copy_id(d.edge_count());
  for (int e = 0; e < d.edge_count(); ++e) {
    const int comp = d.component_of_edge(e), m = t[comp];
    copy_id[e].resize(2 * m);
    for (int p = 0; p < m; ++p) {
      int tail_id = next_id++;
      int head_id = twist_edge[comp] == e ? next_id++ : tail_id;
      copy_id[e][2 * p] = tail_id;
      copy_id[e][2 * p + 1] = head_id;
      b.set_component(tail_id, offset[comp] + p);
      b.set_component(head_id, offset[comp] + p);
    }
  }
  auto copy_at = [&](const Crossing& c, int slot, int p) {
    const int side = c.is_incoming(slot) ? 1 : 0;
    return copy_id[c.edges[slot]][2 * p + side];
  };

  for (int x = 0; x < d.crossing_count(); ++x) {
    const Crossing& c = d.crossing(x);
    const int uc = d.under_component(x), oc = d.over_component(x);
    const int m = t[uc], mo = t[oc];
    if (m == 0 && mo == 0) continue;
    if (m == 0) {
      for (int p = 0; p < mo; ++p) b.merge(copy_at(c, c.in_over_slot(), p), copy_at(c, c.out_over_slot(), p));
      continue;
    }
    if (mo == 0) {
      for (int p = 0; p < m; ++p) b.merge(copy_at(c, 0, p), copy_at(c, 2, p));
      continue;
    }
    // Grid: columns west->east carry under copies (copy m-1-col), rows
    // south->north carry over copies.
    auto over_copy = [&](int row) { return c.sign > 0 ? row : mo - 1 - row; };
    std::vector<std::vector<int>> vert(m, std::vector<int>(mo + 1));
    std::vector<std::vector<int>> horiz(mo, std::vector<int>(m + 1));
    for (int col = 0; col < m; ++col) {
      const int p = m - 1 - col;
      vert[col][0] = copy_at(c, 0, p);
      vert[col][mo] = copy_at(c, 2, p);
      for (int k = 1; k < mo; ++k) {
        vert[col][k] = next_id++;
        b.set_component(vert[col][k], offset[uc] + p);
      }
    }
    for (int row = 0; row < mo; ++row) {
      const int p = over_copy(row);
      horiz[row][0] = copy_at(c, 3, p);
      horiz[row][m] = copy_at(c, 1, p);
      for (int k = 1; k < m; ++k) {
        horiz[row][k] = next_id++;
        b.set_component(horiz[row][k], offset[oc] + p);
      }
    }
    for (int col = 0; col < m; ++col)
      for (int row = 0; row < mo; ++row)
        b.add_crossing({{vert[col][row], horiz[row][col + 1], vert[col][row + 1], horiz[row][col]}, c.sign});
  }

  for (int comp = 0; comp < mu; ++comp) {
    const int e = twist_edge[comp];
    if (e < 0) continue;
    const int m = t[comp];
    std::vector<int> pos(m), label(m);
    for (int q = 0; q < m; ++q) {
      pos[q] = copy_id[e][2 * (m - 1 - q)];
      label[q] = offset[comp] + (m - 1 - q);
    }
    // a full twist of crossing sign s contributes s to each pairwise
    // linking number; letters +k are negative crossings
    const int letter_sign = writhe[comp] > 0 ? 1 : -1;
    for (int twist = 0; twist < std::abs(writhe[comp]); ++twist)
      for (int round = 0; round < m; ++round)
        for (int k = 1; k < m; ++k) detail::add_braid_letter(b, pos, label, letter_sign * k, next_id);
    for (int q = 0; q < m; ++q) b.merge(pos[q], copy_id[e][2 * (m - 1 - q) + 1]);
  }
  return b.build_labelled(total);
}

/// All tuples with entries in 0..m, first entry varying slowest.
inline std::vector<CableTuple> enumerate_tuples(int mu, int m) {
  if (mu < 1 || m < 0) throw std::invalid_argument("enumerate_tuples needs mu >= 1, m >= 0");
  std::vector<CableTuple> out;
  CableTuple cur(mu, 0);
  while (true) {
    out.push_back(cur);
    int k = mu - 1;
    while (k >= 0 && cur[k] == m) cur[k--] = 0;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

struct TupleStats {
  int s1 = 0, s2 = 0, s3 = 0;
  int framing_product = 1;      // prod f_xi^{i_xi}
  int twos_framing_sum = 0;     // sum of f_xi over entries equal to 2
};

inline TupleStats tuple_stats(const CableTuple& t, const std::vector<int>& framings) {
  if (t.size() != framings.size()) throw std::invalid_argument("tuple and framings differ in length");
  TupleStats s;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (framings[k] != 1 && framings[k] != -1) throw std::invalid_argument("framings must be +-1");
    if (t[k] == 1) ++s.s1;
    if (t[k] == 2) {
      ++s.s2;
      s.twos_framing_sum += framings[k];
    }
    if (t[k] == 3) ++s.s3;
    if (t[k] % 2 == 1) s.framing_product *= framings[k];
  }
  return s;
}

inline int tuple_size(const CableTuple& t) {
  int s = 0;
  for (int v : t) s += v;
  return s;
}

inline int tuple_max(const CableTuple& t) {
  int m = 0;
  for (int v : t) m = std::max(m, v);
  return m;
}

}  // namespace ohtsuki
