#pragma once

/// Oriented link diagrams in planar-diagram form.
///
/// A crossing lists four edge ids counterclockwise, starting with the
/// incoming under-strand. The sign fixes the direction of the over-strand:
/// on a positive crossing it enters at slot 3 and leaves at slot 1, on a
/// negative one it enters at slot 1 and leaves at slot 3. Components that
/// meet no crossing are stored only as a count ("free loops").
///
/// Edge ids of a built diagram are dense and canonical: component 0's edges
/// in traversal order, then component 1's, and so on.

#include "ohtsuki/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ohtsuki {

struct Crossing {
  std::array<int, 4> edges{};
  int sign = 1;

  int in_over_slot() const { return sign > 0 ? 3 : 1; }
  int out_over_slot() const { return sign > 0 ? 1 : 3; }
  bool is_incoming(int slot) const { return slot == 0 || slot == in_over_slot(); }
  /// Slot through which a strand entering at `entry` leaves.
  int exit_slot(int entry) const { return entry == 0 ? 2 : out_over_slot(); }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct SlotRef {
  int crossing = -1;
  int slot = -1;
};

class LinkDiagram {
 public:
  /// The empty link.
  LinkDiagram() = default;

  /// Takes dense edge ids 0..E-1. Components listed in `edge_component`
  /// must be < component_count; components owning no edge are free loops.
  LinkDiagram(std::vector<Crossing> crossings, std::vector<int> edge_component,
              int component_count)
      : crossings_(std::move(crossings)),
        edge_component_(std::move(edge_component)),
        component_count_(component_count) {
    index();
  }

  static LinkDiagram unlink(int n) { return LinkDiagram({}, {}, n); }

  int component_count() const { return component_count_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return static_cast<int>(edge_component_.size()); }
  bool is_empty() const { return component_count_ == 0; }
  bool is_knot() const { return component_count_ == 1; }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int x) const { return crossings_.at(x); }
  int component_of_edge(int e) const { return edge_component_.at(e); }
  SlotRef head(int e) const { return head_.at(e); }
  SlotRef tail(int e) const { return tail_.at(e); }

  /// Edge following e along its component.
  int next_edge(int e) const {
    SlotRef h = head_[e];
    const Crossing& c = crossings_[h.crossing];
    return c.edges[c.exit_slot(h.slot)];
  }

  int under_component(int x) const { return edge_component_[crossings_[x].edges[0]]; }
  int over_component(int x) const { return edge_component_[crossings_[x].edges[1]]; }

  /// Edges of component c in traversal order (empty for a free loop).
  std::vector<int> component_edges(int c) const {
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e)
      if (edge_component_[e] == c) {
        int cur = e;
        do {
          out.push_back(cur);
          cur = next_edge(cur);
        } while (cur != e);
        break;
      }
    return out;
  }

  int writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign;
    return w;
  }

  /// Diagram as PD text with 1-based labels, plus a "U<k>" suffix for
  /// free loops. Deterministic for a given diagram.
  std::string encode() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
      const auto& c = crossings_[i];
      os << (i ? " " : "") << (c.sign > 0 ? "X+(" : "X-(") << c.edges[0] + 1 << ","
         << c.edges[1] + 1 << "," << c.edges[2] + 1 << "," << c.edges[3] + 1 << ")";
    }
    os << " C" << component_count_;
    return os.str();
  }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.edge_component_ == b.edge_component_ &&
           a.component_count_ == b.component_count_;
  }

 private:
  void index() {
    const int E = edge_count();
    head_.assign(E, {});
    tail_.assign(E, {});
    for (int x = 0; x < crossing_count(); ++x) {
      const Crossing& c = crossings_[x];
      if (c.sign != 1 && c.sign != -1) throw std::invalid_argument("crossing sign must be +-1");
      for (int s = 0; s < 4; ++s) {
        int e = c.edges[s];
        if (e < 0 || e >= E) throw std::invalid_argument("crossing references unknown edge");
        SlotRef& ref = c.is_incoming(s) ? head_[e] : tail_[e];
        if (ref.crossing >= 0)
          throw std::invalid_argument("edge " + std::to_string(e + 1) +
                                      " has inconsistent orientation");
        ref = {x, s};
      }
    }
    for (int e = 0; e < E; ++e) {
      if (head_[e].crossing < 0 || tail_[e].crossing < 0)
        throw std::invalid_argument("edge " + std::to_string(e + 1) + " is not used twice");
      int comp = edge_component_[e];
      if (comp < 0 || comp >= component_count_)
        throw std::invalid_argument("edge assigned to an out-of-range component");
    }
    for (int e = 0; e < E; ++e)
      if (edge_component_[next_edge(e)] != edge_component_[e])
        throw std::invalid_argument("component labels are not constant along strands");
    // each component with edges must be a single cycle
    std::vector<int> seen(component_count_, 0), total(component_count_, 0);
    for (int e = 0; e < E; ++e) ++total[edge_component_[e]];
    std::vector<bool> done(component_count_, false);
    for (int e = 0; e < E; ++e) {
      int comp = edge_component_[e];
      if (done[comp]) continue;
      done[comp] = true;
      int cur = e, len = 0;
      do {
        ++len;
        cur = next_edge(cur);
      } while (cur != e);
      if (len != total[comp]) throw std::invalid_argument("component is not a single closed strand");
    }
  }

  std::vector<Crossing> crossings_;
  std::vector<int> edge_component_;
  int component_count_ = 0;
  std::vector<SlotRef> head_, tail_;
};

/// Collects crossings over arbitrary raw edge ids, with merges ("these two
/// raw ids are the same edge"), and produces a canonical LinkDiagram.
class DiagramBuilder {
 public:
  void add_crossing(const Crossing& c) {
    for (int e : c.edges) touch(e);
    crossings_.push_back(c);
  }
  void merge(int a, int b) {
    touch(a);
    touch(b);
    int ra = find(a), rb = find(b);
    if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
  }
  void set_component(int raw_edge, int component) { component_label_[raw_edge] = component; }
  const std::vector<Crossing>& crossings() const { return crossings_; }

  /// Components come from labels set on raw edges; `component_count`
  /// components exist, and labels owning no surviving edge become free loops.
  LinkDiagram build_labelled(int component_count) {
    auto [crossings, edges_by_class] = compact();
    std::vector<int> class_component(edges_by_class, -1);
    for (const auto& [raw, comp] : component_label_) {
      auto it = class_index_.find(find(raw));
      if (it != class_index_.end()) class_component[it->second] = comp;
    }
    for (int k = 0; k < edges_by_class; ++k)
      if (class_component[k] < 0) throw std::logic_error("edge without component label");
    return canonical(std::move(crossings), class_component, component_count, 0);
  }

  /// Components are found by tracing strands and ordered by their smallest
  /// raw edge id; `free_loops` crossing-free components are appended.
  LinkDiagram build_traced(int free_loops) {
    auto [crossings, n] = compact();
    std::vector<int> next(n, -1);
    for (const auto& c : crossings)
      for (int s = 0; s < 4; ++s)
        if (c.is_incoming(s)) {
          int& slot = next[c.edges[s]];
          if (slot >= 0) throw std::invalid_argument("edge has inconsistent orientation");
          slot = c.edges[c.exit_slot(s)];
        }
    std::vector<int> component(n, -1);
    int count = 0;
    for (int e = 0; e < n; ++e) {
      if (component[e] >= 0) continue;
      int cur = e;
      while (cur >= 0 && component[cur] < 0) {
        component[cur] = count;
        cur = next[cur];
      }
      if (cur < 0) throw std::invalid_argument("edge has inconsistent orientation");
      ++count;
    }
    return canonical(std::move(crossings), component, count, free_loops);
  }

  /// Number of distinct edge classes among `raw_ids` that occur in no
  /// crossing slot (closed crossing-free loops).
  int crossing_free_classes(const std::vector<int>& raw_ids) {
    std::vector<int> roots;
    for (int r : raw_ids) roots.push_back(find(r));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    int count = 0;
    for (int root : roots) {
      bool used = false;
      for (const auto& c : crossings_)
        for (int e : c.edges)
          if (find(e) == root) used = true;
      if (!used) ++count;
    }
    return count;
  }

  int find(int a) {
    touch(a);
    int r = a;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[a] != r) {
      int next = parent_[a];
      parent_[a] = r;
      a = next;
    }
    return r;
  }

 private:
  void touch(int a) { parent_.try_emplace(a, a); }

  /// Replaces raw ids by class indices 0..n-1 (ordered by smallest raw id).
  std::pair<std::vector<Crossing>, int> compact() {
    class_index_.clear();
    std::vector<int> roots;
    for (const auto& c : crossings_)
      for (int e : c.edges) roots.push_back(find(e));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (std::size_t k = 0; k < roots.size(); ++k) class_index_[roots[k]] = static_cast<int>(k);
    std::vector<Crossing> out = crossings_;
    for (auto& c : out)
      for (int& e : c.edges) e = class_index_.at(find(e));
    return {out, static_cast<int>(roots.size())};
  }

 public:
  /// Renumbers edges along components (component order given by labels)
  /// and returns the validated diagram.
  static LinkDiagram canonical(std::vector<Crossing> crossings, const std::vector<int>& component,
                               int component_count, int extra_free_loops) {
    const int E = static_cast<int>(component.size());
    LinkDiagram raw(crossings, component, component_count);
    std::vector<int> relabel(E, -1);
    int next = 0;
    for (int comp = 0; comp < component_count; ++comp) {
      int start = -1;
      for (int e = 0; e < E; ++e)
        if (component[e] == comp) {
          start = e;
          break;
        }
      if (start < 0) continue;
      int cur = start;
      do {
        relabel[cur] = next++;
        cur = raw.next_edge(cur);
      } while (cur != start);
    }
    std::vector<int> new_component(E);
    for (int e = 0; e < E; ++e) new_component[relabel[e]] = component[e];
    for (auto& c : crossings)
      for (int& e : c.edges) e = relabel[e];
    return LinkDiagram(std::move(crossings), std::move(new_component),
                       component_count + extra_free_loops);
  }

 private:
  std::vector<Crossing> crossings_;
  std::map<int, int> parent_;
  std::map<int, int> component_label_;
  std::map<int, int> class_index_;
};

}  // namespace ohtsuki
