#pragma once

/// Kauffman bracket by crossing-at-a-time contraction.
///
/// The processed part of the diagram is a tangle whose boundary is the list
/// of edges with exactly one processed end. A partial state sum is a map
/// from boundary matchings (which boundary edges are joined by arcs inside
/// the tangle) to Laurent polynomials in A. Adding a crossing splits every
/// entry into its A- and B-smoothing, re-traces the arcs, and multiplies in
/// d = -A^2 - A^-2 for each closed loop.

#include "ohtsuki/errors.hpp"
#include "ohtsuki/laurent.hpp"
#include "ohtsuki/link_diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace ohtsuki {

struct BracketLimits {
  int max_crossings = 400;
  std::size_t max_states = 4'000'000;
  int max_boundary = 250;
};

namespace detail {

/// Dense Laurent polynomial in A with machine coefficients; every
/// arithmetic step is overflow-checked.
struct APoly {
  int lo = 0;
  std::vector<std::int64_t> c;

  bool empty() const { return c.empty(); }

  void ensure(int lo_needed, int hi_needed) {
    if (c.empty()) {
      lo = lo_needed;
      c.assign(hi_needed - lo_needed + 1, 0);
      return;
    }
    int hi = lo + static_cast<int>(c.size()) - 1;
    if (lo_needed < lo) {
      c.insert(c.begin(), lo - lo_needed, 0);
      lo = lo_needed;
    }
    if (hi_needed > hi) c.resize(c.size() + (hi_needed - hi), 0);
  }

  /// this += a * b * A^shift
  void add_product(const APoly& a, const APoly& b, int shift) {
    if (a.c.empty() || b.c.empty()) return;
    const int base = a.lo + b.lo + shift;
    ensure(base, base + static_cast<int>(a.c.size() + b.c.size()) - 2);
    const int off = base - lo;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      const std::int64_t ai = a.c[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) {
        std::int64_t prod, sum;
        if (__builtin_mul_overflow(ai, b.c[j], &prod) ||
            __builtin_add_overflow(c[off + i + j], prod, &sum))
          throw ResourceLimitError("Kauffman bracket coefficient overflow");
        c[off + i + j] = sum;
      }
    }
  }

  static APoly monomial(int e, std::int64_t v) { return APoly{e, {v}}; }
};

/// (-A^2 - A^-2)^k for k = 0..n.
inline std::vector<APoly> loop_powers(int n) {
  std::vector<APoly> out;
  APoly d{-2, {-1, 0, 0, 0, -1}};
  out.push_back(APoly::monomial(0, 1));
  for (int k = 1; k <= n; ++k) {
    APoly next;
    next.add_product(out.back(), d, 0);
    out.push_back(next);
  }
  return out;
}

/// Greedy contraction order: repeatedly take the crossing sharing the most
/// edges with the current boundary. Every start is tried; the order with
/// the smallest peak boundary wins.
inline std::vector<int> contraction_order(const LinkDiagram& d, int* peak_width = nullptr) {
  const int n = d.crossing_count();
  std::vector<int> best;
  int best_peak = std::numeric_limits<int>::max();
  std::vector<int> in_boundary(d.edge_count());
  for (int start = 0; start < n; ++start) {
    std::fill(in_boundary.begin(), in_boundary.end(), 0);
    std::vector<bool> used(n, false);
    std::vector<int> order;
    int width = 0, peak = 0;
    auto take = [&](int x) {
      used[x] = true;
      order.push_back(x);
      for (int e : d.crossing(x).edges) {
        in_boundary[e] ^= 1;
        width += in_boundary[e] ? 1 : -1;
      }
      peak = std::max(peak, width);
    };
    take(start);
    for (int step = 1; step < n && peak < best_peak; ++step) {
      int pick = -1, pick_shared = -1;
      for (int x = 0; x < n; ++x) {
        if (used[x]) continue;
        int shared = 0;
        for (int e : d.crossing(x).edges) shared += in_boundary[e];
        if (shared > pick_shared) {
          pick_shared = shared;
          pick = x;
        }
      }
      take(pick);
    }
    if (static_cast<int>(order.size()) == n && peak < best_peak) {
      best_peak = peak;
      best = order;
    }
  }
  if (peak_width) *peak_width = n ? best_peak : 0;
  return best;
}

}  // namespace detail

/// Unnormalized bracket with <O> = 1, as a Laurent polynomial in A.
inline Laurent<BigInt> kauffman_bracket(const LinkDiagram& d, const BracketLimits& limits = {}) {
  using detail::APoly;
  if (d.is_empty()) throw std::domain_error("Kauffman bracket of the empty link is undefined");
  if (d.crossing_count() > limits.max_crossings)
    throw ResourceLimitError("diagram has " + std::to_string(d.crossing_count()) +
                             " crossings, limit is " + std::to_string(limits.max_crossings));
  std::vector<bool> has_edge(d.component_count(), false);
  for (int e = 0; e < d.edge_count(); ++e) has_edge[d.component_of_edge(e)] = true;
  int free_loops = 0;
  for (bool h : has_edge) free_loops += h ? 0 : 1;

  const auto dpow = detail::loop_powers(std::max(free_loops, 4) + 4);
  const std::vector<int> order = detail::contraction_order(d);

  std::vector<int> boundary;
  std::unordered_map<std::string, APoly> states;
  states.emplace(std::string(), APoly::monomial(0, 1));
  const int pairs[2][4] = {{1, 0, 3, 2}, {3, 2, 1, 0}};  // A: (0,1)(2,3); B: (0,3)(1,2)

  for (int x : order) {
    const auto& edges = d.crossing(x).edges;
    const int nb = static_cast<int>(boundary.size());
    const int nodes = nb + 4;
    std::vector<int> ident(nodes, -1);
    for (int s = 0; s < 4; ++s) {
      for (int i = 0; i < nb; ++i)
        if (boundary[i] == edges[s]) {
          ident[nb + s] = i;
          ident[i] = nb + s;
        }
      for (int s2 = 0; s2 < 4; ++s2)
        if (s2 != s && edges[s2] == edges[s]) ident[nb + s] = nb + s2;
    }
    std::vector<int> ext(nodes, -1), next_boundary;
    for (int v = 0; v < nodes; ++v)
      if (ident[v] < 0) {
        ext[v] = static_cast<int>(next_boundary.size());
        next_boundary.push_back(v < nb ? boundary[v] : edges[v - nb]);
      }
    const int nnb = static_cast<int>(next_boundary.size());
    if (nnb > limits.max_boundary) throw ResourceLimitError("contraction boundary too wide");

    std::unordered_map<std::string, APoly> next_states;
    next_states.reserve(states.size() * 2);
    std::vector<int> link(nodes);
    std::vector<char> seen(nodes);
    std::string key(nnb, '\0');
    for (const auto& [match, poly] : states) {
      for (int i = 0; i < nb; ++i) link[i] = static_cast<unsigned char>(match[i]);
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        for (int s = 0; s < 4; ++s) link[nb + s] = nb + pairs[smoothing][s];
        std::fill(seen.begin(), seen.end(), 0);
        for (int v = 0; v < nodes; ++v) {
          if (ext[v] < 0 || seen[v]) continue;
          int cur = v;
          while (true) {
            seen[cur] = 1;
            int w = link[cur];
            seen[w] = 1;
            if (ident[w] < 0) {
              key[ext[v]] = static_cast<char>(ext[w]);
              key[ext[w]] = static_cast<char>(ext[v]);
              break;
            }
            cur = ident[w];
          }
        }
        int loops = 0;
        for (int v = 0; v < nodes; ++v) {
          if (seen[v]) continue;
          int cur = v;
          do {
            seen[cur] = 1;
            int w = link[cur];
            seen[w] = 1;
            cur = ident[w];
          } while (cur != v);
          ++loops;
        }
        next_states[key].add_product(poly, dpow.at(loops), smoothing == 0 ? 1 : -1);
      }
    }
    if (next_states.size() > limits.max_states)
      throw ResourceLimitError("Kauffman bracket state count exceeds limit");
    states = std::move(next_states);
    boundary = std::move(next_boundary);
  }

  APoly total = states.at(std::string());
  if (free_loops > 0) {
    APoly t;
    t.add_product(total, dpow.at(free_loops), 0);
    total = t;
  }
  // divide by d = -A^-2 (1 + A^4): the empty-diagram normalization <O> = 1
  std::vector<std::int64_t> q(total.c.size(), 0);
  for (std::size_t i = 0; i < total.c.size(); ++i) q[i] = total.c[i] - (i >= 4 ? q[i - 4] : 0);
  for (std::size_t i = q.size() >= 4 ? q.size() - 4 : 0; i < q.size(); ++i)
    if (q[i] != 0) throw std::logic_error("bracket state sum not divisible by the loop value");
  Laurent<BigInt> out;
  for (std::size_t i = 0; i + 4 < q.size(); ++i)
    out.add_term(total.lo + static_cast<int>(i) + 2, BigInt(-q[i]));
  return out;
}

}  // namespace ohtsuki
