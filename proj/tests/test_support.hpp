#pragma once

// Shared helpers for the test binaries: random diagrams, skein triples and
// cyclotomic elements.

#include "ohtsuki/cyclotomic.hpp"
#include "ohtsuki/diagram_io.hpp"
#include "ohtsuki/diagram_ops.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ohtsuki::test_support {

inline BraidWord random_braid(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
  BraidWord w{strands, {}};
  for (int k = 0; k < length; ++k) w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

inline std::string braid_text(const BraidWord& w) {
  std::string s = "braid:" + std::to_string(w.strand_count) + ":";
  for (std::size_t k = 0; k < w.letters.size(); ++k) s += (k ? "," : "") + std::to_string(w.letters[k]);
  return s;
}

struct Triple {
  LinkDiagram plus, minus, zero;
};

inline std::vector<Triple> random_triples(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Triple> out;
  while (static_cast<int>(out.size()) < count) {
    const int strands = 2 + static_cast<int>(rng() % 3);
    const LinkDiagram d = braid_closure(random_braid(rng, strands, 3 + static_cast<int>(rng() % 6)));
    if (d.crossing_count() == 0) continue;
    const int x = static_cast<int>(rng() % d.crossing_count());
    LinkDiagram other = switch_crossing(d, x);
    Triple t{d, other, smooth_crossing(d, x)};
    if (d.crossing(x).sign < 0) std::swap(t.plus, t.minus);
    out.push_back(std::move(t));
  }
  return out;
}

inline CycElem random_elem(const CycContextPtr& ctx, std::mt19937& rng) {
  std::vector<std::int64_t> c(ctx->r);
  std::uniform_int_distribution<std::int64_t> d(0, ctx->modulus - 1);
  for (auto& v : c) v = d(rng);
  return CycElem::from_powers(ctx, c);
}

// (q-1)-expansion computed independently: substitute q = 1 + x into the
// canonical representative and expand with Pascal's rule.
inline std::vector<std::int64_t> expansion_oracle(const CycElem& x, int window) {
  const int r = x.context().r;
  std::vector<std::int64_t> out(window + 1, 0);
  std::vector<std::int64_t> binom_row{1};
  for (int j = 0; j < r - 1; ++j) {
    const std::int64_t c = x.coeffs()[j] % r;
    for (int n = 0; n <= j && n <= window; ++n) out[n] = (out[n] + c * binom_row[n]) % r;
    std::vector<std::int64_t> next(binom_row.size() + 1, 0);
    for (std::size_t n = 0; n < next.size(); ++n)
      next[n] = ((n < binom_row.size() ? binom_row[n] : 0) + (n ? binom_row[n - 1] : 0)) % r;
    binom_row = next;
  }
  return out;
}

}  // namespace ohtsuki::test_support
