#pragma once

/// Congruence sweep over the knots of a corpus: for each knot and each n,
/// lambda1/lambda2 of 1/n surgery, their integrality, lambda1 = 2 lambda2
/// mod 24, and lambda1/6 = n c2 (the Casson surgery formula).

#include "ohtsuki/corpus.hpp"
#include "ohtsuki/surgery.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ohtsuki {

struct SweepRecord {
  std::string entry;
  std::int64_t n = 0;
  Rational lambda1, lambda2;
  CongruenceReport congruence;
  bool casson_ok = false;
  bool pass() const { return congruence.pass() && casson_ok; }
};

/// Runs `task(i)` for i in [0, count) on up to `jobs` threads; the first
/// exception is rethrown after all workers stop.
template <class Task>
void parallel_for(std::size_t count, unsigned jobs, Task task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

inline SweepRecord sweep_one(const CorpusEntry& e, const LinkDiagram& k, std::int64_t n, const SkeinConfig& cfg) {
  SweepRecord rec;
  rec.entry = e.name;
  rec.n = n;
  rec.lambda1 = lambda1_knot(k, n, cfg);
  rec.lambda2 = lambda2_knot(k, n, cfg);
  rec.congruence = congruence_report(rec.lambda1, rec.lambda2);
  rec.casson_ok = rec.congruence.lambda1_integral_6 &&
                  rec.lambda1 / 6 == Rational(n) * Rational(conway_coefficient(k, 2, cfg));
  return rec;
}

/// Records sorted by (entry name, n). Non-knot entries are skipped.
inline std::vector<SweepRecord> congruence_sweep(const std::vector<CorpusEntry>& corpus,
                                                 const std::vector<std::int64_t>& ns,
                                                 const SkeinConfig& cfg, unsigned jobs) {
  std::vector<std::pair<const CorpusEntry*, LinkDiagram>> knots;
  for (const auto& e : corpus) {
    LinkDiagram d = e.diagram();
    if (d.is_knot()) knots.emplace_back(&e, std::move(d));
  }
  std::vector<SweepRecord> out(knots.size() * ns.size());
  parallel_for(out.size(), jobs, [&](std::size_t i) {
    const auto& [entry, diagram] = knots[i / ns.size()];
    out[i] = sweep_one(*entry, diagram, ns[i % ns.size()], cfg);
  });
  std::stable_sort(out.begin(), out.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return a.entry != b.entry ? a.entry < b.entry : a.n < b.n;
  });
  return out;
}

}  // namespace ohtsuki
