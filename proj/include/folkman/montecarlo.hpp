#pragma once

// Seeded Monte Carlo estimates over G(n,p).  Trial t samples its graph with
// seed splitmix64_at(seed, t), so results do not depend on trial order or
// thread count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <variant>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/graph.hpp"

namespace folkman {

/// No K_{k+1} in G(n,p).
struct KFreeness {
  std::size_t n = 0;
  double p = 0;
  std::size_t k = 0;
};

/// G(n,p) -> (K_k)_r.
struct ArrowingEvent {
  std::size_t n = 0;
  double p = 0;
  std::size_t k = 0;
  unsigned r = 2;
  std::uint64_t node_budget = 0;  // per trial; 0: unlimited
};

using Event = std::variant<KFreeness, ArrowingEvent>;

struct WilsonInterval {
  double lo = 0;
  double hi = 1;
};

/// Wilson score interval at 95% confidence.
inline WilsonInterval wilson95(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0, 1};
  constexpr double z = 1.959963984540054;
  const double t = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / t;
  const double denom = 1 + z * z / t;
  const double centre = (ph + z * z / (2 * t)) / denom;
  const double half = z * std::sqrt(ph * (1 - ph) / t + z * z / (4 * t * t)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

struct MonteCarloResult {
  std::uint64_t trials = 0;     // trials with a definite outcome
  std::uint64_t successes = 0;
  std::uint64_t undecided = 0;  // arrowing trials that hit the budget
  double estimate = 0;
  WilsonInterval ci95;
  bool partial = false;
  double runtime_ms = 0;
};

/// 1 = event holds, 0 = fails, -1 = undecided within budget.
inline int mc_trial(const Event& ev, std::uint64_t trial_seed) {
  if (const auto* e = std::get_if<KFreeness>(&ev)) {
    return has_clique(sample_gnp(e->n, e->p, trial_seed), e->k + 1) ? 0 : 1;
  }
  const auto& a = std::get<ArrowingEvent>(ev);
  ArrowOptions opts;
  opts.node_budget = a.node_budget;
  const auto cert = arrows(sample_gnp(a.n, a.p, trial_seed), a.k, a.r, opts);
  switch (cert.verdict) {
    case ArrowVerdict::Arrows: return 1;
    case ArrowVerdict::NonArrowing: return 0;
    case ArrowVerdict::Indeterminate: return -1;
  }
  return -1;
}

inline MonteCarloResult mc_estimate(const Event& ev, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::int8_t> outcome(trials, 0);
  auto run = [&](std::uint64_t t) { outcome[t] = static_cast<std::int8_t>(mc_trial(ev, splitmix64_at(seed, t))); };
  if (threads <= 1) {
    for (std::uint64_t t = 0; t < trials; ++t) run(t);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) {
      pool.emplace_back([&] {
        for (std::uint64_t t; (t = next.fetch_add(1)) < trials;) run(t);
      });
    }
    for (auto& th : pool) th.join();
  }
  MonteCarloResult out;
  for (auto o : outcome) {
    if (o < 0) {
      ++out.undecided;
    } else {
      ++out.trials;
      out.successes += static_cast<std::uint64_t>(o);
    }
  }
  out.partial = out.undecided > 0;
  out.estimate = out.trials ? static_cast<double>(out.successes) / static_cast<double>(out.trials) : 0.0;
  out.ci95 = wilson95(out.successes, out.trials);
  out.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace folkman
