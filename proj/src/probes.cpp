// SPDX-License-Identifier: Apache-2.0
#include "svagen/probes.hpp"

#include <algorithm>
#include <random>

namespace svagen::trace {

namespace {

std::uint64_t draw_value(std::mt19937_64& rng, int width) {
  std::uint64_t cap = width >= 3 ? 7u : ((1ull << width) - 1);
  std::uniform_int_distribution<std::uint64_t> dist(0, cap);
  return dist(rng);
}

Trace blank_trace(const std::map<std::string, int>& widths, const ProbeConfig& cfg) {
  Trace t;
  t.cycles = cfg.cycles;
  t.timescale = "1ns";
  for (int k = 0; k < cfg.cycles; ++k) t.edge_times.push_back(5 + 10 * k);
  for (const auto& [name, w] : widths) t.widths[name] = w;
  t.widths[cfg.clock] = 1;
  t.signals[cfg.clock] = std::vector<Value>(cfg.cycles, Value{0});
  return t;
}

}  // namespace

std::vector<Trace> generate_probes(const std::map<std::string, int>& widths,
                                   const ProbeConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Trace> probes;

  auto fill_signal = [&](Trace& t, const std::string& name, int width) {
    auto held = cfg.hold.find(name);
    std::vector<Value> series;
    std::uint64_t cur = held != cfg.hold.end() ? held->second : draw_value(rng, width);
    for (int k = 0; k < t.cycles; ++k) {
      if (k > 0 && held == cfg.hold.end() && unit(rng) < cfg.toggle_prob)
        cur = width == 1 ? cur ^ 1u : draw_value(rng, width);
      series.push_back(Value{cur});
    }
    t.signals[name] = std::move(series);
  };

  for (int p = 0; p < cfg.count; ++p) {
    Trace t = blank_trace(widths, cfg);
    for (const auto& [name, w] : widths) {
      if (name == cfg.clock) continue;
      fill_signal(t, name, w);
    }
    probes.push_back(std::move(t));
  }

  if (cfg.reset_signal && widths.count(*cfg.reset_signal)) {
    // Reset held asserted through the first cycles, then released.
    Trace held = blank_trace(widths, cfg);
    for (const auto& [name, w] : widths) {
      if (name == cfg.clock) continue;
      fill_signal(held, name, w);
    }
    for (int k = 0; k < held.cycles; ++k)
      held.signals[*cfg.reset_signal][k] = Value{k < 3 ? 0u : 1u};
    probes.push_back(std::move(held));

    // Reset dropped for two cycles in the middle of the window.
    Trace drop = blank_trace(widths, cfg);
    for (const auto& [name, w] : widths) {
      if (name == cfg.clock) continue;
      fill_signal(drop, name, w);
    }
    int mid = std::max(1, drop.cycles / 2);
    for (int k = 0; k < drop.cycles; ++k) {
      bool low = k == mid || k == std::min(drop.cycles - 1, mid + 1);
      drop.signals[*cfg.reset_signal][k] = Value{low ? 0u : 1u};
    }
    probes.push_back(std::move(drop));
  }
  return probes;
}

}  // namespace svagen::trace
