#include "powerindex/wave.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "powerindex/error.hpp"
#include "powerindex/generators.hpp"
#include "powerindex/rule90.hpp"

namespace powerindex {

namespace {

bool same_parity(const std::vector<int>& columns) {
  return std::all_of(columns.begin(), columns.end(), [&](int c) {
    return (c - columns.front()) % 2 == 0;
  });
}

Strategy base_strategy(int row, bool swapped) {
  const bool collaborates = (row == 1) != swapped;
  return collaborates ? Strategy::kCollaborator : Strategy::kDefector;
}

}  // namespace

std::string_view to_string(WaveFlavor f) {
  switch (f) {
    case WaveFlavor::kBase:
      return "base";
    case WaveFlavor::kCWave:
      return "C-wave";
    case WaveFlavor::kDWave:
      return "D-wave";
  }
  return "?";
}

WaveDescriptor make_wave_descriptor(int n, int row, std::vector<int> columns) {
  std::sort(columns.begin(), columns.end());
  if (std::adjacent_find(columns.begin(), columns.end()) != columns.end()) {
    throw InvalidWaveError("interrupter columns must be distinct");
  }
  for (int c : columns) {
    if (c < 0 || c >= n) {
      throw InvalidWaveError("interrupter column " + std::to_string(c) +
                             " outside 0.." + std::to_string(n - 1));
    }
  }
  if (!same_parity(columns)) {
    throw InvalidWaveError("interrupter columns must share parity");
  }
  if (columns.empty()) return WaveDescriptor{n, 0, {}, WaveFlavor::kBase};
  if (row != 1 && row != 2) throw InvalidWaveError("wave row must be 1 or 2");
  // Flipping the defecting row 2 of W creates collaborating interrupters.
  const WaveFlavor flavor = row == 2 ? WaveFlavor::kCWave : WaveFlavor::kDWave;
  return WaveDescriptor{n, row, std::move(columns), flavor};
}

Configuration base_wave(int n, int ell) {
  const Graph g = make_hnl(n, ell);  // validates sizes
  const HnlLayout layout{n, ell};
  Configuration c(g.vertex_count());
  for (int i = 0; i < n; ++i) {
    c.set(layout.ring(i, 1), Strategy::kCollaborator);
    for (int slot = 0; slot < ell; ++slot) {
      c.set(layout.clique(i, 1, slot), Strategy::kCollaborator);
    }
  }
  return c;
}

Configuration wave_from_interrupters(int n, int ell, const WaveDescriptor& d) {
  if (d.n != n) throw InvalidWaveError("descriptor ring length mismatch");
  if (d.swapped_base) {
    throw InvalidWaveError("descriptor is relative to complement(W)");
  }
  const WaveDescriptor canonical =
      make_wave_descriptor(n, d.row, d.interrupter_columns);
  if (canonical.flavor != d.flavor) {
    throw InvalidWaveError("flavor " + std::string(to_string(d.flavor)) +
                           " inconsistent with row " + std::to_string(d.row));
  }
  Configuration c = base_wave(n, ell);
  const HnlLayout layout{n, ell};
  for (int column : canonical.interrupter_columns) {
    c.flip(layout.ring(column, canonical.row));
  }
  return c;
}

std::optional<WaveDescriptor> detect_interrupters(const Graph& g,
                                                  const Configuration& c) {
  c.require_fits(g);
  std::vector<std::pair<VertexId, HnlLabel>> hvertices;
  int n = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (const auto* label = std::get_if<HnlLabel>(&g.label(v))) {
      hvertices.emplace_back(v, *label);
      n = std::max(n, label->column + 1);
    }
  }
  if (hvertices.empty()) {
    throw LabelError("graph carries no ring-ladder (H) labels");
  }

  for (const bool swapped : {false, true}) {
    bool cliques_match = true;
    std::set<int> rows;
    std::vector<int> columns;
    for (const auto& [v, label] : hvertices) {
      const bool matches = c.at(v) == base_strategy(label.row, swapped);
      if (label.role != HnlRole::kCycle) {
        if (!matches) {
          cliques_match = false;
          break;
        }
      } else if (!matches) {
        rows.insert(label.row);
        columns.push_back(label.column);
      }
    }
    if (!cliques_match) continue;

    WaveDescriptor d;
    d.n = n;
    d.swapped_base = swapped;
    if (columns.empty()) return d;
    std::sort(columns.begin(), columns.end());
    if (rows.size() != 1 || !same_parity(columns)) return std::nullopt;
    d.row = *rows.begin();
    d.interrupter_columns = std::move(columns);
    d.flavor = opposite(base_strategy(d.row, swapped)) == Strategy::kCollaborator
                   ? WaveFlavor::kCWave
                   : WaveFlavor::kDWave;
    return d;
  }
  return std::nullopt;
}

std::vector<std::optional<WaveDescriptor>> wave_trace(
    const Graph& g, const Configuration& c0, const Rational& w,
    std::size_t steps, ThresholdMode mode) {
  std::vector<std::optional<WaveDescriptor>> out;
  out.reserve(steps + 1);
  Configuration c = c0;
  out.push_back(detect_interrupters(g, c));
  for (std::size_t t = 0; t < steps; ++t) {
    c = step(g, c, w, mode);
    out.push_back(detect_interrupters(g, c));
  }
  return out;
}

Rule90Equivalence verify_rule90_equivalence(int n, int ell, std::size_t steps,
                                             ThresholdMode mode) {
  const Graph g = make_hnl(n, ell);
  Configuration c = wave_from_interrupters(
      n, ell, make_wave_descriptor(n, 2, {0}));
  CAState cells = CAState::single_seed(static_cast<std::size_t>(n));
  const Rational half(1, 2);

  Rule90Equivalence report;
  report.n = n;
  report.steps = steps;
  for (std::size_t t = 0; t <= steps; ++t) {
    if (t > 0) {
      c = step(g, c, half, mode);
      cells = rule90_step(cells);
    }
    auto wave = detect_interrupters(g, c);
    report.process_trace.push_back(wave);
    const std::vector<int> live = cells.live_cells();
    if (!wave || wave->interrupter_columns != live) {
      report.equal = false;
      report.divergence = Rule90Divergence{
          t,
          wave ? std::optional<std::vector<int>>(wave->interrupter_columns)
               : std::nullopt,
          live};
      break;
    }
  }
  return report;
}

}  // namespace powerindex
