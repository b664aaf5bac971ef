#include "plcbound/scheme.hpp"

#include "plcbound/analytic.hpp"
#include "plcbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace plcbound {

int SchemeState::palette_index(Color c) const {
  const auto it = std::lower_bound(palette.begin(), palette.end(), c);
  if (it == palette.end() || *it != c) return -1;
  return static_cast<int>(it - palette.begin());
}

SchemeState build_scheme(const Graph& g, const ListAssignment& lists, int s,
                         std::uint64_t node_budget) {
  if (lists.vertex_count() != g.order()) {
    throw InvalidParameters("list assignment does not match the graph order");
  }
  const auto t = lists.uniform_size();
  if (!t) throw InvalidParameters("the scheme needs lists of one common size t");
  const BoundParams params(s, *t);

  SchemeState state;
  state.s = s;
  state.t = *t;
  state.u = params.u();
  state.lists = lists;
  state.palette = lists.color_union();
  const Color top = state.palette.back();
  for (int i = 1; i <= state.u; ++i) state.pi_colors.push_back(top + i);

  std::vector<std::vector<Color>> augmented = lists.lists();
  for (auto& l : augmented) l.insert(l.end(), state.pi_colors.begin(), state.pi_colors.end());

  // Smallest-last order: greedy never backtracks once s >= degeneracy + 1.
  auto order = degeneracy_order(g).removal_order;
  std::reverse(order.begin(), order.end());
  const auto phi = find_list_coloring(g, ListAssignment(std::move(augmented)),
                                      ColoringSearch{std::move(order), node_budget});
  if (!phi) {
    throw SchemeInapplicable("no " + std::to_string(s) +
                             "-list coloring of the augmented lists exists; the graph is not " +
                             std::to_string(s) + "-choosable");
  }

  const int n = g.order();
  state.phi.resize(static_cast<std::size_t>(n));
  state.part_of.assign(static_cast<std::size_t>(n), 0);
  state.independent_sets.resize(static_cast<std::size_t>(state.u));
  for (int v = 0; v < n; ++v) {
    const Color c = *phi->get(v);
    state.phi[static_cast<std::size_t>(v)] = c;
    if (c > top) {
      const int i = c - top;
      state.part_of[static_cast<std::size_t>(v)] = i;
      state.independent_sets[static_cast<std::size_t>(i - 1)].push_back(v);
    } else {
      state.core.push_back(v);
    }
  }
  return state;
}

ColorPartition random_partition(const SchemeState& state, double q, std::uint64_t seed) {
  if (!(q > 0.0 && q < 1.0)) throw InvalidParameters("random_partition: q must lie in (0, 1)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double share = (1.0 - q) / state.u;
  ColorPartition out;
  out.class_of.reserve(state.palette.size());
  for (std::size_t k = 0; k < state.palette.size(); ++k) {
    const double r = unit(rng);
    if (r < q) {
      out.class_of.push_back(0);
    } else {
      const int i = 1 + static_cast<int>((r - q) / share);
      out.class_of.push_back(std::min(i, state.u));
    }
  }
  return out;
}

PartialColoring color_from_partition(const SchemeState& state, const ColorPartition& partition) {
  if (partition.class_of.size() != state.palette.size()) {
    throw InvalidParameters("partition does not cover R");
  }
  const int n = static_cast<int>(state.phi.size());
  PartialColoring out(n);
  for (int v = 0; v < n; ++v) {
    const int part = state.part_of[static_cast<std::size_t>(v)];
    if (part == 0) {
      const Color c = state.phi[static_cast<std::size_t>(v)];
      if (partition.class_of[static_cast<std::size_t>(state.palette_index(c))] == 0) out.set(v, c);
      continue;
    }
    for (Color c : state.lists.list(v)) {
      if (partition.class_of[static_cast<std::size_t>(state.palette_index(c))] == part) {
        out.set(v, c);
        break;
      }
    }
  }
  return out;
}

double conditional_expectation(const SchemeState& state, double q, std::span<const int> class_of) {
  if (class_of.size() != state.palette.size()) throw InvalidParameters("partial partition does not cover R");
  const double miss = 1.0 - (1.0 - q) / state.u;
  double total = 0.0;
  for (std::size_t v = 0; v < state.phi.size(); ++v) {
    const int part = state.part_of[v];
    if (part == 0) {
      const int cls = class_of[static_cast<std::size_t>(state.palette_index(state.phi[v]))];
      total += cls < 0 ? q : (cls == 0 ? 1.0 : 0.0);
      continue;
    }
    bool hit = false;
    int undecided = 0;
    for (Color c : state.lists.list(static_cast<int>(v))) {
      const int cls = class_of[static_cast<std::size_t>(state.palette_index(c))];
      if (cls == part) hit = true;
      if (cls < 0) ++undecided;
    }
    total += hit ? 1.0 : 1.0 - std::pow(miss, undecided);
  }
  return total;
}

MonteCarloResult monte_carlo(const Graph& g, const ListAssignment& lists, int s, int trials,
                             std::uint64_t seed, std::uint64_t node_budget) {
  if (trials < 1) throw InvalidParameters("monte_carlo needs at least one trial");
  const SchemeState state = build_scheme(g, lists, s, node_budget);
  MonteCarloResult out;
  out.q = compute_q(BoundParams(state.s, state.t)).q;
  out.trials = trials;
  const double n = g.order();
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int k = 0; k < trials; ++k) {
    const auto partition = random_partition(state, out.q, seed + static_cast<std::uint64_t>(k));
    const double frac = color_from_partition(state, partition).colored_count() / n;
    sum += frac;
    sum_sq += frac * frac;
  }
  out.mean_fraction = sum / trials;
  if (trials > 1) {
    const double var = (sum_sq - trials * out.mean_fraction * out.mean_fraction) / (trials - 1);
    out.stddev = std::sqrt(std::max(0.0, var));
  }
  out.stddev_of_mean = out.stddev / std::sqrt(static_cast<double>(trials));
  return out;
}

bool SchemeOutcome::expectation_monotone() const noexcept {
  return std::all_of(trace.begin(), trace.end(), [](const DerandomizationStep& step) {
    return step.expectation_after >= step.expectation_before - kStepSlack;
  });
}

SchemeOutcome derandomize(const Graph& g, const ListAssignment& lists, int s,
                          std::uint64_t node_budget) {
  const SchemeState state = build_scheme(g, lists, s, node_budget);
  const double q = compute_q(BoundParams(state.s, state.t)).q;
  const double miss = 1.0 - (1.0 - q) / state.u;
  const std::size_t colors = state.palette.size();
  const int n = g.order();

  // Vertices whose contribution depends on each color of R.
  std::vector<std::vector<int>> core_users(colors);
  std::vector<std::vector<int>> list_users(colors);
  for (int v = 0; v < n; ++v) {
    if (state.part_of[static_cast<std::size_t>(v)] == 0) {
      core_users[static_cast<std::size_t>(state.palette_index(state.phi[static_cast<std::size_t>(v)]))].push_back(v);
    } else {
      for (Color c : lists.list(v)) list_users[static_cast<std::size_t>(state.palette_index(c))].push_back(v);
    }
  }
  std::vector<int> undecided(static_cast<std::size_t>(n), state.t);
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  std::vector<int> class_of(colors, -1);

  SchemeOutcome out;
  out.q_used = q;
  out.expected_count = conditional_expectation(state, q, class_of);
  out.guaranteed_count = static_cast<int>(std::ceil(q * n - kGuaranteeSlack));

  double expectation = out.expected_count;
  std::vector<double> delta(static_cast<std::size_t>(state.u) + 1);
  for (std::size_t k = 0; k < colors; ++k) {
    std::fill(delta.begin(), delta.end(), 0.0);
    delta[0] += static_cast<double>(core_users[k].size()) * (1.0 - q);
    for (int j = 1; j <= state.u; ++j) delta[static_cast<std::size_t>(j)] -= static_cast<double>(core_users[k].size()) * q;
    for (int v : list_users[k]) {
      if (hit[static_cast<std::size_t>(v)]) continue;
      const int left = undecided[static_cast<std::size_t>(v)];
      const double before = 1.0 - std::pow(miss, left);
      const double elsewhere = 1.0 - std::pow(miss, left - 1);
      const int part = state.part_of[static_cast<std::size_t>(v)];
      for (int j = 0; j <= state.u; ++j) {
        delta[static_cast<std::size_t>(j)] += (j == part ? 1.0 : elsewhere) - before;
      }
    }
    int best = 0;
    for (int j = 1; j <= state.u; ++j) {
      if (delta[static_cast<std::size_t>(j)] > delta[static_cast<std::size_t>(best)]) best = j;
    }
    class_of[k] = best;
    for (int v : list_users[k]) {
      if (hit[static_cast<std::size_t>(v)]) continue;
      --undecided[static_cast<std::size_t>(v)];
      if (state.part_of[static_cast<std::size_t>(v)] == best) hit[static_cast<std::size_t>(v)] = true;
    }
    const double after = expectation + delta[static_cast<std::size_t>(best)];
    out.trace.push_back(DerandomizationStep{state.palette[k], best, expectation, after});
    expectation = after;
  }

  out.coloring = color_from_partition(state, ColorPartition{class_of});
  out.colored_count = out.coloring.colored_count();
  return out;
}

}  // namespace plcbound
