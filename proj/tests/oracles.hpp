#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// shares code with the library's search routines.

#include "plcbound/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace plcbound::oracle {

/// Enumerates every choice vector (list color or uncolored) and returns the
/// largest number of colored vertices in a proper coloring.
inline int naive_max_partial(const Graph& g, const ListAssignment& lists) {
  const int n = g.order();
  std::vector<int> pick(static_cast<std::size_t>(n), 0);  // 0 = uncolored, k = k-th color
  int best = 0;
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : g.edges()) {
      if (pick[u] && pick[v] && lists.list(u)[pick[u] - 1] == lists.list(v)[pick[v] - 1]) {
        proper = false;
        break;
      }
    }
    if (proper) {
      best = std::max(best, static_cast<int>(std::count_if(pick.begin(), pick.end(), [](int p) { return p > 0; })));
    }
    int i = 0;
    while (i < n && pick[i] == static_cast<int>(lists.list(i).size())) pick[i++] = 0;
    if (i == n) break;
    ++pick[i];
  }
  return best;
}

inline bool naive_colorable(const Graph& g, const ListAssignment& lists) {
  return naive_max_partial(g, lists) == g.order();
}

/// All sorted k-subsets of {1..palette}.
inline std::vector<std::vector<Color>> subsets(int palette, int k) {
  std::vector<std::vector<Color>> out;
  std::vector<bool> mask(static_cast<std::size_t>(palette), false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<Color> s;
    for (int i = 0; i < palette; ++i) {
      if (mask[static_cast<std::size_t>(i)]) s.push_back(i + 1);
    }
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Calls visit on every assignment of k-subsets of {1..palette} to the n vertices.
inline void for_each_assignment(int n, int palette, int k, const std::function<void(const ListAssignment&)>& visit) {
  const auto choices = subsets(palette, k);
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<std::vector<Color>> lists;
    for (int v = 0; v < n; ++v) lists.push_back(choices[idx[v]]);
    visit(ListAssignment(std::move(lists)));
    int i = 0;
    while (i < n && idx[i] + 1 == choices.size()) idx[i++] = 0;
    if (i == n) break;
    ++idx[i];
  }
}

inline int naive_lambda(const Graph& g, int t, int palette) {
  int best = g.order();
  for_each_assignment(g.order(), palette, t, [&](const ListAssignment& l) {
    best = std::min(best, naive_max_partial(g, l));
  });
  return best;
}

inline bool naive_choosable(const Graph& g, int s, int palette) {
  bool ok = true;
  for_each_assignment(g.order(), palette, s, [&](const ListAssignment& l) {
    if (ok && !naive_colorable(g, l)) ok = false;
  });
  return ok;
}

/// max over vertex subsets S of the minimum degree inside S.
inline int brute_degeneracy(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int min_deg = n;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1u)) continue;
      int d = 0;
      for (int w : g.neighbors(v)) d += (mask >> w & 1u) ? 1 : 0;
      min_deg = std::min(min_deg, d);
    }
    best = std::max(best, min_deg);
  }
  return best;
}

/// Bisection on a decreasing function with f(lo) > 0 > f(hi).
template <typename F>
long double bisect_decreasing(F f, long double lo, long double hi, int steps = 200) {
  for (int i = 0; i < steps; ++i) {
    const long double mid = (lo + hi) / 2;
    if (f(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace plcbound::oracle
