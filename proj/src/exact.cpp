#include "plcbound/exact.hpp"

#include "plcbound/errors.hpp"

#include <algorithm>
#include <numeric>

namespace plcbound {

namespace {

constexpr Color kNone = -1;

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void tick() {
    if (++used_ > limit_) throw ResourceExhausted(limit_);
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

bool color_free(const Graph& g, const std::vector<Color>& col, int v, Color c) {
  for (int w : g.neighbors(v)) {
    if (col[static_cast<std::size_t>(w)] == c) return false;
  }
  return true;
}

// Iterative backtracking over `order`. `col` must be kNone on the vertices of
// `order` and on every vertex that should be ignored.
bool backtrack_coloring(const Graph& g, std::span<const std::vector<Color>> lists,
                        std::span<const int> order, std::vector<Color>& col, Budget& budget) {
  const int k = static_cast<int>(order.size());
  std::vector<int> choice(static_cast<std::size_t>(k), -1);
  int pos = 0;
  while (pos >= 0 && pos < k) {
    const int v = order[static_cast<std::size_t>(pos)];
    const auto& list = lists[static_cast<std::size_t>(v)];
    int& idx = choice[static_cast<std::size_t>(pos)];
    col[static_cast<std::size_t>(v)] = kNone;
    bool placed = false;
    for (++idx; idx < static_cast<int>(list.size()); ++idx) {
      budget.tick();
      const Color c = list[static_cast<std::size_t>(idx)];
      if (color_free(g, col, v, c)) {
        col[static_cast<std::size_t>(v)] = c;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++pos;
    } else {
      idx = -1;
      --pos;
    }
  }
  return pos == k;
}

bool prefix_colorable(const Graph& g, std::span<const std::vector<Color>> lists, Budget& budget) {
  std::vector<Color> col(static_cast<std::size_t>(g.order()), kNone);
  std::vector<int> order(lists.size());
  std::iota(order.begin(), order.end(), 0);
  return backtrack_coloring(g, lists, order, col, budget);
}

// Branch and bound on vertices 0..k-1 where k = lists.size().
class MaxPartialSearch {
 public:
  MaxPartialSearch(const Graph& g, std::span<const std::vector<Color>> lists, Budget& budget)
      : g_(g), lists_(lists), budget_(budget), k_(static_cast<int>(lists.size())),
        col_(static_cast<std::size_t>(g.order()), kNone) {}

  int run() {
    search(0, 0);
    return best_;
  }

  const std::vector<Color>& best_coloring() const { return best_col_; }

 private:
  bool search(int v, int colored) {
    budget_.tick();
    if (colored + (k_ - v) <= best_) return false;
    if (v == k_) {
      best_ = colored;
      best_col_ = col_;
      return best_ == k_;
    }
    for (Color c : lists_[static_cast<std::size_t>(v)]) {
      if (!color_free(g_, col_, v, c)) continue;
      col_[static_cast<std::size_t>(v)] = c;
      const bool done = search(v + 1, colored + 1);
      col_[static_cast<std::size_t>(v)] = kNone;
      if (done) return true;
    }
    return search(v + 1, colored);
  }

  const Graph& g_;
  std::span<const std::vector<Color>> lists_;
  Budget& budget_;
  int k_;
  std::vector<Color> col_;
  int best_ = -1;
  std::vector<Color> best_col_;
};

PartialColoring to_partial(const std::vector<Color>& col, int n) {
  PartialColoring out(n);
  for (int v = 0; v < n; ++v) {
    if (col[static_cast<std::size_t>(v)] != kNone) out.set(v, col[static_cast<std::size_t>(v)]);
  }
  return out;
}

void check_lists(const Graph& g, const ListAssignment& lists) {
  if (lists.vertex_count() != g.order()) {
    throw InvalidParameters("list assignment covers " + std::to_string(lists.vertex_count()) +
                            " vertices, graph has " + std::to_string(g.order()));
  }
}

// Canonical t-lists for the next vertex given the largest label used so far,
// in lexicographic order.
std::vector<std::vector<Color>> canonical_lists(int t, int max_used, int cap) {
  const int top = std::min(max_used + t, cap);
  std::vector<std::vector<Color>> out;
  if (top < t) return out;
  std::vector<Color> comb(static_cast<std::size_t>(t));
  std::iota(comb.begin(), comb.end(), 1);
  while (true) {
    // New labels must be exactly max_used+1 .. max_used+j.
    bool canonical = true;
    Color expect = max_used + 1;
    for (Color c : comb) {
      if (c > max_used) {
        if (c != expect) {
          canonical = false;
          break;
        }
        ++expect;
      }
    }
    if (canonical) out.push_back(comb);
    int i = t - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == top - (t - 1 - i)) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

class CanonicalEnumerator {
 public:
  CanonicalEnumerator(int n, int t, int cap, const PrefixVisitor& visit)
      : n_(n), t_(t), cap_(cap), visit_(visit) {
    prefix_.reserve(static_cast<std::size_t>(n));
  }

  std::uint64_t run() {
    if (n_ > 0) descend(0);
    return complete_;
  }

 private:
  // Returns false when the visitor asked to stop.
  bool descend(int max_used) {
    for (auto& list : canonical_lists(t_, max_used, cap_)) {
      const int next_max = std::max(max_used, list.back());
      prefix_.push_back(std::move(list));
      const bool full = static_cast<int>(prefix_.size()) == n_;
      if (full) ++complete_;
      const Visit action = visit_(prefix_);
      bool keep_going = action != Visit::Stop;
      if (keep_going && action == Visit::Descend && !full) keep_going = descend(next_max);
      prefix_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  int n_;
  int t_;
  int cap_;
  const PrefixVisitor& visit_;
  std::vector<std::vector<Color>> prefix_;
  std::uint64_t complete_ = 0;
};

int resolve_cap(int n, int list_size, int requested) {
  const int cap = requested > 0 ? requested : std::max(1, n * list_size);
  if (cap < list_size) {
    throw InvalidParameters("palette cap " + std::to_string(cap) + " is smaller than list size " +
                            std::to_string(list_size));
  }
  return cap;
}

std::vector<Color> iota_list(int k) {
  std::vector<Color> l(static_cast<std::size_t>(k));
  std::iota(l.begin(), l.end(), 1);
  return l;
}

}  // namespace

std::optional<PartialColoring> find_list_coloring(const Graph& g, const ListAssignment& lists,
                                                  const ColoringSearch& search) {
  check_lists(g, lists);
  std::vector<int> order = search.order;
  if (order.empty()) {
    order.resize(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
  } else if (static_cast<int>(order.size()) != g.order()) {
    throw InvalidParameters("vertex order must list every vertex once");
  }
  Budget budget(search.node_budget);
  std::vector<Color> col(static_cast<std::size_t>(g.order()), kNone);
  if (!backtrack_coloring(g, lists.lists(), order, col, budget)) return std::nullopt;
  return to_partial(col, g.order());
}

MaxPartialResult max_partial_colorable(const Graph& g, const ListAssignment& lists,
                                       std::uint64_t node_budget) {
  check_lists(g, lists);
  Budget budget(node_budget);
  MaxPartialSearch search(g, lists.lists(), budget);
  MaxPartialResult out;
  out.count = search.run();
  out.coloring = to_partial(search.best_coloring(), g.order());
  return out;
}

int chromatic_number(const Graph& g, std::uint64_t node_budget) {
  if (g.order() == 0) return 0;
  for (int k = 1;; ++k) {
    const auto lists = ListAssignment::uniform(g.order(), iota_list(k));
    if (find_list_coloring(g, lists, ColoringSearch{{}, node_budget})) return k;
  }
}

std::uint64_t visit_canonical_assignments(int n, int t, int palette_cap,
                                          const PrefixVisitor& visit) {
  if (n < 0 || t < 1) throw InvalidParameters("enumeration needs n >= 0 and t >= 1");
  if (palette_cap < t) throw InvalidParameters("palette cap is smaller than the list size");
  return CanonicalEnumerator(n, t, palette_cap, visit).run();
}

ChoosabilityResult is_s_choosable(const Graph& g, int s, const EnumerationOptions& options) {
  if (s < 1) throw InvalidParameters("choosability needs s >= 1");
  const int n = g.order();
  const int cap = resolve_cap(n, s, options.palette_cap);
  ChoosabilityResult out;
  if (n == 0) {
    out.ok = true;
    out.method = "enumeration";
    return out;
  }
  if (options.use_shortcuts) {
    if (s >= degeneracy_bound(g)) {
      out.ok = true;
      out.method = "degeneracy";
      return out;
    }
    if (s < chromatic_number(g, options.node_budget)) {
      out.ok = false;
      out.bad = ListAssignment::uniform(n, iota_list(s));
      out.method = "chromatic";
      return out;
    }
  }

  out.method = "enumeration";
  Budget budget(options.node_budget);
  std::optional<std::vector<std::vector<Color>>> bad;
  const PrefixVisitor visit = [&](std::span<const std::vector<Color>> prefix) {
    budget.tick();
    if (prefix_colorable(g, prefix, budget)) return Visit::Descend;
    std::vector<std::vector<Color>> full(prefix.begin(), prefix.end());
    full.resize(static_cast<std::size_t>(n), iota_list(s));
    bad = std::move(full);
    return Visit::Stop;
  };
  out.assignments_checked = visit_canonical_assignments(n, s, cap, visit);
  out.ok = !bad.has_value();
  if (bad) out.bad = ListAssignment(std::move(*bad));
  return out;
}

ChiResult chi_ell(const Graph& g, const EnumerationOptions& options) {
  ChiResult out;
  out.chi = chromatic_number(g, options.node_budget);
  if (g.order() == 0) return out;
  const int upper = degeneracy_bound(g);
  out.chi_ell = upper;
  std::optional<ListAssignment> last_bad;
  for (int s = out.chi; s < upper; ++s) {
    auto r = is_s_choosable(g, s, options);
    if (r.ok) {
      out.chi_ell = s;
      break;
    }
    last_bad = std::move(r.bad);
  }
  if (out.chi_ell == out.chi) {
    if (out.chi >= 2) out.bad_assignment = ListAssignment::uniform(g.order(), iota_list(out.chi - 1));
  } else {
    out.bad_assignment = std::move(last_bad);
  }
  return out;
}

LambdaResult lambda_t(const Graph& g, int t, const EnumerationOptions& options) {
  if (t < 1) throw InvalidParameters("lambda_t needs t >= 1");
  const int n = g.order();
  const int cap = resolve_cap(n, t, options.palette_cap);
  LambdaResult out;
  if (n == 0) return out;

  Budget budget(options.node_budget);
  int best = n + 1;
  const PrefixVisitor visit = [&](std::span<const std::vector<Color>> prefix) {
    budget.tick();
    MaxPartialSearch search(g, prefix, budget);
    const int value = search.run();
    if (static_cast<int>(prefix.size()) < n) {
      return value >= best ? Visit::Prune : Visit::Descend;
    }
    if (value < best) {
      best = value;
      out.witness_assignment = ListAssignment(std::vector<std::vector<Color>>(prefix.begin(), prefix.end()));
      out.witness_coloring = to_partial(search.best_coloring(), n);
    }
    return Visit::Descend;
  };
  out.assignments_checked = visit_canonical_assignments(n, t, cap, visit);
  out.value = best;
  return out;
}

}  // namespace plcbound
