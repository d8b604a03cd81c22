#include "intershift/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace intershift::oracle {
namespace {

bool connected_without(const IntersectionGraph& g, std::uint64_t removed) {
  const std::size_t n = g.vertex_count();
  std::size_t start = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (!(removed >> v & 1U)) {
      start = v;
      break;
    }
  }
  if (start == n) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto v : g.neighbors(u)) {
      if (seen[v] || (removed >> v & 1U)) continue;
      seen[v] = true;
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == n - static_cast<std::size_t>(std::popcount(removed));
}

std::vector<std::size_t> sorted_indices(const Collection& c) {
  std::vector<std::size_t> idx(c.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return c[a].center < c[b].center; });
  return idx;
}

// Tiny graphs (n <= 6) as adjacency bitmasks; used by the grid search where
// millions of candidate placements are checked.
struct SmallGraph {
  std::size_t n = 0;
  std::uint32_t adj[8] = {};

  // With `touching` false, intervals that only share an endpoint are not adjacent.
  SmallGraph(std::span<const double> centers, std::span<const double> lengths, bool touching)
      : n(centers.size()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double lo = std::max(centers[i] - lengths[i] / 2, centers[j] - lengths[j] / 2);
        const double hi = std::min(centers[i] + lengths[i] / 2, centers[j] + lengths[j] / 2);
        if (lo < hi || (touching && lo == hi)) {
          adj[i] |= 1U << j;
          adj[j] |= 1U << i;
        }
      }
    }
  }

  bool is_clique(std::uint32_t mask) const {
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v & 1U) && (adj[v] & mask) != (mask & ~(1U << v))) return false;
    }
    return true;
  }

  bool connected(std::uint32_t alive) const {
    if (alive == 0) return true;
    std::uint32_t seen = alive & (~alive + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (frontier >> v & 1U) next |= adj[v] & alive;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == alive;
  }

  std::size_t edges() const {
    std::size_t e = 0;
    for (std::size_t v = 0; v < n; ++v) e += static_cast<std::size_t>(std::popcount(adj[v]));
    return e / 2;
  }

  bool holds(GraphProperty p, std::size_t k) const {
    const std::uint32_t all = (1U << n) - 1;
    switch (p) {
      case GraphProperty::kComplete: return is_clique(all);
      case GraphProperty::kEdgeless: return edges() == 0;
      case GraphProperty::kAcyclic: {
        // A forest has |E| = n - components.
        std::size_t components = 0;
        std::uint32_t left = all;
        while (left) {
          std::uint32_t seen = left & (~left + 1), frontier = seen;
          while (frontier) {
            std::uint32_t next = 0;
            for (std::size_t v = 0; v < n; ++v) {
              if (frontier >> v & 1U) next |= adj[v];
            }
            frontier = next & ~seen;
            seen |= next;
          }
          left &= ~seen;
          ++components;
        }
        return edges() == n - components;
      }
      case GraphProperty::kHasKClique:
      case GraphProperty::kNoKClique: {
        bool found = false;
        for (std::uint32_t m = 0; m <= all && !found; ++m) {
          if (static_cast<std::size_t>(std::popcount(m)) == k && is_clique(m)) found = true;
        }
        return p == GraphProperty::kHasKClique ? found : !found;
      }
      case GraphProperty::kKConnected: {
        if (n <= k) return false;
        for (std::uint32_t m = 0; m <= all; ++m) {
          if (static_cast<std::size_t>(std::popcount(m)) < k && !connected(all & ~m)) return false;
        }
        return true;
      }
    }
    return false;
  }
};

}  // namespace

PointCost oracle_gathering(const Collection& c) {
  if (c.empty()) throw std::invalid_argument("empty instance");
  PointCost best{0.0, std::numeric_limits<double>::infinity()};
  for (double e : c.endpoints()) {
    double d = 0.0;
    for (const auto& it : c.items()) d += moving_distance(it, e);
    if (d < best.cost || (d == best.cost && e < best.point)) best = {e, d};
  }
  return best;
}

SquareOracleResult oracle_squares(std::span<const UnitSquare> squares) {
  if (squares.empty()) throw std::invalid_argument("empty instance");
  std::vector<double> xs, ys;
  for (const auto& s : squares) {
    xs.insert(xs.end(), {s.x - 0.5, s.x + 0.5});
    ys.insert(ys.end(), {s.y - 0.5, s.y + 0.5});
  }
  SquareOracleResult best{{}, std::numeric_limits<double>::infinity()};
  for (double x : xs) {
    for (double y : ys) {
      double d = 0.0;
      for (const auto& s : squares) d += square_moving_distance(s, {x, y});
      if (d < best.cost) best = {{x, y}, d};
    }
  }
  return best;
}

WindowOracleResult oracle_kclique_windows(const Collection& c, std::size_t k) {
  if (k < 1 || k > c.size()) throw std::invalid_argument("k must lie in [1, n]");
  const auto idx = sorted_indices(c);
  WindowOracleResult best{0, 0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t start = 0; start + k <= c.size(); ++start) {
    std::vector<double> pts;
    for (std::size_t j = start; j < start + k; ++j) {
      pts.push_back(c[idx[j]].left());
      pts.push_back(c[idx[j]].right());
    }
    std::sort(pts.begin(), pts.end());
    for (double x : {pts[k - 1], pts[k]}) {
      double d = 0.0;
      for (std::size_t j = start; j < start + k; ++j) d += moving_distance(c[idx[j]], x);
      if (d < best.cost) best = {start + 1, x, d};
    }
  }
  return best;
}

double oracle_kclique_full(const Collection& c, std::size_t k) {
  const std::size_t n = c.size();
  if (n > 12) throw std::invalid_argument("exhaustive k-clique oracle is capped at n = 12");
  if (k < 1 || k > n) throw std::invalid_argument("k must lie in [1, n]");
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(mask >> a & 1U)) continue;
      for (double x : {c[a].left(), c[a].right()}) {
        double d = 0.0;
        for (std::size_t b = 0; b < n; ++b) {
          if (mask >> b & 1U) d += moving_distance(c[b], x);
        }
        best = std::min(best, d);
      }
    }
  }
  return best;
}

std::string to_string(GraphProperty p) {
  switch (p) {
    case GraphProperty::kComplete: return "complete";
    case GraphProperty::kEdgeless: return "edgeless";
    case GraphProperty::kAcyclic: return "acyclic";
    case GraphProperty::kHasKClique: return "has-kclique";
    case GraphProperty::kNoKClique: return "no-kclique";
    case GraphProperty::kKConnected: return "kconnected";
  }
  return "unknown";
}

GraphProperty graph_property_for(Property p) {
  switch (p) {
    case Property::kEdgeless: return GraphProperty::kEdgeless;
    case Property::kAcyclic: return GraphProperty::kAcyclic;
    case Property::kNoKClique: return GraphProperty::kNoKClique;
    case Property::kKConnected: return GraphProperty::kKConnected;
  }
  throw std::invalid_argument("unknown property");
}

CliqueWitness max_clique_sweep(const Collection& c, double tolerance) {
  struct Event {
    double at;
    int delta;
  };
  std::vector<Event> events;
  events.reserve(2 * c.size());
  for (const auto& it : c.items()) {
    events.push_back({it.left(), +1});
    events.push_back({it.right() + tolerance, -1});
  }
  // Closed intervals: openings at a coordinate count before closings there.
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.at < b.at || (a.at == b.at && a.delta > b.delta);
  });
  CliqueWitness w;
  std::size_t live = 0;
  double where = 0.0;
  for (const auto& e : events) {
    live = static_cast<std::size_t>(static_cast<long>(live) + e.delta);
    if (live > w.size) {
      w.size = live;
      where = e.at;
    }
  }
  if (w.size > 0) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].left() <= where && where <= c[i].right() + tolerance) w.members.push_back(i);
    }
  }
  return w;
}

bool k_connected_exhaustive(const IntersectionGraph& g, std::size_t k,
                            std::vector<std::size_t>* separator) {
  const std::size_t n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("exhaustive connectivity check is capped at n = 20");
  if (n <= k) {
    if (separator) separator->clear();
    return false;
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) >= k) continue;
    if (!connected_without(g, mask)) {
      if (separator) {
        separator->clear();
        for (std::size_t v = 0; v < n; ++v) {
          if (mask >> v & 1U) separator->push_back(v);
        }
      }
      return false;
    }
  }
  return true;
}

PropertyReport check_property(const Collection& c, GraphProperty property, std::size_t k,
                              double tolerance) {
  PropertyReport report;
  report.property = to_string(property);
  const std::size_t n = c.size();
  const IntersectionGraph g = build_intersection_graph(c, GraphBuild::kPairwise, tolerance);

  switch (property) {
    case GraphProperty::kComplete: {
      report.holds = true;
      for (std::size_t i = 0; i < n && report.holds; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!g.has_edge(i, j)) {
            report.holds = false;
            report.witness_kind = "pair";
            report.witness = {i, j};
            break;
          }
        }
      }
      break;
    }
    case GraphProperty::kEdgeless: {
      report.holds = g.edge_count() == 0;
      if (!report.holds) {
        const auto e = g.edges().front();
        report.witness_kind = "edge";
        report.witness = {e.first, e.second};
      }
      break;
    }
    case GraphProperty::kAcyclic: {
      // Union-find over edges; the first edge joining an existing component
      // closes a cycle, recovered as the forest path between its ends.
      std::vector<std::size_t> parent(n);
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
      };
      std::vector<std::vector<std::size_t>> forest(n);
      report.holds = true;
      for (const auto& [u, v] : g.edges()) {
        const auto ru = find(u), rv = find(v);
        if (ru != rv) {
          parent[ru] = rv;
          forest[u].push_back(v);
          forest[v].push_back(u);
          continue;
        }
        report.holds = false;
        std::vector<std::size_t> from(n, n);
        std::queue<std::size_t> q;
        q.push(u);
        from[u] = u;
        while (!q.empty()) {
          const auto a = q.front();
          q.pop();
          for (auto b : forest[a]) {
            if (from[b] == n) {
              from[b] = a;
              q.push(b);
            }
          }
        }
        for (std::size_t x = v; x != u; x = from[x]) report.witness.push_back(x);
        report.witness.push_back(u);
        report.witness_kind = "cycle";
        break;
      }
      break;
    }
    case GraphProperty::kHasKClique:
    case GraphProperty::kNoKClique: {
      auto w = max_clique_sweep(c, tolerance);
      const bool has = w.size >= k;
      report.holds = property == GraphProperty::kHasKClique ? has : !has;
      if (has) {
        report.witness_kind = "clique";
        report.witness = std::move(w.members);
      }
      break;
    }
    case GraphProperty::kKConnected: {
      if (n <= 12) {
        std::vector<std::size_t> sep;
        report.holds = k_connected_exhaustive(g, k, &sep);
        if (!report.holds) {
          report.witness_kind = "separator";
          report.witness = std::move(sep);
        }
      } else {
        if (!c.uniform_length() || c[0].length != 1.0) {
          throw std::invalid_argument("k-connectivity above n = 12 needs unit intervals");
        }
        const auto idx = sorted_indices(c);
        report.holds = n > k;
        for (std::size_t i = 0; report.holds && i + k < n; ++i) {
          if (c[idx[i + k]].center - c[idx[i]].center > 1.0 + tolerance) {
            report.holds = false;
            report.witness_kind = "separator";
            for (std::size_t j = i + 1; j < i + k; ++j) report.witness.push_back(idx[j]);
          }
        }
      }
      break;
    }
  }
  return report;
}

GridResult grid_search_lp(const Collection& c, const PropertySpec& spec, GridOptions options) {
  const std::size_t n = c.size();
  if (n == 0) throw std::invalid_argument("empty instance");
  if (n > 4) throw std::invalid_argument("grid search is capped at n = 4");
  const GraphProperty property = graph_property_for(spec.property);
  const std::size_t k = spec.k;
  // Separation properties are open sets whose infimum sits on the boundary
  // where intervals just touch; searching their closure reports that infimum
  // instead of a point one grid step inside.
  const bool touching = spec.property == Property::kKConnected;

  std::vector<double> centers(n), lengths(n), weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    centers[i] = c[i].center;
    lengths[i] = c[i].length;
    weights[i] = c[i].weight;
  }
  auto feasible = [&](const std::vector<double>& d) {
    std::vector<double> moved(n);
    for (std::size_t i = 0; i < n; ++i) moved[i] = centers[i] + d[i];
    return SmallGraph(moved, lengths, touching).holds(property, k);
  };
  auto cost_of = [&](const std::vector<double>& d) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += weights[i] * std::abs(d[i]);
    return s;
  };

  GridResult best;
  best.cost = std::numeric_limits<double>::infinity();
  auto offer = [&](const std::vector<double>& d) {
    for (double v : d) {
      if (std::abs(v) > options.bound) return;
    }
    if (!feasible(d)) return;
    const double cost = cost_of(d);
    if (cost < best.cost) {
      best.cost = cost;
      best.displacements = d;
      best.found = true;
    }
  };

  // Seed the incumbent so pruning bites early.
  {
    const auto idx = sorted_indices(c);
    const double median = centers[idx[(n - 1) / 2]];
    std::vector<double> gather(n), spread(n);
    const double pitch = 1.0 + options.step;
    const double base =
        std::round((median - pitch * static_cast<double>(n - 1) / 2) / options.step) * options.step;
    for (std::size_t r = 0; r < n; ++r) {
      gather[idx[r]] = median - centers[idx[r]];
      spread[idx[r]] = base + pitch * static_cast<double>(r) - centers[idx[r]];
    }
    offer(gather);
    offer(spread);
  }

  // Depth-first over coordinates, each candidate list ordered by |value| so
  // the partial-cost bound can cut the rest of the list.
  std::vector<double> current(n, 0.0);
  std::function<void(std::size_t, double, const std::vector<std::vector<double>>&)> search =
      [&](std::size_t i, double partial, const std::vector<std::vector<double>>& values) {
        if (i == n) {
          if (partial < best.cost && feasible(current)) {
            best.cost = partial;
            best.displacements = current;
            best.found = true;
          }
          return;
        }
        for (double v : values[i]) {
          const double next = partial + weights[i] * std::abs(v);
          if (next >= best.cost) break;
          current[i] = v;
          search(i + 1, next, values);
        }
      };
  auto by_magnitude = [](std::vector<double> v) {
    std::stable_sort(v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    return v;
  };

  {
    std::vector<double> axis;
    const auto steps = static_cast<long>(std::floor(options.bound / options.step));
    for (long t = -steps; t <= steps; ++t) axis.push_back(static_cast<double>(t) * options.step);
    std::vector<std::vector<double>> values(n, by_magnitude(axis));
    search(0, 0.0, values);
  }

  double step = options.step;
  for (int pass = 0; pass < options.refinements && best.found; ++pass) {
    const double fine = step / 4;
    std::vector<std::vector<double>> values(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> axis;
      for (int t = -4; t <= 4; ++t) {
        const double v = best.displacements[i] + t * fine;
        if (std::abs(v) <= options.bound) axis.push_back(v);
      }
      values[i] = by_magnitude(axis);
    }
    search(0, 0.0, values);
    step = fine;
  }
  return best;
}

}  // namespace intershift::oracle
