#include "ballean/search/generators.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <string>

#include "ballean/core/error.hpp"
#include "ballean/orders/constructions.hpp"

namespace ballean {

namespace {

PointSet interior_by(std::size_t n, const auto& keep) {
  PointSet out(n);
  for (PointIndex i = 0; i < n; ++i) {
    if (keep(i)) out.insert(i);
  }
  return out;
}

}  // namespace

WindowPtr line_window(std::size_t n, std::size_t margin) {
  std::vector<std::string> ids;
  std::vector<Coordinates> coords;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(std::to_string(i));
    coords.push_back({static_cast<std::int64_t>(i)});
  }
  auto interior = interior_by(n, [&](PointIndex i) { return i >= margin && i + margin < n; });
  return std::make_shared<const Window>(std::move(ids), std::move(interior), std::move(coords));
}

WindowPtr grid_window(std::size_t columns, std::size_t rows, std::size_t margin) {
  std::vector<std::string> ids;
  std::vector<Coordinates> coords;
  PointSet interior(columns * rows);
  for (std::size_t y = 0; y < rows; ++y) {
    for (std::size_t x = 0; x < columns; ++x) {
      if (x >= margin && x + margin < columns && y >= margin && y + margin < rows) interior.insert(ids.size());
      ids.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
      coords.push_back({static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)});
    }
  }
  return std::make_shared<const Window>(std::move(ids), std::move(interior), std::move(coords));
}

std::int64_t sup_distance(const Coordinates& a, const Coordinates& b) {
  if (a.size() != b.size()) throw StructuralError("coordinates of different dimension");
  std::int64_t d = 0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

CoarsePresentation sup_metric_presentation(const WindowPtr& window, const std::vector<std::int64_t>& radii) {
  if (!window->has_coordinates()) throw StructuralError("metric presentation needs point coordinates");
  const auto n = window->size();
  std::vector<Entourage> base;
  std::vector<std::string> labels;
  for (const auto r : radii) {
    if (r < 0) throw StructuralError("negative radius");
    std::vector<PointSet> balls(n, PointSet(n));
    for (PointIndex x = 0; x < n; ++x) {
      for (PointIndex y = 0; y < n; ++y) {
        if (sup_distance(window->coordinates(x), window->coordinates(y)) <= r) balls[x].insert(y);
      }
    }
    base.emplace_back(window, std::move(balls));
    labels.push_back("r=" + std::to_string(r));
  }
  return CoarsePresentation(window, std::move(base), std::move(labels));
}

ConstraintScenario antipodal_grid_scenario(std::int64_t n) {
  if (n < 1) throw StructuralError("grid scenario needs n >= 1");
  const auto reach = n + 1;
  std::vector<std::string> ids;
  std::vector<Coordinates> coords;
  for (std::int64_t x1 = -reach; x1 <= reach; ++x1) {
    for (std::int64_t x2 = -reach; x2 <= reach; ++x2) {
      ids.push_back("(" + std::to_string(x1) + "," + std::to_string(x2) + ")");
      coords.push_back({x1, x2});
    }
  }
  const auto size = ids.size();
  const Coordinates origin{0, 0};
  auto interior = interior_by(size, [&](PointIndex i) { return sup_distance(coords[i], origin) <= n; });
  auto window = std::make_shared<const Window>(std::move(ids), std::move(interior), coords);

  auto index_of = [&](const Coordinates& c) { return window->index_of("(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")"); };
  std::vector<PointPair> pairs;
  std::vector<Coordinates> reps;
  for (PointIndex i = 0; i < size; ++i) {
    if (sup_distance(coords[i], origin) != n) continue;
    const Coordinates neg{-coords[i][0], -coords[i][1]};
    const auto j = index_of(neg);
    if (j < i) continue;
    pairs.emplace_back(i, j);
    reps.push_back(coords[i]);
  }

  const auto m = pairs.size();
  std::vector<PointSet> closeness(m, PointSet(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Coordinates neg{-reps[b][0], -reps[b][1]};
      if (sup_distance(reps[a], reps[b]) <= 1 || sup_distance(reps[a], neg) <= 1) closeness[a].insert(b);
    }
  }
  std::vector<PointSet> allowed(size, PointSet(size));
  for (PointIndex u = 0; u < size; ++u) {
    for (PointIndex v = 0; v < size; ++v) {
      if (sup_distance(coords[u], coords[v]) <= n) allowed[u].insert(v);
    }
  }
  return ConstraintScenario(window, std::move(pairs), std::move(closeness), Entourage(window, std::move(allowed)));
}

double ngon_side_length(std::size_t n) { return 2.0 * std::sin(std::numbers::pi / static_cast<double>(n)); }

ConstraintScenario ngon_scenario(std::size_t n, double delta, double epsilon) {
  if (n < 4 || n % 2 != 0) throw StructuralError("n-gon scenario needs an even n >= 4");
  if (!(delta > 0) || !(epsilon > 0)) throw StructuralError("n-gon thresholds must be positive");
  constexpr double kScale = 1e6;
  std::vector<std::string> ids;
  std::vector<Coordinates> coords;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    ids.push_back("v" + std::to_string(k));
    coords.push_back({std::llround(std::cos(t) * kScale), std::llround(std::sin(t) * kScale)});
  }
  auto window = std::make_shared<const Window>(std::move(ids), PointSet::full(n), coords);

  auto dist2 = [](const Coordinates& a, const Coordinates& b) {
    const auto dx = a[0] - b[0];
    const auto dy = a[1] - b[1];
    return dx * dx + dy * dy;
  };
  auto within = [&](std::int64_t d2, double t) {
    const auto limit = std::llround(t * kScale) + 1;
    return d2 <= limit * limit;
  };

  const auto half = n / 2;
  std::vector<PointPair> pairs;
  for (std::size_t k = 0; k < half; ++k) pairs.emplace_back(k, k + half);
  std::vector<PointSet> closeness(half, PointSet(half));
  for (std::size_t a = 0; a < half; ++a) {
    for (std::size_t b = 0; b < half; ++b) {
      const auto hausdorff2 = std::min(dist2(coords[a], coords[b]), dist2(coords[a], coords[b + half]));
      if (within(hausdorff2, delta)) closeness[a].insert(b);
    }
  }
  std::vector<PointSet> allowed(n, PointSet(n));
  for (PointIndex u = 0; u < n; ++u) {
    for (PointIndex v = 0; v < n; ++v) {
      if (within(dist2(coords[u], coords[v]), epsilon)) allowed[u].insert(v);
    }
  }
  return ConstraintScenario(window, std::move(pairs), std::move(closeness), Entourage(window, std::move(allowed)));
}

OrdinalSumWindow ordinal_sum_window(std::size_t m, std::size_t k) {
  if (m < 1 || k < 1) throw StructuralError("ordinal sum needs m, k >= 1");
  std::vector<std::string> ids;
  for (std::size_t i = m; i-- > 0;) ids.push_back("l" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i) ids.push_back("r" + std::to_string(i));
  auto window = make_window(std::move(ids));
  auto order = LinearOrder::canonical(window).with_split(Split{m - 1, m});
  auto born = interval_bornology(order);
  return OrdinalSumWindow{window, std::move(order), std::move(born)};
}

CoarsePresentation graph_path_scenario(const WindowPtr& window, const std::vector<PointPair>& edges,
                                       const std::vector<std::size_t>& scales) {
  const auto n = window->size();
  std::vector<std::vector<PointIndex>> adj(n);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw StructuralError("graph edge outside the window");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  constexpr auto kUnreached = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kUnreached));
  for (PointIndex s = 0; s < n; ++s) {
    std::deque<PointIndex> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto y : adj[x]) {
        if (dist[s][y] != kUnreached) continue;
        dist[s][y] = dist[s][x] + 1;
        queue.push_back(y);
      }
    }
    for (PointIndex y = 0; y < n; ++y) {
      if (dist[s][y] == kUnreached) {
        throw StructuralError("graph is not connected: no path from " + window->id(s) + " to " + window->id(y));
      }
    }
  }
  std::vector<Entourage> base;
  std::vector<std::string> labels;
  for (const auto s : scales) {
    std::vector<PointSet> balls(n, PointSet(n));
    for (PointIndex x = 0; x < n; ++x) {
      for (PointIndex y = 0; y < n; ++y) {
        if (dist[x][y] <= s) balls[x].insert(y);
      }
    }
    base.emplace_back(window, std::move(balls));
    labels.push_back("d<=" + std::to_string(s));
  }
  return CoarsePresentation(window, std::move(base), std::move(labels));
}

}  // namespace ballean
