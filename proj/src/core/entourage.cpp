#include "ballean/core/entourage.hpp"

#include "ballean/core/error.hpp"

namespace ballean {

Entourage::Entourage(WindowPtr window, std::vector<PointSet> balls)
    : window_(std::move(window)), balls_(std::move(balls)) {
  if (!window_) throw StructuralError("entourage without a window");
  if (balls_.size() != window_->size()) {
    throw StructuralError("entourage ball count does not match the window size");
  }
  for (const auto& b : balls_) {
    if (b.universe() != window_->size()) {
      throw StructuralError("entourage ball over a different universe");
    }
  }
}

Entourage Entourage::diagonal(WindowPtr window) {
  const auto n = window->size();
  std::vector<PointSet> balls;
  balls.reserve(n);
  for (PointIndex x = 0; x < n; ++x) balls.push_back(PointSet(n, {x}));
  return Entourage(std::move(window), std::move(balls));
}

Entourage Entourage::full(WindowPtr window) {
  const auto n = window->size();
  return Entourage(window, std::vector<PointSet>(n, PointSet::full(n)));
}

Entourage Entourage::from_pairs(WindowPtr window,
                                std::span<const std::pair<PointIndex, PointIndex>> pairs,
                                bool add_diagonal) {
  const auto n = window->size();
  std::vector<PointSet> balls(n, PointSet(n));
  if (add_diagonal) {
    for (PointIndex x = 0; x < n; ++x) balls[x].insert(x);
  }
  for (const auto& [x, y] : pairs) {
    if (x >= n || y >= n) throw StructuralError("entourage pair outside the window");
    balls[x].insert(y);
  }
  return Entourage(std::move(window), std::move(balls));
}

bool Entourage::is_reflexive() const noexcept {
  for (PointIndex x = 0; x < balls_.size(); ++x) {
    if (!balls_[x].contains(x)) return false;
  }
  return true;
}

bool Entourage::is_symmetric() const {
  for (PointIndex x = 0; x < balls_.size(); ++x) {
    bool ok = true;
    balls_[x].for_each([&](PointIndex y) { ok = ok && balls_[y].contains(x); });
    if (!ok) return false;
  }
  return true;
}

bool Entourage::subset_of(const Entourage& other) const {
  require_same_points(*window_, other.window(), "entourage inclusion");
  for (PointIndex x = 0; x < balls_.size(); ++x) {
    if (!balls_[x].subset_of(other.balls_[x])) return false;
  }
  return true;
}

std::size_t Entourage::pair_count() const noexcept {
  std::size_t n = 0;
  for (const auto& b : balls_) n += b.count();
  return n;
}

std::vector<std::pair<PointIndex, PointIndex>> Entourage::pairs() const {
  std::vector<std::pair<PointIndex, PointIndex>> out;
  for (PointIndex x = 0; x < balls_.size(); ++x) {
    balls_[x].for_each([&](PointIndex y) { out.emplace_back(x, y); });
  }
  return out;
}

Entourage compose(const Entourage& e, const Entourage& f) {
  require_same_points(e.window(), f.window(), "compose");
  const auto n = e.size();
  std::vector<PointSet> balls;
  balls.reserve(n);
  for (PointIndex x = 0; x < n; ++x) balls.push_back(ball(f, e.ball(x)));
  return Entourage(e.window_ptr(), std::move(balls));
}

Entourage inverse(const Entourage& e) {
  const auto n = e.size();
  std::vector<PointSet> balls(n, PointSet(n));
  for (PointIndex x = 0; x < n; ++x) {
    e.ball(x).for_each([&](PointIndex y) { balls[y].insert(x); });
  }
  return Entourage(e.window_ptr(), std::move(balls));
}

Entourage unite(const Entourage& e, const Entourage& f) {
  require_same_points(e.window(), f.window(), "union");
  auto balls = e.balls();
  for (PointIndex x = 0; x < balls.size(); ++x) balls[x] |= f.ball(x);
  return Entourage(e.window_ptr(), std::move(balls));
}

Entourage intersect(const Entourage& e, const Entourage& f) {
  require_same_points(e.window(), f.window(), "intersection");
  auto balls = e.balls();
  for (PointIndex x = 0; x < balls.size(); ++x) balls[x] &= f.ball(x);
  return Entourage(e.window_ptr(), std::move(balls));
}

Entourage restrict_to(const Entourage& e, const PointSet& s) {
  auto balls = e.balls();
  for (PointIndex x = 0; x < balls.size(); ++x) {
    if (s.contains(x)) {
      balls[x] &= s;
    } else {
      balls[x] = PointSet(balls.size());
    }
  }
  return Entourage(e.window_ptr(), std::move(balls));
}

PointSet ball(const Entourage& e, const PointSet& a) {
  if (a.universe() != e.size()) throw StructuralError("point set outside the entourage window");
  PointSet out(e.size());
  a.for_each([&](PointIndex x) { out |= e.ball(x); });
  return out;
}

}  // namespace ballean
