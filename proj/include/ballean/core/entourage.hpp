#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ballean/core/window.hpp"

namespace ballean {

/// A binary relation on a window, stored as its family of balls E[x].
///
/// Entourages of a coarse structure contain the diagonal; construction does
/// not enforce it so that presentations can be validated and violations
/// reported instead of thrown.
class Entourage {
 public:
  Entourage(WindowPtr window, std::vector<PointSet> balls);

  static Entourage diagonal(WindowPtr window);
  static Entourage full(WindowPtr window);
  /// Relation holding the listed pairs, plus the diagonal when requested.
  static Entourage from_pairs(WindowPtr window,
                              std::span<const std::pair<PointIndex, PointIndex>> pairs,
                              bool add_diagonal = true);

  const Window& window() const noexcept { return *window_; }
  const WindowPtr& window_ptr() const noexcept { return window_; }
  std::size_t size() const noexcept { return balls_.size(); }

  bool contains(PointIndex x, PointIndex y) const { return balls_.at(x).contains(y); }
  /// E[x] = { y : (x, y) in E }.
  const PointSet& ball(PointIndex x) const { return balls_.at(x); }
  const std::vector<PointSet>& balls() const noexcept { return balls_; }

  bool is_reflexive() const noexcept;
  bool is_symmetric() const;
  bool subset_of(const Entourage& other) const;
  std::size_t pair_count() const noexcept;
  std::vector<std::pair<PointIndex, PointIndex>> pairs() const;

  friend bool operator==(const Entourage& a, const Entourage& b) {
    return a.window_->same_points(*b.window_) && a.balls_ == b.balls_;
  }

 private:
  WindowPtr window_;
  std::vector<PointSet> balls_;
};

/// E o F = { (x, y) : exists z with (x, z) in E and (z, y) in F }.
/// Ball-wise: (E o F)[x] is the F-ball of the E-ball of x.
Entourage compose(const Entourage& e, const Entourage& f);
Entourage inverse(const Entourage& e);
Entourage unite(const Entourage& e, const Entourage& f);
Entourage intersect(const Entourage& e, const Entourage& f);
/// E restricted to S x S.
Entourage restrict_to(const Entourage& e, const PointSet& s);

/// E[A] = union of E[a] over a in A.
PointSet ball(const Entourage& e, const PointSet& a);

}  // namespace ballean
