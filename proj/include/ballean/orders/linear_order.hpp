#pragma once

#include <optional>
#include <vector>

#include "ballean/core/window.hpp"

namespace ballean {

/// Adjacent markers l < r cutting an order into X_l = (-inf, l] and
/// X_r = [r, +inf).
struct Split {
  PointIndex l = 0;
  PointIndex r = 0;
  friend bool operator==(const Split&, const Split&) = default;
};

/// A total order on a window, stored as a rank bijection.
class LinearOrder {
 public:
  /// `sequence` lists every window point from smallest to largest.
  LinearOrder(WindowPtr window, std::vector<PointIndex> sequence,
              std::optional<Split> split = std::nullopt);

  /// The window's enumeration order.
  static LinearOrder canonical(WindowPtr window);

  const Window& window() const noexcept { return *window_; }
  const WindowPtr& window_ptr() const noexcept { return window_; }
  std::size_t size() const noexcept { return sequence_.size(); }

  std::size_t rank(PointIndex x) const { return rank_.at(x); }
  PointIndex at(std::size_t rank) const { return sequence_.at(rank); }
  const std::vector<PointIndex>& sequence() const noexcept { return sequence_; }

  bool less(PointIndex x, PointIndex y) const { return rank(x) < rank(y); }

  const std::optional<Split>& split() const noexcept { return split_; }
  LinearOrder with_split(Split split) const;
  LinearOrder without_split() const;
  /// Same order over a window with different interior flags.
  LinearOrder on_window(WindowPtr window) const;
  LinearOrder reversed() const;

  /// [a, b] = { x : a <= x <= b }; empty when b < a.
  PointSet interval(PointIndex a, PointIndex b) const;
  /// X_l and X_r; throws StructuralError without a split.
  PointSet left_part() const;
  PointSet right_part() const;

  /// Order-least and order-greatest members of a nonempty set.
  PointIndex min_of(const PointSet& s) const;
  PointIndex max_of(const PointSet& s) const;

 private:
  WindowPtr window_;
  std::vector<PointIndex> sequence_;
  std::vector<std::size_t> rank_;
  std::optional<Split> split_;
};

}  // namespace ballean
