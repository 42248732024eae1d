#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ballean/core/entourage.hpp"
#include "ballean/core/selector.hpp"

namespace ballean {

using PointPair = std::pair<PointIndex, PointIndex>;

/// A finite instance of "close sets must get close values": one variable per
/// 2-subset, taking one of its two points.
class ConstraintScenario {
 public:
  /// Pairs are normalized to (smaller index, larger index). closeness[i] is
  /// the set of pair indices close to pair i. Throws StructuralError when
  /// pairs repeat or degenerate, or when either relation is not reflexive
  /// and symmetric.
  ConstraintScenario(WindowPtr window, std::vector<PointPair> pairs, std::vector<PointSet> closeness,
                     Entourage requirement);

  const Window& window() const noexcept { return *window_; }
  const WindowPtr& window_ptr() const noexcept { return window_; }
  std::size_t pair_count() const noexcept { return pairs_.size(); }
  const std::vector<PointPair>& pairs() const noexcept { return pairs_; }
  const PointPair& pair(std::size_t i) const { return pairs_.at(i); }
  /// The two candidate values of pair i, canonical order.
  std::array<PointIndex, 2> values(std::size_t i) const { return {pairs_[i].first, pairs_[i].second}; }
  bool close(std::size_t i, std::size_t j) const { return closeness_.at(i).contains(j); }
  const PointSet& neighbours(std::size_t i) const { return closeness_.at(i); }
  const Entourage& requirement() const noexcept { return requirement_; }
  bool allowed(PointIndex v, PointIndex w) const { return requirement_.contains(v, w); }

 private:
  WindowPtr window_;
  std::vector<PointPair> pairs_;
  std::vector<PointSet> closeness_;
  Entourage requirement_;
};

/// A close pair of scenario pairs (by index) whose chosen values are not
/// allowed, or whose choice is missing or outside the pair.
struct ScenarioViolation {
  std::size_t first = 0;
  std::size_t second = 0;
};

/// Direct constraint check of a 2-selector against the scenario; empty when
/// every constraint holds.
std::optional<ScenarioViolation> check_two_selector_against_scenario(const ConstraintScenario& sc,
                                                                      const SelectorMap& f);

}  // namespace ballean
