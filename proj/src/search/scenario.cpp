#include "ballean/search/scenario.hpp"

#include <set>

#include "ballean/core/error.hpp"

namespace ballean {

ConstraintScenario::ConstraintScenario(WindowPtr window, std::vector<PointPair> pairs,
                                       std::vector<PointSet> closeness, Entourage requirement)
    : window_(std::move(window)),
      pairs_(std::move(pairs)),
      closeness_(std::move(closeness)),
      requirement_(std::move(requirement)) {
  if (!window_) throw StructuralError("scenario without a window");
  require_same_points(*window_, requirement_.window(), "scenario requirement");
  const auto n = window_->size();
  std::set<PointPair> seen;
  for (auto& [a, b] : pairs_) {
    if (a >= n || b >= n) throw StructuralError("scenario pair outside the window");
    if (a == b) throw StructuralError("scenario pair {" + window_->id(a) + "} is not a 2-subset");
    if (b < a) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw StructuralError("scenario pair {" + window_->id(a) + "," + window_->id(b) + "} is listed twice");
    }
  }
  const auto m = pairs_.size();
  if (closeness_.size() != m) throw StructuralError("closeness needs one row per pair");
  for (std::size_t i = 0; i < m; ++i) {
    if (closeness_[i].universe() != m) throw StructuralError("closeness row over the wrong universe");
    if (!closeness_[i].contains(i)) throw StructuralError("closeness is not reflexive");
    closeness_[i].for_each([&](std::size_t j) {
      if (!closeness_[j].contains(i)) throw StructuralError("closeness is not symmetric");
    });
  }
  if (!requirement_.is_reflexive()) throw StructuralError("requirement is not reflexive");
  if (!requirement_.is_symmetric()) throw StructuralError("requirement is not symmetric");
}

std::optional<ScenarioViolation> check_two_selector_against_scenario(const ConstraintScenario& sc,
                                                                      const SelectorMap& f) {
  require_same_points(sc.window(), f.window(), "scenario check");
  const auto m = sc.pair_count();
  std::vector<std::optional<PointIndex>> value(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [a, b] = sc.pair(i);
    value[i] = f.choice(a, b);
    if (!value[i] || (*value[i] != a && *value[i] != b)) return ScenarioViolation{i, i};
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::optional<ScenarioViolation> bad;
    sc.neighbours(i).for_each([&](std::size_t j) {
      if (!bad && !sc.allowed(*value[i], *value[j])) bad = ScenarioViolation{i, j};
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

}  // namespace ballean
