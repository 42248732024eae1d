#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ballean/core/window.hpp"

namespace ballean {

enum class SelectorDomain {
  Hyperballean,  // every nonempty covered subset
  TwoSubsets,    // every 2-element subset
};

/// A choice of one point from each set of a domain. The choice invariant
/// (chosen point belongs to the set) is not enforced on assignment;
/// check_selector reports violations.
class SelectorMap {
 public:
  static SelectorMap two_subsets(WindowPtr window);
  static SelectorMap hyperballean(WindowPtr window);

  /// 2-selector built from a rule (a, b) -> chosen point, over every pair.
  template <class Rule>
  static SelectorMap two_subsets_from(WindowPtr window, Rule&& rule) {
    auto s = two_subsets(window);
    const auto n = window->size();
    for (PointIndex a = 0; a < n; ++a) {
      for (PointIndex b = a + 1; b < n; ++b) s.assign_pair(a, b, rule(a, b));
    }
    return s;
  }

  SelectorDomain domain() const noexcept { return domain_; }
  const Window& window() const noexcept { return *window_; }
  const WindowPtr& window_ptr() const noexcept { return window_; }

  void assign(const PointSet& a, PointIndex choice);
  void assign_pair(PointIndex a, PointIndex b, PointIndex choice);

  std::optional<PointIndex> choice(const PointSet& a) const;
  std::optional<PointIndex> choice(PointIndex a, PointIndex b) const {
    if (domain_ != SelectorDomain::TwoSubsets) return choice(window_->set_of({a, b}));
    const auto v = pair_table_[a * window_->size() + b];
    if (v == kUnset) return std::nullopt;
    return v;
  }

  /// Assigned sets with their choices, in canonical set order.
  std::vector<std::pair<PointSet, PointIndex>> entries() const;
  std::size_t size() const noexcept;

 private:
  static constexpr PointIndex kUnset = static_cast<PointIndex>(-1);

  SelectorMap(WindowPtr window, SelectorDomain domain);

  WindowPtr window_;
  SelectorDomain domain_;
  std::vector<PointIndex> pair_table_;
  std::map<PointSet, PointIndex, CanonicalLess> sets_;
};

}  // namespace ballean
