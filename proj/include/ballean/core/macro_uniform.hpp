#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ballean/core/presentation.hpp"
#include "ballean/core/selector.hpp"

namespace ballean {

/// Modulus of one source scale: the least target scale that holds the image
/// of every source ball around an interior point.
struct PointModulus {
  std::size_t source_scale = 0;
  std::optional<std::size_t> target_scale;  // empty: no modulus within window
  /// (x, y) with y in E[x] whose images no target scale relates.
  std::optional<std::pair<PointIndex, PointIndex>> failure;
};

struct ModulusReport {
  std::vector<PointModulus> entries;
  bool ok() const noexcept;
};

/// Macro-uniformity of a point map f (f[x] is the image of source point x)
/// on the interior of the source window.
ModulusReport check_macro_uniform(std::span<const PointIndex> f, const CoarsePresentation& source,
                                  const CoarsePresentation& target);

/// Two E-flat-close sets of the selector domain whose chosen points are not
/// related by any target scale.
struct FailingPair {
  PointSet first;
  PointSet second;
  PointIndex first_value = 0;
  PointIndex second_value = 0;
};

struct HyperModulus {
  std::size_t source_scale = 0;
  std::optional<std::size_t> target_scale;
  std::optional<FailingPair> failure;
};

struct SelectorReport {
  SelectorDomain domain = SelectorDomain::TwoSubsets;
  std::size_t domain_size = 0;
  /// A domain set the selector maps outside itself.
  std::optional<PointSet> choice_violation;
  /// A domain set without an assignment.
  std::optional<PointSet> missing;
  std::vector<HyperModulus> moduli;

  bool choice_ok() const noexcept { return !choice_violation && !missing; }
  bool passed() const noexcept;
};

/// Verifies the choice invariant, then macro-uniformity of the selector from
/// the lifted scales E-flat (E in the space's base) to the space itself.
///
/// The domain is every 2-subset of interior points, or every nonempty
/// covered subset of interior points for full selectors; the bornology is
/// only consulted in the latter case.
SelectorReport check_selector(const SelectorMap& s, const CoarsePresentation& space,
                              const BornologyPresentation& born);

}  // namespace ballean
