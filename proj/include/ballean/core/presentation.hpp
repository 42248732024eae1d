#pragma once

#include <string>
#include <vector>

#include "ballean/core/entourage.hpp"

namespace ballean {

/// A finite base of a coarse structure on a window, ascending by scale.
class CoarsePresentation {
 public:
  CoarsePresentation(WindowPtr window, std::vector<Entourage> base,
                     std::vector<std::string> labels = {});

  const Window& window() const noexcept { return *window_; }
  const WindowPtr& window_ptr() const noexcept { return window_; }
  const std::vector<Entourage>& base() const noexcept { return base_; }
  const Entourage& scale(std::size_t i) const { return base_.at(i); }
  std::size_t scale_count() const noexcept { return base_.size(); }
  /// Human-readable name of a scale ("r=2", "E_{a,b}", or its index).
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  WindowPtr window_;
  std::vector<Entourage> base_;
  std::vector<std::string> labels_;
};

/// A finite base of a bornology. A set is covered when some base element
/// contains it; points no base element contains are window-truncated.
class BornologyPresentation {
 public:
  BornologyPresentation(WindowPtr window, std::vector<PointSet> base);

  const Window& window() const noexcept { return *window_; }
  const WindowPtr& window_ptr() const noexcept { return window_; }
  const std::vector<PointSet>& base() const noexcept { return base_; }

  bool covered(const PointSet& a) const;
  /// Union of the base.
  PointSet covered_points() const;
  PointSet truncated_points() const { return window_->all() - covered_points(); }
  /// Some single base element contains every window point.
  bool bounded() const { return covered(window_->all()); }

 private:
  WindowPtr window_;
  std::vector<PointSet> base_;
};

struct Violation {
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const noexcept { return violations.empty(); }
  bool has(const std::string& kind) const;
};

/// Checks reflexivity, the ascending chain, and that compositions and
/// inverses of base entourages are absorbed by the base on interior x
/// interior. Connectedness on the interior is reported as a note.
ValidationReport validate_presentation(const CoarsePresentation& p);

/// Reports window-truncated points (uncovered singletons) as notes.
ValidationReport validate_bornology(const BornologyPresentation& b);

bool covered(const BornologyPresentation& b, const PointSet& a);

/// The discrete coarse space of a bornology, together with the chain of
/// generating sets its base was built from.
struct DiscreteSpace {
  CoarsePresentation space;
  /// Generating set of each scale: scale i is E_{chain[i]}.
  std::vector<PointSet> chain;
  /// Unions that were not base elements and had to be added to make the
  /// generating sets a chain.
  std::vector<PointSet> added_unions;
  std::vector<std::string> notes;
};

/// E_B[x] = B for x in B and {x} otherwise.
Entourage discrete_entourage(const WindowPtr& window, const PointSet& b);

/// One scale E_B per generating set, over the bornology's points with every
/// point interior (discrete balls are exact). Generating sets are sorted by a linear
/// extension of inclusion (size, then canonical order); when they do not
/// form a chain, each is replaced by the union of it and all its
/// predecessors.
DiscreteSpace discrete_from_bornology(const BornologyPresentation& b);

/// Balls E[x] over base entourages E and interior x, deduplicated and sorted
/// canonically, plus the running unions discrete_from_bornology would add.
BornologyPresentation bounded_sets_bornology(const CoarsePresentation& p);

/// Whether two bornology presentations cover the same subsets of `region`.
bool same_covered_family(const BornologyPresentation& a, const BornologyPresentation& b,
                         const PointSet& region);

}  // namespace ballean
