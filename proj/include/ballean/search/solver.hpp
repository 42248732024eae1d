#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ballean/search/scenario.hpp"

namespace ballean {

/// One step of a refutation. Steps form a depth-first tree: every Decide at
/// depth d fixes a pair to one of its remaining values, and the Decides of a
/// pair at the same depth list all its remaining values in canonical order.
/// Each branch is a run of Prunes ending in a Conflict or in the Decides of
/// depth d + 1.
struct CertificateStep {
  enum class Kind { Decide, Prune, Conflict };

  Kind kind = Kind::Decide;
  std::size_t depth = 0;
  /// Decide: the pair fixed. Prune: the pair losing a value. Conflict: the
  /// pair left without values.
  std::size_t pair = 0;
  /// Decide: the value fixed. Prune: the value removed.
  PointIndex value = 0;
  /// Prune only: the fixed pair and value that rule the removed value out.
  std::size_t source_pair = 0;
  PointIndex source_value = 0;

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

const char* to_string(CertificateStep::Kind kind);

enum class SearchKind { Found, Unsat, Inconclusive };

const char* to_string(SearchKind kind);

struct SearchOutcome {
  SearchKind kind = SearchKind::Inconclusive;
  /// Found: the canonically least selector, over the scenario's pairs only.
  std::optional<SelectorMap> witness;
  /// Found: chosen value per scenario pair.
  std::vector<PointIndex> values;
  /// Unsat: the refutation.
  std::vector<CertificateStep> certificate;
  std::string reason;
  /// Decisions plus prunes performed, across all probing and search.
  std::size_t steps = 0;
};

struct SearchOptions {
  /// Budget on decisions plus prunes; 0 means unlimited.
  std::size_t max_steps = 0;
};

/// Complete backtracking with propagation along closeness edges. The witness
/// is least in the order that compares values pair by pair, lower point
/// index first.
SearchOutcome search_two_selector(const ConstraintScenario& sc, const SearchOptions& options = {});

struct ReplayResult {
  bool ok = false;
  std::string detail;
};

/// Re-derives the refutation from the scenario alone.
ReplayResult replay_certificate(const ConstraintScenario& sc, const std::vector<CertificateStep>& cert);

}  // namespace ballean
