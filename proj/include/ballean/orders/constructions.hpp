#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ballean/core/macro_uniform.hpp"
#include "ballean/core/presentation.hpp"
#include "ballean/core/selector.hpp"
#include "ballean/orders/chain.hpp"
#include "ballean/orders/linear_order.hpp"

namespace ballean {

/// Base of all intervals [a, b] with a <= b and both endpoints interior
/// points of the order's window, sorted by length and then by left endpoint.
/// Non-interior points stand for the truncated tails of the order; they are
/// covered only when they fall between interior endpoints.
BornologyPresentation interval_bornology(const LinearOrder& order);

/// f({x, y}) = the order-smaller of x and y.
SelectorMap two_selector_from_order(const LinearOrder& order);

/// s(Y) = max(Y & X_l) when that is nonempty, else min(Y & X_r), over every
/// nonempty covered subset of interval_bornology(order).
SelectorMap selector_from_split_order(const LinearOrder& order);

/// a precedes b under a 2-selector: a == b or f({a, b}) = a.
bool precedes(const SelectorMap& f, PointIndex a, PointIndex b);

enum class ConstructionOutcome {
  Derived,
  Inconclusive,
  PreconditionFailed,
};

const char* to_string(ConstructionOutcome outcome);

struct StarConstant {
  ConstructionOutcome outcome = ConstructionOutcome::Inconclusive;
  /// Index of C in the bornology base.
  std::optional<std::size_t> base_index;
  std::optional<PointSet> c;
  /// Outside-C point breaking the dichotomy for the last candidate tried.
  std::optional<PointIndex> failing_z;
  std::string reason;
  std::optional<SelectorReport> precondition;
};

/// The least base element C containing B such that E_B-flat-close pairs have
/// E_C-close values under f; every z outside C then lies entirely above or
/// entirely below B. The precondition check of f against `space` runs first.
StarConstant star_constant(const SelectorMap& f, const PointSet& b, const CoarsePresentation& space,
                           const BornologyPresentation& born);

enum class DerivationCase {
  Bounded,       // one base element covers the window
  BothUnbounded,
  LeftBounded,   // L covered, R not
  RightBounded,  // R covered, L not
};

const char* to_string(DerivationCase c);

struct DerivationOptions {
  /// Overrides the default choice of l, r (the first two window points,
  /// oriented by the selector).
  std::optional<Split> markers;
  bool check_precondition = true;
};

struct OrderDerivation {
  ConstructionOutcome outcome = ConstructionOutcome::Inconclusive;
  std::optional<LinearOrder> order;
  DerivationCase derivation_case = DerivationCase::Bounded;
  std::optional<Split> markers;
  /// The maximal set A = L u R, each side ascending under the selector.
  std::vector<PointIndex> left;
  std::vector<PointIndex> right;
  /// h(x) for points outside A and outside the bounded block.
  std::vector<std::optional<PointIndex>> anchor;
  /// C (left-bounded case) or D (right-bounded case).
  std::optional<PointSet> bounded_block;
  std::string reason;
  std::optional<SelectorReport> precondition;
};

/// Builds an interval base for `born` from a 2-selector of its discrete
/// space: greedy maximal A = L u R around markers l < r, the anchor map h
/// into A, and the order of the fibres of h. The returned order lives on the
/// bornology's window with the covered points as interior and carries the
/// split (l, r).
OrderDerivation order_from_two_selector(const SelectorMap& f, const BornologyPresentation& born,
                                        const DerivationOptions& options = {});

/// B_0 first in its enumeration, then each difference D_i in its
/// enumeration, then uncovered points. Interior of the result is the top of
/// the chain.
LinearOrder interval_base_from_chain(const ChainBase& chain);

/// Split present with adjacent markers. Every finite order with such a split
/// is the sum of a reversed well-order and a well-order.
bool ordinal_sum_shape(const LinearOrder& order);

/// Per discrete scale E_B: the scale the transfer argument predicts, E_F[B]
/// with F the metric modulus of a metric scale containing E_B.
struct ExpectedModulus {
  std::size_t discrete_scale = 0;
  std::optional<std::size_t> predicted;
  std::optional<std::size_t> actual;
  bool consistent() const noexcept {
    return !predicted || (actual && *actual <= *predicted);
  }
};

struct TransferReport {
  SelectorReport source;
  std::optional<BornologyPresentation> bounded_sets;
  std::optional<DiscreteSpace> discrete;
  std::optional<SelectorReport> transferred;
  std::vector<ExpectedModulus> expected;

  bool precondition_ok() const noexcept { return source.passed(); }
  bool expectations_hold() const noexcept {
    return std::all_of(expected.begin(), expected.end(),
                       [](const ExpectedModulus& e) { return e.consistent(); });
  }
  bool passed() const noexcept {
    return precondition_ok() && transferred && transferred->passed() && expectations_hold();
  }
};

/// Checks f against `space`, then against the discrete space of the
/// space's bounded sets.
TransferReport transfer_to_discrete(const SelectorMap& f, const CoarsePresentation& space);

}  // namespace ballean
