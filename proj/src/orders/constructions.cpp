#include "ballean/orders/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "ballean/core/error.hpp"
#include "ballean/core/hyper.hpp"

namespace ballean {

BornologyPresentation interval_bornology(const LinearOrder& order) {
  const auto& w = order.window();
  const auto n = order.size();
  std::vector<PointSet> base;
  for (std::size_t len = 0; len < n; ++len) {
    for (std::size_t lo = 0; lo + len < n; ++lo) {
      const auto a = order.at(lo);
      const auto b = order.at(lo + len);
      if (w.is_interior(a) && w.is_interior(b)) base.push_back(order.interval(a, b));
    }
  }
  return BornologyPresentation(order.window_ptr(), std::move(base));
}

SelectorMap two_selector_from_order(const LinearOrder& order) {
  return SelectorMap::two_subsets_from(order.window_ptr(), [&](PointIndex a, PointIndex b) {
    return order.less(a, b) ? a : b;
  });
}

SelectorMap selector_from_split_order(const LinearOrder& order) {
  if (!order.split()) throw StructuralError("selector_from_split_order needs split markers");
  const auto left = order.left_part();
  const auto right = order.right_part();
  const auto born = interval_bornology(order);
  auto s = SelectorMap::hyperballean(order.window_ptr());
  for (const auto& y : covered_subsets(born, order.window().all())) {
    const auto in_left = y & left;
    s.assign(y, in_left.empty() ? order.min_of(y & right) : order.max_of(in_left));
  }
  return s;
}

bool precedes(const SelectorMap& f, PointIndex a, PointIndex b) {
  return a == b || f.choice(a, b) == a;
}

const char* to_string(ConstructionOutcome outcome) {
  switch (outcome) {
    case ConstructionOutcome::Derived: return "derived";
    case ConstructionOutcome::Inconclusive: return "inconclusive";
    case ConstructionOutcome::PreconditionFailed: return "precondition-failed";
  }
  return "?";
}

const char* to_string(DerivationCase c) {
  switch (c) {
    case DerivationCase::Bounded: return "bounded";
    case DerivationCase::BothUnbounded: return "both-unbounded";
    case DerivationCase::LeftBounded: return "left-bounded";
    case DerivationCase::RightBounded: return "right-bounded";
  }
  return "?";
}

namespace {

// z lies entirely above or entirely below b.
bool on_one_side(const SelectorMap& f, const PointSet& b, PointIndex z) {
  bool above = true;
  bool below = true;
  b.for_each([&](PointIndex x) {
    above = above && precedes(f, x, z);
    below = below && precedes(f, z, x);
  });
  return above || below;
}

}  // namespace

StarConstant star_constant(const SelectorMap& f, const PointSet& b, const CoarsePresentation& space,
                           const BornologyPresentation& born) {
  StarConstant out;
  const auto& w = space.window();
  require_same_points(born.window(), w, "star_constant");
  if (b.universe() != w.size() || b.empty()) throw StructuralError("star_constant needs a nonempty B");

  out.precondition = check_selector(f, space, born);
  if (!out.precondition->passed()) {
    out.outcome = ConstructionOutcome::PreconditionFailed;
    out.reason = "f is not a 2-selector of the given space";
    return out;
  }

  // Two distinct 2-subsets P, Q are E_B-flat close iff both meet B and
  // P \ B = Q \ B. Group the sets meeting B by their outside part.
  const auto n = w.size();
  std::vector<std::vector<PointIndex>> values_by_outside(n + 1);
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = x + 1; y < n; ++y) {
      if (!b.contains(x) && !b.contains(y)) continue;
      std::size_t key = n;
      if (!b.contains(x)) key = x;
      if (!b.contains(y)) key = y;
      values_by_outside[key].push_back(*f.choice(x, y));
    }
  }

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < born.base().size(); ++i) {
    if (b.subset_of(born.base()[i])) candidates.push_back(i);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t i, std::size_t j) {
    return canonical_less(born.base()[i], born.base()[j]);
  });

  for (const auto i : candidates) {
    const auto& c = born.base()[i];
    bool witness = true;
    for (const auto& values : values_by_outside) {
      for (std::size_t k = 1; k < values.size() && witness; ++k) {
        witness = values[k] == values[0] || (c.contains(values[k]) && c.contains(values[0]));
      }
    }
    out.failing_z.reset();
    for (PointIndex z = 0; z < n && !out.failing_z; ++z) {
      if (!c.contains(z) && !on_one_side(f, b, z)) out.failing_z = z;
    }
    if (witness && !out.failing_z) {
      out.outcome = ConstructionOutcome::Derived;
      out.base_index = i;
      out.c = c;
      return out;
    }
  }
  out.outcome = ConstructionOutcome::Inconclusive;
  out.reason = candidates.empty() ? "no base element contains B"
                                  : "no base element containing B separates the window";
  return out;
}

namespace {

// Position at which x would enter the ascending chain `side`, when the
// members below x form a prefix.
std::optional<std::size_t> insertion_point(const SelectorMap& f, const std::vector<PointIndex>& side,
                                           PointIndex x) {
  std::size_t p = 0;
  while (p < side.size() && precedes(f, side[p], x)) ++p;
  for (std::size_t k = p; k < side.size(); ++k) {
    if (!precedes(f, x, side[k])) return std::nullopt;
  }
  return p;
}

bool all_precede(const SelectorMap& f, const std::vector<PointIndex>& lhs, PointIndex x) {
  return std::all_of(lhs.begin(), lhs.end(), [&](PointIndex y) { return precedes(f, y, x); });
}

bool precedes_all(const SelectorMap& f, PointIndex x, const std::vector<PointIndex>& rhs) {
  return std::all_of(rhs.begin(), rhs.end(), [&](PointIndex y) { return precedes(f, x, y); });
}

// Least c in R with x below every member of R from c upward.
std::optional<PointIndex> anchor_right(const SelectorMap& f, const std::vector<PointIndex>& right,
                                       PointIndex x) {
  std::optional<PointIndex> c;
  for (auto it = right.rbegin(); it != right.rend() && precedes(f, x, *it); ++it) c = *it;
  return c;
}

// Greatest d in L with x above every member of L from d downward.
std::optional<PointIndex> anchor_left(const SelectorMap& f, const std::vector<PointIndex>& left,
                                      PointIndex x) {
  std::optional<PointIndex> d;
  for (auto it = left.begin(); it != left.end() && precedes(f, *it, x); ++it) d = *it;
  return d;
}

PointSet set_from(std::size_t n, const std::vector<PointIndex>& xs) {
  return PointSet::from_indices(n, xs);
}

}  // namespace

OrderDerivation order_from_two_selector(const SelectorMap& f, const BornologyPresentation& born,
                                        const DerivationOptions& options) {
  OrderDerivation out;
  const auto& w = born.window();
  const auto n = w.size();
  require_same_points(f.window(), w, "order_from_two_selector");
  if (f.domain() != SelectorDomain::TwoSubsets) {
    throw StructuralError("order_from_two_selector needs a 2-selector");
  }

  if (options.check_precondition) {
    const auto discrete = discrete_from_bornology(born);
    out.precondition = check_selector(f, discrete.space, born);
    if (!out.precondition->passed()) {
      out.outcome = ConstructionOutcome::PreconditionFailed;
      out.reason = "f is not a 2-selector of the discrete space of the bornology";
      return out;
    }
  }
  if (n < 2) {
    out.reason = "window has fewer than two points";
    return out;
  }

  const auto covered_window = w.with_interior(born.covered_points());

  if (born.bounded()) {
    std::vector<PointIndex> seq(n);
    std::iota(seq.begin(), seq.end(), PointIndex{0});
    out.outcome = ConstructionOutcome::Derived;
    out.derivation_case = DerivationCase::Bounded;
    out.markers = Split{seq[0], seq[1]};
    out.order = LinearOrder(covered_window, std::move(seq), out.markers);
    return out;
  }

  Split markers;
  if (options.markers) {
    markers = *options.markers;
    if (markers.l >= n || markers.r >= n || markers.l == markers.r || !precedes(f, markers.l, markers.r)) {
      throw StructuralError("markers must be distinct points with l below r");
    }
  } else {
    markers = precedes(f, 0, 1) ? Split{0, 1} : Split{1, 0};
  }
  out.markers = markers;
  const auto l = markers.l;
  const auto r = markers.r;

  // Greedy maximal A = L u R, both sides kept ascending.
  auto& left = out.left;
  auto& right = out.right;
  left = {l};
  right = {r};
  for (PointIndex x = 0; x < n; ++x) {
    if (x == l || x == r) continue;
    if (precedes(f, r, x) && all_precede(f, left, x)) {
      if (const auto p = insertion_point(f, right, x)) {
        right.insert(right.begin() + static_cast<std::ptrdiff_t>(*p), x);
        continue;
      }
    }
    if (precedes(f, x, l) && precedes_all(f, x, right)) {
      if (const auto p = insertion_point(f, left, x)) {
        left.insert(left.begin() + static_cast<std::ptrdiff_t>(*p), x);
      }
    }
  }

  const auto left_set = set_from(n, left);
  const auto right_set = set_from(n, right);
  const auto a_set = left_set | right_set;
  if (born.covered(a_set)) {
    out.reason = "greedy A is covered by one base element; its unboundedness has no window certificate";
    return out;
  }
  const bool left_covered = born.covered(left_set);
  const bool right_covered = born.covered(right_set);
  if (left_covered && right_covered) {
    out.reason = "L and R are each covered; the window cannot decide which side is unbounded";
    return out;
  }
  out.derivation_case = !left_covered && !right_covered ? DerivationCase::BothUnbounded
                        : left_covered                  ? DerivationCase::LeftBounded
                                                        : DerivationCase::RightBounded;

  out.anchor.assign(n, std::nullopt);
  std::vector<PointIndex> block;
  if (out.derivation_case == DerivationCase::LeftBounded) {
    for (PointIndex x = 0; x < n; ++x) {
      if (!right_set.contains(x) && precedes_all(f, x, right)) block.push_back(x);
    }
  } else if (out.derivation_case == DerivationCase::RightBounded) {
    for (PointIndex x = 0; x < n; ++x) {
      if (!left_set.contains(x) && all_precede(f, left, x)) block.push_back(x);
    }
  }
  const auto block_set = set_from(n, block);
  if (!block.empty()) {
    out.bounded_block = block_set;
    if (!born.covered(block_set)) {
      out.reason = std::string(out.derivation_case == DerivationCase::LeftBounded ? "C" : "D") +
                   " is not covered by one base element";
      return out;
    }
  }

  for (PointIndex x = 0; x < n; ++x) {
    if (a_set.contains(x) || block_set.contains(x)) continue;
    std::optional<PointIndex> h;
    switch (out.derivation_case) {
      case DerivationCase::BothUnbounded: {
        const auto c = anchor_right(f, right, x);
        if (c && *c != r) {
          h = c;
        } else {
          h = anchor_left(f, left, x);
          if (!h) h = c;
        }
        break;
      }
      case DerivationCase::LeftBounded: h = anchor_right(f, right, x); break;
      case DerivationCase::RightBounded: h = anchor_left(f, left, x); break;
      case DerivationCase::Bounded: break;
    }
    if (!h) {
      out.reason = "no anchor in A for point " + w.id(x);
      return out;
    }
    out.anchor[x] = h;
  }

  // Each fibre h^-1(c) in canonical order, the anchor itself last on the
  // left side and first on the right side so that l and r stay adjacent.
  std::vector<std::vector<PointIndex>> fibre(n);
  for (PointIndex x = 0; x < n; ++x) {
    if (out.anchor[x]) fibre[*out.anchor[x]].push_back(x);
  }
  std::vector<PointIndex> seq;
  seq.reserve(n);
  auto emit_left = [&](const std::vector<PointIndex>& side) {
    for (const auto c : side) {
      seq.insert(seq.end(), fibre[c].begin(), fibre[c].end());
      seq.push_back(c);
    }
  };
  auto emit_right = [&](const std::vector<PointIndex>& side) {
    for (const auto c : side) {
      seq.push_back(c);
      seq.insert(seq.end(), fibre[c].begin(), fibre[c].end());
    }
  };
  switch (out.derivation_case) {
    case DerivationCase::BothUnbounded:
      emit_left(left);
      emit_right(right);
      break;
    case DerivationCase::LeftBounded:
      for (const auto x : block) {
        if (x != l) seq.push_back(x);
      }
      seq.push_back(l);
      emit_right(right);
      break;
    case DerivationCase::RightBounded:
      emit_left(left);
      seq.push_back(r);
      for (const auto x : block) {
        if (x != r) seq.push_back(x);
      }
      break;
    case DerivationCase::Bounded: break;
  }
  if (seq.size() != n) {
    out.reason = "fibres of h do not partition the window";
    return out;
  }

  LinearOrder derived(covered_window, std::move(seq), markers);
  if (!same_covered_family(interval_bornology(derived), born, w.interior())) {
    out.reason = "derived order does not reproduce the covered family on interior points";
    return out;
  }
  out.order = std::move(derived);
  out.outcome = ConstructionOutcome::Derived;
  return out;
}

LinearOrder interval_base_from_chain(const ChainBase& chain) {
  const auto& w = chain.window();
  std::vector<PointIndex> seq;
  seq.reserve(w.size());
  for (std::size_t i = 0; i < chain.length(); ++i) {
    const auto& e = chain.enumeration(i);
    seq.insert(seq.end(), e.begin(), e.end());
  }
  const auto& top = chain.chain().back();
  for (PointIndex x = 0; x < w.size(); ++x) {
    if (!top.contains(x)) seq.push_back(x);
  }
  return LinearOrder(w.with_interior(top), std::move(seq));
}

bool ordinal_sum_shape(const LinearOrder& order) {
  const auto& split = order.split();
  return split && order.rank(split->l) + 1 == order.rank(split->r);
}

TransferReport transfer_to_discrete(const SelectorMap& f, const CoarsePresentation& space) {
  TransferReport report;
  auto born = bounded_sets_bornology(space);
  report.source = check_selector(f, space, born);
  if (!report.precondition_ok()) {
    report.bounded_sets = std::move(born);
    return report;
  }
  auto discrete = discrete_from_bornology(born);
  report.transferred = check_selector(f, discrete.space, born);

  for (std::size_t k = 0; k < discrete.chain.size(); ++k) {
    const auto& b = discrete.chain[k];
    ExpectedModulus e;
    e.discrete_scale = k;
    if (k < report.transferred->moduli.size()) e.actual = report.transferred->moduli[k].target_scale;

    std::optional<std::size_t> metric_scale;
    for (std::size_t i = 0; i < space.scale_count() && !metric_scale; ++i) {
      bool holds = true;
      b.for_each([&](PointIndex x) { holds = holds && b.subset_of(space.scale(i).ball(x)); });
      if (holds) metric_scale = i;
    }
    if (metric_scale) {
      const auto target = report.source.moduli.at(*metric_scale).target_scale;
      if (target) {
        const auto image = ball(space.scale(*target), b) | b;
        for (std::size_t j = 0; j < discrete.chain.size(); ++j) {
          if (image.subset_of(discrete.chain[j])) {
            e.predicted = j;
            break;
          }
        }
      }
    }
    report.expected.push_back(e);
  }
  report.bounded_sets = std::move(born);
  report.discrete = std::move(discrete);
  return report;
}

}  // namespace ballean
