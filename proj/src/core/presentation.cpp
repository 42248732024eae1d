#include "ballean/core/presentation.hpp"

#include <algorithm>
#include <set>

#include "ballean/core/error.hpp"

namespace ballean {

namespace {

std::vector<PointSet> sorted_unique(std::vector<PointSet> sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

bool is_chain(const std::vector<PointSet>& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!sorted[i - 1].subset_of(sorted[i])) return false;
  }
  return true;
}

struct ChainClosure {
  std::vector<PointSet> chain;
  std::vector<PointSet> added;
};

// Running unions of canonically sorted generating sets.
ChainClosure close_to_chain(const std::vector<PointSet>& generators) {
  ChainClosure out;
  auto sorted = sorted_unique(generators);
  if (is_chain(sorted)) {
    out.chain = std::move(sorted);
    return out;
  }
  const std::set<PointSet, CanonicalLess> originals(sorted.begin(), sorted.end());
  for (const auto& g : sorted) {
    PointSet next = out.chain.empty() ? g : (out.chain.back() | g);
    if (!out.chain.empty() && next == out.chain.back()) continue;
    if (!originals.contains(next)) out.added.push_back(next);
    out.chain.push_back(std::move(next));
  }
  return out;
}

}  // namespace

CoarsePresentation::CoarsePresentation(WindowPtr window, std::vector<Entourage> base,
                                       std::vector<std::string> labels)
    : window_(std::move(window)), base_(std::move(base)), labels_(std::move(labels)) {
  if (!window_) throw StructuralError("coarse presentation without a window");
  for (const auto& e : base_) require_same_points(*window_, e.window(), "coarse presentation");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < base_.size(); ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != base_.size()) {
    throw StructuralError("coarse presentation label count does not match its base");
  }
}

BornologyPresentation::BornologyPresentation(WindowPtr window, std::vector<PointSet> base)
    : window_(std::move(window)), base_(std::move(base)) {
  if (!window_) throw StructuralError("bornology presentation without a window");
  for (const auto& b : base_) {
    if (b.universe() != window_->size()) {
      throw StructuralError("bornology base element over a different universe");
    }
    if (b.empty()) throw StructuralError("bornology base element is empty");
  }
}

bool BornologyPresentation::covered(const PointSet& a) const {
  if (a.universe() != window_->size()) throw StructuralError("point set outside the window");
  return std::any_of(base_.begin(), base_.end(),
                     [&](const PointSet& b) { return a.subset_of(b); });
}

PointSet BornologyPresentation::covered_points() const {
  PointSet out = window_->empty_set();
  for (const auto& b : base_) out |= b;
  return out;
}

bool ValidationReport::has(const std::string& kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate_presentation(const CoarsePresentation& p) {
  ValidationReport report;
  const auto& w = p.window();
  const auto& base = p.base();

  for (std::size_t i = 0; i < base.size(); ++i) {
    for (PointIndex x = 0; x < w.size(); ++x) {
      if (!base[i].contains(x, x)) {
        report.violations.push_back(
            {"missing diagonal", "scale " + p.label(i) + " misses (" + w.id(x) + "," + w.id(x) + ")"});
        break;
      }
    }
  }
  for (std::size_t i = 1; i < base.size(); ++i) {
    if (!base[i - 1].subset_of(base[i])) {
      report.violations.push_back(
          {"base not ascending", "scale " + p.label(i - 1) + " is not contained in scale " + p.label(i)});
    }
  }

  const auto& interior = w.interior();
  std::vector<Entourage> restricted;
  restricted.reserve(base.size());
  for (const auto& e : base) restricted.push_back(restrict_to(e, interior));
  auto absorbed = [&](const Entourage& r) {
    return std::any_of(restricted.begin(), restricted.end(),
                       [&](const Entourage& g) { return r.subset_of(g); });
  };
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!absorbed(restrict_to(inverse(base[i]), interior))) {
      report.violations.push_back(
          {"inverse not absorbed", "inverse of scale " + p.label(i) + " exceeds every scale on the interior"});
    }
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (!absorbed(restrict_to(compose(base[i], base[j]), interior))) {
        report.violations.push_back({"composition not absorbed",
                                     "scale " + p.label(i) + " o scale " + p.label(j) +
                                         " exceeds every scale on the interior"});
      }
    }
  }

  if (!base.empty()) {
    Entourage reach = base.front();
    for (const auto& e : base) reach = unite(reach, e);
    bool connected = true;
    interior.for_each([&](PointIndex x) {
      connected = connected && interior.subset_of(reach.ball(x));
    });
    if (!connected) report.notes.push_back("interior is not connected at the presented scales");
  } else {
    report.notes.push_back("empty base");
  }
  return report;
}

ValidationReport validate_bornology(const BornologyPresentation& b) {
  ValidationReport report;
  const auto truncated = b.truncated_points();
  if (!truncated.empty()) {
    report.notes.push_back("window-truncated points: " + b.window().describe(truncated));
  }
  if (b.base().empty()) report.notes.push_back("empty base");
  return report;
}

bool covered(const BornologyPresentation& b, const PointSet& a) { return b.covered(a); }

Entourage discrete_entourage(const WindowPtr& window, const PointSet& b) {
  const auto n = window->size();
  std::vector<PointSet> balls;
  balls.reserve(n);
  for (PointIndex x = 0; x < n; ++x) balls.push_back(b.contains(x) ? b : PointSet(n, {x}));
  return Entourage(window, std::move(balls));
}

DiscreteSpace discrete_from_bornology(const BornologyPresentation& b) {
  auto closure = close_to_chain(b.base());
  const auto window = b.window().with_interior(b.window().all());
  std::vector<Entourage> base;
  std::vector<std::string> labels;
  base.reserve(closure.chain.size());
  for (const auto& c : closure.chain) {
    base.push_back(discrete_entourage(window, c));
    labels.push_back("E_" + b.window().describe(c));
  }
  std::vector<std::string> notes;
  for (const auto& a : closure.added) {
    notes.push_back("union closure added " + b.window().describe(a));
  }
  return DiscreteSpace{CoarsePresentation(window, std::move(base), std::move(labels)),
                       std::move(closure.chain), std::move(closure.added), std::move(notes)};
}

BornologyPresentation bounded_sets_bornology(const CoarsePresentation& p) {
  std::vector<PointSet> balls;
  for (const auto& e : p.base()) {
    p.window().interior().for_each([&](PointIndex x) { balls.push_back(e.ball(x)); });
  }
  balls = sorted_unique(std::move(balls));
  auto closure = close_to_chain(balls);
  balls.insert(balls.end(), closure.added.begin(), closure.added.end());
  return BornologyPresentation(p.window_ptr(), sorted_unique(std::move(balls)));
}

bool same_covered_family(const BornologyPresentation& a, const BornologyPresentation& b,
                         const PointSet& region) {
  require_same_points(a.window(), b.window(), "covered family comparison");
  auto dominated = [&](const BornologyPresentation& lhs, const BornologyPresentation& rhs) {
    for (const auto& x : lhs.base()) {
      const auto part = x & region;
      if (part.empty()) continue;
      const bool found = std::any_of(rhs.base().begin(), rhs.base().end(),
                                     [&](const PointSet& y) { return part.subset_of(y); });
      if (!found) return false;
    }
    return true;
  };
  return dominated(a, b) && dominated(b, a);
}

}  // namespace ballean
