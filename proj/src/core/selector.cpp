#include "ballean/core/selector.hpp"

#include "ballean/core/error.hpp"

namespace ballean {

SelectorMap::SelectorMap(WindowPtr window, SelectorDomain domain)
    : window_(std::move(window)), domain_(domain) {
  if (!window_) throw StructuralError("selector without a window");
  if (domain_ == SelectorDomain::TwoSubsets) {
    pair_table_.assign(window_->size() * window_->size(), kUnset);
  }
}

SelectorMap SelectorMap::two_subsets(WindowPtr window) {
  return SelectorMap(std::move(window), SelectorDomain::TwoSubsets);
}

SelectorMap SelectorMap::hyperballean(WindowPtr window) {
  return SelectorMap(std::move(window), SelectorDomain::Hyperballean);
}

void SelectorMap::assign(const PointSet& a, PointIndex choice) {
  if (a.universe() != window_->size()) throw StructuralError("selector set outside the window");
  if (choice >= window_->size()) throw StructuralError("selector choice outside the window");
  if (domain_ == SelectorDomain::TwoSubsets) {
    if (a.count() != 2) throw StructuralError("2-selector assigned on a set that is not a pair");
    assign_pair(*a.first(), *a.last(), choice);
    return;
  }
  if (a.empty()) throw StructuralError("selector assigned on the empty set");
  sets_[a] = choice;
}

void SelectorMap::assign_pair(PointIndex a, PointIndex b, PointIndex choice) {
  if (domain_ != SelectorDomain::TwoSubsets) {
    assign(window_->set_of({a, b}), choice);
    return;
  }
  const auto n = window_->size();
  if (a >= n || b >= n || choice >= n) throw StructuralError("2-selector pair outside the window");
  if (a == b) throw StructuralError("2-selector assigned on a singleton");
  pair_table_[a * n + b] = choice;
  pair_table_[b * n + a] = choice;
}

std::optional<PointIndex> SelectorMap::choice(const PointSet& a) const {
  if (domain_ == SelectorDomain::TwoSubsets) {
    if (a.count() != 2) return std::nullopt;
    return choice(*a.first(), *a.last());
  }
  const auto it = sets_.find(a);
  if (it == sets_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<PointSet, PointIndex>> SelectorMap::entries() const {
  std::vector<std::pair<PointSet, PointIndex>> out;
  if (domain_ == SelectorDomain::TwoSubsets) {
    const auto n = window_->size();
    for (PointIndex a = 0; a < n; ++a) {
      for (PointIndex b = a + 1; b < n; ++b) {
        if (auto c = choice(a, b)) out.emplace_back(window_->set_of({a, b}), *c);
      }
    }
    // Pairs are already in canonical order: equal sizes, lexicographic.
    return out;
  }
  out.assign(sets_.begin(), sets_.end());
  return out;
}

std::size_t SelectorMap::size() const noexcept {
  if (domain_ == SelectorDomain::Hyperballean) return sets_.size();
  std::size_t count = 0;
  for (auto v : pair_table_) count += v != kUnset ? 1 : 0;
  return count / 2;
}

}  // namespace ballean
