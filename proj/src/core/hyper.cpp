#include "ballean/core/hyper.hpp"

#include <set>

#include "ballean/core/error.hpp"

namespace ballean {

bool hyper_close(const Entourage& e, const PointSet& a, const PointSet& b) {
  return a.subset_of(ball(e, b)) && b.subset_of(ball(e, a));
}

std::vector<PointSet> covered_subsets(const BornologyPresentation& b, const PointSet& region) {
  std::set<PointSet, CanonicalLess> out;
  const auto n = b.window().size();
  for (const auto& element : b.base()) {
    const auto members = (element & region).indices();
    if (members.size() > 20 || out.size() + (std::size_t{1} << members.size()) > 2 * kMaxHyperDomain) {
      throw StructuralError("hyperballean domain too large for this window");
    }
    const std::size_t subsets = std::size_t{1} << members.size();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      PointSet s(n);
      for (std::size_t k = 0; k < members.size(); ++k) {
        if ((mask >> k) & 1u) s.insert(members[k]);
      }
      out.insert(std::move(s));
    }
    if (out.size() > kMaxHyperDomain) {
      throw StructuralError("hyperballean domain too large for this window");
    }
  }
  return {out.begin(), out.end()};
}

HyperEntourage::HyperEntourage(Entourage source, std::vector<PointSet> domain)
    : source_(std::move(source)), domain_(std::move(domain)) {
  lifted_.reserve(domain_.size());
  for (const auto& a : domain_) lifted_.push_back(ball(source_, a));
}

bool HyperEntourage::related(std::size_t i, std::size_t j) const {
  return domain_.at(i).subset_of(lifted_.at(j)) && domain_.at(j).subset_of(lifted_.at(i));
}

std::size_t HyperEntourage::pair_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    for (std::size_t j = 0; j < domain_.size(); ++j) count += related(i, j) ? 1 : 0;
  }
  return count;
}

bool HyperEntourage::is_symmetric() const {
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    for (std::size_t j = i + 1; j < domain_.size(); ++j) {
      if (related(i, j) != related(j, i)) return false;
    }
  }
  return true;
}

bool HyperEntourage::subset_of(const HyperEntourage& other) const {
  if (domain_ != other.domain_) throw StructuralError("hyper entourages over different domains");
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    for (std::size_t j = 0; j < domain_.size(); ++j) {
      if (related(i, j) && !other.related(i, j)) return false;
    }
  }
  return true;
}

Entourage HyperEntourage::singleton_restriction() const {
  const auto n = source_.size();
  std::vector<std::size_t> slot(n, domain_.size());
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (domain_[i].count() == 1) slot[*domain_[i].first()] = i;
  }
  std::vector<PointSet> balls(n, PointSet(n));
  for (PointIndex x = 0; x < n; ++x) {
    if (slot[x] == domain_.size()) continue;
    for (PointIndex y = 0; y < n; ++y) {
      if (slot[y] != domain_.size() && related(slot[x], slot[y])) balls[x].insert(y);
    }
  }
  return Entourage(source_.window_ptr(), std::move(balls));
}

HyperEntourage hyper(const Entourage& e, const BornologyPresentation& b) {
  require_same_points(e.window(), b.window(), "hyper");
  return HyperEntourage(e, covered_subsets(b, b.window().all()));
}

}  // namespace ballean
