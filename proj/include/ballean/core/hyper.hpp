#pragma once

#include <cstddef>
#include <vector>

#include "ballean/core/entourage.hpp"
#include "ballean/core/presentation.hpp"

namespace ballean {

/// Largest hyperballean domain materialized; bigger windows must use the
/// 2-subset domain.
inline constexpr std::size_t kMaxHyperDomain = std::size_t{1} << 14;

/// (A, B) in E-flat  <=>  A within E[B] and B within E[A].
bool hyper_close(const Entourage& e, const PointSet& a, const PointSet& b);

/// Nonempty covered subsets of `region`, in canonical order. Throws
/// StructuralError past kMaxHyperDomain sets.
std::vector<PointSet> covered_subsets(const BornologyPresentation& b, const PointSet& region);

/// The lift E-flat of an entourage to the nonempty covered subsets of a
/// bornology presentation. Only the domain and the lifted balls are stored;
/// membership is decided on demand.
class HyperEntourage {
 public:
  HyperEntourage(Entourage source, std::vector<PointSet> domain);

  const Entourage& source() const noexcept { return source_; }
  const std::vector<PointSet>& domain() const noexcept { return domain_; }

  bool related(std::size_t i, std::size_t j) const;
  bool contains(const PointSet& a, const PointSet& b) const { return hyper_close(source_, a, b); }

  std::size_t pair_count() const;
  bool is_symmetric() const;
  /// Inclusion as relations over the same domain.
  bool subset_of(const HyperEntourage& other) const;
  /// Pairs ({x}, {y}) of the relation, read back as a relation on points.
  Entourage singleton_restriction() const;

 private:
  Entourage source_;
  std::vector<PointSet> domain_;
  std::vector<PointSet> lifted_;  // E[A] for each domain member
};

/// E-flat over all nonempty covered subsets of the presentation.
HyperEntourage hyper(const Entourage& e, const BornologyPresentation& b);

}  // namespace ballean
