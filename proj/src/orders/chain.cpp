#include "ballean/orders/chain.hpp"

#include "ballean/core/error.hpp"

namespace ballean {

ChainBase::ChainBase(WindowPtr window, std::vector<PointSet> chain,
                     std::vector<std::vector<PointIndex>> enumerations)
    : window_(std::move(window)), chain_(std::move(chain)), enumerations_(std::move(enumerations)) {
  if (!window_) throw StructuralError("chain without a window");
  if (chain_.empty()) throw StructuralError("chain is empty");
  for (const auto& b : chain_) {
    if (b.universe() != window_->size()) throw StructuralError("chain element over a different universe");
  }
  if (chain_.front().empty()) throw StructuralError("chain starts with the empty set");
  for (std::size_t i = 1; i < chain_.size(); ++i) {
    if (!chain_[i - 1].subset_of(chain_[i]) || chain_[i - 1] == chain_[i]) {
      throw StructuralError("chain is not strictly increasing at position " + std::to_string(i));
    }
  }

  std::vector<PointSet> parts{chain_.front()};
  for (std::size_t i = 1; i < chain_.size(); ++i) parts.push_back(chain_[i] - chain_[i - 1]);
  if (enumerations_.empty()) {
    for (const auto& p : parts) enumerations_.push_back(p.indices());
  }
  if (enumerations_.size() != parts.size()) {
    throw StructuralError("chain needs one enumeration for B_0 and one per difference");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto listed = PointSet::from_indices(window_->size(), enumerations_[i]);
    if (listed != parts[i] || enumerations_[i].size() != parts[i].count()) {
      throw StructuralError("enumeration " + std::to_string(i) + " does not list its chain step exactly once");
    }
  }
}

}  // namespace ballean
