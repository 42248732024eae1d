#pragma once

#include <vector>

#include "ballean/core/presentation.hpp"

namespace ballean {

/// A bornology base B_0 < B_1 < ... strictly increasing by inclusion, with an
/// enumeration of B_0 and of every difference D_i = B_{i+1} \ B_i.
class ChainBase {
 public:
  /// Enumerations default to canonical order when omitted.
  ChainBase(WindowPtr window, std::vector<PointSet> chain,
            std::vector<std::vector<PointIndex>> enumerations = {});

  const Window& window() const noexcept { return *window_; }
  const WindowPtr& window_ptr() const noexcept { return window_; }
  const std::vector<PointSet>& chain() const noexcept { return chain_; }
  /// enumeration(0) lists B_0; enumeration(i + 1) lists D_i.
  const std::vector<PointIndex>& enumeration(std::size_t i) const { return enumerations_.at(i); }
  std::size_t length() const noexcept { return chain_.size(); }

  BornologyPresentation bornology() const { return BornologyPresentation(window_, chain_); }

 private:
  WindowPtr window_;
  std::vector<PointSet> chain_;
  std::vector<std::vector<PointIndex>> enumerations_;
};

}  // namespace ballean
