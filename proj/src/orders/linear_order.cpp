#include "ballean/orders/linear_order.hpp"

#include <algorithm>
#include <numeric>

#include "ballean/core/error.hpp"

namespace ballean {

LinearOrder::LinearOrder(WindowPtr window, std::vector<PointIndex> sequence,
                         std::optional<Split> split)
    : window_(std::move(window)), sequence_(std::move(sequence)), split_(split) {
  if (!window_) throw StructuralError("order without a window");
  const auto n = window_->size();
  if (sequence_.size() != n) throw StructuralError("order does not list every window point once");
  rank_.assign(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sequence_[k];
    if (x >= n || rank_[x] != n) throw StructuralError("order does not list every window point once");
    rank_[x] = k;
  }
  if (split_) {
    if (split_->l >= n || split_->r >= n || rank_[split_->l] + 1 != rank_[split_->r]) {
      throw StructuralError("split markers are not adjacent with l < r");
    }
  }
}

LinearOrder LinearOrder::canonical(WindowPtr window) {
  std::vector<PointIndex> seq(window->size());
  std::iota(seq.begin(), seq.end(), PointIndex{0});
  return LinearOrder(std::move(window), std::move(seq));
}

LinearOrder LinearOrder::with_split(Split split) const {
  return LinearOrder(window_, sequence_, split);
}

LinearOrder LinearOrder::without_split() const { return LinearOrder(window_, sequence_); }

LinearOrder LinearOrder::on_window(WindowPtr window) const {
  require_same_points(*window_, *window, "order rebase");
  return LinearOrder(std::move(window), sequence_, split_);
}

LinearOrder LinearOrder::reversed() const {
  std::vector<PointIndex> seq(sequence_.rbegin(), sequence_.rend());
  std::optional<Split> split;
  if (split_) split = Split{split_->r, split_->l};
  return LinearOrder(window_, std::move(seq), split);
}

PointSet LinearOrder::interval(PointIndex a, PointIndex b) const {
  PointSet out(size());
  for (auto k = rank(a); k <= rank(b) && k < size(); ++k) out.insert(sequence_[k]);
  return out;
}

PointSet LinearOrder::left_part() const {
  if (!split_) throw StructuralError("order has no split");
  return interval(sequence_.front(), split_->l);
}

PointSet LinearOrder::right_part() const {
  if (!split_) throw StructuralError("order has no split");
  return interval(split_->r, sequence_.back());
}

PointIndex LinearOrder::min_of(const PointSet& s) const {
  if (s.empty()) throw StructuralError("minimum of an empty set");
  PointIndex best = *s.first();
  s.for_each([&](PointIndex x) {
    if (rank(x) < rank(best)) best = x;
  });
  return best;
}

PointIndex LinearOrder::max_of(const PointSet& s) const {
  if (s.empty()) throw StructuralError("maximum of an empty set");
  PointIndex best = *s.first();
  s.for_each([&](PointIndex x) {
    if (rank(x) > rank(best)) best = x;
  });
  return best;
}

}  // namespace ballean
