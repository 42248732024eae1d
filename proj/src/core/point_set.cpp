#include "ballean/core/point_set.hpp"

#include <stdexcept>

namespace ballean {

namespace {

void check_universe(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("point sets over different universes");
  }
}

}  // namespace

PointSet::PointSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : PointSet(universe) {
  for (auto m : members) insert(m);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (const auto tail = universe & 63; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

PointSet PointSet::from_indices(std::size_t universe, std::span<const std::size_t> members) {
  PointSet s(universe);
  for (auto m : members) s.insert(m);
  return s;
}

void PointSet::insert(std::size_t i) {
  if (i >= universe_) throw std::out_of_range("point index outside universe");
  words_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void PointSet::erase(std::size_t i) {
  if (i >= universe_) throw std::out_of_range("point index outside universe");
  words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::size_t PointSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PointSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool PointSet::subset_of(const PointSet& other) const noexcept {
  if (universe_ != other.universe_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool PointSet::intersects(const PointSet& other) const noexcept {
  if (universe_ != other.universe_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  check_universe(universe_, other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  check_universe(universe_, other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  check_universe(universe_, other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::optional<std::size_t> PointSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::optional<std::size_t> PointSet::last() const noexcept {
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != 0) {
      return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> PointSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t PointSet::hash() const noexcept {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const PointSet& a, const PointSet& b) noexcept {
  if (a.universe() != b.universe()) return a.universe() < b.universe();
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  // Equal sizes: the first differing index decides; the set holding it is
  // lexicographically smaller.
  const auto diff = (a - b) | (b - a);
  const auto d = diff.first();
  if (!d) return false;
  return a.contains(*d);
}

}  // namespace ballean
