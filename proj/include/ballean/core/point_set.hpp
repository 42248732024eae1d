#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace ballean {

/// Dense bitset over the universe {0, ..., universe-1}.
///
/// Used for point sets on a window, for balls of entourages and for scale
/// masks. Two sets only compare equal when their universes agree.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  PointSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static PointSet full(std::size_t universe);
  static PointSet from_indices(std::size_t universe, std::span<const std::size_t> members);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1u) != 0;
  }
  void insert(std::size_t i);
  void erase(std::size_t i);

  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool subset_of(const PointSet& other) const noexcept;
  bool intersects(const PointSet& other) const noexcept;

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

  /// Lowest member, if any.
  std::optional<std::size_t> first() const noexcept;
  /// Highest member, if any.
  std::optional<std::size_t> last() const noexcept;

  std::vector<std::size_t> indices() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + bit);
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical order on point sets: smaller sets first, equal sizes compared
/// lexicographically on their ascending index lists.
bool canonical_less(const PointSet& a, const PointSet& b) noexcept;

struct CanonicalLess {
  bool operator()(const PointSet& a, const PointSet& b) const noexcept {
    return canonical_less(a, b);
  }
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

}  // namespace ballean
