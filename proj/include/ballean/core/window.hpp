#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ballean/core/point_set.hpp"

namespace ballean {

using PointIndex = std::size_t;
using Coordinates = std::vector<std::int64_t>;

/// A finite truncation of a ground set.
///
/// Points are opaque string ids; their enumeration order is the canonical
/// order used to break every tie in the library. Interior points are the
/// ones whose balls are fully represented, so universally quantified checks
/// range over them only.
class Window {
 public:
  explicit Window(std::vector<std::string> ids);
  Window(std::vector<std::string> ids, PointSet interior);
  Window(std::vector<std::string> ids, PointSet interior, std::vector<Coordinates> coordinates);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(PointIndex i) const { return ids_.at(i); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  std::optional<PointIndex> find(std::string_view id) const;
  /// Throws StructuralError naming the id when it is not a window point.
  PointIndex index_of(std::string_view id) const;

  const PointSet& interior() const noexcept { return interior_; }
  bool is_interior(PointIndex i) const noexcept { return interior_.contains(i); }

  bool has_coordinates() const noexcept { return !coordinates_.empty(); }
  const Coordinates& coordinates(PointIndex i) const { return coordinates_.at(i); }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet all() const { return PointSet::full(size()); }
  PointSet set_of(std::initializer_list<PointIndex> members) const {
    return PointSet(size(), members);
  }
  PointSet set_of_ids(const std::vector<std::string>& ids) const;

  /// Same points and coordinates, different interior.
  std::shared_ptr<const Window> with_interior(PointSet interior) const;

  /// Point ids are equal, in the same order. Interior flags may differ.
  bool same_points(const Window& other) const noexcept { return ids_ == other.ids_; }

  std::string describe(const PointSet& s) const;

 private:
  std::vector<std::string> ids_;
  PointSet interior_;
  std::vector<Coordinates> coordinates_;
  std::unordered_map<std::string, PointIndex> index_;
};

using WindowPtr = std::shared_ptr<const Window>;

WindowPtr make_window(std::vector<std::string> ids);
WindowPtr make_window(std::vector<std::string> ids, PointSet interior);
/// Window with ids "0", "1", ..., "n-1", all interior.
WindowPtr make_numbered_window(std::size_t n);

/// Throws StructuralError when the two windows do not hold the same points.
void require_same_points(const Window& a, const Window& b, std::string_view context);

}  // namespace ballean
