#include "ballean/core/window.hpp"

#include <sstream>

#include "ballean/core/error.hpp"

namespace ballean {

Window::Window(std::vector<std::string> ids)
    : Window(std::move(ids), PointSet{}, {}) {}

Window::Window(std::vector<std::string> ids, PointSet interior)
    : Window(std::move(ids), std::move(interior), {}) {}

Window::Window(std::vector<std::string> ids, PointSet interior,
               std::vector<Coordinates> coordinates)
    : ids_(std::move(ids)), interior_(std::move(interior)), coordinates_(std::move(coordinates)) {
  if (interior_.universe() == 0 && !ids_.empty()) interior_ = PointSet::full(ids_.size());
  if (interior_.universe() != ids_.size()) {
    throw StructuralError("interior set does not match the window size");
  }
  if (!coordinates_.empty() && coordinates_.size() != ids_.size()) {
    throw StructuralError("coordinate list does not match the window size");
  }
  index_.reserve(ids_.size());
  for (PointIndex i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw StructuralError("duplicate point id '" + ids_[i] + "'");
    }
  }
}

std::optional<PointIndex> Window::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointIndex Window::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw StructuralError("unknown point id '" + std::string(id) + "'");
}

PointSet Window::set_of_ids(const std::vector<std::string>& ids) const {
  PointSet s(size());
  for (const auto& id : ids) s.insert(index_of(id));
  return s;
}

std::shared_ptr<const Window> Window::with_interior(PointSet interior) const {
  return std::make_shared<const Window>(ids_, std::move(interior), coordinates_);
}

std::string Window::describe(const PointSet& s) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](PointIndex i) {
    if (!first) out << ',';
    out << ids_.at(i);
    first = false;
  });
  out << '}';
  return out.str();
}

WindowPtr make_window(std::vector<std::string> ids) {
  return std::make_shared<const Window>(std::move(ids));
}

WindowPtr make_window(std::vector<std::string> ids, PointSet interior) {
  return std::make_shared<const Window>(std::move(ids), std::move(interior));
}

WindowPtr make_numbered_window(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return make_window(std::move(ids));
}

void require_same_points(const Window& a, const Window& b, std::string_view context) {
  if (&a == &b || a.same_points(b)) return;
  throw StructuralError("window mismatch in " + std::string(context));
}

}  // namespace ballean
