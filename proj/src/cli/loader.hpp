#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ballean/core/error.hpp"
#include "ballean/core/presentation.hpp"
#include "ballean/orders/chain.hpp"
#include "ballean/orders/linear_order.hpp"
#include "ballean/search/scenario.hpp"

namespace ballean::cli {

using nlohmann::json;

/// A schema violation, named by the dotted path of the offending field.
class SchemaError : public StructuralError {
 public:
  SchemaError(const std::string& path, const std::string& what) : StructuralError(path + ": " + what) {}
};

struct LoadedScenario {
  WindowPtr window;
  std::optional<CoarsePresentation> coarse;
  std::optional<BornologyPresentation> bornology;
  /// Order behind an interval-of-order bornology or an ordinal-sum window.
  std::optional<LinearOrder> order;
  std::optional<ChainBase> chain;
  /// Constraint system of a scenario generator (antipodal-grid, ngon).
  std::optional<ConstraintScenario> constraints;
};

LoadedScenario load_scenario(const json& doc);

/// Field accessors; each throws SchemaError naming `path`.
const json& field(const json& obj, const std::string& key, const std::string& path);
const json* optional_field(const json& obj, const std::string& key, const std::string& path);
std::string as_string(const json& j, const std::string& path);
std::int64_t as_int(const json& j, const std::string& path);
std::size_t as_count(const json& j, const std::string& path);
double as_number(const json& j, const std::string& path);
const json& as_array(const json& j, const std::string& path);
PointIndex as_point(const Window& w, const json& j, const std::string& path);
PointSet as_point_set(const Window& w, const json& j, const std::string& path);
std::vector<PointIndex> as_point_list(const Window& w, const json& j, const std::string& path);
PointPair as_point_pair(const Window& w, const json& j, const std::string& path);

}  // namespace ballean::cli
