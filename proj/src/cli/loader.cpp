#include "loader.hpp"

#include <map>

#include "ballean/orders/constructions.hpp"
#include "ballean/search/generators.hpp"

namespace ballean::cli {

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

const json* optional_field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t as_count(const json& j, const std::string& path) {
  const auto v = as_int(j, path);
  if (v < 0) throw SchemaError(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  return j.get<double>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

PointIndex as_point(const Window& w, const json& j, const std::string& path) {
  const auto id = as_string(j, path);
  const auto i = w.find(id);
  if (!i) throw SchemaError(path, "unknown point id '" + id + "'");
  return *i;
}

std::vector<PointIndex> as_point_list(const Window& w, const json& j, const std::string& path) {
  std::vector<PointIndex> out;
  const auto& arr = as_array(j, path);
  for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(as_point(w, arr[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

PointSet as_point_set(const Window& w, const json& j, const std::string& path) {
  const auto list = as_point_list(w, j, path);
  return PointSet::from_indices(w.size(), list);
}

PointPair as_point_pair(const Window& w, const json& j, const std::string& path) {
  const auto list = as_point_list(w, j, path);
  if (list.size() != 2) throw SchemaError(path, "expected two point ids");
  return {list[0], list[1]};
}

namespace {

std::size_t count_in(const json& obj, const std::string& key, const std::string& path, std::size_t lo,
                     std::size_t hi) {
  const auto p = path + "." + key;
  const auto v = as_count(field(obj, key, path), p);
  if (v < lo || v > hi) {
    throw SchemaError(p, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

std::size_t optional_count(const json& obj, const std::string& key, const std::string& path, std::size_t fallback) {
  const auto* j = optional_field(obj, key, path);
  return j ? as_count(*j, path + "." + key) : fallback;
}

struct GraphInput {
  std::vector<PointPair> edges;
};

WindowPtr explicit_window(const json& spec, const std::string& path, const std::string& key = "points") {
  std::vector<std::string> ids;
  const auto& points = as_array(field(spec, key, path), path + "." + key);
  for (std::size_t k = 0; k < points.size(); ++k) {
    ids.push_back(as_string(points[k], path + "." + key + "[" + std::to_string(k) + "]"));
  }
  std::map<std::string, std::size_t> seen;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (!seen.emplace(ids[k], k).second) {
      throw SchemaError(path + "." + key + "[" + std::to_string(k) + "]", "duplicate point id '" + ids[k] + "'");
    }
  }
  const Window plain(ids);
  PointSet interior = plain.all();
  if (const auto* in = optional_field(spec, "interior", path)) interior = as_point_set(plain, *in, path + ".interior");
  std::vector<Coordinates> coords;
  if (const auto* c = optional_field(spec, "coordinates", path)) {
    const auto cpath = path + ".coordinates";
    if (!c->is_object()) throw SchemaError(cpath, "expected an object from point id to integers");
    coords.resize(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
      const auto& row = as_array(field(*c, ids[k], cpath), cpath + "." + ids[k]);
      for (std::size_t d = 0; d < row.size(); ++d) {
        coords[k].push_back(as_int(row[d], cpath + "." + ids[k] + "[" + std::to_string(d) + "]"));
      }
    }
    for (auto it = c->begin(); it != c->end(); ++it) {
      if (!plain.find(it.key())) throw SchemaError(cpath + "." + it.key(), "unknown point id '" + it.key() + "'");
    }
  }
  return std::make_shared<const Window>(std::move(ids), std::move(interior), std::move(coords));
}

void load_window(const json& spec, LoadedScenario& out, GraphInput& graph) {
  const std::string path = "window";
  const auto* gen = optional_field(spec, "generator", path);
  if (!gen) {
    out.window = explicit_window(spec, path);
    return;
  }
  const auto kind = as_string(*gen, path + ".generator");
  if (kind == "line") {
    out.window = line_window(count_in(spec, "n", path, 1, 4096), optional_count(spec, "margin", path, 0));
  } else if (kind == "grid") {
    out.window = grid_window(count_in(spec, "columns", path, 1, 256), count_in(spec, "rows", path, 1, 256),
                             optional_count(spec, "margin", path, 0));
  } else if (kind == "antipodal-grid") {
    auto sc = antipodal_grid_scenario(static_cast<std::int64_t>(count_in(spec, "n", path, 1, 32)));
    out.window = sc.window_ptr();
    out.constraints = std::move(sc);
  } else if (kind == "ngon") {
    const auto n = count_in(spec, "n", path, 4, 4096);
    if (n % 2 != 0) throw SchemaError(path + ".n", "must be even");
    const auto& d = field(spec, "delta", path);
    const double delta = d.is_string() && d.get<std::string>() == "side" ? ngon_side_length(n)
                                                                          : as_number(d, path + ".delta");
    const double epsilon = as_number(field(spec, "epsilon", path), path + ".epsilon");
    if (!(delta > 0)) throw SchemaError(path + ".delta", "must be positive");
    if (!(epsilon > 0)) throw SchemaError(path + ".epsilon", "must be positive");
    auto sc = ngon_scenario(n, delta, epsilon);
    out.window = sc.window_ptr();
    out.constraints = std::move(sc);
  } else if (kind == "ordinal-sum") {
    auto os = ordinal_sum_window(count_in(spec, "m", path, 1, 1024), count_in(spec, "k", path, 1, 1024));
    out.window = os.window;
    out.order = std::move(os.order);
    out.bornology = std::move(os.bornology);
  } else if (kind == "graph") {
    out.window = explicit_window(spec, path, "vertices");
    const auto& edges = as_array(field(spec, "edges", path), path + ".edges");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      graph.edges.push_back(as_point_pair(*out.window, edges[k], path + ".edges[" + std::to_string(k) + "]"));
    }
  } else {
    throw SchemaError(path + ".generator", "unknown generator '" + kind + "'");
  }
}

void load_bornology(const json& spec, LoadedScenario& out) {
  const std::string path = "bornology";
  const auto& w = *out.window;
  const auto kind = as_string(field(spec, "kind", path), path + ".kind");
  if (kind == "explicit") {
    std::vector<PointSet> base;
    const auto& arr = as_array(field(spec, "base", path), path + ".base");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto p = path + ".base[" + std::to_string(k) + "]";
      auto s = as_point_set(w, arr[k], p);
      if (s.empty()) throw SchemaError(p, "base elements must be nonempty");
      base.push_back(std::move(s));
    }
    out.bornology = BornologyPresentation(out.window, std::move(base));
  } else if (kind == "interval-of-order") {
    const auto seq = as_point_list(w, field(spec, "order", path), path + ".order");
    if (seq.size() != w.size() || PointSet::from_indices(w.size(), seq).count() != w.size()) {
      throw SchemaError(path + ".order", "must list every window point exactly once");
    }
    std::optional<Split> split;
    if (const auto* s = optional_field(spec, "split", path)) {
      const auto [l, r] = as_point_pair(w, *s, path + ".split");
      split = Split{l, r};
    }
    try {
      out.order = LinearOrder(out.window, seq, split);
    } catch (const StructuralError& e) {
      throw SchemaError(path + ".split", e.what());
    }
    out.bornology = interval_bornology(*out.order);
  } else if (kind == "chain") {
    std::vector<PointSet> chain;
    const auto& arr = as_array(field(spec, "chain", path), path + ".chain");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      chain.push_back(as_point_set(w, arr[k], path + ".chain[" + std::to_string(k) + "]"));
    }
    std::vector<std::vector<PointIndex>> enums;
    if (const auto* e = optional_field(spec, "enumerations", path)) {
      const auto& earr = as_array(*e, path + ".enumerations");
      for (std::size_t k = 0; k < earr.size(); ++k) {
        enums.push_back(as_point_list(w, earr[k], path + ".enumerations[" + std::to_string(k) + "]"));
      }
    }
    try {
      out.chain = ChainBase(out.window, std::move(chain), std::move(enums));
    } catch (const StructuralError& e) {
      throw SchemaError(path + ".chain", e.what());
    }
    out.bornology = out.chain->bornology();
  } else if (kind == "bounded-sets") {
    if (!out.coarse) throw SchemaError(path + ".kind", "bounded-sets needs a coarse section");
    out.bornology = bounded_sets_bornology(*out.coarse);
  } else {
    throw SchemaError(path + ".kind", "unknown bornology kind '" + kind + "'");
  }
}

void load_coarse(const json& spec, LoadedScenario& out, const GraphInput& graph, bool graph_window) {
  const std::string path = "coarse";
  const auto& w = *out.window;
  const auto kind = as_string(field(spec, "kind", path), path + ".kind");
  if (kind == "metric") {
    if (!w.has_coordinates()) throw SchemaError(path + ".kind", "metric needs point coordinates");
    std::vector<std::int64_t> radii;
    const auto& arr = as_array(field(spec, "radii", path), path + ".radii");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      radii.push_back(static_cast<std::int64_t>(as_count(arr[k], path + ".radii[" + std::to_string(k) + "]")));
    }
    out.coarse = sup_metric_presentation(out.window, radii);
  } else if (kind == "graph") {
    if (!graph_window) throw SchemaError(path + ".kind", "graph scales need the graph window generator");
    std::vector<std::size_t> scales;
    const auto& arr = as_array(field(spec, "scales", path), path + ".scales");
    for (std::size_t k = 0; k < arr.size(); ++k) scales.push_back(as_count(arr[k], path + ".scales[" + std::to_string(k) + "]"));
    out.coarse = graph_path_scenario(out.window, graph.edges, scales);
  } else if (kind == "discrete-from-bornology") {
    if (!out.bornology) throw SchemaError(path + ".kind", "discrete-from-bornology needs a bornology section");
    out.coarse = discrete_from_bornology(*out.bornology).space;
  } else if (kind == "explicit") {
    bool diagonal = true;
    if (const auto* d = optional_field(spec, "diagonal", path)) {
      if (!d->is_boolean()) throw SchemaError(path + ".diagonal", "expected a boolean");
      diagonal = d->get<bool>();
    }
    std::vector<Entourage> base;
    std::vector<std::string> labels;
    const auto& arr = as_array(field(spec, "scales", path), path + ".scales");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto p = path + ".scales[" + std::to_string(k) + "]";
      std::vector<PointPair> pairs;
      const auto& parr = as_array(field(arr[k], "pairs", p), p + ".pairs");
      for (std::size_t q = 0; q < parr.size(); ++q) {
        pairs.push_back(as_point_pair(w, parr[q], p + ".pairs[" + std::to_string(q) + "]"));
      }
      base.push_back(Entourage::from_pairs(out.window, pairs, diagonal));
      const auto* label = optional_field(arr[k], "label", p);
      labels.push_back(label ? as_string(*label, p + ".label") : std::to_string(k));
    }
    out.coarse = CoarsePresentation(out.window, std::move(base), std::move(labels));
  } else {
    throw SchemaError(path + ".kind", "unknown coarse kind '" + kind + "'");
  }
}

}  // namespace

LoadedScenario load_scenario(const json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  const auto version = as_int(field(doc, "version", "$"), "version");
  if (version != 1) throw SchemaError("version", "unsupported version " + std::to_string(version));
  field(doc, "task", "$");

  LoadedScenario out;
  GraphInput graph;
  const auto& wspec = field(doc, "window", "$");
  load_window(wspec, out, graph);
  const bool graph_window = wspec.contains("generator") && wspec["generator"] == "graph";

  const auto* coarse = optional_field(doc, "coarse", "$");
  const auto* born = optional_field(doc, "bornology", "$");
  const bool coarse_first =
      coarse && !(coarse->is_object() && coarse->contains("kind") && (*coarse)["kind"] == "discrete-from-bornology");
  if (coarse_first) load_coarse(*coarse, out, graph, graph_window);
  if (born) load_bornology(*born, out);
  if (coarse && !coarse_first) load_coarse(*coarse, out, graph, graph_window);
  return out;
}

}  // namespace ballean::cli
