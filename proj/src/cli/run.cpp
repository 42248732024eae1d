#include "ballean/cli/run.hpp"

#include <fstream>
#include <sstream>

#include "ballean/core/hyper.hpp"
#include "ballean/core/macro_uniform.hpp"
#include "ballean/orders/constructions.hpp"
#include "ballean/search/solver.hpp"
#include "loader.hpp"

namespace ballean::cli {

namespace {

struct Outcome {
  std::string name;
  int exit_code;
};

const Outcome kPassed{"pass", kPass};
const Outcome kFailed{"fail", kFail};
const Outcome kFound{"found", kPass};
const Outcome kUnsat{"unsat", kFail};
const Outcome kUndecided{"inconclusive", kInconclusive};

struct TaskResult {
  Outcome outcome;
  json body = json::object();
};

json ids(const Window& w, const PointSet& s) {
  json out = json::array();
  s.for_each([&](PointIndex i) { out.push_back(w.id(i)); });
  return out;
}

json ids(const Window& w, const std::vector<PointIndex>& xs) {
  json out = json::array();
  for (const auto x : xs) out.push_back(w.id(x));
  return out;
}

json set_list(const Window& w, const std::vector<PointSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(ids(w, s));
  return out;
}

json validation_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"detail", x.detail}});
  return {{"ok", r.ok()}, {"violations", v}, {"notes", r.notes}};
}

json selector_json(const SelectorReport& r, const CoarsePresentation& space) {
  const auto& w = space.window();
  json out = {{"domain", r.domain == SelectorDomain::TwoSubsets ? "two-subsets" : "hyperballean"},
              {"domain_size", r.domain_size},
              {"passed", r.passed()}};
  if (r.choice_violation) out["choice_violation"] = ids(w, *r.choice_violation);
  if (r.missing) out["missing"] = ids(w, *r.missing);
  json moduli = json::array();
  for (const auto& m : r.moduli) {
    json row = {{"source", space.label(m.source_scale)},
                {"target", m.target_scale ? json(space.label(*m.target_scale)) : json(nullptr)}};
    if (m.failure) {
      row["failure"] = {{"first", ids(w, m.failure->first)},
                        {"second", ids(w, m.failure->second)},
                        {"first_value", w.id(m.failure->first_value)},
                        {"second_value", w.id(m.failure->second_value)}};
    }
    moduli.push_back(std::move(row));
  }
  out["moduli"] = std::move(moduli);
  return out;
}

json selector_entries(const SelectorMap& s) {
  const auto& w = s.window();
  json out = json::array();
  for (const auto& [set, value] : s.entries()) out.push_back({{"set", ids(w, set)}, {"value", w.id(value)}});
  return out;
}

json order_json(const LinearOrder& o) {
  const auto& w = o.window();
  json out = {{"sequence", ids(w, o.sequence())}, {"interior", ids(w, w.interior())}};
  if (o.split()) out["split"] = {w.id(o.split()->l), w.id(o.split()->r)};
  return out;
}

const CoarsePresentation& need_coarse(const LoadedScenario& sc) {
  if (!sc.coarse) throw SchemaError("coarse", "this task needs a coarse section");
  return *sc.coarse;
}

const BornologyPresentation& need_bornology(const LoadedScenario& sc) {
  if (!sc.bornology) throw SchemaError("bornology", "this task needs a bornology section");
  return *sc.bornology;
}

SelectorMap two_selector_spec(const LoadedScenario& sc, const json& task) {
  const std::string path = "task.selector";
  const auto& spec = field(task, "selector", "task");
  const auto& w = *sc.window;
  const auto kind = as_string(field(spec, "kind", path), path + ".kind");
  if (kind == "order-min") {
    const auto seq = as_point_list(w, field(spec, "order", path), path + ".order");
    if (seq.size() != w.size() || PointSet::from_indices(w.size(), seq).count() != w.size()) {
      throw SchemaError(path + ".order", "must list every window point exactly once");
    }
    return two_selector_from_order(LinearOrder(sc.window, seq));
  }
  if (kind == "lexicographic") {
    if (!w.has_coordinates()) throw SchemaError(path + ".kind", "lexicographic needs point coordinates");
    return SelectorMap::two_subsets_from(sc.window, [&](PointIndex a, PointIndex b) {
      return w.coordinates(b) < w.coordinates(a) ? b : a;
    });
  }
  if (kind == "explicit") {
    auto f = SelectorMap::two_subsets(sc.window);
    const auto& arr = as_array(field(spec, "choices", path), path + ".choices");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto p = path + ".choices[" + std::to_string(k) + "]";
      const auto [a, b] = as_point_pair(w, field(arr[k], "pair", p), p + ".pair");
      if (a == b) throw SchemaError(p + ".pair", "expected two distinct points");
      f.assign_pair(a, b, as_point(w, field(arr[k], "value", p), p + ".value"));
    }
    return f;
  }
  throw SchemaError(path + ".kind", "unknown 2-selector kind '" + kind + "'");
}

LinearOrder split_order_spec(const LoadedScenario& sc, const json& task) {
  const auto* spec = optional_field(task, "order", "task");
  const auto& w = *sc.window;
  if (!spec) {
    if (!sc.order || !sc.order->split()) {
      throw SchemaError("task.order", "needs an order with split here or from the scenario");
    }
    return *sc.order;
  }
  const std::string path = "task.order";
  const auto seq = as_point_list(w, field(*spec, "sequence", path), path + ".sequence");
  if (seq.size() != w.size() || PointSet::from_indices(w.size(), seq).count() != w.size()) {
    throw SchemaError(path + ".sequence", "must list every window point exactly once");
  }
  const auto [l, r] = as_point_pair(w, field(*spec, "split", path), path + ".split");
  try {
    return LinearOrder(sc.window, seq, Split{l, r});
  } catch (const StructuralError& e) {
    throw SchemaError(path + ".split", e.what());
  }
}

SelectorMap selector_spec(const LoadedScenario& sc, const json& task) {
  const std::string path = "task.selector";
  const auto& spec = field(task, "selector", "task");
  const auto& w = *sc.window;
  const auto kind = as_string(field(spec, "kind", path), path + ".kind");
  if (kind == "split-order") return selector_from_split_order(split_order_spec(sc, task));
  if (kind == "explicit") {
    auto s = SelectorMap::hyperballean(sc.window);
    const auto& arr = as_array(field(spec, "choices", path), path + ".choices");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto p = path + ".choices[" + std::to_string(k) + "]";
      s.assign(as_point_set(w, field(arr[k], "set", p), p + ".set"), as_point(w, field(arr[k], "value", p), p + ".value"));
    }
    return s;
  }
  throw SchemaError(path + ".kind", "unknown selector kind '" + kind + "'");
}

TaskResult task_validate(const LoadedScenario& sc) {
  TaskResult r{kPassed};
  bool ok = true;
  if (sc.coarse) {
    const auto v = validate_presentation(*sc.coarse);
    ok = ok && v.ok();
    r.body["coarse"] = validation_json(v);
  }
  if (sc.bornology) {
    const auto v = validate_bornology(*sc.bornology);
    ok = ok && v.ok();
    r.body["bornology"] = validation_json(v);
    const auto d = discrete_from_bornology(*sc.bornology);
    r.body["discrete_chain"] = set_list(*sc.window, d.chain);
    r.body["union_closure_added"] = set_list(*sc.window, d.added_unions);
  }
  if (!ok) r.outcome = kFailed;
  return r;
}

TaskResult task_check_selector(const LoadedScenario& sc, const json& task, bool two) {
  const auto& space = need_coarse(sc);
  const auto born = sc.bornology ? *sc.bornology : BornologyPresentation(sc.window, {});
  if (!two && !sc.bornology) throw SchemaError("bornology", "full selectors need a bornology section");
  const auto s = two ? two_selector_spec(sc, task) : selector_spec(sc, task);
  const auto report = check_selector(s, space, born);
  TaskResult r{report.passed() ? kPassed : kFailed};
  r.body["check"] = selector_json(report, space);
  return r;
}

TaskResult task_derive_order(const LoadedScenario& sc, const json& task) {
  const auto& born = need_bornology(sc);
  const auto f = two_selector_spec(sc, task);
  DerivationOptions options;
  if (const auto* m = optional_field(task, "markers", "task")) {
    const auto [l, r] = as_point_pair(*sc.window, *m, "task.markers");
    if (l == r || !precedes(f, l, r)) throw SchemaError("task.markers", "markers must satisfy l below r under f");
    options.markers = Split{l, r};
  }
  const auto d = order_from_two_selector(f, born, options);
  const auto& w = *sc.window;
  TaskResult r{d.outcome == ConstructionOutcome::Derived              ? kPassed
               : d.outcome == ConstructionOutcome::PreconditionFailed ? kFailed
                                                                      : kUndecided};
  auto& b = r.body;
  b["construction"] = to_string(d.outcome);
  b["case"] = to_string(d.derivation_case);
  if (!d.reason.empty()) b["reason"] = d.reason;
  if (d.markers) b["markers"] = {w.id(d.markers->l), w.id(d.markers->r)};
  b["left"] = ids(w, d.left);
  b["right"] = ids(w, d.right);
  json anchors = json::object();
  for (PointIndex x = 0; x < d.anchor.size(); ++x) {
    if (d.anchor[x]) anchors[w.id(x)] = w.id(*d.anchor[x]);
  }
  b["anchor"] = std::move(anchors);
  if (d.bounded_block) b["bounded_block"] = ids(w, *d.bounded_block);
  if (d.precondition) {
    const auto discrete = discrete_from_bornology(born);
    b["precondition"] = selector_json(*d.precondition, discrete.space);
  }
  if (d.order) {
    b["order"] = order_json(*d.order);
    b["ordinal_sum_shape"] = ordinal_sum_shape(*d.order);
  }
  return r;
}

TaskResult task_derive_selector(const LoadedScenario& sc, const json& task) {
  const auto order = split_order_spec(sc, task);
  const auto born = interval_bornology(order);
  const auto s = selector_from_split_order(order);
  const auto discrete = discrete_from_bornology(born);
  const auto report = check_selector(s, discrete.space, born);
  TaskResult r{report.passed() ? kPassed : kFailed};
  r.body["order"] = order_json(order);
  r.body["selector"] = selector_entries(s);
  r.body["check"] = selector_json(report, discrete.space);
  return r;
}

TaskResult task_derive_interval_base(const LoadedScenario& sc) {
  if (!sc.chain) throw SchemaError("bornology.kind", "derive-interval-base needs a chain bornology");
  const auto order = interval_base_from_chain(*sc.chain);
  const bool same = same_covered_family(interval_bornology(order), sc.chain->bornology(), sc.window->interior());
  TaskResult r{same ? kPassed : kFailed};
  r.body["order"] = order_json(order);
  r.body["same_covered_family"] = same;
  return r;
}

ConstraintScenario explicit_constraints(const LoadedScenario& sc, const json& task) {
  const std::string path = "task.constraints";
  const auto& spec = field(task, "constraints", "task");
  const auto& w = *sc.window;
  std::vector<PointPair> pairs;
  const auto& parr = as_array(field(spec, "pairs", path), path + ".pairs");
  for (std::size_t k = 0; k < parr.size(); ++k) pairs.push_back(as_point_pair(w, parr[k], path + ".pairs[" + std::to_string(k) + "]"));
  const auto m = pairs.size();
  std::vector<PointSet> close(m, PointSet(m));
  for (std::size_t i = 0; i < m; ++i) close[i].insert(i);
  const auto& carr = as_array(field(spec, "close", path), path + ".close");
  for (std::size_t k = 0; k < carr.size(); ++k) {
    const auto p = path + ".close[" + std::to_string(k) + "]";
    const auto& e = as_array(carr[k], p);
    if (e.size() != 2) throw SchemaError(p, "expected two pair indices");
    const auto i = as_count(e[0], p + "[0]");
    const auto j = as_count(e[1], p + "[1]");
    if (i >= m || j >= m) throw SchemaError(p, "pair index out of range");
    close[i].insert(j);
    close[j].insert(i);
  }
  std::vector<PointPair> allowed;
  const auto& aarr = as_array(field(spec, "allowed", path), path + ".allowed");
  for (std::size_t k = 0; k < aarr.size(); ++k) {
    const auto [u, v] = as_point_pair(w, aarr[k], path + ".allowed[" + std::to_string(k) + "]");
    allowed.emplace_back(u, v);
    allowed.emplace_back(v, u);
  }
  try {
    return ConstraintScenario(sc.window, std::move(pairs), std::move(close),
                              Entourage::from_pairs(sc.window, allowed, true));
  } catch (const StructuralError& e) {
    throw SchemaError(path, e.what());
  }
}

TaskResult task_search(const LoadedScenario& sc, const json& task, const RunOptions& options) {
  const auto constraints = optional_field(task, "constraints", "task") ? explicit_constraints(sc, task)
                           : sc.constraints ? *sc.constraints
                                            : throw SchemaError("task.constraints",
                                                                "search needs constraints or a scenario generator");
  SearchOptions so;
  if (const auto* b = optional_field(task, "max_steps", "task")) so.max_steps = as_count(*b, "task.max_steps");
  if (options.max_steps != 0) so.max_steps = options.max_steps;
  const auto out = search_two_selector(constraints, so);
  const auto& w = constraints.window();

  TaskResult r{out.kind == SearchKind::Found ? kFound : out.kind == SearchKind::Unsat ? kUnsat : kUndecided};
  json pairs = json::array();
  for (const auto& [a, b] : constraints.pairs()) pairs.push_back({w.id(a), w.id(b)});
  r.body["pairs"] = std::move(pairs);
  r.body["steps"] = out.steps;
  if (!out.reason.empty()) r.body["reason"] = out.reason;
  if (out.kind == SearchKind::Found) {
    json witness = json::array();
    for (std::size_t i = 0; i < constraints.pair_count(); ++i) {
      const auto [a, b] = constraints.pair(i);
      witness.push_back({{"pair", {w.id(a), w.id(b)}}, {"value", w.id(out.values[i])}});
    }
    r.body["witness"] = std::move(witness);
    r.body["witness_valid"] = !check_two_selector_against_scenario(constraints, *out.witness).has_value();
  }
  if (out.kind == SearchKind::Unsat) {
    json cert = json::array();
    for (const auto& s : out.certificate) {
      json step = {{"kind", to_string(s.kind)}, {"depth", s.depth}, {"pair", s.pair}};
      if (s.kind != CertificateStep::Kind::Conflict) step["value"] = w.id(s.value);
      if (s.kind == CertificateStep::Kind::Prune) {
        step["source_pair"] = s.source_pair;
        step["source_value"] = w.id(s.source_value);
      }
      cert.push_back(std::move(step));
    }
    r.body["certificate"] = std::move(cert);
    const auto replay = replay_certificate(constraints, out.certificate);
    r.body["replay"] = {{"ok", replay.ok}, {"detail", replay.detail}};
  }
  return r;
}

TaskResult task_transfer(const LoadedScenario& sc, const json& task) {
  const auto& space = need_coarse(sc);
  const auto f = two_selector_spec(sc, task);
  const auto t = transfer_to_discrete(f, space);
  const auto& w = *sc.window;
  TaskResult r{t.passed() ? kPassed : kFailed};
  r.body["source"] = selector_json(t.source, space);
  if (t.bounded_sets) r.body["bounded_sets"] = set_list(w, t.bounded_sets->base());
  if (t.discrete) {
    r.body["discrete_chain"] = set_list(w, t.discrete->chain);
    if (t.transferred) r.body["transferred"] = selector_json(*t.transferred, t.discrete->space);
    json table = json::array();
    for (const auto& e : t.expected) {
      auto label = [&](const std::optional<std::size_t>& i) {
        return i ? json(t.discrete->space.label(*i)) : json(nullptr);
      };
      table.push_back({{"scale", t.discrete->space.label(e.discrete_scale)},
                       {"predicted", label(e.predicted)},
                       {"actual", label(e.actual)},
                       {"consistent", e.consistent()}});
    }
    r.body["expected_moduli"] = std::move(table);
  }
  return r;
}

TaskResult dispatch(const LoadedScenario& sc, const json& task, const RunOptions& options) {
  const auto kind = as_string(field(task, "kind", "task"), "task.kind");
  if (kind == "validate") return task_validate(sc);
  if (kind == "check-selector") return task_check_selector(sc, task, false);
  if (kind == "check-two-selector") return task_check_selector(sc, task, true);
  if (kind == "derive-order") return task_derive_order(sc, task);
  if (kind == "derive-selector") return task_derive_selector(sc, task);
  if (kind == "derive-interval-base") return task_derive_interval_base(sc);
  if (kind == "search") return task_search(sc, task, options);
  if (kind == "transfer-theorem5") return task_transfer(sc, task);
  throw SchemaError("task.kind", "unknown task '" + kind + "'");
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "[" + std::to_string(k) + "]", out);
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

std::string serialize(const json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::ostringstream out;
  out << "outcome: " << report["outcome"].get<std::string>() << "\n";
  json rest = report;
  rest.erase("outcome");
  flatten(rest, "", out);
  return out.str();
}

}  // namespace

RunResult run_text(std::string_view scenario_text, const RunOptions& options) {
  RunResult result;
  json report = {{"version", 1}};
  try {
    const auto doc = json::parse(scenario_text);
    const auto loaded = load_scenario(doc);
    const auto& task = doc["task"];
    auto outcome = dispatch(loaded, task, options);
    report["task"] = task;
    report["outcome"] = outcome.outcome.name;
    report["exit_code"] = outcome.outcome.exit_code;
    report["result"] = std::move(outcome.body);
    result.exit_code = outcome.outcome.exit_code;
  } catch (const json::parse_error& e) {
    result.diagnostic = std::string("scenario: not valid JSON: ") + e.what();
  } catch (const std::exception& e) {
    result.diagnostic = e.what();
  }
  if (!result.diagnostic.empty()) {
    report["outcome"] = "error";
    report["exit_code"] = static_cast<int>(kError);
    report["error"] = result.diagnostic;
    result.exit_code = kError;
  }
  result.report = serialize(report, options.format);
  return result;
}

RunResult run(const RunOptions& options) {
  std::ifstream in(options.scenario_path, std::ios::binary);
  if (!in) {
    RunResult r;
    r.diagnostic = "cannot read scenario file '" + options.scenario_path + "'";
    json report = {{"version", 1}, {"outcome", "error"}, {"exit_code", static_cast<int>(kError)}, {"error", r.diagnostic}};
    r.report = serialize(report, options.format);
    return r;
  }
  std::ostringstream text;
  text << in.rdbuf();
  auto result = run_text(text.str(), options);
  if (options.output_path) {
    std::ofstream out(*options.output_path, std::ios::binary);
    if (!out || !(out << result.report)) {
      result.exit_code = kError;
      result.diagnostic = "cannot write report to '" + *options.output_path + "'";
    }
  }
  return result;
}

}  // namespace ballean::cli
