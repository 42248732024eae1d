#include "ballean/core/macro_uniform.hpp"

#include <algorithm>

#include "ballean/core/error.hpp"
#include "ballean/core/hyper.hpp"

namespace ballean {

namespace {

// Least target scale relating every observed value pair (rows[v] holds the
// w observed with v).
std::optional<std::size_t> least_scale(const std::vector<PointSet>& rows,
                                       const CoarsePresentation& target) {
  for (std::size_t j = 0; j < target.scale_count(); ++j) {
    const auto& e = target.scale(j);
    bool ok = true;
    for (PointIndex v = 0; v < rows.size() && ok; ++v) ok = rows[v].subset_of(e.ball(v));
    if (ok) return j;
  }
  return std::nullopt;
}

bool related_at_top(const CoarsePresentation& target, PointIndex v, PointIndex w) {
  return target.scale_count() > 0 && target.base().back().contains(v, w);
}

// Calls visit(a, b, a2, b2) for every pair of interior 2-subsets
// {a, b}, {a2, b2} (a < b, a2 < b2) that are E-flat close. Stops when visit
// returns false.
template <class Visit>
void for_each_close_two_subsets(const Entourage& e, const std::vector<PointIndex>& interior,
                                const PointSet& interior_set, Visit&& visit) {
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const auto a = interior[i];
    for (std::size_t j = i + 1; j < interior.size(); ++j) {
      const auto b = interior[j];
      const auto reach = ((e.ball(a) | e.ball(b)) & interior_set).indices();
      for (std::size_t p = 0; p < reach.size(); ++p) {
        const auto a2 = reach[p];
        for (std::size_t q = p + 1; q < reach.size(); ++q) {
          const auto b2 = reach[q];
          const bool covers_a = e.contains(a2, a) || e.contains(b2, a);
          const bool covers_b = e.contains(a2, b) || e.contains(b2, b);
          if (covers_a && covers_b && !visit(a, b, a2, b2)) return;
        }
      }
    }
  }
}

HyperModulus two_subset_modulus(const SelectorMap& s, const CoarsePresentation& space,
                                std::size_t scale, const std::vector<PointIndex>& interior) {
  const auto& w = space.window();
  const auto& e = space.scale(scale);
  const auto n = w.size();
  std::vector<PointSet> rows(n, PointSet(n));
  for_each_close_two_subsets(e, interior, w.interior(),
                             [&](PointIndex a, PointIndex b, PointIndex a2, PointIndex b2) {
                               rows[*s.choice(a, b)].insert(*s.choice(a2, b2));
                               return true;
                             });
  HyperModulus m{scale, least_scale(rows, space), std::nullopt};
  if (m.target_scale) return m;
  for_each_close_two_subsets(e, interior, w.interior(),
                             [&](PointIndex a, PointIndex b, PointIndex a2, PointIndex b2) {
                               const auto v = *s.choice(a, b);
                               const auto v2 = *s.choice(a2, b2);
                               if (related_at_top(space, v, v2)) return true;
                               m.failure = FailingPair{w.set_of({a, b}), w.set_of({a2, b2}), v, v2};
                               return false;
                             });
  return m;
}

HyperModulus full_modulus(const SelectorMap& s, const CoarsePresentation& space, std::size_t scale,
                          const std::vector<PointSet>& domain) {
  const auto n = space.window().size();
  HyperEntourage lifted(space.scale(scale), domain);
  std::vector<PointIndex> values;
  values.reserve(domain.size());
  for (const auto& a : domain) values.push_back(*s.choice(a));

  std::vector<PointSet> rows(n, PointSet(n));
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = 0; j < domain.size(); ++j) {
      if (lifted.related(i, j)) rows[values[i]].insert(values[j]);
    }
  }
  HyperModulus m{scale, least_scale(rows, space), std::nullopt};
  if (m.target_scale) return m;
  for (std::size_t i = 0; i < domain.size() && !m.failure; ++i) {
    for (std::size_t j = 0; j < domain.size(); ++j) {
      if (lifted.related(i, j) && !related_at_top(space, values[i], values[j])) {
        m.failure = FailingPair{domain[i], domain[j], values[i], values[j]};
        break;
      }
    }
  }
  return m;
}

}  // namespace

bool ModulusReport::ok() const noexcept {
  return std::all_of(entries.begin(), entries.end(),
                     [](const PointModulus& m) { return m.target_scale.has_value(); });
}

bool SelectorReport::passed() const noexcept {
  return choice_ok() && std::all_of(moduli.begin(), moduli.end(), [](const HyperModulus& m) {
           return m.target_scale.has_value();
         });
}

ModulusReport check_macro_uniform(std::span<const PointIndex> f, const CoarsePresentation& source,
                                  const CoarsePresentation& target) {
  const auto& sw = source.window();
  const auto m = target.window().size();
  if (f.size() != sw.size()) throw StructuralError("map is not total on the source window");
  for (auto v : f) {
    if (v >= m) throw StructuralError("map value outside the target window");
  }

  ModulusReport report;
  for (std::size_t i = 0; i < source.scale_count(); ++i) {
    const auto& e = source.scale(i);
    std::vector<PointSet> rows(m, PointSet(m));
    sw.interior().for_each([&](PointIndex x) {
      e.ball(x).for_each([&](PointIndex y) { rows[f[x]].insert(f[y]); });
    });
    PointModulus entry{i, least_scale(rows, target), std::nullopt};
    if (!entry.target_scale) {
      sw.interior().for_each([&](PointIndex x) {
        if (entry.failure) return;
        e.ball(x).for_each([&](PointIndex y) {
          if (!entry.failure && !related_at_top(target, f[x], f[y])) entry.failure = {x, y};
        });
      });
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

SelectorReport check_selector(const SelectorMap& s, const CoarsePresentation& space,
                              const BornologyPresentation& born) {
  require_same_points(s.window(), space.window(), "check_selector");
  const auto& w = space.window();
  SelectorReport report;
  report.domain = s.domain();

  if (s.domain() == SelectorDomain::TwoSubsets) {
    const auto interior = w.interior().indices();
    for (std::size_t i = 0; i < interior.size() && report.choice_ok(); ++i) {
      for (std::size_t j = i + 1; j < interior.size(); ++j) {
        const auto a = interior[i];
        const auto b = interior[j];
        const auto c = s.choice(a, b);
        if (!c) {
          report.missing = w.set_of({a, b});
          break;
        }
        if (*c != a && *c != b) {
          report.choice_violation = w.set_of({a, b});
          break;
        }
      }
    }
    report.domain_size = interior.size() * (interior.size() - (interior.empty() ? 0 : 1)) / 2;
    if (!report.choice_ok()) return report;
    for (std::size_t k = 0; k < space.scale_count(); ++k) {
      report.moduli.push_back(two_subset_modulus(s, space, k, interior));
    }
    return report;
  }

  require_same_points(born.window(), w, "check_selector");
  const auto domain = covered_subsets(born, w.interior());
  report.domain_size = domain.size();
  for (const auto& a : domain) {
    const auto c = s.choice(a);
    if (!c) {
      report.missing = a;
      break;
    }
    if (!a.contains(*c)) {
      report.choice_violation = a;
      break;
    }
  }
  if (!report.choice_ok()) return report;
  for (std::size_t k = 0; k < space.scale_count(); ++k) {
    report.moduli.push_back(full_modulus(s, space, k, domain));
  }
  return report;
}

}  // namespace ballean
