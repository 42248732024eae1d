#include <doctest.h>

#include <algorithm>
#include <random>

#include "ballean/core/error.hpp"
#include "ballean/core/hyper.hpp"
#include "ballean/core/macro_uniform.hpp"
#include "ballean/core/presentation.hpp"
#include "ballean/orders/constructions.hpp"
#include "ballean/search/generators.hpp"
#include "oracles.hpp"

using namespace ballean;

namespace {

std::vector<PointPair> sym(std::initializer_list<PointPair> ps) {
  std::vector<PointPair> out;
  for (const auto& [a, b] : ps) {
    out.emplace_back(a, b);
    out.emplace_back(b, a);
  }
  return out;
}

Entourage rel(const WindowPtr& w, const std::vector<PointPair>& ps) { return Entourage::from_pairs(w, ps, true); }

Entourage random_reflexive(const WindowPtr& w, std::mt19937& rng, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<PointPair> ps;
  for (PointIndex x = 0; x < w->size(); ++x) {
    for (PointIndex y = 0; y < w->size(); ++y) {
      if (x != y && coin(rng)) ps.emplace_back(x, y);
    }
  }
  return rel(w, ps);
}

}  // namespace

TEST_CASE("point sets order canonically by size then index list") {
  const PointSet a(5, {0, 4});
  const PointSet b(5, {1, 2});
  const PointSet c(5, {3});
  CHECK(canonical_less(c, a));
  CHECK(canonical_less(a, b));
  CHECK_FALSE(canonical_less(b, a));
  CHECK((a | b) == PointSet(5, {0, 1, 2, 4}));
  CHECK_THROWS_AS(a | PointSet(6), std::invalid_argument);
}

TEST_CASE("window ids resolve and unknown ids name themselves") {
  auto w = make_window({"a", "b", "c"});
  CHECK(w->index_of("b") == 1);
  CHECK_THROWS_WITH_AS(w->index_of("z"), doctest::Contains("'z'"), StructuralError);
  CHECK_THROWS_AS(make_window({"a", "a"}), StructuralError);
  CHECK(w->describe(w->set_of({0, 2})) == "{a,c}");
}

TEST_CASE("compose of the diagonal is the diagonal") {
  auto w = make_numbered_window(3);
  const auto d = Entourage::diagonal(w);
  CHECK(compose(d, d) == d);
  CHECK(inverse(d) == d);
}

TEST_CASE("compose follows the z-witness convention") {
  auto w = make_numbered_window(3);
  const auto e = rel(w, sym({{0, 1}}));
  const auto f = rel(w, sym({{1, 2}}));
  const auto ef = compose(e, f);
  CHECK(ef.contains(0, 2));
  CHECK_FALSE(ef.contains(2, 0));
  CHECK(oracle::pairs_of(ef) == oracle::compose(oracle::pairs_of(e), oracle::pairs_of(f), 3));

  const auto eei = compose(e, inverse(e));
  CHECK(eei.is_symmetric());
  for (PointIndex x : {0, 1}) {
    for (PointIndex y : {0, 1}) CHECK(eei.contains(x, y));
  }
  CHECK(oracle::pairs_of(eei) == oracle::compose(oracle::pairs_of(e), oracle::inverse(oracle::pairs_of(e)), 3));
}

TEST_CASE("inverse transposes") {
  auto w = make_numbered_window(3);
  const auto e = rel(w, {{0, 1}});
  CHECK(inverse(e) == rel(w, {{1, 0}}));
}

TEST_CASE("balls of points and sets") {
  auto w = make_numbered_window(3);
  const auto e = rel(w, sym({{0, 1}}));
  CHECK(ball(Entourage::diagonal(w), w->set_of({2})) == w->set_of({2}));
  CHECK(ball(e, w->set_of({1})) == w->set_of({0, 1}));
  CHECK(ball(e, w->set_of({0, 2})) == (ball(e, w->set_of({0})) | ball(e, w->set_of({2}))));
}

TEST_CASE("compose ball-wise: the F-ball of the E-ball") {
  std::mt19937 rng(11);
  auto w = make_numbered_window(6);
  for (int t = 0; t < 50; ++t) {
    const auto e = random_reflexive(w, rng, 0.2);
    const auto f = random_reflexive(w, rng, 0.2);
    const auto ef = compose(e, f);
    for (PointIndex x = 0; x < 6; ++x) CHECK(ef.ball(x) == ball(f, e.ball(x)));
  }
}

TEST_CASE("reflexivity survives compose, inverse and union; compose is associative") {
  std::mt19937 rng(7);
  auto w = make_numbered_window(8);
  for (int t = 0; t < 40; ++t) {
    const auto e = random_reflexive(w, rng, 0.15);
    const auto f = random_reflexive(w, rng, 0.15);
    const auto g = random_reflexive(w, rng, 0.15);
    CHECK(compose(e, f).is_reflexive());
    CHECK(inverse(e).is_reflexive());
    CHECK(unite(e, f).is_reflexive());
    CHECK(compose(compose(e, f), g) == compose(e, compose(f, g)));
    CHECK(inverse(inverse(e)) == e);
  }
}

TEST_CASE("validate: grid metric base passes on the interior") {
  auto w = grid_window(9, 9, 2);
  const auto p = sup_metric_presentation(w, {1, 2, 4});
  const auto r = validate_presentation(p);
  CHECK(r.ok());
  CHECK(r.notes.empty());
}

TEST_CASE("validate: missing diagonal and non-ascending base") {
  auto w = make_numbered_window(3);
  std::vector<PointPair> off{{0, 1}};
  const auto bad = Entourage::from_pairs(w, off, false);
  const auto r = validate_presentation(CoarsePresentation(w, {bad}));
  CHECK(r.has("missing diagonal"));

  const auto big = rel(w, sym({{0, 1}}));
  const auto r2 = validate_presentation(CoarsePresentation(w, {big, Entourage::diagonal(w)}));
  CHECK(r2.has("base not ascending"));
}

TEST_CASE("validate: composition must be absorbed on the interior") {
  auto w = make_numbered_window(3);
  const auto e = rel(w, sym({{0, 1}, {1, 2}}));
  const auto r = validate_presentation(CoarsePresentation(w, {e}));
  CHECK(r.has("composition not absorbed"));
  CHECK_FALSE(r.has("inverse not absorbed"));
}

TEST_CASE("covered is base-relative") {
  auto w = make_numbered_window(3);
  const BornologyPresentation b1(w, {w->set_of({0, 1})});
  CHECK(covered(b1, w->set_of({0})));
  CHECK_FALSE(covered(b1, w->set_of({2})));
  const BornologyPresentation b2(w, {w->set_of({0, 1}), w->set_of({0, 1, 2})});
  CHECK(covered(b2, w->set_of({1, 2})));
  const auto v = validate_bornology(b1);
  REQUIRE(v.notes.size() == 1);
  CHECK(v.notes[0] == "window-truncated points: {2}");
}

TEST_CASE("discrete space of a single base element") {
  auto w = make_numbered_window(3);
  const auto d = discrete_from_bornology(BornologyPresentation(w, {w->set_of({0, 1})}));
  REQUIRE(d.space.scale_count() == 1);
  const auto& e = d.space.scale(0);
  CHECK(e.ball(0) == w->set_of({0, 1}));
  CHECK(e.ball(1) == w->set_of({0, 1}));
  CHECK(e.ball(2) == w->set_of({2}));
  CHECK(validate_presentation(d.space).ok());
  CHECK(d.space.window().interior() == w->all());
}

TEST_CASE("discrete space of singletons is the identity at scale 0") {
  auto w = make_numbered_window(3);
  const auto d = discrete_from_bornology(BornologyPresentation(w, {w->set_of({0}), w->set_of({1}), w->set_of({2})}));
  CHECK(d.space.scale(0) == Entourage::diagonal(w));
}

TEST_CASE("union closure of incomparable generating sets") {
  auto w = make_numbered_window(4);
  const auto d = discrete_from_bornology(BornologyPresentation(w, {w->set_of({0, 1}), w->set_of({2, 3})}));
  REQUIRE(d.chain.size() == 2);
  CHECK(d.chain[0] == w->set_of({0, 1}));
  CHECK(d.chain[1] == w->all());
  REQUIRE(d.added_unions.size() == 1);
  CHECK(d.added_unions[0] == w->all());
  CHECK(validate_presentation(d.space).ok());
}

TEST_CASE("hyper relation from the definition") {
  auto w = make_numbered_window(3);
  const auto e = rel(w, sym({{0, 1}}));
  const BornologyPresentation all(w, {w->all()});
  const auto h = hyper(e, all);
  CHECK(h.contains(w->set_of({0}), w->set_of({1})));
  CHECK_FALSE(h.contains(w->set_of({0}), w->set_of({2})));
  CHECK(h.is_symmetric());
  for (std::size_t i = 0; i < h.domain().size(); ++i) CHECK(h.related(i, i));
  CHECK(h.singleton_restriction() == intersect(e, inverse(e)));

  const auto pe = oracle::pairs_of(e);
  for (std::size_t i = 0; i < h.domain().size(); ++i) {
    for (std::size_t j = 0; j < h.domain().size(); ++j) {
      CHECK(h.related(i, j) == oracle::hyper_close(pe, h.domain()[i].indices(), h.domain()[j].indices()));
    }
  }
}

TEST_CASE("hyper is monotone and restricts to E meet its inverse") {
  std::mt19937 rng(5);
  auto w = make_numbered_window(5);
  const BornologyPresentation born(w, {w->set_of({0, 1, 2}), w->set_of({1, 2, 3, 4})});
  for (int t = 0; t < 30; ++t) {
    const auto e = random_reflexive(w, rng, 0.2);
    const auto f = unite(e, random_reflexive(w, rng, 0.2));
    CHECK(hyper(e, born).subset_of(hyper(f, born)));
    const auto single = hyper(e, born).singleton_restriction();
    CHECK(single == intersect(e, inverse(e)));
  }
}

TEST_CASE("macro-uniform moduli") {
  auto w = line_window(6);
  const auto p = sup_metric_presentation(w, {0, 1, 2});
  std::vector<PointIndex> id{0, 1, 2, 3, 4, 5};
  const auto r = check_macro_uniform(id, p, p);
  REQUIRE(r.ok());
  for (std::size_t i = 0; i < 3; ++i) CHECK(*r.entries[i].target_scale == i);

  std::vector<PointIndex> constant(6, 3);
  const auto c = check_macro_uniform(constant, p, p);
  for (const auto& e : c.entries) CHECK(*e.target_scale == 0);
}

TEST_CASE("collapsing map on a discrete space has the modulus of its block") {
  auto w = make_numbered_window(3);
  const auto d = discrete_from_bornology(BornologyPresentation(w, {w->set_of({0}), w->set_of({0, 1})}));
  std::vector<PointIndex> f{0, 0, 2};
  const auto r = check_macro_uniform(f, d.space, d.space);
  REQUIRE(r.ok());
  CHECK(d.space.label(*r.entries[1].target_scale) == "E_{0}");
  CHECK(d.space.label(r.entries[1].source_scale) == "E_{0,1}");
}

TEST_CASE("a bounded window accepts any choice map") {
  auto w = make_numbered_window(4);
  const BornologyPresentation born(w, {w->all()});
  const auto d = discrete_from_bornology(born);
  auto f = SelectorMap::two_subsets_from(w, [](PointIndex a, PointIndex b) { return (a + b) % 2 == 0 ? a : b; });
  CHECK(check_selector(f, d.space, born).passed());
}

TEST_CASE("min-selector of the natural order with its interval bornology passes") {
  auto w = make_numbered_window(6);
  const auto order = LinearOrder::canonical(w);
  const auto born = interval_bornology(order);
  const auto d = discrete_from_bornology(born);
  const auto r = check_selector(two_selector_from_order(order), d.space, born);
  CHECK(r.passed());
  CHECK(r.domain_size == 15);
}

TEST_CASE("lexicographic selector on a grid fails with an explicit pair") {
  auto w = grid_window(9, 9);
  const auto space = sup_metric_presentation(w, {1, 2});
  const auto f = SelectorMap::two_subsets_from(
      w, [&](PointIndex a, PointIndex b) { return w->coordinates(b) < w->coordinates(a) ? b : a; });
  const auto r = check_selector(f, space, BornologyPresentation(w, {}));
  REQUIRE_FALSE(r.passed());
  const auto& m = r.moduli.front();
  REQUIRE(m.failure);
  CHECK(hyper_close(space.scale(0), m.failure->first, m.failure->second));
  CHECK(sup_distance(w->coordinates(m.failure->first_value), w->coordinates(m.failure->second_value)) > 2);
}

TEST_CASE("choice violations and missing entries are reported") {
  auto w = make_numbered_window(3);
  const auto space = CoarsePresentation(w, {Entourage::diagonal(w)});
  auto f = SelectorMap::two_subsets(w);
  f.assign_pair(0, 1, 0);
  f.assign_pair(0, 2, 1);
  f.assign_pair(1, 2, 1);
  const auto r = check_selector(f, space, BornologyPresentation(w, {}));
  REQUIRE(r.choice_violation);
  CHECK(*r.choice_violation == w->set_of({0, 2}));

  auto g = SelectorMap::two_subsets(w);
  g.assign_pair(0, 1, 0);
  CHECK(check_selector(g, space, BornologyPresentation(w, {})).missing);
}

TEST_CASE("2-selector moduli agree with a definition-level computation") {
  std::mt19937 rng(3);
  auto w = line_window(7, 1);
  const auto space = sup_metric_presentation(w, {0, 1, 2, 3});
  for (int t = 0; t < 20; ++t) {
    std::vector<PointIndex> perm{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto f = two_selector_from_order(LinearOrder(w, perm));
    const auto r = check_selector(f, space, BornologyPresentation(w, {}));
    const auto in = w->interior().indices();
    for (std::size_t k = 0; k < space.scale_count(); ++k) {
      const auto pe = oracle::pairs_of(space.scale(k));
      std::optional<std::size_t> expected;
      for (std::size_t j = 0; j < space.scale_count() && !expected; ++j) {
        bool ok = true;
        for (auto a : in) for (auto b : in) for (auto c : in) for (auto d : in) {
          if (a >= b || c >= d || !ok) continue;
          if (!oracle::hyper_close(pe, {a, b}, {c, d})) continue;
          ok = space.scale(j).contains(*f.choice(a, b), *f.choice(c, d));
        }
        if (ok) expected = j;
      }
      CHECK(r.moduli[k].target_scale == expected);
    }
  }
}

TEST_CASE("bounded sets of a metric grid contain its radius-1 balls") {
  auto w = grid_window(5, 5, 1);
  const auto p = sup_metric_presentation(w, {1});
  const auto born = bounded_sets_bornology(p);
  w->interior().for_each([&](PointIndex x) { CHECK(born.covered(p.scale(0).ball(x))); });
  for (const auto& b : born.base()) {
    bool is_ball = false;
    w->interior().for_each([&](PointIndex x) { is_ball = is_ball || b == p.scale(0).ball(x); });
    if (!is_ball) CHECK(born.covered(b));
  }
}

TEST_CASE("bounded sets of the diagonal are generated by singletons") {
  auto w = make_numbered_window(4);
  const auto born = bounded_sets_bornology(CoarsePresentation(w, {Entourage::diagonal(w)}));
  for (PointIndex x = 0; x < 4; ++x) {
    CHECK(std::find(born.base().begin(), born.base().end(), w->set_of({x})) != born.base().end());
  }
  // Only the running unions of the chain closure are added.
  CHECK(born.base().size() == 4 + 3);
}

TEST_CASE("discrete space then bounded sets round-trips the covered family") {
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3 + rng() % 5;
    auto w = make_numbered_window(n);
    std::vector<PointSet> base;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) {
      PointSet s(n);
      while (s.empty()) {
        for (PointIndex x = 0; x < n; ++x) {
          if (rng() % 3 == 0) s.insert(x);
        }
      }
      base.push_back(s);
    }
    const BornologyPresentation born(w, base);
    const auto d = discrete_from_bornology(born);
    const auto back = bounded_sets_bornology(d.space);
    // Bounded sets also contain every singleton, so compare on the covered points.
    const auto region = oracle::mask_of(born.covered_points());
    CHECK(oracle::covered_family_difference(back.base(), d.chain, region).empty());
  }
}

TEST_CASE("reports are deterministic") {
  auto w = grid_window(4, 4);
  const auto space = sup_metric_presentation(w, {1, 2});
  const auto f = SelectorMap::two_subsets_from(w, [](PointIndex a, PointIndex b) { return std::min(a, b); });
  const auto r1 = check_selector(f, space, BornologyPresentation(w, {}));
  const auto r2 = check_selector(f, space, BornologyPresentation(w, {}));
  REQUIRE(r1.moduli.size() == r2.moduli.size());
  for (std::size_t k = 0; k < r1.moduli.size(); ++k) CHECK(r1.moduli[k].target_scale == r2.moduli[k].target_scale);
}
