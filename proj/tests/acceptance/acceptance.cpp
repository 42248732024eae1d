// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ballean/cli/run.hpp"
#include "ballean/core/hyper.hpp"
#include "ballean/orders/constructions.hpp"
#include "ballean/search/generators.hpp"
#include "ballean/search/solver.hpp"
#include "oracles.hpp"

using namespace ballean;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

// Orders on 3..7 points: every permutation up to 5, then 200 samples.
std::vector<std::vector<PointIndex>> order_population() {
  std::vector<std::vector<PointIndex>> out;
  for (std::size_t n = 3; n <= 5; ++n) {
    std::vector<PointIndex> seq(n);
    std::iota(seq.begin(), seq.end(), PointIndex{0});
    do out.push_back(seq);
    while (std::next_permutation(seq.begin(), seq.end()));
  }
  std::mt19937 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    std::vector<PointIndex> seq(6 + i % 2);
    std::iota(seq.begin(), seq.end(), PointIndex{0});
    std::shuffle(seq.begin(), seq.end(), rng);
    out.push_back(seq);
  }
  return out;
}

// Full interior, then the order's least, greatest, or both extremes dropped.
std::vector<LinearOrder> window_variants(const std::vector<PointIndex>& seq) {
  std::vector<LinearOrder> out;
  const auto n = seq.size();
  for (int v = 0; v < 4; ++v) {
    auto in = PointSet::full(n);
    if (v & 1) in.erase(seq.front());
    if (v & 2) in.erase(seq.back());
    out.emplace_back(make_numbered_window(n)->with_interior(in), seq);
  }
  return out;
}

std::string show(const std::vector<PointIndex>& seq) {
  std::string s = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + std::to_string(seq[i]);
  return s + "]";
}

Outcome criterion1(const std::vector<std::vector<PointIndex>>& population) {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& seq : population) {
    for (const auto& order : window_variants(seq)) {
      const auto born = interval_bornology(order);
      const auto space = discrete_from_bornology(born).space;
      ++checks;
      if (!check_selector(two_selector_from_order(order), space, born).passed()) {
        o.fail("2-selector of " + show(seq));
      }
      for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
        const auto split = order.with_split({seq[p], seq[p + 1]});
        ++checks;
        if (!check_selector(selector_from_split_order(split), space, born).passed()) {
          o.fail("split selector of " + show(seq) + " at " + std::to_string(p));
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " selector checks";
  return o;
}

Outcome criterion2(const std::vector<std::vector<PointIndex>>& population) {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& seq : population) {
    for (const auto& order : window_variants(seq)) {
      ++cases;
      const auto born = interval_bornology(order);
      const auto d = order_from_two_selector(two_selector_from_order(order), born);
      if (d.outcome != ConstructionOutcome::Derived) {
        o.fail(std::string(to_string(d.outcome)) + " on " + show(seq) + ": " + d.reason);
        continue;
      }
      const auto region = oracle::mask_of(order.window().interior());
      if (!oracle::covered_family_difference(interval_bornology(*d.order).base(), born.base(), region).empty()) {
        o.fail("covered family differs on " + show(seq));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " derivations";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<PointIndex> perm(n);
    std::iota(perm.begin(), perm.end(), PointIndex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    // Strictly increasing prefix sizes of a shuffled point list.
    std::vector<std::size_t> sizes(n);
    std::iota(sizes.begin(), sizes.end(), std::size_t{1});
    std::shuffle(sizes.begin(), sizes.end(), rng);
    sizes.resize(1 + rng() % n);
    std::sort(sizes.begin(), sizes.end());
    auto w = make_numbered_window(n);
    std::vector<PointSet> chain;
    std::vector<std::vector<PointIndex>> enums;
    std::size_t prev = 0;
    for (const auto s : sizes) {
      PointSet b(n);
      for (std::size_t i = 0; i < s; ++i) b.insert(perm[i]);
      chain.push_back(b);
      std::vector<PointIndex> part(perm.begin() + prev, perm.begin() + s);
      std::shuffle(part.begin(), part.end(), rng);
      enums.push_back(part);
      prev = s;
    }
    const ChainBase base(w, chain, enums);
    const auto order = interval_base_from_chain(base);
    const auto diff = oracle::covered_family_difference(interval_bornology(order).base(), chain,
                                                        oracle::mask_of(w->all()));
    if (!diff.empty()) o.fail("covered family differs in case " + std::to_string(t));
    for (const auto& b : chain) {
      if (order.interval(order.at(0), order.at(b.count() - 1)) != b) {
        o.fail("chain element is not an initial interval in case " + std::to_string(t));
      }
    }
  }
  if (o.ok) o.detail = "100 chains";
  return o;
}

WindowPtr embedded_window(std::size_t k, bool planar) {
  std::vector<std::string> ids;
  std::vector<Coordinates> coords;
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(k))));
  for (std::size_t i = 0; i < k; ++i) {
    ids.push_back(std::to_string(i));
    if (planar) {
      coords.push_back({static_cast<std::int64_t>(i % cols), static_cast<std::int64_t>(i / cols)});
    } else {
      coords.push_back({static_cast<std::int64_t>(i)});
    }
  }
  return std::make_shared<const Window>(std::move(ids), PointSet::full(k), std::move(coords));
}

CoarsePresentation all_radii(const WindowPtr& w) {
  std::int64_t diameter = 0;
  for (PointIndex a = 0; a < w->size(); ++a) {
    for (PointIndex b = 0; b < w->size(); ++b) {
      diameter = std::max(diameter, sup_distance(w->coordinates(a), w->coordinates(b)));
    }
  }
  std::vector<std::int64_t> radii;
  for (std::int64_t r = 1; r <= std::max<std::int64_t>(diameter, 1); ++r) radii.push_back(r);
  return sup_metric_presentation(w, radii);
}

Outcome criterion4(const std::vector<std::vector<PointIndex>>& population) {
  Outcome o;
  std::size_t transfers = 0;
  auto transfer = [&](const SelectorMap& f, const CoarsePresentation& space, const std::string& label) {
    ++transfers;
    const auto r = transfer_to_discrete(f, space);
    if (!r.passed()) o.fail(label);
  };
  for (const auto& seq : population) {
    const auto k = seq.size();
    const LinearOrder order(make_numbered_window(k), seq);
    std::vector<std::pair<std::string, std::function<PointIndex(PointIndex, PointIndex)>>> rules;
    const auto f = two_selector_from_order(order);
    rules.emplace_back("2-selector", [f](PointIndex a, PointIndex b) { return *f.choice(a, b); });
    for (std::size_t p = 0; p + 1 < k; ++p) {
      const auto s = selector_from_split_order(order.with_split({seq[p], seq[p + 1]}));
      rules.emplace_back("split " + std::to_string(p), [s, w = order.window_ptr()](PointIndex a, PointIndex b) {
        return *s.choice(w->set_of({a, b}));
      });
    }
    for (const bool planar : {false, true}) {
      const auto w = embedded_window(k, planar);
      const auto space = all_radii(w);
      for (const auto& [name, rule] : rules) {
        transfer(SelectorMap::two_subsets_from(w, rule), space,
                 name + " of " + show(seq) + (planar ? " on a grid" : " on a line"));
      }
    }
  }
  // Min selector of the row-major order on larger grids.
  for (std::size_t c = 2; c <= 9; ++c) {
    for (const std::size_t r : {std::size_t{1}, c}) {
      const auto w = grid_window(c, r);
      const auto space = sup_metric_presentation(w, {1, 2, 4, 8});
      transfer(two_selector_from_order(LinearOrder::canonical(w)), space,
               "row-major min on " + std::to_string(c) + "x" + std::to_string(r));
    }
  }
  if (o.ok) o.detail = std::to_string(transfers) + " transfers";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::int64_t n = 1; n <= 4; ++n) {
    const auto sc = antipodal_grid_scenario(n);
    const auto out = search_two_selector(sc);
    const auto tag = "n=" + std::to_string(n);
    if (out.kind != SearchKind::Unsat) {
      o.fail(tag + " is " + to_string(out.kind));
      continue;
    }
    const auto replay = replay_certificate(sc, out.certificate);
    if (!replay.ok) o.fail(tag + " replay: " + replay.detail);
    if (n <= 2 && oracle::brute_search(sc)) o.fail(tag + " brute force finds a witness");
  }
  if (o.ok) o.detail = "n=1..4 unsat, certificates replay";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto side = ngon_side_length(8);
  const auto tight = ngon_scenario(8, side, 1.0);
  const auto t = search_two_selector(tight);
  if (t.kind != SearchKind::Unsat) o.fail("epsilon=1 is " + std::string(to_string(t.kind)));
  else if (!replay_certificate(tight, t.certificate).ok) o.fail("epsilon=1 certificate does not replay");
  if (oracle::brute_search(tight)) o.fail("brute force finds a witness at epsilon=1");

  const auto loose = ngon_scenario(8, side, 2.0);
  const auto l = search_two_selector(loose);
  if (l.kind != SearchKind::Found) o.fail("epsilon=2 is " + std::string(to_string(l.kind)));
  else if (check_two_selector_against_scenario(loose, *l.witness)) o.fail("epsilon=2 witness is invalid");
  if (!oracle::brute_search(loose)) o.fail("brute force finds no witness at epsilon=2");
  if (o.ok) o.detail = "epsilon=1 unsat, epsilon=2 found";
  return o;
}

Outcome criterion7() {
  Outcome o;
  constexpr std::size_t n = 4;
  auto w = make_numbered_window(n);
  std::vector<std::pair<PointIndex, PointIndex>> off;
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (x != y) off.emplace_back(x, y);
    }
  }
  auto relation = [&](std::uint32_t bits) {
    std::vector<PointSet> balls;
    for (PointIndex x = 0; x < n; ++x) balls.push_back(w->set_of({x}));
    for (std::size_t i = 0; i < off.size(); ++i) {
      if (bits >> i & 1u) balls[off[i].first].insert(off[i].second);
    }
    return Entourage(w, balls);
  };
  const BornologyPresentation everything(w, {w->all()});
  std::size_t cases = 0;

  for (std::uint32_t bits = 0; bits < (1u << off.size()); ++bits) {
    const auto e = relation(bits);
    cases += 2;
    if (!(inverse(inverse(e)) == e)) o.fail("inverse is not an involution");
    if (!(hyper(e, everything).singleton_restriction() == intersect(e, inverse(e)))) {
      o.fail("singleton restriction differs from E & E^-1");
    }
    if (bits % 16 == 0) {
      const auto he = hyper(e, everything);
      for (std::size_t i = 0; i < off.size(); ++i) {
        if (bits >> i & 1u) continue;
        ++cases;
        if (!he.subset_of(hyper(relation(bits | 1u << i), everything))) o.fail("hyper is not monotone");
      }
    }
  }

  // Diagonal plus at most two off-diagonal pairs.
  std::vector<Entourage> small;
  std::vector<oracle::Relation> small_pairs;
  for (std::size_t i = 0; i <= off.size(); ++i) {
    for (std::size_t j = i; j <= off.size(); ++j) {
      if (j == i && i != off.size()) continue;
      std::uint32_t bits = 0;
      if (i < off.size()) bits |= 1u << i;
      if (j < off.size()) bits |= 1u << j;
      small.push_back(relation(bits));
      small_pairs.push_back(oracle::pairs_of(small.back()));
    }
  }
  for (std::size_t a = 0; a < small.size(); ++a) {
    for (std::size_t b = 0; b < small.size(); ++b) {
      const auto ab = compose(small[a], small[b]);
      if (oracle::pairs_of(ab) != oracle::compose(small_pairs[a], small_pairs[b], n)) {
        o.fail("compose differs from the definition");
      }
      for (std::size_t c = 0; c < small.size(); ++c) {
        ++cases;
        if (!(compose(ab, small[c]) == compose(small[a], compose(small[b], small[c])))) {
          o.fail("compose is not associative");
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(BALLEAN_SCENARIO_DIR)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    for (const auto format : {cli::Format::Json, cli::Format::Text}) {
      cli::RunOptions opts;
      opts.scenario_path = path.string();
      opts.format = format;
      if (cli::run(opts).report != cli::run(opts).report) o.fail(path.filename().string() + " differs");
    }
  }
  if (files.empty()) o.fail("no bundled scenarios");
  if (o.ok) o.detail = std::to_string(files.size()) + " scenarios, json and text";
  return o;
}

}  // namespace

int main() {
  const auto population = order_population();
  struct Criterion {
    int number;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, 10, [&] { return criterion1(population); }},
      {2, 30, [&] { return criterion2(population); }},
      {3, 5, criterion3},
      {4, 30, [&] { return criterion4(population); }},
      {5, 60, criterion5},
      {6, 5, criterion6},
      {7, 20, criterion7},
      {8, 0, criterion8},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) o.fail("over the time limit");
    all = all && o.ok;
    std::printf("criterion %d: %s (%.2fs) %s\n", c.number, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
