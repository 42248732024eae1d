#include "ballean/search/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

namespace ballean {

const char* to_string(CertificateStep::Kind kind) {
  switch (kind) {
    case CertificateStep::Kind::Decide: return "decide";
    case CertificateStep::Kind::Prune: return "prune";
    case CertificateStep::Kind::Conflict: return "conflict";
  }
  return "?";
}

const char* to_string(SearchKind kind) {
  switch (kind) {
    case SearchKind::Found: return "found";
    case SearchKind::Unsat: return "unsat";
    case SearchKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Bit k of a domain stands for values(i)[k].
using Domains = std::vector<std::uint8_t>;

constexpr std::uint8_t kBoth = 3;

bool single(std::uint8_t d) { return d == 1 || d == 2; }

int only_bit(std::uint8_t d) { return d == 1 ? 0 : 1; }

class Solver {
 public:
  Solver(const ConstraintScenario& sc, std::size_t max_steps) : sc_(sc), max_steps_(max_steps) {
    const auto m = sc.pair_count();
    degree_.resize(m);
    for (std::size_t i = 0; i < m; ++i) degree_[i] = sc.neighbours(i).count();
  }

  enum class Result { Sat, Unsat, Budget };

  // Fixes pair i to bit k and propagates; false on conflict. Appends steps
  // to `cert` when given.
  bool assign(Domains& d, std::size_t i, int k, std::size_t depth, std::vector<CertificateStep>* cert) {
    d[i] = static_cast<std::uint8_t>(1u << k);
    std::deque<std::size_t> queue{i};
    while (!queue.empty()) {
      const auto s = queue.front();
      queue.pop_front();
      const auto v = sc_.values(s)[only_bit(d[s])];
      bool conflict = false;
      std::size_t emptied = 0;
      sc_.neighbours(s).for_each([&](std::size_t j) {
        if (conflict || j == s) return;
        for (int b = 0; b < 2; ++b) {
          if (!(d[j] >> b & 1u)) continue;
          const auto w = sc_.values(j)[b];
          if (sc_.allowed(v, w)) continue;
          d[j] = static_cast<std::uint8_t>(d[j] & ~(1u << b));
          ++steps_;
          if (cert) cert->push_back({CertificateStep::Kind::Prune, depth, j, w, s, v});
          if (d[j] == 0) {
            conflict = true;
            emptied = j;
            return;
          }
          if (single(d[j])) queue.push_back(j);
        }
      });
      if (conflict) {
        if (cert) cert->push_back({CertificateStep::Kind::Conflict, depth, emptied, 0, 0, 0});
        return false;
      }
    }
    return true;
  }

  // Depth-first refutation; on Unsat `cert` holds the subtree.
  Result refute(const Domains& d, std::size_t depth, std::vector<CertificateStep>* cert) {
    if (over_budget()) return Result::Budget;
    const auto var = choose(d);
    if (!var) return Result::Sat;
    for (int k = 0; k < 2; ++k) {
      if (!(d[*var] >> k & 1u)) continue;
      ++steps_;
      if (cert) cert->push_back({CertificateStep::Kind::Decide, depth, *var, sc_.values(*var)[k], 0, 0});
      Domains next = d;
      if (!assign(next, *var, k, depth, cert)) continue;
      const auto r = refute(next, depth + 1, cert);
      if (r != Result::Unsat) return r;
    }
    return Result::Unsat;
  }

  bool over_budget() const { return max_steps_ != 0 && steps_ > max_steps_; }
  std::size_t steps() const { return steps_; }

 private:
  // Prefers a pair whose every value fails under propagation, then one with
  // a failing value, then the most constrained; ties by pair order.
  std::optional<std::size_t> choose(const Domains& d) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == kBoth) open.push_back(i);
    }
    if (open.empty()) return std::nullopt;
    std::stable_sort(open.begin(), open.end(),
                     [&](std::size_t a, std::size_t b) { return degree_[a] > degree_[b]; });
    std::optional<std::size_t> one_failing;
    for (const auto i : open) {
      int failures = 0;
      for (int k = 0; k < 2; ++k) {
        Domains probe = d;
        if (!assign(probe, i, k, 0, nullptr)) ++failures;
      }
      if (failures == 2) return i;
      if (failures == 1 && !one_failing) one_failing = i;
      if (over_budget()) break;
    }
    return one_failing ? one_failing : open.front();
  }

  const ConstraintScenario& sc_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
  std::vector<std::size_t> degree_;
};

}  // namespace

SearchOutcome search_two_selector(const ConstraintScenario& sc, const SearchOptions& options) {
  SearchOutcome out;
  Solver solver(sc, options.max_steps);
  const auto m = sc.pair_count();
  Domains d(m, kBoth);

  std::vector<CertificateStep> cert;
  const auto first = solver.refute(d, 0, &cert);
  if (first == Solver::Result::Budget || solver.over_budget()) {
    out.reason = "step budget exhausted";
    out.steps = solver.steps();
    return out;
  }
  if (first == Solver::Result::Unsat) {
    out.kind = SearchKind::Unsat;
    out.certificate = std::move(cert);
    out.steps = solver.steps();
    return out;
  }

  // Least witness: fix pairs in order, lower value first when the rest stays
  // satisfiable.
  for (std::size_t i = 0; i < m; ++i) {
    if (single(d[i])) continue;
    bool fixed = false;
    for (int k = 0; k < 2 && !fixed; ++k) {
      Domains next = d;
      if (!solver.assign(next, i, k, 0, nullptr)) continue;
      const auto r = solver.refute(next, 0, nullptr);
      if (r == Solver::Result::Budget || solver.over_budget()) {
        out.reason = "step budget exhausted";
        out.steps = solver.steps();
        return out;
      }
      if (r == Solver::Result::Sat) {
        d = std::move(next);
        fixed = true;
      }
    }
  }

  auto f = SelectorMap::two_subsets(sc.window_ptr());
  for (std::size_t i = 0; i < m; ++i) {
    const auto v = sc.values(i)[only_bit(d[i])];
    out.values.push_back(v);
    f.assign_pair(sc.pair(i).first, sc.pair(i).second, v);
  }
  out.witness = std::move(f);
  out.kind = SearchKind::Found;
  out.steps = solver.steps();
  return out;
}

namespace {

class Replayer {
 public:
  Replayer(const ConstraintScenario& sc, const std::vector<CertificateStep>& cert) : sc_(sc), cert_(cert) {}

  bool refute(const Domains& d, std::size_t depth) {
    if (!expect(CertificateStep::Kind::Decide, depth)) return false;
    const auto var = cert_[pos_].pair;
    if (var >= d.size()) return fail("decision on an unknown pair");
    if (!(d[var] == kBoth)) return fail("decision on a pair that is already fixed");
    for (int k = 0; k < 2; ++k) {
      if (!expect(CertificateStep::Kind::Decide, depth)) return false;
      const auto& step = cert_[pos_];
      if (step.pair != var || step.value != sc_.values(var)[k]) {
        return fail("branch " + std::to_string(k) + " of pair " + std::to_string(var) + " is missing");
      }
      ++pos_;
      Domains next = d;
      next[var] = static_cast<std::uint8_t>(1u << k);
      while (pos_ < cert_.size() && cert_[pos_].kind == CertificateStep::Kind::Prune &&
             cert_[pos_].depth == depth) {
        if (!prune(next, cert_[pos_])) return false;
        ++pos_;
      }
      if (pos_ < cert_.size() && cert_[pos_].kind == CertificateStep::Kind::Conflict &&
          cert_[pos_].depth == depth) {
        const auto p = cert_[pos_].pair;
        if (p >= next.size() || next[p] != 0) return fail("conflict on a pair that still has values");
        ++pos_;
        continue;
      }
      if (!refute(next, depth + 1)) return false;
    }
    return true;
  }

  bool finished() const { return pos_ == cert_.size(); }
  const std::string& error() const { return error_; }
  std::size_t position() const { return pos_; }

 private:
  bool prune(Domains& d, const CertificateStep& s) {
    const auto m = d.size();
    if (s.pair >= m || s.source_pair >= m) return fail("prune names an unknown pair");
    if (!single(d[s.source_pair]) || sc_.values(s.source_pair)[only_bit(d[s.source_pair])] != s.source_value) {
      return fail("prune source is not fixed to the stated value");
    }
    if (!sc_.close(s.source_pair, s.pair)) return fail("prune along a pair that is not close");
    if (sc_.allowed(s.source_value, s.value)) return fail("pruned value is allowed");
    const auto vals = sc_.values(s.pair);
    int bit = -1;
    for (int k = 0; k < 2; ++k) {
      if (vals[k] == s.value) bit = k;
    }
    if (bit < 0 || !(d[s.pair] >> bit & 1u)) return fail("pruned value is not in the domain");
    d[s.pair] = static_cast<std::uint8_t>(d[s.pair] & ~(1u << bit));
    return true;
  }

  bool expect(CertificateStep::Kind kind, std::size_t depth) {
    if (pos_ >= cert_.size()) return fail("certificate ends early");
    if (cert_[pos_].kind != kind || cert_[pos_].depth != depth) {
      return fail(std::string("expected ") + to_string(kind) + " at depth " + std::to_string(depth));
    }
    return true;
  }

  bool fail(std::string why) {
    if (error_.empty()) error_ = "step " + std::to_string(pos_) + ": " + std::move(why);
    return false;
  }

  const ConstraintScenario& sc_;
  const std::vector<CertificateStep>& cert_;
  std::size_t pos_ = 0;
  std::string error_;
};

}  // namespace

ReplayResult replay_certificate(const ConstraintScenario& sc, const std::vector<CertificateStep>& cert) {
  if (sc.pair_count() == 0) return {false, "a scenario without pairs is satisfiable"};
  Replayer r(sc, cert);
  const Domains d(sc.pair_count(), kBoth);
  if (!r.refute(d, 0)) return {false, r.error()};
  if (!r.finished()) return {false, "trailing steps after the refutation"};
  return {true, "refutation replays"};
}

}  // namespace ballean
