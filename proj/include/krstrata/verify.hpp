#pragma once

/**
 * @file verify.hpp
 * @brief Formula-versus-enumeration checks, grouped per genus and p-rank.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "krstrata/admissible.hpp"
#include "krstrata/bruhat.hpp"
#include "krstrata/errors.hpp"
#include "krstrata/extended_affine.hpp"
#include "krstrata/strata.hpp"

namespace krs {

using ReportValue = std::variant<std::int64_t, std::string>;

struct CheckResult {
  std::string name;
  std::optional<int> prank; ///< empty for checks over the whole genus
  ReportValue expected;
  ReportValue actual;
  bool pass = false;
  std::vector<std::string> counterexamples; ///< element ids, canonical order, truncated
};

/// Everything computed for one (g, d) cell. Genus-wide checks go into a report
/// without p-rank.
struct StrataReport {
  int genus = 0;
  std::optional<int> prank;
  std::optional<std::int64_t> dim_formula;
  std::optional<std::int64_t> dim_empirical;
  std::optional<BigInt> count_formula;
  std::optional<std::int64_t> count_empirical;
  std::optional<std::vector<std::string>> classified_max_set;
  std::optional<std::vector<std::string>> brute_max_set;
  std::optional<std::vector<std::string>> closure_predicted;
  std::optional<std::vector<std::string>> closure_computed;
  std::vector<CheckResult> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"dim",     "counts",   "max-set",      "length-formula",
                                              "closure", "adm-card", "bruhat-cross", "reduced-word"};
  return names;
}

/// Checks that compare pairs of admissible elements.
inline bool is_quadratic_check(const std::string& name) { return name == "closure" || name == "bruhat-cross"; }

inline int default_budget(const std::string& name) { return is_quadratic_check(name) ? 4 : 5; }

/// Comma-separated check list; "all" selects every check.
inline std::vector<std::string> parse_checks(const std::string& list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string::npos) end = list.size();
    const std::string item = list.substr(start, end - start);
    if (item == "all") {
      out = check_names();
    } else {
      const auto& names = check_names();
      if (std::find(names.begin(), names.end(), item) == names.end())
        throw InvalidValue("unknown check '" + item + "'");
      if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
    }
    start = end + 1;
  }
  return out;
}

struct VerifyOptions {
  std::optional<int> budget;          ///< largest genus allowed for every check
  std::size_t max_counterexamples = 10;
};

namespace detail {

inline ReportValue big_value(const BigInt& v) {
  if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN)) return static_cast<std::int64_t>(v);
  return v.str();
}

class Collector {
public:
  explicit Collector(std::size_t cap) : cap_(cap) {}

  void add(std::vector<std::string>& out, const std::string& id) const {
    if (out.size() < cap_) out.push_back(id);
  }

  /// Elements in exactly one of two sorted id lists.
  std::vector<std::string> symmetric_difference(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b) const {
    std::vector<std::string> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    if (diff.size() > cap_) diff.resize(cap_);
    return diff;
  }

private:
  std::size_t cap_;
};

inline std::vector<std::string> sorted_ids(const std::vector<AdmissibleElement>& xs) {
  auto ids = element_ids(xs);
  std::sort(ids.begin(), ids.end());
  return ids;
}

/// name, prank, expected count, list of failures.
inline CheckResult count_check(std::string name, std::optional<int> d, std::int64_t expected,
                               std::int64_t failures, std::vector<std::string> bad) {
  return {std::move(name), d, expected, expected - failures, failures == 0, std::move(bad)};
}

inline int letters_from_ends(int g, const ReducedWord& word) {
  return static_cast<int>(std::count_if(word.letters.begin(), word.letters.end(),
                                        [g](int s) { return s == 0 || s == g; }));
}

struct CellContext {
  int g;
  const std::vector<AdmissibleElement>& all;
  std::map<int, std::vector<AdmissibleElement>> by_prank;
  std::map<int, std::vector<AdmissibleElement>> closures;
  std::map<int, std::vector<AdmissibleElement>> maximal;
};

inline void run_dim(int g, int d, StrataReport& rep) {
  const int formula = dim_formula(g, d);
  const int empirical = max_length_empirical(g, d);
  rep.dim_formula = formula;
  rep.dim_empirical = empirical;
  rep.checks.push_back({"dim", d, std::int64_t{formula}, std::int64_t{empirical}, formula == empirical, {}});
  const int codim = g * (g + 1) / 2 - empirical;
  rep.checks.push_back({"dim/codim", d, std::int64_t{codim_formula(g, d)}, std::int64_t{codim},
                        codim == codim_formula(g, d), {}});
}

inline void run_counts(int g, int d, CellContext& ctx, StrataReport& rep) {
  const BigInt formula = maximal_count_formula(g, d);
  const auto& brute = ctx.maximal.at(d);
  rep.count_formula = formula;
  rep.count_empirical = static_cast<std::int64_t>(brute.size());
  rep.checks.push_back({"counts", d, big_value(formula), static_cast<std::int64_t>(brute.size()),
                        formula == BigInt(brute.size()), {}});
}

inline void run_max_set(int g, int d, CellContext& ctx, const Collector& col, StrataReport& rep) {
  std::vector<AdmissibleElement> classified;
  for (auto& c : maximal_set_classified(g, d)) classified.push_back(std::move(c.element));
  const auto cls = sorted_ids(classified);
  const auto brute = sorted_ids(ctx.maximal.at(d));
  rep.classified_max_set = cls;
  rep.brute_max_set = brute;
  rep.checks.push_back({"max-set", d, static_cast<std::int64_t>(cls.size()),
                        static_cast<std::int64_t>(brute.size()), cls == brute, col.symmetric_difference(cls, brute)});
}

inline void run_length_formula(int g, int d, CellContext& ctx, const Collector& col, StrataReport& rep) {
  const auto& elems = ctx.by_prank.at(d);
  std::int64_t pm = 0;
  std::int64_t bad_formula = 0;
  std::int64_t bad_bound = 0;
  std::int64_t bad_strip = 0;
  std::vector<std::string> cx_formula;
  std::vector<std::string> cx_bound;
  std::vector<std::string> cx_strip;
  const int bound = dim_formula(g, d);
  const int drop = (g + 1) * g / 2 - (g - d + 1) * (g - d) / 2;
  for (const auto& x : elems) {
    if (x.length() > bound) {
      ++bad_bound;
      col.add(cx_bound, element_id(x));
    }
    if (!x.possibly_maximal()) continue;
    ++pm;
    const int word_len = static_cast<int>(reduced_word(x.elem()).letters.size());
    if (length_formula_possibly_maximal(x) != x.length() || word_len != x.length()) {
      ++bad_formula;
      col.add(cx_formula, element_id(x));
    }
    if (d < g && x.length() - strip_fixed_pairs(x).length() != drop) {
      ++bad_strip;
      col.add(cx_strip, element_id(x));
    }
  }
  rep.checks.push_back(count_check("length-formula", d, pm, bad_formula, std::move(cx_formula)));
  rep.checks.push_back(count_check("length-formula/bound", d, static_cast<std::int64_t>(elems.size()), bad_bound,
                                   std::move(cx_bound)));
  if (d < g) rep.checks.push_back(count_check("length-formula/strip", d, pm, bad_strip, std::move(cx_strip)));
}

inline void run_closure(int g, int d, CellContext& ctx, const Collector& col, StrataReport& rep) {
  const auto& computed = ctx.closures.at(d);
  const auto comp_ids = sorted_ids(computed);
  const auto pred_ids = sorted_ids(closure_predicted(g, d));
  rep.closure_computed = comp_ids;
  rep.closure_predicted = pred_ids;
  rep.checks.push_back({"closure", d, static_cast<std::int64_t>(pred_ids.size()),
                        static_cast<std::int64_t>(comp_ids.size()), comp_ids == pred_ids,
                        col.symmetric_difference(pred_ids, comp_ids)});

  // no element of higher p-rank in the closure
  std::int64_t above = 0;
  std::vector<std::string> cx;
  for (const auto& x : computed)
    if (x.prank() > d) {
      ++above;
      col.add(cx, element_id(x));
    }
  rep.checks.push_back({"closure/prank-bound", d, std::int64_t{0}, above, above == 0, std::move(cx)});

  // p-rank d-2 lies in the closure of p-rank d
  if (d >= 2 && d != g - 1) {
    const auto& lower = ctx.by_prank.at(d - 2);
    std::int64_t missing = 0;
    std::vector<std::string> miss;
    for (const auto& x : lower)
      if (!std::binary_search(computed.begin(), computed.end(), x)) {
        ++missing;
        col.add(miss, element_id(x));
      }
    rep.checks.push_back(count_check("closure/two-below", d, static_cast<std::int64_t>(lower.size()), missing,
                                     std::move(miss)));
  }

  // top-dimensional elements for even g-d avoid the closures at odd distance
  if ((g - d) % 2 == 0) {
    std::int64_t hits = 0;
    std::vector<std::string> hit;
    for (int u = 1; u < g - d; u += 2) {
      const auto& cl = ctx.closures.at(d + u);
      for (const auto& x : ctx.maximal.at(d))
        if (std::binary_search(cl.begin(), cl.end(), x)) {
          ++hits;
          col.add(hit, element_id(x));
        }
    }
    rep.checks.push_back({"closure/top-avoids-odd", d, std::int64_t{0}, hits, hits == 0, std::move(hit)});
  }

  // The two complementary descriptions of the closure for d = g-1.
  if (d == g - 1) {
    std::vector<AdmissibleElement> nonzero_u;
    std::vector<AdmissibleElement> zero_u;
    for (const auto& x : ctx.all) (x.u().is_zero() ? zero_u : nonzero_u).push_back(x);
    const auto nz = sorted_ids(nonzero_u);
    const auto z = sorted_ids(zero_u);
    std::string verdict = "neither";
    if (comp_ids == nz) verdict = "u!=0";
    else if (comp_ids == z) verdict = "w({1..g})={1..g}";
    rep.checks.push_back({"closure/g-1-condition", d, std::string("u!=0"), verdict, verdict == "u!=0",
                          verdict == "u!=0" ? std::vector<std::string>{} : col.symmetric_difference(nz, comp_ids)});
  }
}

inline void run_adm_card(int g, CellContext& ctx, StrataReport& rep) {
  const long long formula = adm_cardinality_formula(g);
  const auto n = static_cast<std::int64_t>(ctx.all.size());
  rep.checks.push_back({"adm-card", std::nullopt, std::int64_t{formula}, n, formula == n, {}});
  if (g <= 3) {
    const long long scan = minuscule_alcove_scan(g);
    rep.checks.push_back({"adm-card/minuscule-scan", std::nullopt, std::int64_t{formula}, std::int64_t{scan},
                          formula == scan, {}});
  }
}

inline void run_reduced_word(int g, const Collector& col, StrataReport& rep) {
  const auto orbit = weyl_orbit_mu(g);
  std::int64_t bad = 0;
  std::vector<std::string> cx;
  for (const auto& v : orbit) {
    const auto t = AffineElement::translation(v);
    const auto word = reduced_word(t);
    const bool ok = letters_from_ends(g, word) == g && word.omega_part == 1 &&
                    static_cast<int>(word.letters.size()) == g * (g + 1) / 2 && assemble(g, word) == t;
    if (!ok) {
      ++bad;
      col.add(cx, element_id(t));
    }
  }
  rep.checks.push_back(count_check("reduced-word", std::nullopt, static_cast<std::int64_t>(orbit.size()), bad,
                                   std::move(cx)));
}

/// Same-coset elements with x0 in a box around mu; the box shrinks for g >= 4.
inline std::vector<AffineElement> coset_sweep(int g) {
  const int lo = g <= 3 ? -1 : 0;
  const int hi = g <= 3 ? 2 : 1;
  std::vector<AffineElement> out;
  std::vector<int> half(static_cast<std::size_t>(g), lo);
  const auto group = weyl_group(g);
  while (true) {
    std::vector<int> x0(static_cast<std::size_t>(2 * g));
    for (int i = 0; i < g; ++i) {
      x0[i] = half[i];
      x0[2 * g - 1 - i] = 1 - half[i];
    }
    for (const auto& w : group) out.push_back({Cocharacter(x0), w});
    int k = 0;
    while (k < g && half[k] == hi) half[k++] = lo;
    if (k == g) break;
    ++half[k];
  }
  return out;
}

inline void run_bruhat_cross(int g, CellContext& ctx, const Collector& col, StrataReport& rep) {
  auto& order = thread_bruhat();
  const auto& all = ctx.all;

  { // criterion, minuscule alcove and translation domination agree
    const auto sweep = coset_sweep(g);
    std::int64_t bad = 0;
    std::vector<std::string> cx;
    for (const auto& x : sweep) {
      const bool crit = is_mu_admissible(x);
      const bool alcove = is_minuscule_size_g(to_alcove(x));
      const bool dom = admissible_by_domination(x);
      if (crit != alcove || crit != dom) {
        ++bad;
        col.add(cx, element_id(x));
      }
    }
    rep.checks.push_back(count_check("bruhat-cross/three-way", std::nullopt, static_cast<std::int64_t>(sweep.size()),
                                     bad, std::move(cx)));
  }

  { // x < s_alpha x exactly when x is on the base side of H_alpha
    std::int64_t total = 0;
    std::int64_t bad = 0;
    std::vector<std::string> cx;
    for (const auto& x : all)
      for (const auto& beta : positive_roots(g))
        for (int level = -1; level <= 1; ++level) {
          const AffineRoot alpha{beta, 1, level};
          ++total;
          if (same_side_as_base(x.elem(), alpha) != order.leq(x.elem(), multiply(affine_reflection(alpha), x.elem()))) {
            ++bad;
            col.add(cx, element_id(x));
          }
        }
    rep.checks.push_back(count_check("bruhat-cross/wall-side", std::nullopt, total, bad, std::move(cx)));
  }

  { // transitive closure of the cover relation on Adm(mu) is the order itself
    const auto diagram = covers(all);
    const std::size_t n = diagram.nodes.size();
    std::vector<std::vector<std::size_t>> up(n);
    for (const auto& [lo, hi] : diagram.edges) up[lo].push_back(hi);
    std::int64_t bad = 0;
    std::vector<std::string> cx;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<char> reach(n, 0);
      std::vector<std::size_t> stack{i};
      reach[i] = 1;
      while (!stack.empty()) {
        const auto k = stack.back();
        stack.pop_back();
        for (auto j : up[k])
          if (!reach[j]) {
            reach[j] = 1;
            stack.push_back(j);
          }
      }
      for (std::size_t j = 0; j < n; ++j)
        if (static_cast<bool>(reach[j]) != order.leq(diagram.nodes[i], diagram.nodes[j])) {
          ++bad;
          col.add(cx, element_id(diagram.nodes[i]) + " " + element_id(diagram.nodes[j]));
        }
    }
    rep.checks.push_back(count_check("bruhat-cross/hasse", std::nullopt, static_cast<std::int64_t>(n * n), bad,
                                     std::move(cx)));
  }

  { // clearing a sign bit off a sigma-fixed point goes up
    std::int64_t total = 0;
    std::int64_t bad = 0;
    std::vector<std::string> cx;
    for (const auto& x : all)
      for (int i = 1; i <= g; ++i) {
        if (x.u()(i) == 0 || x.sigma()(i) == i) continue;
        auto bits = x.u().bits();
        bits[i - 1] = 0;
        const auto y = admissible_from(make_signed(SignVector(std::move(bits)), x.sigma()), x.fixed_values());
        ++total;
        if (!order.leq(x.elem(), y.elem())) {
          ++bad;
          col.add(cx, element_id(x) + " " + element_id(y));
        }
      }
    rep.checks.push_back(count_check("bruhat-cross/sign-bits", std::nullopt, total, bad, std::move(cx)));
  }

  { // possibly maximal cover
    std::int64_t bad = 0;
    std::vector<std::string> cx;
    for (const auto& x : all) {
      const auto y = possibly_maximal_cover(x);
      const bool ok = y.possibly_maximal() && y.prank() == x.prank() && y.sigma() == x.sigma() &&
                      y.cycle_set().size() == x.cycle_set().size() && order.leq(x.elem(), y.elem());
      if (!ok) {
        ++bad;
        col.add(cx, element_id(x) + " " + element_id(y));
      }
    }
    rep.checks.push_back(count_check("bruhat-cross/cover", std::nullopt, static_cast<std::int64_t>(all.size()), bad,
                                     std::move(cx)));
  }

  { // going up along each cycle of a possibly maximal element
    std::int64_t total = 0;
    std::int64_t bad = 0;
    std::vector<std::string> cx;
    for (const auto& x : all) {
      if (!x.possibly_maximal()) continue;
      for (const auto& z : x.cycle_set()) {
        ++total;
        const int gain = z.order() == 2 ? 2 : 1;
        bool ok = false;
        std::string yid = "none";
        try {
          const auto y = going_up(x, z);
          yid = element_id(y);
          ok = y.prank() == x.prank() + gain && order.leq(x.elem(), y.elem());
        } catch (const InvalidValue&) {
        }
        if (!ok) {
          ++bad;
          col.add(cx, element_id(x) + " " + yid);
        }
      }
    }
    rep.checks.push_back(count_check("bruhat-cross/going-up", std::nullopt, total, bad, std::move(cx)));
  }

  { // one step up whenever sigma is not a product of (g-d)/2 transpositions
    std::int64_t total = 0;
    std::int64_t bad = 0;
    std::vector<std::string> cx;
    for (const auto& x : all) {
      const auto& zs = x.cycle_set();
      if (std::all_of(zs.begin(), zs.end(), [](const Cycle& z) { return z.order() == 2; })) continue;
      ++total;
      const auto y = raise_prank_by_one(x);
      if (!y || y->prank() != x.prank() + 1 || !order.leq(x.elem(), y->elem())) {
        ++bad;
        col.add(cx, element_id(x) + " " + (y ? element_id(*y) : std::string("none")));
      }
    }
    rep.checks.push_back(count_check("bruhat-cross/raise-one", std::nullopt, total, bad, std::move(cx)));
  }

  { // two steps up from p-rank d-2 for d <= g, d != g-1
    std::int64_t total = 0;
    std::int64_t bad = 0;
    std::vector<std::string> cx;
    for (const auto& x : all) {
      const int d = x.prank() + 2;
      if (d > g || d == g - 1) continue;
      ++total;
      const auto y = raise_prank_by_two(x);
      if (!y || y->prank() != d || !order.leq(x.elem(), y->elem())) {
        ++bad;
        col.add(cx, element_id(x) + " " + (y ? element_id(*y) : std::string("none")));
      }
    }
    rep.checks.push_back(count_check("bruhat-cross/raise-two", std::nullopt, total, bad, std::move(cx)));
  }
}

} // namespace detail

/// Run the selected checks at genus g. Throws BudgetExceeded when g is above the
/// budget of any selected check.
inline std::vector<StrataReport> verify(int g, const std::vector<std::string>& checks, const VerifyOptions& options = {}) {
  if (g < 1) throw InvalidValue("verify: genus must be positive");
  for (const auto& name : checks) {
    const auto& names = check_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw InvalidValue("unknown check '" + name + "'");
    const int limit = options.budget.value_or(default_budget(name));
    if (g > limit)
      throw BudgetExceeded("check '" + name + "' at genus " + std::to_string(g) + " exceeds the budget g <= " +
                           std::to_string(limit) + "; raise it with --budget or STRATA_BUDGET");
  }
  auto has = [&](const char* name) { return std::find(checks.begin(), checks.end(), name) != checks.end(); };

  const auto all = enumerate_adm(g);
  detail::CellContext ctx{g, all, {}, {}, {}};
  for (int d = 0; d <= g; ++d) ctx.by_prank[d] = {};
  for (const auto& x : all) ctx.by_prank[x.prank()].push_back(x);
  if (has("counts") || has("max-set") || has("closure"))
    for (int d = 0; d <= g; ++d) ctx.maximal[d] = maximal_set_bruteforce(g, d);
  if (has("closure"))
    for (int d = 0; d <= g; ++d) ctx.closures[d] = downward_closure(ctx.by_prank[d]);

  const detail::Collector col(options.max_counterexamples);
  std::vector<StrataReport> out;

  StrataReport whole;
  whole.genus = g;
  if (has("adm-card")) detail::run_adm_card(g, ctx, whole);
  if (has("reduced-word")) detail::run_reduced_word(g, col, whole);
  if (has("bruhat-cross")) detail::run_bruhat_cross(g, ctx, col, whole);
  if (!whole.checks.empty()) out.push_back(std::move(whole));

  for (int d = 0; d <= g; ++d) {
    StrataReport rep;
    rep.genus = g;
    rep.prank = d;
    if (has("dim")) detail::run_dim(g, d, rep);
    if (has("counts")) detail::run_counts(g, d, ctx, rep);
    if (has("max-set")) detail::run_max_set(g, d, ctx, col, rep);
    if (has("length-formula")) detail::run_length_formula(g, d, ctx, col, rep);
    if (has("closure")) detail::run_closure(g, d, ctx, col, rep);
    if (!rep.checks.empty()) out.push_back(std::move(rep));
  }
  return out;
}

inline bool all_pass(const std::vector<StrataReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const StrataReport& r) { return r.pass(); });
}

} // namespace krs
