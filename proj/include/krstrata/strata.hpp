#pragma once

/**
 * @file strata.hpp
 * @brief Dimensions, top-dimensional strata and closure relations of the p-rank
 *        strata, both from closed formulas and from enumeration of Adm(mu).
 *
 * The stratum of x in Adm(mu) has dimension l(x) and p-rank |F(x)|, and its
 * closure is the union of the strata of the y <= x. Everything here is stated
 * in those terms.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "krstrata/admissible.hpp"
#include "krstrata/bruhat.hpp"
#include "krstrata/errors.hpp"
#include "krstrata/extended_affine.hpp"
#include "krstrata/signed_permutation.hpp"

namespace krs {

using BigInt = boost::multiprecision::cpp_int;

/// "g<g>_x0<x0 joined by '.'>_w<w joined by '.'>"
inline std::string element_id(const AffineElement& x) {
  return "g" + std::to_string(x.genus()) + "_x0" + detail::join(x.x0.coords(), '.') + "_w" +
         detail::join(x.w.images(), '.');
}

inline std::string element_id(const AdmissibleElement& x) { return element_id(x.elem()); }

inline std::vector<std::string> element_ids(const std::vector<AdmissibleElement>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(element_id(x));
  return out;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt catalan(int n) {
  if (n < 0) throw InvalidValue("catalan: negative index");
  return binomial(2 * n, n) / (n + 1);
}

namespace detail {

inline void require_prank(int g, int d) {
  if (g < 1) throw InvalidValue("genus must be positive");
  if (d < 0 || d > g) throw InvalidValue("p-rank " + std::to_string(d) + " out of range for genus " + std::to_string(g));
}

} // namespace detail

/// floor((g^2 + d) / 2)
inline int dim_formula(int g, int d) {
  detail::require_prank(g, d);
  return (g * g + d) / 2;
}

/// floor((g - d)/2 + 1/2)
inline int codim_formula(int g, int d) {
  detail::require_prank(g, d);
  return (g - d + 1) / 2;
}

inline int max_length_empirical(int g, int d) {
  detail::require_prank(g, d);
  const auto elems = enumerate_adm(g, {.prank = d});
  if (elems.empty()) throw std::logic_error("max_length_empirical: empty stratum");
  int best = 0;
  for (const auto& x : elems) best = std::max(best, x.length());
  return best;
}

/// Length of a possibly maximal element from its S_g-component and fixed points.
inline int length_formula_possibly_maximal(const AdmissibleElement& x) {
  if (!x.possibly_maximal()) throw PreconditionFailed("length formula needs a possibly maximal element");
  const int g = x.genus();
  const int d = x.prank();
  const auto& sigma = x.sigma();
  const auto st = perm_stats(sigma);
  int straddle = 0;
  for (int i = 1; i <= g; ++i)
    for (int f : x.fixed())
      if (i < f && f < sigma(i)) ++straddle;
  return g * (g + 1) / 2 + d - sigma.count_fixed() - st.length + 2 * (st.a + st.a_inv + straddle);
}

/// F = {g-d+1, ..., g}, sigma = (1 2)(3 4)... over the first g-d points (g-d-1
/// when g-d is odd), possibly maximal, with x0 = 1 at every point of F.
inline AdmissibleElement witness_max(int g, int d) {
  detail::require_prank(g, d);
  const int paired = (g - d) % 2 == 0 ? g - d : g - d - 1;
  std::vector<std::vector<int>> transpositions;
  for (int i = 1; i + 1 <= paired; i += 2) transpositions.push_back({i, i + 1});
  const auto sigma = SmallPermutation::from_cycles(g, transpositions);
  std::vector<int> bits(static_cast<std::size_t>(g), 0);
  for (int i = paired + 1; i <= g - d; ++i) bits[i - 1] = 1;
  return admissible_from(make_signed(SignVector(std::move(bits)), sigma), std::vector<int>(static_cast<std::size_t>(d), 1));
}

/// Why a top-dimensional element is of maximal length.
struct MaxLengthCertificate {
  enum class Case { even, odd_a, odd_b };

  AdmissibleElement element;
  Case tag;
  std::vector<std::pair<int, int>> transpositions;
  std::optional<std::vector<int>> three_cycle;
  std::optional<int> free_fixed_point; ///< e with sigma(e) = e, u(e) = 1 (odd_a)
};

inline std::string to_string(MaxLengthCertificate::Case c) {
  switch (c) {
  case MaxLengthCertificate::Case::even: return "even";
  case MaxLengthCertificate::Case::odd_a: return "odd_a";
  case MaxLengthCertificate::Case::odd_b: return "odd_b";
  }
  return "?";
}

/// Classify x as top-dimensional in its p-rank stratum without computing lengths.
inline std::optional<MaxLengthCertificate> classify_max_length(const AdmissibleElement& x) {
  if (!x.possibly_maximal()) return std::nullopt;
  const int g = x.genus();
  const int d = x.prank();
  const auto& sigma = x.sigma();
  std::vector<std::pair<int, int>> trans;
  std::vector<std::vector<int>> threes;
  std::vector<int> flips;
  for (const auto& c : sigma.cycle_decomposition()) {
    if (c.size() == 1) {
      if (x.u()(c[0]) == 1) flips.push_back(c[0]);
    } else if (c.size() == 2) {
      trans.emplace_back(c[0], c[1]);
    } else if (c.size() == 3) {
      threes.push_back(c);
    } else {
      return std::nullopt;
    }
  }
  const auto st = perm_stats(sigma);
  const int half = (g - d) / 2;
  const int ntrans = static_cast<int>(trans.size());
  if ((g - d) % 2 == 0) {
    if (threes.empty() && ntrans == half && st.c == 0)
      return MaxLengthCertificate{x, MaxLengthCertificate::Case::even, trans, std::nullopt, std::nullopt};
    return std::nullopt;
  }
  if (threes.empty() && ntrans == half && flips.size() == 1 && st.c == 0 && !embraces(sigma, flips[0]))
    return MaxLengthCertificate{x, MaxLengthCertificate::Case::odd_a, trans, std::nullopt, flips[0]};
  if (threes.size() == 1 && ntrans == half - 1 && flips.empty() && st.c == 0 && st.c_inv == 0)
    return MaxLengthCertificate{x, MaxLengthCertificate::Case::odd_b, trans, threes[0], std::nullopt};
  return std::nullopt;
}

inline std::vector<MaxLengthCertificate> maximal_set_classified(int g, int d) {
  detail::require_prank(g, d);
  std::vector<MaxLengthCertificate> out;
  for (const auto& x : enumerate_adm(g, {.prank = d}))
    if (auto cert = classify_max_length(x)) out.push_back(std::move(*cert));
  return out;
}

/// argmax of the length over Adm^{(d)}.
inline std::vector<AdmissibleElement> maximal_set_bruteforce(int g, int d) {
  detail::require_prank(g, d);
  auto elems = enumerate_adm(g, {.prank = d});
  int best = 0;
  for (const auto& x : elems) best = std::max(best, x.length());
  std::erase_if(elems, [best](const AdmissibleElement& x) { return x.length() != best; });
  return elems;
}

inline BigInt maximal_count_formula(int g, int d) {
  detail::require_prank(g, d);
  const BigInt base = BigInt(1) << d;
  if ((g - d) % 2 == 0) return base * binomial(g, d) * catalan((g - d) / 2);
  const int m = (g - d + 1) / 2;
  return base * binomial(g, d) * m * catalan(m);
}

/// Downward closure of the p-rank-d stratum.
inline std::vector<AdmissibleElement> closure_computed(int g, int d) {
  detail::require_prank(g, d);
  return downward_closure(enumerate_adm(g, {.prank = d}));
}

/// The closure of the p-rank-d stratum predicted from p-ranks and top-dimensional sets:
///  - g-d even: all p-ranks <= d,
///  - g-d = 1: all elements whose sign vector u is nonzero,
///  - g-d odd otherwise: p-ranks <= d without M^{(d'')} for d'' < d, g-d'' even.
inline std::vector<AdmissibleElement> closure_predicted(int g, int d) {
  detail::require_prank(g, d);
  auto all = enumerate_adm(g);
  if (g - d == 1) {
    std::erase_if(all, [](const AdmissibleElement& x) { return x.u().is_zero(); });
    return all;
  }
  std::erase_if(all, [d](const AdmissibleElement& x) { return x.prank() > d; });
  if ((g - d) % 2 == 0) return all;
  std::vector<AdmissibleElement> excluded;
  for (int dd = 0; dd < d; ++dd) {
    if ((g - dd) % 2 != 0) continue;
    for (auto& c : maximal_set_classified(g, dd)) excluded.push_back(std::move(c.element));
  }
  std::sort(excluded.begin(), excluded.end());
  std::erase_if(all, [&](const AdmissibleElement& x) {
    return std::binary_search(excluded.begin(), excluded.end(), x);
  });
  return all;
}

/// Drop the coordinates fixed by w (on both halves) and renumber; the result is
/// an admissible element of genus g - d.
inline AdmissibleElement strip_fixed_pairs(const AdmissibleElement& x) {
  if (!x.possibly_maximal()) throw PreconditionFailed("strip_fixed_pairs: element is not possibly maximal");
  const int g = x.genus();
  if (x.prank() == g) throw PreconditionFailed("strip_fixed_pairs: nothing left after removing all pairs");
  const int n = 2 * g;
  std::vector<int> kept;
  std::vector<int> renumber(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    if (x.w()(i) == i) continue;
    kept.push_back(i);
    renumber[i] = static_cast<int>(kept.size());
  }
  std::vector<int> x0;
  std::vector<int> w;
  for (int i : kept) {
    x0.push_back(x.x0()(i));
    w.push_back(renumber[x.w()(i)]);
  }
  return AdmissibleElement({Cocharacter(std::move(x0)), SignedPermutation(std::move(w))});
}

/// Count of G-alcoves in a box around the base alcove that are minuscule of
/// size g; independent of the coordinate criterion.
inline long long minuscule_alcove_scan(int g) {
  const int n = 2 * g;
  long long count = 0;
  std::vector<int> x0(static_cast<std::size_t>(n), -1);
  const auto group = weyl_group(g);
  while (true) {
    for (const auto& w : group) {
      const auto alcove = ExtendedAlcove::from_gl(x0, w.images());
      if (is_g_alcove(alcove) && is_minuscule_size_g(alcove)) ++count;
    }
    int k = 0;
    while (k < n && x0[k] == 2) x0[k++] = -1;
    if (k == n) break;
    ++x0[k];
  }
  return count;
}

} // namespace krs
