#pragma once

/**
 * @file admissible.hpp
 * @brief The mu-admissible set Adm(mu) for mu = (1^g 0^g).
 *
 * An element t^{x0} w is admissible iff every pair {x0(i), x0(2g+1-i)} equals
 * {0, 1} and x0(i) = 0 whenever w^{-1}(i) > i, x0(i) = 1 whenever w^{-1}(i) < i.
 * So an admissible element is fixed by its Weyl component together with one
 * bit for each fixed point f <= g of w (the value x0(f)).
 */

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "krstrata/errors.hpp"
#include "krstrata/extended_affine.hpp"
#include "krstrata/signed_permutation.hpp"

namespace krs {

inline Cocharacter mu(int g) {
  if (g < 1) throw InvalidValue("mu: genus must be positive");
  std::vector<int> v(static_cast<std::size_t>(2 * g), 0);
  std::fill(v.begin(), v.begin() + g, 1);
  return Cocharacter(std::move(v));
}

/// Every signed permutation of genus g, in lexicographic one-line order.
inline std::vector<SignedPermutation> weyl_group(int g) {
  if (g < 1) throw InvalidValue("weyl_group: genus must be positive");
  std::vector<SignedPermutation> out;
  std::vector<int> sigma(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) sigma[i] = i + 1;
  do {
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
      std::vector<int> bits(static_cast<std::size_t>(g));
      for (int i = 0; i < g; ++i) bits[i] = (mask >> i) & 1u;
      out.push_back(make_signed(SignVector(std::move(bits)), SmallPermutation(sigma)));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// {w(mu) : w in W}, the 2^g vectors in {0,1}^{2g} with all pair sums 1. Sorted.
inline std::vector<Cocharacter> weyl_orbit_mu(int g) {
  std::set<Cocharacter> orbit;
  const auto m = mu(g);
  for (const auto& w : weyl_group(g)) orbit.insert(act(w, m));
  return {orbit.begin(), orbit.end()};
}

/// omega_i <= x_i <= omega_i + 1 for every i, plus the size condition on x_0.
inline bool is_minuscule_size_g(const ExtendedAlcove& alcove) {
  if (!is_g_alcove(alcove)) throw PreconditionFailed("is_minuscule_size_g: not a G-alcove");
  const int n = 2 * alcove.genus();
  const auto& pts = alcove.points();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int omega = k < i ? -1 : 0;
      if (pts[i][k] < omega || pts[i][k] > omega + 1) return false;
    }
  const auto& x0 = pts[0];
  for (int i = 0; i < n / 2; ++i) {
    const int lo = std::min(x0[i], x0[n - 1 - i]);
    const int hi = std::max(x0[i], x0[n - 1 - i]);
    if (lo != 0 || hi != 1) return false;
  }
  return true;
}

struct AdmissibilityViolation {
  enum class Kind { pair_sum, size, coordinate };

  Kind kind = Kind::size;
  int index = 0; // 1-based coordinate, 0 when not coordinate-specific
  std::string message;
};

inline std::string to_string(AdmissibilityViolation::Kind k) {
  switch (k) {
  case AdmissibilityViolation::Kind::pair_sum: return "pair-sum";
  case AdmissibilityViolation::Kind::size: return "size";
  case AdmissibilityViolation::Kind::coordinate: return "coordinate";
  }
  return "?";
}

/// The first violated admissibility condition for a raw translation vector, or
/// nullopt when t^{x0} w is admissible.
inline std::optional<AdmissibilityViolation> admissibility_violation(const std::vector<int>& x0,
                                                                     const SignedPermutation& w) {
  const int n = w.degree();
  if (static_cast<int>(x0.size()) != n) throw GenusMismatch(static_cast<int>(x0.size()) / 2, w.genus());
  for (int i = 1; i <= n / 2; ++i)
    if (x0[i - 1] + x0[n - i] != x0.front() + x0.back())
      return AdmissibilityViolation{AdmissibilityViolation::Kind::pair_sum, i,
                                    "pair sums of x0 are not constant at i=" + std::to_string(i)};
  for (int i = 1; i <= n / 2; ++i) {
    const int a = x0[i - 1];
    const int b = x0[n - i];
    if (std::min(a, b) != 0 || std::max(a, b) != 1)
      return AdmissibilityViolation{AdmissibilityViolation::Kind::size, i,
                                    "size condition: {x0(" + std::to_string(i) + "), x0(" +
                                        std::to_string(n + 1 - i) + ")} = {" + std::to_string(a) +
                                        ", " + std::to_string(b) + "} is not {0, 1}"};
  }
  const auto winv = w.inverse();
  for (int i = 1; i <= n; ++i) {
    const int pre = winv(i);
    const std::string si = std::to_string(i);
    if (pre > i && x0[i - 1] != 0)
      return AdmissibilityViolation{AdmissibilityViolation::Kind::coordinate, i,
                                    "x0(" + si + ") must be 0 since w⁻¹(" + si + ") > " + si};
    if (pre < i && x0[i - 1] != 1)
      return AdmissibilityViolation{AdmissibilityViolation::Kind::coordinate, i,
                                    "x0(" + si + ") must be 1 since w⁻¹(" + si + ") < " + si};
  }
  return std::nullopt;
}

inline bool is_mu_admissible(const AffineElement& x) {
  return !admissibility_violation(x.x0.coords(), x.w).has_value();
}

/// Isomorphism class of the kernel of the i-th isogeny on the stratum of x.
enum class KernelKind { mu_p, Z_mod_p, alpha_p };

inline std::string to_string(KernelKind k) {
  switch (k) {
  case KernelKind::mu_p: return "mu_p";
  case KernelKind::Z_mod_p: return "Z/p";
  case KernelKind::alpha_p: return "alpha_p";
  }
  return "?";
}

/// An element of Adm(mu) with its derived data computed once.
class AdmissibleElement {
public:
  explicit AdmissibleElement(AffineElement x) : elem_(std::move(x)) {
    if (auto v = admissibility_violation(elem_.x0.coords(), elem_.w))
      throw InvalidValue("not mu-admissible: " + v->message);
    auto [u, sigma] = split_signed(elem_.w);
    u_ = std::move(u);
    sigma_ = std::move(sigma);
    fixed_ = fixed_points(elem_.w);
    cycles_ = cycles(elem_.w);
    length_ = im_length(elem_);
    possibly_maximal_ = true;
    for (int i = 1; i <= genus(); ++i)
      if (u_(i) == 1 && sigma_(i) != i) possibly_maximal_ = false;
  }

  const AffineElement& elem() const { return elem_; }
  const Cocharacter& x0() const { return elem_.x0; }
  const SignedPermutation& w() const { return elem_.w; }
  int genus() const { return elem_.genus(); }
  const SignVector& u() const { return u_; }
  const SmallPermutation& sigma() const { return sigma_; }
  const std::vector<int>& fixed() const { return fixed_; }
  const std::vector<Cycle>& cycle_set() const { return cycles_; }
  int prank() const { return static_cast<int>(fixed_.size()); }
  int length() const { return length_; }
  bool possibly_maximal() const { return possibly_maximal_; }

  /// x0(f) for each fixed point f, in increasing order of f.
  std::vector<int> fixed_values() const {
    std::vector<int> out;
    for (int f : fixed_) out.push_back(elem_.x0(f));
    return out;
  }

  std::strong_ordering operator<=>(const AdmissibleElement& o) const { return elem_ <=> o.elem_; }
  bool operator==(const AdmissibleElement& o) const { return elem_ == o.elem_; }

private:
  AffineElement elem_;
  SignVector u_;
  SmallPermutation sigma_;
  std::vector<int> fixed_;
  std::vector<Cycle> cycles_;
  int length_ = 0;
  bool possibly_maximal_ = false;
};

/// The unique admissible element with Weyl component w and x0(f_k) = values[k]
/// at the fixed points f_1 < ... < f_d of w.
inline AdmissibleElement admissible_from(const SignedPermutation& w, const std::vector<int>& values) {
  const int n = w.degree();
  const auto fixed = fixed_points(w);
  if (values.size() != fixed.size()) throw InvalidValue("admissible_from: one value per fixed point required");
  const auto winv = w.inverse();
  std::vector<int> x0(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) x0[i - 1] = winv(i) < i ? 1 : 0;
  for (std::size_t k = 0; k < fixed.size(); ++k) {
    if (values[k] != 0 && values[k] != 1) throw InvalidValue("admissible_from: values must be bits");
    x0[fixed[k] - 1] = values[k];
    x0[n - fixed[k]] = 1 - values[k];
  }
  return AdmissibleElement({Cocharacter(std::move(x0)), w});
}

struct AdmFilter {
  std::optional<int> prank = {};
  std::optional<std::vector<int>> fixed = {}; ///< exact fixed-point set F
  std::optional<std::vector<int>> v = {};     ///< x0 at the points of F; requires `fixed`
};

/// Adm(mu) in canonical order (w first, then x0), optionally restricted.
inline std::vector<AdmissibleElement> enumerate_adm(int g, const AdmFilter& filter = {}) {
  if (g < 1) throw InvalidValue("enumerate_adm: genus must be positive");
  if (filter.prank && (*filter.prank < 0 || *filter.prank > g))
    throw InvalidValue("enumerate_adm: p-rank out of range");
  if (filter.fixed) {
    const auto& f = *filter.fixed;
    for (std::size_t k = 0; k < f.size(); ++k)
      if (f[k] < 1 || f[k] > g || (k && f[k] <= f[k - 1]))
        throw InvalidValue("enumerate_adm: fixed set must be increasing within 1..g");
    if (filter.prank && static_cast<int>(f.size()) != *filter.prank)
      throw InvalidValue("enumerate_adm: fixed set size disagrees with p-rank");
  }
  if (filter.v) {
    if (!filter.fixed) throw InvalidValue("enumerate_adm: v requires a fixed set");
    if (filter.v->size() != filter.fixed->size()) throw InvalidValue("enumerate_adm: v has wrong length");
    for (int b : *filter.v)
      if (b != 0 && b != 1) throw InvalidValue("enumerate_adm: v must be a bit vector");
  }

  std::vector<AdmissibleElement> out;
  for (const auto& w : weyl_group(g)) {
    const auto fixed = fixed_points(w);
    const int d = static_cast<int>(fixed.size());
    if (filter.prank && d != *filter.prank) continue;
    if (filter.fixed && fixed != *filter.fixed) continue;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::vector<int> values(static_cast<std::size_t>(d));
      for (int k = 0; k < d; ++k) values[k] = (mask >> k) & 1u;
      if (filter.v && values != *filter.v) continue;
      out.push_back(admissible_from(w, values));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int p_rank(const AdmissibleElement& x) { return x.prank(); }

inline KernelKind kernel_type(const AdmissibleElement& x, int i) {
  if (i < 1 || i > 2 * x.genus()) throw IndexOutOfRange("kernel_type: index out of range");
  if (x.w()(i) != i) return KernelKind::alpha_p;
  return x.x0()(i) == 1 ? KernelKind::mu_p : KernelKind::Z_mod_p;
}

inline bool is_possibly_maximal(const AdmissibleElement& x) { return x.possibly_maximal(); }

/// The possibly maximal element with the same S_g-component, fixed points and
/// fixed-point values; it dominates x.
inline AdmissibleElement possibly_maximal_cover(const AdmissibleElement& x) {
  const int g = x.genus();
  const auto& sigma = x.sigma();
  const auto& fixed = x.fixed();
  std::vector<int> bits(static_cast<std::size_t>(g), 0);
  for (int i = 1; i <= g; ++i)
    if (sigma(i) == i && !std::binary_search(fixed.begin(), fixed.end(), i)) bits[i - 1] = 1;
  return admissible_from(make_signed(SignVector(std::move(bits)), sigma), x.fixed_values());
}

namespace detail {

inline AffineElement finite(const SignedPermutation& w) { return {Cocharacter::zero(w.genus()), w}; }

} // namespace detail

/// Raise the p-rank of a possibly maximal element by resolving the cycle Z:
///  - a sign flip (c) is removed by s_c (left),
///  - a transposition (c1 c2) by s_{c1 c2} (left),
///  - a longer cycle loses the local minimum c_k = min Z: by s_{c_k c_{k+1}} on
///    the left when c_{k-1} > c_{k+1}, otherwise by s_{c_k c_{k-1}} on the right.
inline AdmissibleElement going_up(const AdmissibleElement& x, const Cycle& z) {
  if (!x.possibly_maximal()) throw PreconditionFailed("going_up: element is not possibly maximal");
  const auto& zs = x.cycle_set();
  if (std::find(zs.begin(), zs.end(), z) == zs.end())
    throw PreconditionFailed("going_up: not a cycle of the element");
  const int g = x.genus();
  const auto& c = z.points;
  const int l = z.order();

  auto transposition = [g](int p, int q) {
    if (p > q) std::swap(p, q);
    return root_reflection(PositiveRoot::beta1(g, p, q));
  };

  if (l == 1) {
    const auto s = root_reflection(PositiveRoot::beta3(g, c[0]));
    return AdmissibleElement(multiply(detail::finite(s), x.elem()));
  }
  if (l == 2) return AdmissibleElement(multiply(detail::finite(transposition(c[0], c[1])), x.elem()));

  // points start at the minimum, which is a local minimum of the cyclic sequence
  const int ck = c[0];
  const int next = c[1];
  const int prev = c[static_cast<std::size_t>(l - 1)];
  if (prev > next) return AdmissibleElement(multiply(detail::finite(transposition(ck, next)), x.elem()));
  return AdmissibleElement(multiply(x.elem(), detail::finite(transposition(ck, prev))));
}

/// An element of p-rank prank(x) + 1 dominating x, found through the possibly
/// maximal cover and a cycle of order other than two. Empty when every cycle of
/// x has order two.
inline std::optional<AdmissibleElement> raise_prank_by_one(const AdmissibleElement& x) {
  const auto cover = possibly_maximal_cover(x);
  for (const auto& z : cover.cycle_set())
    if (z.order() != 2) return going_up(cover, z);
  return std::nullopt;
}

/// An element of p-rank prank(x) + 2 dominating x. Uses a transposition when
/// there is one, otherwise two single steps.
inline std::optional<AdmissibleElement> raise_prank_by_two(const AdmissibleElement& x) {
  const auto cover = possibly_maximal_cover(x);
  const auto& zs = cover.cycle_set();
  for (const auto& z : zs)
    if (z.order() == 2) return going_up(cover, z);
  if (zs.empty()) return std::nullopt;
  return raise_prank_by_one(going_up(cover, zs.front()));
}

/// Sum over sigma in S_g of 3^{fix(sigma)} 2^{g - fix(sigma)}.
inline long long adm_cardinality_formula(int g) {
  if (g < 1) throw InvalidValue("adm_cardinality_formula: genus must be positive");
  std::vector<int> s(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) s[i] = i + 1;
  long long total = 0;
  do {
    int f = 0;
    for (int i = 0; i < g; ++i) f += s[i] == i + 1;
    long long term = 1;
    for (int k = 0; k < f; ++k) term *= 3;
    for (int k = f; k < g; ++k) term *= 2;
    total += term;
  } while (std::next_permutation(s.begin(), s.end()));
  return total;
}

} // namespace krs
