#pragma once

/**
 * @file signed_permutation.hpp
 * @brief The finite Weyl group of GSp_2g as signed permutations of {1, ..., 2g}.
 *
 * An element w of W is a permutation of {1, ..., 2g} commuting with the
 * involution i -> 2g+1-i. Equivalently it is a pair (u, sigma) with u a sign
 * vector in F_2^g and sigma in S_g: w(i) = sigma(i) when u(i) = 0 and
 * w(i) = 2g+1-sigma(i) when u(i) = 1, for i <= g.
 *
 * All indices in the public interface are 1-based.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "krstrata/errors.hpp"

namespace krs {

namespace detail {

inline bool is_bijection(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

inline std::string join(std::span<const int> values, char sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

inline std::string join(const std::vector<std::string>& values, char sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += values[k];
  }
  return out;
}

} // namespace detail

/// A permutation of {1, ..., n} in one-line notation.
class SmallPermutation {
public:
  SmallPermutation() = default;

  explicit SmallPermutation(std::vector<int> images) : images_(std::move(images)) {
    if (!detail::is_bijection(images_))
      throw InvalidValue("not a permutation: [" + detail::join(images_, ',') + "]");
  }

  static SmallPermutation identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return SmallPermutation(std::move(im));
  }

  /// Product of disjoint cycles, each given as a list of points.
  static SmallPermutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        const int from = c[k];
        const int to = c[(k + 1) % c.size()];
        if (from < 1 || from > n) throw IndexOutOfRange("cycle point out of range");
        im[from - 1] = to;
      }
    }
    return SmallPermutation(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const {
    if (i < 1 || i > size()) throw IndexOutOfRange("index " + std::to_string(i) + " out of range");
    return images_[i - 1];
  }

  const std::vector<int>& images() const { return images_; }

  SmallPermutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
    return SmallPermutation(std::move(inv));
  }

  /// (this o other)(i) = this(other(i))
  SmallPermutation compose(const SmallPermutation& other) const {
    require_same_genus(size(), other.size());
    std::vector<int> out(images_.size());
    for (int i = 1; i <= size(); ++i) out[i - 1] = images_[other.images_[i - 1] - 1];
    return SmallPermutation(std::move(out));
  }

  bool is_involution() const {
    for (int i = 1; i <= size(); ++i)
      if (images_[images_[i - 1] - 1] != i) return false;
    return true;
  }

  /// Number of inversions.
  int length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (images_[i] > images_[j]) ++inv;
    return inv;
  }

  int count_fixed() const {
    int f = 0;
    for (int i = 1; i <= size(); ++i) f += images_[i - 1] == i;
    return f;
  }

  /// All cycles including 1-cycles; each starts at its minimum, sorted by minimum.
  std::vector<std::vector<int>> cycle_decomposition() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 1; i <= size(); ++i) {
      if (seen[i - 1]) continue;
      std::vector<int> c;
      for (int j = i; !seen[j - 1]; j = images_[j - 1]) {
        seen[j - 1] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  auto operator<=>(const SmallPermutation&) const = default;
  bool operator==(const SmallPermutation&) const = default;

private:
  std::vector<int> images_;
};

/// u in F_2^g.
class SignVector {
public:
  SignVector() = default;

  explicit SignVector(std::vector<int> bits) : bits_(std::move(bits)) {
    for (int b : bits_)
      if (b != 0 && b != 1) throw InvalidValue("sign vector entries must be 0 or 1");
  }

  static SignVector zero(int g) { return SignVector(std::vector<int>(static_cast<std::size_t>(g), 0)); }

  int size() const { return static_cast<int>(bits_.size()); }

  int operator()(int i) const {
    if (i < 1 || i > size()) throw IndexOutOfRange("index " + std::to_string(i) + " out of range");
    return bits_[i - 1];
  }

  const std::vector<int>& bits() const { return bits_; }

  bool is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](int b) { return b == 0; });
  }

  auto operator<=>(const SignVector&) const = default;
  bool operator==(const SignVector&) const = default;

private:
  std::vector<int> bits_;
};

/// One cycle of a Weyl group element. A sign flip is the 1-cycle (i) with
/// sigma(i) = i but w(i) = 2g+1-i; it is kept apart from fixed points.
struct Cycle {
  enum class Kind { sign_flip, permutation };

  Kind kind = Kind::permutation;
  std::vector<int> points; // starts at its minimum

  int order() const { return static_cast<int>(points.size()); }

  auto operator<=>(const Cycle&) const = default;
  bool operator==(const Cycle&) const = default;
};

class SignedPermutation {
public:
  SignedPermutation() = default;

  /// `images` is the one-line notation of w on {1, ..., 2g}.
  explicit SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n == 0 || n % 2 != 0) throw InvalidValue("signed permutation needs an even positive degree");
    if (!detail::is_bijection(images_))
      throw InvalidValue("not a permutation: [" + detail::join(images_, ',') + "]");
    for (int i = 1; i <= n; ++i)
      if (images_[n - i] != n + 1 - images_[i - 1])
        throw InvalidValue("not symplectic: w(" + std::to_string(n + 1 - i) +
                           ") != 2g+1-w(" + std::to_string(i) + ")");
  }

  static SignedPermutation identity(int g) {
    std::vector<int> im(static_cast<std::size_t>(2 * g));
    std::iota(im.begin(), im.end(), 1);
    return SignedPermutation(std::move(im));
  }

  int genus() const { return static_cast<int>(images_.size()) / 2; }
  int degree() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const {
    if (i < 1 || i > degree())
      throw IndexOutOfRange("index " + std::to_string(i) + " out of range for degree " +
                            std::to_string(degree()));
    return images_[i - 1];
  }

  const std::vector<int>& images() const { return images_; }

  /// (this o other)(i) = this(other(i))
  SignedPermutation compose(const SignedPermutation& other) const {
    require_same_genus(genus(), other.genus());
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[other.images_[i] - 1];
    return SignedPermutation(std::move(out), Unchecked{});
  }

  SignedPermutation inverse() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i] - 1] = static_cast<int>(i) + 1;
    return SignedPermutation(std::move(out), Unchecked{});
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  auto operator<=>(const SignedPermutation&) const = default;
  bool operator==(const SignedPermutation&) const = default;

private:
  struct Unchecked {};
  SignedPermutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

inline SignedPermutation compose(const SignedPermutation& lhs, const SignedPermutation& rhs) {
  return lhs.compose(rhs);
}

inline SignedPermutation inverse(const SignedPermutation& w) { return w.inverse(); }

inline int apply(const SignedPermutation& w, int i) { return w(i); }

inline SignedPermutation make_signed(const SignVector& u, const SmallPermutation& sigma) {
  require_same_genus(u.size(), sigma.size());
  const int g = sigma.size();
  std::vector<int> im(static_cast<std::size_t>(2 * g));
  for (int i = 1; i <= g; ++i) {
    const int s = sigma(i);
    im[i - 1] = u(i) == 0 ? s : 2 * g + 1 - s;
    im[2 * g - i] = 2 * g + 1 - im[i - 1];
  }
  return SignedPermutation(std::move(im));
}

inline std::pair<SignVector, SmallPermutation> split_signed(const SignedPermutation& w) {
  const int g = w.genus();
  std::vector<int> bits(static_cast<std::size_t>(g));
  std::vector<int> sigma(static_cast<std::size_t>(g));
  for (int i = 1; i <= g; ++i) {
    const int wi = w(i);
    bits[i - 1] = wi > g ? 1 : 0;
    sigma[i - 1] = wi > g ? 2 * g + 1 - wi : wi;
  }
  return {SignVector(std::move(bits)), SmallPermutation(std::move(sigma))};
}

/// F(w) = {i <= g : w(i) = i}.
inline std::vector<int> fixed_points(const SignedPermutation& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.genus(); ++i)
    if (w(i) == i) out.push_back(i);
  return out;
}

/// Cycles of the S_g-component, with sign flips standing in for 1-cycles that
/// are not fixed points of w. Sorted by minimum element.
inline std::vector<Cycle> cycles(const SignedPermutation& w) {
  const auto [u, sigma] = split_signed(w);
  std::vector<Cycle> out;
  for (auto& c : sigma.cycle_decomposition()) {
    if (c.size() == 1) {
      if (u(c.front()) == 1) out.push_back({Cycle::Kind::sign_flip, std::move(c)});
    } else {
      out.push_back({Cycle::Kind::permutation, std::move(c)});
    }
  }
  return out;
}

/// The eight statistics of a permutation that enter the length formula for
/// possibly maximal admissible elements.
struct PermStats {
  int a = 0;          ///< #{(i,j) : i < j < s(j) < s(i)}
  int a_inv = 0;      ///< the same for the inverse
  int b = 0;          ///< #{(i,j) : i < j = s(j) < s(i)}
  int c = 0;          ///< #{(i,j) : i < j < s(i) < s(j)}
  int c_inv = 0;
  int asc = 0;        ///< #{i : i < s(i)}
  int desc_chain = 0; ///< #{i : s(s(i)) < s(i) < i}
  int length = 0;     ///< inversions

  bool operator==(const PermStats&) const = default;
};

namespace detail {

inline int nesting_count(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (j < s[j - 1] && s[j - 1] < s[i - 1]) ++count;
  return count;
}

inline int crossing_count(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (j < s[i - 1] && s[i - 1] < s[j - 1]) ++count;
  return count;
}

} // namespace detail

inline PermStats perm_stats(const SmallPermutation& sigma) {
  const auto& s = sigma.images();
  const auto inv = sigma.inverse();
  const int n = sigma.size();
  PermStats st;
  st.a = detail::nesting_count(s);
  st.a_inv = detail::nesting_count(inv.images());
  st.c = detail::crossing_count(s);
  st.c_inv = detail::crossing_count(inv.images());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j)
      if (s[j - 1] == j && j < s[i - 1]) ++st.b;
    if (i < s[i - 1]) ++st.asc;
    const int si = s[i - 1];
    if (s[si - 1] < si && si < i) ++st.desc_chain;
  }
  st.length = sigma.length();
  return st;
}

/// An involution embraces e when some transposed pair straddles it: i < e < sigma(i).
inline bool embraces(const SmallPermutation& sigma, int e) {
  if (!sigma.is_involution()) throw PreconditionFailed("embraces: permutation is not an involution");
  if (e < 1 || e > sigma.size()) throw IndexOutOfRange("embraces: point out of range");
  for (int i = 1; i < e; ++i)
    if (sigma(i) > e) return true;
  return false;
}

} // namespace krs
