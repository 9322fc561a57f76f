#pragma once

/**
 * @file extended_affine.hpp
 * @brief The extended affine Weyl group of GSp_2g.
 *
 * Elements are written x = t^{x0} w with x0 in X_*(T), the integer vectors of
 * length 2g with constant pair sums x0(i) + x0(2g+1-i), and w a signed
 * permutation. x acts on X_*(T)_R by v -> w.v + x0 where (w.v)(i) = v(w^{-1}(i)).
 *
 * Positive roots are encoded by a GL-pair (a, b) with a < b so that
 * <beta, v> = v(a) - v(b) on X_*(T); the base alcove is anti-dominant.
 */

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krstrata/errors.hpp"
#include "krstrata/signed_permutation.hpp"

namespace krs {

/// A cocharacter of the diagonal torus of GSp_2g.
class Cocharacter {
public:
  Cocharacter() = default;

  explicit Cocharacter(std::vector<int> coords) : coords_(std::move(coords)) {
    const int n = static_cast<int>(coords_.size());
    if (n == 0 || n % 2 != 0) throw InvalidValue("cocharacter needs an even positive length");
    const int c = coords_.front() + coords_.back();
    for (int i = 1; i <= n / 2; ++i)
      if (coords_[i - 1] + coords_[n - i] != c)
        throw InvalidValue("pair sums of cocharacter are not constant");
  }

  static Cocharacter zero(int g) { return Cocharacter(std::vector<int>(static_cast<std::size_t>(2 * g), 0)); }

  int genus() const { return static_cast<int>(coords_.size()) / 2; }

  int operator()(int i) const {
    if (i < 1 || i > 2 * genus()) throw IndexOutOfRange("cocharacter index out of range");
    return coords_[i - 1];
  }

  const std::vector<int>& coords() const { return coords_; }

  /// The common value c of the pair sums.
  int pair_sum() const { return coords_.front() + coords_.back(); }

  Cocharacter operator+(const Cocharacter& other) const {
    require_same_genus(genus(), other.genus());
    std::vector<int> out(coords_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coords_[i];
    return Cocharacter(std::move(out));
  }

  Cocharacter operator-() const {
    std::vector<int> out(coords_);
    for (int& v : out) v = -v;
    return Cocharacter(std::move(out));
  }

  auto operator<=>(const Cocharacter&) const = default;
  bool operator==(const Cocharacter&) const = default;

private:
  std::vector<int> coords_;
};

/// (w.v)(i) = v(w^{-1}(i))
inline Cocharacter act(const SignedPermutation& w, const Cocharacter& v) {
  require_same_genus(w.genus(), v.genus());
  std::vector<int> out(v.coords().size());
  for (int i = 1; i <= w.degree(); ++i) out[w(i) - 1] = v(i);
  return Cocharacter(std::move(out));
}

/// x = t^{x0} w. Ordered by (w, x0), the canonical enumeration order.
struct AffineElement {
  Cocharacter x0;
  SignedPermutation w;

  AffineElement() = default;
  AffineElement(Cocharacter translation, SignedPermutation weyl)
      : x0(std::move(translation)), w(std::move(weyl)) {
    require_same_genus(x0.genus(), w.genus());
  }

  static AffineElement identity(int g) { return {Cocharacter::zero(g), SignedPermutation::identity(g)}; }
  static AffineElement translation(Cocharacter v) {
    const int g = v.genus();
    return {std::move(v), SignedPermutation::identity(g)};
  }

  int genus() const { return w.genus(); }

  std::strong_ordering operator<=>(const AffineElement& other) const {
    if (auto c = w <=> other.w; c != 0) return c;
    return x0 <=> other.x0;
  }
  bool operator==(const AffineElement&) const = default;
};

/// t^a u . t^b v = t^{a + u.b} (uv)
inline AffineElement multiply(const AffineElement& x, const AffineElement& y) {
  require_same_genus(x.genus(), y.genus());
  return {x.x0 + act(x.w, y.x0), x.w.compose(y.w)};
}

inline AffineElement operator*(const AffineElement& x, const AffineElement& y) { return multiply(x, y); }

inline AffineElement inverse(const AffineElement& x) {
  const auto winv = x.w.inverse();
  return {-act(winv, x.x0), winv};
}

/// The class of x in W~/W_a = X_*(T)/Q^v, detected by the pair sum of x0.
inline int similitude_class(const AffineElement& x) { return x.x0.pair_sum(); }

/// The length-zero generator of the component group.
inline AffineElement tau(int g) {
  if (g < 1) throw InvalidValue("tau: genus must be positive");
  std::vector<int> x0(static_cast<std::size_t>(2 * g), 0);
  std::vector<int> w(static_cast<std::size_t>(2 * g));
  for (int i = 1; i <= g; ++i) {
    x0[g + i - 1] = 1;
    w[i - 1] = i + g;
    w[g + i - 1] = i;
  }
  return {Cocharacter(std::move(x0)), SignedPermutation(std::move(w))};
}

/// tau^k for any integer k.
inline AffineElement tau_power(int g, int k) {
  AffineElement out = AffineElement::identity(g);
  const AffineElement step = k >= 0 ? tau(g) : inverse(tau(g));
  for (int i = 0; i < std::abs(k); ++i) out = multiply(out, step);
  return out;
}

/// s_0, ..., s_g. s_0 = t^{(-1, 0, ..., 0, 1)} (1 2g), s_i = (i i+1)(2g-i 2g-i+1), s_g = (g g+1).
inline AffineElement simple_reflection(int g, int i) {
  if (g < 1) throw InvalidValue("simple_reflection: genus must be positive");
  if (i < 0 || i > g) throw IndexOutOfRange("simple reflection index " + std::to_string(i) + " out of range");
  const int n = 2 * g;
  std::vector<int> x0(static_cast<std::size_t>(n), 0);
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) w[k - 1] = k;
  if (i == 0) {
    x0.front() = -1;
    x0.back() = 1;
    std::swap(w.front(), w.back());
  } else if (i == g) {
    std::swap(w[g - 1], w[g]);
  } else {
    std::swap(w[i - 1], w[i]);
    std::swap(w[n - i - 1], w[n - i]);
  }
  return {Cocharacter(std::move(x0)), SignedPermutation(std::move(w))};
}

// ---------------------------------------------------------------------------
// Roots

enum class RootKind { beta1, beta2, beta3 };

/// beta1_{ij} = e_i - e_j, beta2_{ij} = e_i + e_j - c, beta3_i = 2e_i - c.
/// (a, b) is the GL-pair with <beta, v> = v(a) - v(b) on X_*(T).
struct PositiveRoot {
  RootKind kind = RootKind::beta1;
  int i = 0;
  int j = 0; // unused for beta3
  int a = 0;
  int b = 0;
  int genus = 0;

  static PositiveRoot beta1(int g, int i, int j) { return make(g, RootKind::beta1, i, j); }
  static PositiveRoot beta2(int g, int i, int j) { return make(g, RootKind::beta2, i, j); }
  static PositiveRoot beta3(int g, int i) { return make(g, RootKind::beta3, i, 0); }

  bool operator==(const PositiveRoot&) const = default;

private:
  static PositiveRoot make(int g, RootKind kind, int i, int j) {
    if (kind == RootKind::beta3) {
      if (i < 1 || i > g) throw IndexOutOfRange("root index out of range");
      return {kind, i, 0, i, 2 * g + 1 - i, g};
    }
    if (i < 1 || j <= i || j > g) throw IndexOutOfRange("root indices must satisfy 1 <= i < j <= g");
    const int b = kind == RootKind::beta1 ? j : 2 * g + 1 - j;
    return {kind, i, j, i, b, g};
  }
};

/// The g^2 positive roots: all beta1, then all beta2, then all beta3.
inline std::vector<PositiveRoot> positive_roots(int g) {
  std::vector<PositiveRoot> out;
  out.reserve(static_cast<std::size_t>(g * g));
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) out.push_back(PositiveRoot::beta1(g, i, j));
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) out.push_back(PositiveRoot::beta2(g, i, j));
  for (int i = 1; i <= g; ++i) out.push_back(PositiveRoot::beta3(g, i));
  return out;
}

inline int pairing(const PositiveRoot& beta, const Cocharacter& v) {
  require_same_genus(beta.genus, v.genus());
  return v(beta.a) - v(beta.b);
}

/// beta^v as a vector in Z^{2g}: e_a - e_b + e_{2g+1-b} - e_{2g+1-a}, or e_a - e_b for beta3.
inline Cocharacter coroot(const PositiveRoot& beta) {
  const int n = 2 * beta.genus;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[beta.a - 1] += 1;
  v[beta.b - 1] -= 1;
  if (beta.kind != RootKind::beta3) {
    v[n - beta.b] += 1;
    v[n - beta.a] -= 1;
  }
  return Cocharacter(std::move(v));
}

/// The finite reflection s_beta as a signed permutation.
inline SignedPermutation root_reflection(const PositiveRoot& beta) {
  const int n = 2 * beta.genus;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) w[k - 1] = k;
  std::swap(w[beta.a - 1], w[beta.b - 1]);
  if (beta.kind != RootKind::beta3) std::swap(w[n - beta.a], w[n - beta.b]);
  return SignedPermutation(std::move(w));
}

/// True iff w^{-1} beta is a negative root.
inline bool sends_to_negative(const SignedPermutation& w, const PositiveRoot& beta) {
  require_same_genus(w.genus(), beta.genus);
  const auto winv = w.inverse();
  return winv(beta.a) > winv(beta.b);
}

/// An affine root: the wall {v : sign * <beta, v> = level}.
struct AffineRoot {
  PositiveRoot root;
  int sign = 1;
  int level = 0;
};

/// s_alpha = t^{k beta^v} s_beta with k = sign * level; the affine reflection in H_alpha.
inline AffineElement affine_reflection(const AffineRoot& alpha) {
  if (alpha.sign != 1 && alpha.sign != -1) throw InvalidValue("affine root sign must be +1 or -1");
  const int k = alpha.sign * alpha.level;
  std::vector<int> t = coroot(alpha.root).coords();
  for (int& v : t) v *= k;
  return {Cocharacter(std::move(t)), root_reflection(alpha.root)};
}

// ---------------------------------------------------------------------------
// Length, descents, reduced words

/// Iwahori-Matsumoto length.
inline int im_length(const AffineElement& x) {
  const int g = x.genus();
  const auto winv = x.w.inverse();
  const auto& x0 = x.x0.coords();
  int len = 0;
  for (const auto& beta : positive_roots(g)) {
    const int p = x0[beta.a - 1] - x0[beta.b - 1];
    len += winv(beta.a) < winv(beta.b) ? std::abs(p) : std::abs(p + 1);
  }
  return len;
}

inline std::vector<int> left_descents(const AffineElement& x) {
  const int g = x.genus();
  const int len = im_length(x);
  std::vector<int> out;
  if (len == 0) return out;
  for (int i = 0; i <= g; ++i)
    if (im_length(multiply(simple_reflection(g, i), x)) < len) out.push_back(i);
  return out;
}

struct ReducedWord {
  std::vector<int> letters;
  int omega_part = 0;

  bool operator==(const ReducedWord&) const = default;
};

/// x = s_{letters[0]} ... s_{letters[k-1]} tau^{omega_part}, taking the smallest
/// left descent at every step.
inline ReducedWord reduced_word(const AffineElement& x) {
  const int g = x.genus();
  ReducedWord out;
  AffineElement cur = x;
  for (int len = im_length(cur); len > 0; --len) {
    const auto desc = left_descents(cur);
    if (desc.empty()) throw std::logic_error("reduced_word: positive length without descent");
    out.letters.push_back(desc.front());
    cur = multiply(simple_reflection(g, desc.front()), cur);
  }
  out.omega_part = similitude_class(cur);
  if (cur != tau_power(g, out.omega_part))
    throw std::logic_error("reduced_word: length-zero remainder is not a power of tau");
  return out;
}

inline AffineElement assemble(int g, const ReducedWord& word) {
  AffineElement out = AffineElement::identity(g);
  for (int letter : word.letters) out = multiply(out, simple_reflection(g, letter));
  return multiply(out, tau_power(g, word.omega_part));
}

/// Is the alcove of x on the same side of H_alpha as the base alcove?
/// Uses the generic base point p0 = (1, 2, ..., 2g)/(2g+1); all arithmetic is
/// scaled by 2g+1 and therefore exact.
inline bool same_side_as_base(const AffineElement& x, const AffineRoot& alpha) {
  const int g = x.genus();
  require_same_genus(g, alpha.root.genus);
  const long scale = 2L * g + 1;
  const auto& beta = alpha.root;
  const auto winv = x.w.inverse();
  const long wall = scale * alpha.sign * alpha.level;
  const long base = static_cast<long>(beta.a) - beta.b;
  const long here = static_cast<long>(winv(beta.a)) - winv(beta.b) +
                    scale * (static_cast<long>(x.x0(beta.a)) - x.x0(beta.b));
  if (here == wall) throw WallIncidence("alcove lies on the wall");
  return (here > wall) == (base > wall);
}

// ---------------------------------------------------------------------------
// Extended alcoves

/// (x_0, ..., x_{2g-1}) with x_i = x_{i-1} - e_{w(i)} and x_{2g} := x_0 - 1.
class ExtendedAlcove {
public:
  ExtendedAlcove() = default;

  explicit ExtendedAlcove(std::vector<std::vector<int>> points) : points_(std::move(points)) {
    steps_ = read_steps(points_);
  }

  /// The alcove of t^{x0} w in the extended affine Weyl group of GL_2g; `w` may be
  /// any permutation of {1, ..., 2g}.
  static ExtendedAlcove from_gl(const std::vector<int>& x0, const std::vector<int>& w) {
    const std::size_t n = x0.size();
    if (w.size() != n || !detail::is_bijection(w)) throw InvalidValue("from_gl: bad permutation");
    std::vector<std::vector<int>> pts(n, x0);
    for (std::size_t i = 1; i < n; ++i) {
      pts[i] = pts[i - 1];
      pts[i][w[i - 1] - 1] -= 1;
    }
    return ExtendedAlcove(std::move(pts));
  }

  int genus() const { return static_cast<int>(points_.size()) / 2; }
  const std::vector<std::vector<int>>& points() const { return points_; }
  const std::vector<int>& point(int i) const { return points_.at(static_cast<std::size_t>(i)); }

  /// w(i) read off the drop x_{i-1} - x_i.
  const std::vector<int>& steps() const { return steps_; }

  bool operator==(const ExtendedAlcove&) const = default;

private:
  static std::vector<int> read_steps(const std::vector<std::vector<int>>& pts) {
    const std::size_t n = pts.size();
    if (n == 0 || n % 2 != 0) throw InvalidValue("alcove needs an even positive number of points");
    for (const auto& p : pts)
      if (p.size() != n) throw InvalidValue("alcove point has wrong dimension");
    std::vector<int> steps(n);
    for (std::size_t i = 1; i <= n; ++i) {
      const auto& prev = pts[i - 1];
      std::vector<int> next = i < n ? pts[i] : pts[0];
      if (i == n)
        for (int& v : next) v -= 1;
      int where = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const int diff = prev[k] - next[k];
        if (diff == 1 && where == 0) {
          where = static_cast<int>(k) + 1;
        } else if (diff != 0) {
          throw InvalidValue("alcove step " + std::to_string(i) + " is not a unit drop");
        }
      }
      if (where == 0) throw InvalidValue("alcove step " + std::to_string(i) + " is not a unit drop");
      steps[i - 1] = where;
    }
    if (!detail::is_bijection(steps)) throw InvalidValue("alcove steps do not form a permutation");
    return steps;
  }

  std::vector<std::vector<int>> points_;
  std::vector<int> steps_;
};

/// omega_i = -(e_1 + ... + e_i).
inline ExtendedAlcove base_alcove(int g) {
  return ExtendedAlcove::from_gl(std::vector<int>(static_cast<std::size_t>(2 * g), 0),
                                 SignedPermutation::identity(g).images());
}

inline ExtendedAlcove to_alcove(const AffineElement& x) {
  return ExtendedAlcove::from_gl(x.x0.coords(), x.w.images());
}

/// x_i + theta(x_{2g-i}) = c.1 for a common c, theta reversing coordinates.
inline bool is_g_alcove(const ExtendedAlcove& alcove) {
  const auto& pts = alcove.points();
  const std::size_t n = pts.size();
  std::optional<int> c;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> other = pts[(n - i) % n];
    if (i == 0)
      for (int& v : other) v -= 1;
    for (std::size_t k = 0; k < n; ++k) {
      const int s = pts[i][k] + other[n - 1 - k];
      if (!c) c = s;
      if (s != *c) return false;
    }
  }
  return true;
}

inline AffineElement from_alcove(const ExtendedAlcove& alcove) {
  if (!is_g_alcove(alcove)) throw InvalidValue("from_alcove: not a G-alcove");
  return {Cocharacter(alcove.point(0)), SignedPermutation(alcove.steps())};
}

} // namespace krs
