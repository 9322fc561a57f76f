#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library's algorithms: elements are plain (x0, w) vectors,
// lengths come from counting separating hyperplanes, and the Bruhat order from
// generated down-sets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

struct Elem {
  Vec x0;
  Vec w; // one-line, 1-based values

  auto operator<=>(const Elem&) const = default;
};

inline int genus(const Elem& x) { return static_cast<int>(x.w.size()) / 2; }

inline bool symplectic(const Vec& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    if (w[n - 1 - i] != n + 1 - w[i]) return false;
  return true;
}

/// W as the permutations of S_2g commuting with i -> 2g+1-i.
inline std::vector<Vec> weyl(int g) {
  Vec p(static_cast<std::size_t>(2 * g));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Vec> out;
  do {
    if (symplectic(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Vec inv(const Vec& w) {
  Vec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[w[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

/// (x * y)(v) = x(y(v)) for affine maps v -> w.v + x0, (w.v)(w(i)) = v(i).
inline Elem mul(const Elem& x, const Elem& y) {
  const std::size_t n = x.w.size();
  Elem out{Vec(n), Vec(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.w[i] = x.w[y.w[i] - 1];
    out.x0[x.w[i] - 1] = y.x0[i];
  }
  for (std::size_t i = 0; i < n; ++i) out.x0[i] += x.x0[i];
  return out;
}

inline Elem ident(int g) {
  Vec w(static_cast<std::size_t>(2 * g));
  std::iota(w.begin(), w.end(), 1);
  return {Vec(static_cast<std::size_t>(2 * g), 0), w};
}

/// Reflections in the walls of the base alcove.
inline Elem simple(int g, int i) {
  const int n = 2 * g;
  Elem s = ident(g);
  auto swap = [&](int a, int b) { std::swap(s.w[a - 1], s.w[b - 1]); };
  if (i == 0) {
    swap(1, n);
    s.x0[0] = -1;
    s.x0[n - 1] = 1;
  } else if (i == g) {
    swap(g, g + 1);
  } else {
    swap(i, i + 1);
    swap(n - i, n + 1 - i);
  }
  return s;
}

/// Number of affine root hyperplanes between the base point p0 = (1..2g)/(2g+1)
/// and its image. The functionals v(a) - v(b), a < b, coincide in pairs on
/// vectors with constant pair sums; one representative of each is kept.
inline int length(const Elem& x) {
  const int n = static_cast<int>(x.w.size());
  const long scale = n + 1;
  const Vec winv = inv(x.w);
  std::set<std::pair<int, int>> seen;
  int total = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      const std::pair<int, int> twin{n + 1 - b, n + 1 - a};
      if (seen.count(twin)) continue;
      seen.insert({a, b});
      const long here = winv[a - 1] - winv[b - 1] + scale * (x.x0[a - 1] - x.x0[b - 1]);
      const long base = a - b;
      long lo = std::min(here, base);
      long hi = std::max(here, base);
      // multiples of scale strictly between lo and hi (neither is a multiple)
      auto floor_div = [scale](long v) { return v >= 0 ? v / scale : -((-v + scale - 1) / scale); };
      total += static_cast<int>(floor_div(hi) - floor_div(lo));
    }
  return total;
}

inline int pair_sum(const Elem& x) { return x.x0[0] + x.x0.back(); }

/// {x : x <= y}, generated from {z <= s y} and s{z <= s y} for a descent s.
class Downsets {
public:
  const std::set<Elem>& of(const Elem& y) {
    if (auto it = cache_.find(y); it != cache_.end()) return it->second;
    const int g = genus(y);
    const int len = length(y);
    std::set<Elem> out;
    if (len == 0) {
      out.insert(y);
    } else {
      for (int i = 0; i <= g; ++i) {
        const Elem s = simple(g, i);
        const Elem sy = mul(s, y);
        if (length(sy) >= len) continue;
        const auto& below = of(sy);
        for (const auto& z : below) {
          out.insert(z);
          out.insert(mul(s, z));
        }
        break;
      }
    }
    return cache_.emplace(y, std::move(out)).first->second;
  }

  bool leq(const Elem& x, const Elem& y) { return of(y).count(x) > 0; }

private:
  std::map<Elem, std::set<Elem>> cache_;
};

inline std::vector<Elem> translations_mu(int g) {
  std::vector<Elem> out;
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    Elem t = ident(g);
    for (int i = 0; i < g; ++i) {
      const int bit = (mask >> i) & 1u;
      t.x0[i] = bit;
      t.x0[2 * g - 1 - i] = 1 - bit;
    }
    out.push_back(t);
  }
  return out;
}

/// Adm(mu) as the union of the down-sets of the translations t^{w(mu)}.
inline std::set<Elem> admissible(int g, Downsets& ds) {
  std::set<Elem> out;
  for (const auto& t : translations_mu(g)) {
    const auto& d = ds.of(t);
    out.insert(d.begin(), d.end());
  }
  return out;
}

inline int prank(const Elem& x) {
  int d = 0;
  for (int i = 1; i <= genus(x); ++i) d += x.w[i - 1] == i;
  return d;
}

// ---------------------------------------------------------------------------
// Permutations of {1..n}

inline int inversions(const Vec& s) {
  int count = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i < j && s[i] > s[j]) ++count;
  return count;
}

/// #{(i, j) in [n]^2 : pred(i, j, s)}, 1-based.
template <class Pred>
int count_pairs(const Vec& s, Pred pred) {
  const int n = static_cast<int>(s.size());
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (pred(i, j, [&](int k) { return s[k - 1]; })) ++count;
  return count;
}

inline int stat_a(const Vec& s) {
  return count_pairs(s, [](int i, int j, auto f) { return i < j && j < f(j) && f(j) < f(i); });
}
inline int stat_b(const Vec& s) {
  return count_pairs(s, [](int i, int j, auto f) { return i < j && j == f(j) && f(j) < f(i); });
}
inline int stat_c(const Vec& s) {
  return count_pairs(s, [](int i, int j, auto f) { return i < j && j < f(i) && f(i) < f(j); });
}

/// Catalan numbers by counting Dyck paths with a DP over heights.
inline std::int64_t catalan(int n) {
  std::vector<std::int64_t> ways(static_cast<std::size_t>(2 * n + 2), 0);
  ways[0] = 1;
  for (int step = 0; step < 2 * n; ++step) {
    std::vector<std::int64_t> next(ways.size(), 0);
    for (std::size_t h = 0; h < ways.size(); ++h) {
      if (!ways[h]) continue;
      if (h + 1 < ways.size()) next[h + 1] += ways[h];
      if (h > 0) next[h - 1] += ways[h];
    }
    ways = std::move(next);
  }
  return ways[0];
}

inline std::int64_t binomial(int n, int k) {
  std::vector<std::int64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(r + 1), 1);
    for (int c = 1; c < r; ++c) next[c] = row[c - 1] + row[c];
    row = std::move(next);
  }
  return k < 0 || k > n ? 0 : row[k];
}

} // namespace oracle
