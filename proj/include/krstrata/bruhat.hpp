#pragma once

/**
 * @file bruhat.hpp
 * @brief Bruhat order on the extended affine Weyl group of GSp_2g.
 *
 * x <= y requires x and y to lie in the same W_a-coset (equal similitude
 * class); inside a coset the order is decided by the lifting recursion on
 * left descents.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "krstrata/admissible.hpp"
#include "krstrata/errors.hpp"
#include "krstrata/extended_affine.hpp"

namespace krs {

/// Byte string identifying an element; equal keys iff equal elements.
inline std::string canonical_key(const AffineElement& x) {
  std::string key;
  key.reserve(x.x0.coords().size() * 2 + 1);
  key.push_back(static_cast<char>(x.genus()));
  for (int v : x.x0.coords()) key.push_back(static_cast<char>(v + 64));
  for (int v : x.w.images()) key.push_back(static_cast<char>(v));
  return key;
}

/// Memoized Bruhat comparisons. Not synchronized: use one instance per thread.
class BruhatOrder {
public:
  bool leq(const AffineElement& x, const AffineElement& y) {
    require_same_genus(x.genus(), y.genus());
    if (similitude_class(x) != similitude_class(y)) return false;
    return leq_same_coset(x, canonical_key(x), y, canonical_key(y));
  }

  int length(const AffineElement& x) { return info(x, canonical_key(x)).length; }

  std::size_t memo_size() const { return memo_.size(); }

  void clear() {
    memo_.clear();
    info_.clear();
  }

private:
  struct Info {
    int length = 0;
    std::vector<int> descents;
  };

  const Info& info(const AffineElement& x, const std::string& key) {
    if (auto it = info_.find(key); it != info_.end()) return it->second;
    Info inf;
    inf.length = im_length(x);
    inf.descents = left_descents(x);
    return info_.emplace(key, std::move(inf)).first->second;
  }

  bool leq_same_coset(const AffineElement& x, const std::string& kx, const AffineElement& y,
                      const std::string& ky) {
    const int lx = info(x, kx).length;
    const Info& iy = info(y, ky);
    if (lx > iy.length) return false;
    if (lx == iy.length) return kx == ky;

    std::string pair_key = kx;
    pair_key += '|';
    pair_key += ky;
    if (auto it = memo_.find(pair_key); it != memo_.end()) return it->second;

    const int g = y.genus();
    const int s = iy.descents.front();
    const AffineElement refl = simple_reflection(g, s);
    const AffineElement sy = multiply(refl, y);
    const std::string ksy = canonical_key(sy);
    const auto& dx = info(x, kx).descents;
    bool result;
    if (std::binary_search(dx.begin(), dx.end(), s)) {
      const AffineElement sx = multiply(refl, x);
      result = leq_same_coset(sx, canonical_key(sx), sy, ksy);
    } else {
      result = leq_same_coset(x, kx, sy, ksy);
    }
    memo_.emplace(std::move(pair_key), result);
    return result;
  }

  std::unordered_map<std::string, bool> memo_;
  std::unordered_map<std::string, Info> info_;
};

/// Per-thread memo shared by the free functions below.
inline BruhatOrder& thread_bruhat() {
  thread_local BruhatOrder order;
  return order;
}

inline bool leq(const AffineElement& x, const AffineElement& y) { return thread_bruhat().leq(x, y); }

/// x <= t^{w(mu)} for some w in W.
inline bool admissible_by_domination(const AffineElement& x) {
  for (const auto& t : weyl_orbit_mu(x.genus()))
    if (leq(x, AffineElement::translation(t))) return true;
  return false;
}

struct HasseDiagram {
  std::vector<AffineElement> nodes;                    // canonical order
  std::vector<std::pair<std::size_t, std::size_t>> edges; // (lower, upper) node indices
};

/// Cover relations of the Bruhat order restricted to `elements`.
inline HasseDiagram covers(std::vector<AffineElement> elements) {
  HasseDiagram out;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (std::size_t k = 1; k < elements.size(); ++k) {
    require_same_genus(elements[0].genus(), elements[k].genus());
    if (similitude_class(elements[k]) != similitude_class(elements[0]))
      throw MixedCosets("covers: elements lie in different W_a-cosets");
  }
  auto& order = thread_bruhat();
  std::vector<int> len;
  for (const auto& x : elements) len.push_back(order.length(x));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (len[j] == len[i] + 1 && order.leq(elements[i], elements[j])) out.edges.emplace_back(i, j);
  out.nodes = std::move(elements);
  return out;
}

inline HasseDiagram covers(const std::vector<AdmissibleElement>& elements) {
  std::vector<AffineElement> raw;
  for (const auto& x : elements) raw.push_back(x.elem());
  return covers(std::move(raw));
}

/// {x in Adm(mu) : x <= y for some y in S}, in canonical order.
inline std::vector<AdmissibleElement> downward_closure(const std::vector<AdmissibleElement>& tops) {
  if (tops.empty()) return {};
  const int g = tops.front().genus();
  std::vector<AdmissibleElement> out;
  auto& order = thread_bruhat();
  for (auto& x : enumerate_adm(g)) {
    for (const auto& y : tops) {
      if (y.length() >= x.length() && order.leq(x.elem(), y.elem())) {
        out.push_back(std::move(x));
        break;
      }
    }
  }
  return out;
}

} // namespace krs
