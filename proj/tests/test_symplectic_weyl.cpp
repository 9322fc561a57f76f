#include "catch_amalgamated.hpp"

#include <algorithm>
#include <numeric>

#include "krstrata/admissible.hpp"
#include "krstrata/signed_permutation.hpp"
#include "oracles.hpp"

using namespace krs;

namespace {

SmallPermutation perm(std::vector<int> v) { return SmallPermutation(std::move(v)); }
SignedPermutation spm(std::vector<int> v) { return SignedPermutation(std::move(v)); }

template <class F>
void for_all_perms(int n, F f) {
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  do f(SmallPermutation(s));
  while (std::next_permutation(s.begin(), s.end()));
}

} // namespace

TEST_CASE("make_signed examples", "[weyl]") {
  CHECK(make_signed(SignVector({0, 0}), SmallPermutation::identity(2)).images() == std::vector<int>{1, 2, 3, 4});
  CHECK(make_signed(SignVector({1}), SmallPermutation::identity(1)).images() == std::vector<int>{2, 1});
  CHECK(make_signed(SignVector({1, 0}), perm({2, 1})).images() == std::vector<int>{3, 1, 4, 2});
  CHECK_THROWS_AS(make_signed(SignVector({1, 0, 0}), perm({2, 1})), GenusMismatch);
}

TEST_CASE("split_signed examples", "[weyl]") {
  auto [u0, s0] = split_signed(spm({1, 2, 3, 4}));
  CHECK(u0.bits() == std::vector<int>{0, 0});
  CHECK(s0 == SmallPermutation::identity(2));
  auto [u1, s1] = split_signed(spm({2, 1}));
  CHECK(u1.bits() == std::vector<int>{1});
  CHECK(s1 == SmallPermutation::identity(1));
  auto [u2, s2] = split_signed(spm({3, 1, 4, 2}));
  CHECK(u2.bits() == std::vector<int>{1, 0});
  CHECK(s2 == perm({2, 1}));
}

TEST_CASE("make_signed and split_signed are inverse on W", "[weyl]") {
  for (int g = 1; g <= 4; ++g) {
    const auto all = oracle::weyl(g);
    const std::size_t factorial[] = {1, 1, 2, 6, 24};
    CHECK(all.size() == (std::size_t{1} << g) * factorial[g]);
    for (const auto& im : all) {
      const SignedPermutation w(im);
      auto [u, s] = split_signed(w);
      CHECK(make_signed(u, s) == w);
    }
    // and the other way round over F_2^g x S_g
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
      std::vector<int> bits(static_cast<std::size_t>(g));
      for (int i = 0; i < g; ++i) bits[i] = (mask >> i) & 1u;
      for_all_perms(g, [&](const SmallPermutation& s) {
        const auto w = make_signed(SignVector(bits), s);
        auto [u2, s2] = split_signed(w);
        CHECK(u2.bits() == bits);
        CHECK(s2 == s);
      });
    }
  }
}

TEST_CASE("weyl_group matches the symplectic permutations of S_2g", "[weyl]") {
  for (int g = 1; g <= 4; ++g) {
    std::vector<std::vector<int>> mine;
    for (const auto& w : weyl_group(g)) mine.push_back(w.images());
    CHECK(mine == oracle::weyl(g));
  }
}

TEST_CASE("signed permutation validation", "[weyl]") {
  CHECK_THROWS_AS(spm({1, 1}), InvalidValue);
  CHECK_THROWS_AS(spm({1, 2, 3}), InvalidValue);
  CHECK_THROWS_AS(spm({2, 1, 3, 4}), InvalidValue); // not symplectic
  CHECK_THROWS_AS(spm({}), InvalidValue);
  CHECK_THROWS_AS(perm({0, 1}), InvalidValue);
  CHECK_THROWS_AS(SignVector({0, 2}), InvalidValue);
}

TEST_CASE("compose, inverse, apply", "[weyl]") {
  const auto w = spm({3, 1, 4, 2});
  CHECK(compose(SignedPermutation::identity(2), w) == w);
  CHECK(inverse(spm({2, 1})) == spm({2, 1}));
  CHECK(compose(w, w).images() == std::vector<int>{4, 3, 2, 1});
  CHECK(apply(w, 1) == 3);
  CHECK_THROWS_AS(apply(w, 0), IndexOutOfRange);
  CHECK_THROWS_AS(apply(w, 5), IndexOutOfRange);
  CHECK_THROWS_AS(compose(w, spm({2, 1})), GenusMismatch);
  for (const auto& x : weyl_group(3)) {
    CHECK(compose(inverse(x), x).is_identity());
    for (const auto& y : weyl_group(2)) CHECK_THROWS_AS(compose(x, y), GenusMismatch);
    break;
  }
}

TEST_CASE("fixed points", "[weyl]") {
  CHECK(fixed_points(SignedPermutation::identity(3)) == std::vector<int>{1, 2, 3});
  CHECK(fixed_points(spm({2, 1})).empty());
  CHECK(fixed_points(spm({3, 1, 4, 2})).empty());
  CHECK(fixed_points(spm({1, 3, 2, 4})) == std::vector<int>{1});
}

TEST_CASE("cycles", "[weyl]") {
  CHECK(cycles(SignedPermutation::identity(2)).empty());
  const auto c1 = cycles(spm({2, 1}));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].kind == Cycle::Kind::sign_flip);
  CHECK(c1[0].points == std::vector<int>{1});
  const auto w = make_signed(SignVector::zero(3), SmallPermutation::from_cycles(3, {{1, 2, 3}}));
  const auto c3 = cycles(w);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].kind == Cycle::Kind::permutation);
  CHECK(c3[0].points == std::vector<int>{1, 2, 3});

  // every point is in exactly one cycle or is fixed; orders add up
  for (int g = 1; g <= 4; ++g)
    for (const auto& x : weyl_group(g)) {
      const auto zs = cycles(x);
      const auto fs = fixed_points(x);
      std::vector<int> seen(fs.begin(), fs.end());
      int total = 0;
      for (const auto& z : zs) {
        total += z.order();
        CHECK(z.points.front() == *std::min_element(z.points.begin(), z.points.end()));
        seen.insert(seen.end(), z.points.begin(), z.points.end());
      }
      std::sort(seen.begin(), seen.end());
      std::vector<int> all(static_cast<std::size_t>(g));
      std::iota(all.begin(), all.end(), 1);
      CHECK(seen == all);
      CHECK(total == g - static_cast<int>(fs.size()));
      CHECK(std::is_sorted(zs.begin(), zs.end(),
                           [](const Cycle& a, const Cycle& b) { return a.points.front() < b.points.front(); }));
    }
}

TEST_CASE("perm_stats examples", "[weyl][stats]") {
  CHECK(perm_stats(SmallPermutation::identity(4)) == PermStats{});
  const auto s21 = perm_stats(perm({2, 1}));
  CHECK(s21.length == 1);
  CHECK(s21.a == 0);
  CHECK(s21.a_inv == 0);
  CHECK(s21.b == 0);
  CHECK(s21.c == 0);
  CHECK(s21.c_inv == 0);
  CHECK(s21.asc == 1);
  CHECK(s21.desc_chain == 0);
  const auto s3412 = perm_stats(perm({3, 4, 1, 2}));
  CHECK(s3412 == PermStats{0, 0, 0, 1, 1, 2, 0, 4});
}

TEST_CASE("perm_stats agrees with literal set definitions", "[weyl][stats]") {
  for (int n = 1; n <= 6; ++n)
    for_all_perms(n, [&](const SmallPermutation& s) {
      const auto& v = s.images();
      const auto inv = oracle::inv(v);
      const auto st = perm_stats(s);
      CHECK(st.a == oracle::stat_a(v));
      CHECK(st.a_inv == oracle::stat_a(inv));
      CHECK(st.b == oracle::stat_b(v));
      CHECK(st.b == oracle::stat_b(inv));
      CHECK(st.c == oracle::stat_c(v));
      CHECK(st.c_inv == oracle::stat_c(inv));
      CHECK(st.length == oracle::inversions(v));
      CHECK(st.length <= n * (n - 1) / 2);
    });
}

TEST_CASE("embraces", "[weyl]") {
  CHECK(embraces(SmallPermutation::from_cycles(3, {{1, 3}}), 2));
  for (int e = 1; e <= 4; ++e) CHECK_FALSE(embraces(SmallPermutation::identity(4), e));
  CHECK_FALSE(embraces(SmallPermutation::from_cycles(5, {{1, 2}, {4, 5}}), 3));
  CHECK_THROWS_AS(embraces(perm({2, 3, 1}), 1), PreconditionFailed);
  CHECK_THROWS_AS(embraces(perm({2, 1}), 3), IndexOutOfRange);
}

TEST_CASE("cycle decomposition", "[weyl]") {
  const auto s = SmallPermutation::from_cycles(5, {{3, 5, 4}, {1, 2}});
  CHECK(s.images() == std::vector<int>{2, 1, 5, 3, 4});
  CHECK(s.cycle_decomposition() == std::vector<std::vector<int>>{{1, 2}, {3, 5, 4}});
  CHECK(s.count_fixed() == 0);
  CHECK(s.inverse().compose(s) == SmallPermutation::identity(5));
}

namespace {

// #{(i,j) : i <= j < s(i), s(j) > j} and the three companions, 1-based
struct ClarkeCounts {
  int lhs_up = 0, rhs_up = 0, lhs_down = 0, rhs_down = 0;
};

ClarkeCounts clarke_counts(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  ClarkeCounts c;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int ai = a[i - 1];
      const int aj = a[j - 1];
      const bool left = i <= j && j < ai;
      const bool right = ai < aj && aj <= i;
      if (aj > j) {
        c.lhs_up += left;
        c.rhs_up += right;
      } else {
        c.lhs_down += left;
        c.rhs_down += right;
      }
    }
  return c;
}

} // namespace

TEST_CASE("S_g identities up to g = 7", "[weyl][stats][slow]") {
  for (int n = 1; n <= 7; ++n)
    for_all_perms(n, [&](const SmallPermutation& s) {
      const auto st = perm_stats(s);
      // inversions through nestings, crossings and ascents
      CHECK(st.length == 2 * (st.a + st.a_inv + st.b) + st.c + st.c_inv + st.asc + st.desc_chain);
      const auto cc = clarke_counts(s.images());
      CHECK(cc.lhs_up == cc.rhs_up);
      CHECK(cc.lhs_down == cc.rhs_down);
      const int moved = n - s.count_fixed();
      const int gap2 = 2 * (st.length - 2 * (st.a + st.a_inv + st.b)); // twice the gap
      CHECK(gap2 >= moved);
      if (s.is_involution()) CHECK((gap2 == moved) == (st.c == 0));
      const auto cyc = s.cycle_decomposition();
      int threes = 0;
      bool others = false;
      for (const auto& c : cyc) {
        if (c.size() == 3) ++threes;
        else if (c.size() > 2) others = true;
      }
      if (threes == 1 && !others) CHECK((gap2 == moved + 1) == (st.c == 0 && st.c_inv == 0));
    });
}
