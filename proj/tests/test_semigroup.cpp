#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "test_util.hpp"
#include "wsbound/semigroup.hpp"

using namespace wsbound;

namespace {

NumericalSemigroup make(std::initializer_list<Int> gens) {
  return NumericalSemigroup::from_generators(std::vector<Int>(gens));
}

// Independent membership oracle for <gens> on [0, window]: plain reachability.
std::vector<bool> brute_members(const std::vector<Int>& gens, Int window) {
  std::vector<bool> in(static_cast<std::size_t>(window) + 1, false);
  in[0] = true;
  for (Int x = 0; x <= window; ++x) {
    if (!in[static_cast<std::size_t>(x)]) continue;
    for (Int g : gens) {
      if (x + g <= window) in[static_cast<std::size_t>(x + g)] = true;
    }
  }
  return in;
}

}  // namespace

TEST_CASE("from_generators computes gaps, conductor and multiplicity") {
  auto h = make({3, 5, 7});
  CHECK(h.gaps() == std::vector<Int>{1, 2, 4});
  CHECK(h.conductor() == 5);
  CHECK(h.multiplicity() == 3);
  CHECK(h.genus() == 3);

  auto trivial = make({1});
  CHECK(trivial.gaps().empty());
  CHECK(trivial.conductor() == 0);
  CHECK(trivial.genus() == 0);
  CHECK(trivial.multiplicity() == 1);

  auto h45 = make({4, 5});
  CHECK(h45.gaps() == std::vector<Int>{1, 2, 3, 6, 7, 11});
  CHECK(h45.genus() == 6);
  CHECK(h45.conductor() == 12);
}

TEST_CASE("from_generators rejects bad input") {
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), EmptyGenerators);
  CHECK_THROWS_AS(make({2, 4}), NonCoprimeGenerators);
  CHECK_THROWS_AS(make({6, 10, 4}), NonCoprimeGenerators);
  CHECK_THROWS_AS(make({0, 3}), Error);
}

TEST_CASE("caps and overflow guards") {
  // a conductor near 10^9 cannot be tabulated
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({2, (Int{1} << 30) + 1}), CapExceeded);
  // intermediate 4 g^2 q would overflow 2^62
  CHECK_THROWS_AS(hasse_weil_bound(Int{1} << 31, Int{1} << 31), Overflow);
  // but a large conductor that fits the window still works
  auto wide = NumericalSemigroup::from_generators({2, 10001});
  CHECK(wide.conductor() == 10000);
  CHECK(wide.genus() == 5000);
}

TEST_CASE("membership") {
  auto h = make({3, 5, 7});
  CHECK(h.contains(8));
  CHECK(h.contains(0));
  CHECK_FALSE(h.contains(4));
  CHECK_FALSE(h.contains(-1));
  CHECK(h.contains(1000));
  CHECK(make({2, 5}).gaps() == std::vector<Int>{1, 3});
}

TEST_CASE("membership agrees with brute-force closure") {
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = testutil::random_generators(rng);
    auto h = NumericalSemigroup::from_generators(gens);
    Int window = 3 * h.conductor() + 10;
    auto in = brute_members(gens, window);
    for (Int x = 0; x <= window; ++x) {
      REQUIRE(h.contains(x) == static_cast<bool>(in[static_cast<std::size_t>(x)]));
    }
    REQUIRE(h.genus() == static_cast<Int>(h.gaps().size()));
    if (h.conductor() > 0) REQUIRE_FALSE(h.contains(h.conductor() - 1));
  }
}

TEST_CASE("apery set of <3,5,7> relative to 8") {
  auto ap = make({3, 5, 7}).apery_set(8);
  CHECK(ap.elements == std::vector<Int>{0, 9, 10, 3, 12, 5, 6, 7});
}

TEST_CASE("apery set edge cases and errors") {
  CHECK(make({1}).apery_set(1).elements == std::vector<Int>{0});
  CHECK(make({2, 5}).apery_set(2).elements == std::vector<Int>{0, 5});
  CHECK_THROWS_AS(make({3, 5, 7}).apery_set(4), BaseNotInSemigroup);
  CHECK_THROWS_AS(make({3, 5, 7}).apery_set(0), BaseNotInSemigroup);
}

TEST_CASE("apery invariants and reconstruction") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto h = NumericalSemigroup::from_generators(testutil::random_generators(rng));
    for (Int e = 1; e <= 3 * h.conductor(); ++e) {
      if (!h.contains(e)) continue;
      auto ap = h.apery_set(e);
      REQUIRE(ap.elements[0] == 0);
      Int window = h.conductor() + 2 * e;
      std::vector<bool> covered(static_cast<std::size_t>(window) + 1, false);
      for (Int r = 0; r < e; ++r) {
        Int w = ap.elements[static_cast<std::size_t>(r)];
        REQUIRE(w % e == r % e);
        REQUIRE(h.contains(w));
        REQUIRE_FALSE(h.contains(w - e));
        for (Int x = w; x <= window; x += e) {
          REQUIRE_FALSE(covered[static_cast<std::size_t>(x)]);  // disjointness
          covered[static_cast<std::size_t>(x)] = true;
        }
      }
      for (Int x = 0; x <= window; ++x) {
        REQUIRE(h.contains(x) == static_cast<bool>(covered[static_cast<std::size_t>(x)]));
      }
    }
  }
}

TEST_CASE("shifted sum complement reproduces the known sets") {
  auto klein = make({3, 5, 7});
  std::vector<Int> expected8 = {0, 3, 5,  6,  7,  8,  9,  10, 11, 12, 13, 14,
                                15, 16, 17, 18, 19, 20, 21, 22, 23, 25, 26, 28};
  CHECK(klein.shifted_sum_complement(8) == expected8);

  std::vector<Int> expected7 = {0,  3,  5,  6,  7,  8,  9,  10, 11, 12, 13,
                                14, 15, 16, 17, 18, 19, 20, 22, 23, 25};
  CHECK(klein.shifted_sum_complement(7) == expected7);

  CHECK(make({2, 5}).shifted_sum_complement(3) == std::vector<Int>{0, 2, 4, 5, 7, 9});
}

TEST_CASE("bounds on the bundled semigroups") {
  auto klein = make({3, 5, 7});
  auto h45 = make({4, 5});
  auto line = make({1});

  CHECK(geil_matsumoto_bound(klein, 8) == 25);
  CHECK(geil_matsumoto_bound(h45, 8) == 33);
  CHECK(geil_matsumoto_bound(line, 4) == 5);
  CHECK(geil_matsumoto_bound(line, 9) == 10);

  CHECK(lewittes_bound(klein, 8) == 25);
  CHECK(lewittes_bound(h45, 8) == 33);
  CHECK(lewittes_bound(line, 4) == 5);

  CHECK(single_point_t_bound(klein, 8) == 21);
  CHECK(single_point_t_bound(h45, 8) == 26);
  CHECK(single_point_t_bound(line, 4) == 3);

  CHECK(hasse_weil_bound(3, 8) == 25);
  CHECK(hasse_weil_bound(0, 4) == 5);
  CHECK(hasse_weil_bound(0, 9) == 10);
  CHECK(hasse_weil_bound(6, 8) == 42);
}

TEST_CASE("complement cardinality equals e * multiplicity for members") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    auto h = NumericalSemigroup::from_generators(testutil::random_generators(rng));
    for (Int e = 1; e <= 3 * h.conductor(); ++e) {
      if (!h.contains(e)) continue;
      REQUIRE(static_cast<Int>(h.shifted_sum_complement(e).size()) == e * h.multiplicity());
    }
  }
}

TEST_CASE("converse of the cardinality identity") {
  // Equality can hold for non-members...
  auto h25 = make({2, 5});
  CHECK_FALSE(h25.contains(3));
  CHECK(static_cast<Int>(h25.shifted_sum_complement(3).size()) == 3 * h25.multiplicity());

  // ...but never for <m, m+1>.
  auto h45 = make({4, 5});
  CHECK_FALSE(h45.contains(7));
  CHECK(h45.shifted_sum_complement(7).size() == 26);
  CHECK(7 * h45.multiplicity() == 28);
  for (Int m = 2; m <= 8; ++m) {
    auto h = NumericalSemigroup::from_generators({m, m + 1});
    for (Int e = 1; e <= 3 * h.conductor(); ++e) {
      bool equality = static_cast<Int>(h.shifted_sum_complement(e).size()) == e * m;
      if (equality) REQUIRE(h.contains(e));
      if (h.contains(e)) REQUIRE(equality);
    }
  }
}

TEST_CASE("monotone shift nesting for members") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    auto h = NumericalSemigroup::from_generators(testutil::random_generators(rng));
    std::vector<Int> members;
    for (Int x = 1; x <= h.conductor() + h.multiplicity() && members.size() < 6; ++x) {
      if (h.contains(x)) members.push_back(x);
    }
    for (Int e : members) {
      for (Int lambda : members) {
        for (Int mu : members) {
          if (lambda > mu) continue;
          Int window = e * mu + 2 * h.conductor() + 10;
          for (Int x = 0; x <= window; ++x) {
            bool in_mu_shift = x >= e * mu && h.contains(x - e * mu);
            if (in_mu_shift) REQUIRE(h.contains(x - e * lambda));
          }
        }
      }
    }
  }
}

TEST_CASE("bound comparisons over the random corpus") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    auto h = NumericalSemigroup::from_generators(testutil::random_generators(rng));
    for (Int q : {2, 3, 4, 5, 7, 8, 9, 11}) {
      Int gm = geil_matsumoto_bound(h, q);
      Int lw = lewittes_bound(h, q);
      REQUIRE(gm <= lw);
      if (h.contains(q)) REQUIRE(gm == lw);
      REQUIRE(single_point_t_bound(h, q) <= gm - 1);
    }
  }
}

TEST_CASE("(q-1)H*+H contains qH*+H") {
  // so the complement for q-1 sits inside the complement for q
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 15; ++trial) {
    auto h = NumericalSemigroup::from_generators(testutil::random_generators(rng));
    for (Int q : {2, 3, 5, 8}) {
      auto big = h.shifted_sum_complement(q);
      std::set<Int> comp_q(big.begin(), big.end());
      for (Int x : h.shifted_sum_complement(q - 1)) {
        REQUIRE(comp_q.count(x) == 1);
      }
    }
  }
}
