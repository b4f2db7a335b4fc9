// Acceptance suite: every release gate in one binary, one line per criterion.
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "test_util.hpp"
#include "wsbound/bound_engine.hpp"
#include "wsbound/certificate_io.hpp"
#include "wsbound/oracle.hpp"
#include "wsbound/semigroup.hpp"
#include "wsbound/t_bound_engine.hpp"

using namespace wsbound;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<void()>& body) {
  try {
    body();
    std::cout << "[PASS] criterion " << number << ": " << name << "\n";
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "[FAIL] criterion " << number << ": " << name << " -- " << e.what() << "\n";
  }
}

void expect(bool ok, const std::string& message) {
  if (!ok) throw std::runtime_error(message);
}

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& what) {
  if (got != want) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    throw std::runtime_error(os.str());
  }
}

}  // namespace

int main() {
  const auto klein_gens = std::vector<Int>{3, 5, 7};

  criterion(1, "Geil-Matsumoto reproduction for <3,5,7>, q = 8", [&] {
    auto h = NumericalSemigroup::from_generators(klein_gens);
    auto set = h.shifted_sum_complement(8);
    std::vector<Int> expected = {0,  3,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14,
                                 15, 16, 17, 18, 19, 20, 21, 22, 23, 25, 26, 28};
    expect(set == expected, "complement set differs from the published one");
    expect_eq<Int>(static_cast<Int>(set.size()), 24, "cardinality");
    expect_eq<Int>(geil_matsumoto_bound(h, 8), 25, "bound");
  });

  criterion(2, "Apery set of <3,5,7> relative to 8", [&] {
    auto ap = NumericalSemigroup::from_generators(klein_gens).apery_set(8);
    expect(ap.elements == std::vector<Int>{0, 9, 10, 3, 12, 5, 6, 7},
           "Apery elements differ from the published values");
  });

  criterion(3, "cardinality identity over 200 random semigroups", [&] {
    std::mt19937_64 rng(0x5eed5eed);
    for (int trial = 0; trial < 200; ++trial) {
      auto gens = testutil::random_generators(rng);
      auto h = NumericalSemigroup::from_generators(gens);
      for (Int e = 1; e <= 3 * h.conductor(); ++e) {
        if (!h.contains(e)) continue;
        Int engine_count = static_cast<Int>(h.shifted_sum_complement(e).size());
        Int cap = e * h.multiplicity() + h.conductor() + h.multiplicity();
        Int oracle_count = static_cast<Int>(oracle::brute_shifted_complement(gens, e, cap).size());
        expect_eq(engine_count, e * h.multiplicity(), "engine cardinality");
        expect_eq(oracle_count, e * h.multiplicity(), "oracle cardinality");
      }
    }
  });

  criterion(4, "identity beyond members: <2,5> at e=3 collides, <4,5> at e=7 does not", [&] {
    auto h25 = NumericalSemigroup::from_generators({2, 5});
    expect(!h25.contains(3), "3 must be a gap of <2,5>");
    expect_eq<Int>(static_cast<Int>(h25.shifted_sum_complement(3).size()), 6, "<2,5> cardinality");

    auto h45 = NumericalSemigroup::from_generators({4, 5});
    expect(!h45.contains(7), "7 must be a gap of <4,5>");
    expect_eq<Int>(static_cast<Int>(h45.shifted_sum_complement(7).size()), 26,
                   "<4,5> cardinality");
    expect(26 != 7 * h45.multiplicity(), "equality must fail for <4,5>, e=7");
  });

  criterion(5, "Klein multi-point: published path and lattice search", [&] {
    auto klein = testutil::load_model("klein_quartic.model");
    BoundEngine engine(klein, "klein_quartic");
    auto cert = engine.evaluate_path(testutil::klein_known_path());
    std::set<Int> nonnegligible;
    for (std::size_t k = 0; k < cert.edges.size(); ++k) {
      if (cert.edges[k].delta == 1) nonnegligible.insert(static_cast<Int>(k));
    }
    std::set<Int> expected{0, 3, 25};
    for (Int k = 5; k <= 23; ++k) expected.insert(k);
    expect(nonnegligible == expected, "non-negligible steps differ from {0,3,5..23,25}");
    expect_eq<Int>(cert.weight, 22, "path weight");
    expect_eq<Int>(cert.bound, 24, "path bound");

    auto searched = engine.min_weight_path(4);
    expect(searched.weight <= 22, "searched weight above 22");
    expect(searched.bound <= 24, "searched bound above 24");
    expect(searched.bound >= 24, "bound below the true place count 24");
  });

  criterion(6, "genus-6 multi-point: single-point 33, published path 31", [&] {
    auto genus6 = testutil::load_model("genus6_newton.model");
    expect_eq<Int>(multipoint_bound(genus6.restricted_to({"P2"})), 33, "single-point bound");

    BoundEngine engine(genus6, "genus6_newton");
    auto cert = engine.evaluate_path(testutil::genus6_known_path());
    expect_eq<Int>(cert.weight, 29, "path weight");
    expect_eq<Int>(cert.bound, 31, "path bound");
    expect(multipoint_bound(genus6) <= 31, "searched bound above 31");
  });

  criterion(7, "refined counts: 21 + 3 = 24 and 26 + 5 = 31", [&] {
    auto klein = NumericalSemigroup::from_generators({3, 5, 7});
    expect_eq<Int>(single_point_t_bound(klein, 8), 21, "Klein refined count");
    auto klein_model = testutil::load_model("klein_quartic.model").restricted_to({"P1"});
    auto cert = TBoundEngine(klein_model).min_weight_path(0, 3);
    expect_eq<Int>(cert.q_bound, 21, "Klein certified count");
    expect_eq<Int>(cert.total_bound, 24, "Klein total");

    auto h45 = NumericalSemigroup::from_generators({4, 5});
    expect_eq<Int>(single_point_t_bound(h45, 8), 26, "genus-6 refined count");
    auto genus6_model = testutil::load_model("genus6_newton.model").restricted_to({"P2"});
    auto cert6 = TBoundEngine(genus6_model).min_weight_path(0, 5);
    expect_eq<Int>(cert6.q_bound, 26, "genus-6 certified count");
    expect_eq<Int>(cert6.total_bound, 31, "genus-6 total");
  });

  criterion(8, "horizon values", [&] {
    auto klein = testutil::load_model("klein_quartic.model");
    BoundEngine klein_engine(klein);
    expect_eq<Int>(klein_engine.horizon(0, HorizonMode::corollary), 29, "Klein corollary");
    expect_eq<Int>(klein_engine.horizon(0, HorizonMode::proposition), 37, "Klein proposition");
    auto genus6 = testutil::load_model("genus6_newton.model");
    expect_eq<Int>(BoundEngine(genus6).horizon(1, HorizonMode::corollary), 43,
                   "genus-6 corollary");
  });

  criterion(9, "oracle equivalence", [&] {
    for (const char* name : {"klein_quartic.model", "genus6_newton.model"}) {
      auto model = testutil::load_model(name);
      BoundEngine engine(model);
      for (Int w = 0; w <= 7; ++w) {
        auto spine0 = oracle::brute_min_path(model, {{-1, engine.horizon(0)}, {0, w}});
        auto spine1 = oracle::brute_min_path(model, {{0, w}, {-1, engine.horizon(1)}});
        Int brute = std::min(spine0.weight, spine1.weight);
        expect_eq(engine.search_window(w).weight, brute,
                  std::string(name) + " width " + std::to_string(w));
      }
    }
    std::mt19937_64 rng(0x02ac1e);
    for (int trial = 0; trial < 60; ++trial) {
      auto gens = testutil::random_generators(rng);
      auto h = NumericalSemigroup::from_generators(gens);
      for (Int e : {1, 2, 3, 5, 7, 8}) {
        Int cap = e * h.multiplicity() + h.conductor() + h.multiplicity();
        expect(h.shifted_sum_complement(e) == oracle::brute_shifted_complement(gens, e, cap),
               "complement mismatch");
      }
    }
  });

  criterion(10, "invariant suites", [&] {
    // H_i membership ignores the pinned coordinate: 50 probes per model
    std::mt19937_64 rng(0xfeedbeef);
    std::uniform_int_distribution<Int> coord(-3, 25);
    std::uniform_int_distribution<Int> mu_dist(-20, 30);
    for (const char* name : {"klein_quartic.model", "genus6_newton.model"}) {
      auto model = testutil::load_model(name);
      std::size_t n = model.num_distinguished();
      for (int probe = 0; probe < 50; ++probe) {
        DivisorIndex i(n);
        for (auto& c : i) c = coord(rng);
        std::size_t j = static_cast<std::size_t>(rng() % n);
        Int mu = mu_dist(rng);
        DivisorIndex altered = i;
        altered[j] += static_cast<Int>(rng() % 71) - 35;
        expect(h_set_contains(model, i, j, mu) == h_set_contains(model, altered, j, mu),
               "pinned coordinate changed the answer");
      }
    }

    // n = 1 reduction
    auto klein = testutil::load_model("klein_quartic.model");
    for (const char* place : {"P1", "P2"}) {
      auto restricted = klein.restricted_to({place});
      BoundEngine engine(restricted);
      expect_eq(multipoint_bound(restricted), geil_matsumoto_bound(engine.semigroup(0), klein.q),
                "n=1 reduction");
    }

    // window monotonicity over widths 0..4
    for (const char* name : {"klein_quartic.model", "genus6_newton.model"}) {
      auto model = testutil::load_model(name);
      BoundEngine engine(model);
      Int prev = engine.search_window(0).weight;
      for (Int w = 1; w <= 4; ++w) {
        Int weight = engine.search_window(w).weight;
        expect(weight <= prev, "widening increased the weight");
        prev = weight;
      }
    }

    // certificate round trip
    BoundEngine engine(klein, "klein_quartic");
    auto cert = engine.min_weight_path(4);
    verify_certificate_json(certificate_to_json(cert, klein));

    // GM <= Lewittes with equality on members
    std::mt19937_64 rng2(0xc0ffee);
    for (int trial = 0; trial < 60; ++trial) {
      auto h = NumericalSemigroup::from_generators(testutil::random_generators(rng2));
      for (Int q : {2, 3, 4, 5, 7, 8, 9}) {
        Int gm = geil_matsumoto_bound(h, q);
        Int lw = lewittes_bound(h, q);
        expect(gm <= lw, "GM above Lewittes");
        if (h.contains(q)) expect_eq(gm, lw, "GM != Lewittes though q is a member");
      }
    }
  });

  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
