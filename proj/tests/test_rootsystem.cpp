#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "bottcert/root_system.hpp"

using namespace bottcert;

namespace {

Weight random_weight(std::mt19937& rng, int rank, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w.c[i] = d(rng);
  return w;
}

} // namespace

TEST_CASE("positive root counts match the classical formulas", "[rootsystem]") {
  auto count = [](DynkinType t) {
    return make_root_system(t)->positive_roots().size();
  };
  for (int n = 1; n <= 8; ++n) CHECK(count({Series::A, n}) == size_t(n * (n + 1)) / 2);
  for (int n = 2; n <= 8; ++n) CHECK(count({Series::B, n}) == size_t(n * n));
  for (int n = 2; n <= 8; ++n) CHECK(count({Series::C, n}) == size_t(n * n));
  for (int n = 3; n <= 8; ++n) CHECK(count({Series::D, n}) == size_t(n * (n - 1)));
  CHECK(count({Series::E, 6}) == 36);
  CHECK(count({Series::E, 7}) == 63);
  CHECK(count({Series::E, 8}) == 120);
  CHECK(count({Series::F, 4}) == 24);
  CHECK(count({Series::G, 2}) == 6);
}

TEST_CASE("weyl group orders", "[rootsystem]") {
  CHECK(weyl_order(DynkinType(Series::A, 4)) == 120);
  CHECK(weyl_order(DynkinType(Series::B, 3)) == 48);
  CHECK(weyl_order(DynkinType(Series::C, 4)) == 384);
  CHECK(weyl_order(DynkinType(Series::D, 4)) == 192);
  CHECK(weyl_order(DynkinType(Series::D, 5)) == 1920);
  CHECK(weyl_order(DynkinType(Series::E, 6)) == 51840);
  CHECK(weyl_order(DynkinType(Series::E, 7)) == 2903040);
  CHECK(weyl_order(DynkinType(Series::E, 8)) == 696729600);
  CHECK(weyl_order(DynkinType(Series::F, 4)) == 1152);
  CHECK(weyl_order(DynkinType(Series::G, 2)) == 12);
}

TEST_CASE("highest long and short roots in fundamental coordinates", "[rootsystem]") {
  auto theta = [](DynkinType t) { return make_root_system(t)->highest_long_root(); };
  auto theta_s = [](DynkinType t) { return make_root_system(t)->highest_short_root(); };

  CHECK(theta({Series::A, 3}) == Weight{3, {1, 0, 1}});
  CHECK(theta({Series::B, 4}) == Weight{4, {0, 1, 0, 0}});
  CHECK(theta({Series::C, 4}) == Weight{4, {2, 0, 0, 0}});
  CHECK(theta({Series::D, 5}) == Weight{5, {0, 1, 0, 0, 0}});
  CHECK(theta({Series::E, 6}) == Weight{6, {0, 1, 0, 0, 0, 0}});
  CHECK(theta({Series::E, 7}) == Weight{7, {1, 0, 0, 0, 0, 0, 0}});
  CHECK(theta({Series::E, 8}) == Weight{8, {0, 0, 0, 0, 0, 0, 0, 1}});
  CHECK(theta({Series::F, 4}) == Weight{4, {1, 0, 0, 0}});
  CHECK(theta({Series::G, 2}) == Weight{2, {0, 1}});

  CHECK(theta_s({Series::B, 4}) == Weight{4, {1, 0, 0, 0}});
  CHECK(theta_s({Series::C, 4}) == Weight{4, {0, 1, 0, 0}});
  CHECK(theta_s({Series::F, 4}) == Weight{4, {0, 0, 0, 1}});
  CHECK(theta_s({Series::G, 2}) == Weight{2, {1, 0}});
  // simply laced: long and short coincide
  CHECK(theta_s({Series::A, 5}) == theta({Series::A, 5}));
  CHECK(theta_s({Series::D, 4}) == theta({Series::D, 4}));
}

TEST_CASE("long/short root counts", "[rootsystem]") {
  auto longs = [](DynkinType t) {
    size_t k = 0;
    for (const PosRoot& r : make_root_system(t)->positive_roots()) k += r.is_long;
    return k;
  };
  CHECK(longs({Series::G, 2}) == 3);  // of 6
  CHECK(longs({Series::F, 4}) == 12); // of 24
  CHECK(longs({Series::B, 3}) == 6);  // of 9: the A-type sub-lattice
  CHECK(longs({Series::C, 3}) == 3);  // of 9: the diagonal 2e_i
  CHECK(longs({Series::A, 4}) == 10); // simply laced: everything is long
}

TEST_CASE("rho is the all-ones weight and equals half the root sum", "[rootsystem]") {
  for (DynkinType t : {DynkinType(Series::A, 4), DynkinType(Series::B, 5),
                       DynkinType(Series::C, 3), DynkinType(Series::D, 6),
                       DynkinType(Series::F, 4), DynkinType(Series::G, 2),
                       DynkinType(Series::E, 7)}) {
    RootSystemPtr rs = make_root_system(t);
    Weight sum(t.rank);
    for (const PosRoot& r : rs->positive_roots()) sum += r.fund;
    CHECK(sum == rs->rho() * 2);
    for (int i = 0; i < t.rank; ++i) CHECK(rs->rho().c[i] == 1);
  }
}

TEST_CASE("reflections are involutive and preserve the invariant form", "[rootsystem]") {
  std::mt19937 rng(7);
  for (DynkinType t : {DynkinType(Series::B, 4), DynkinType(Series::F, 4),
                       DynkinType(Series::G, 2), DynkinType(Series::D, 5)}) {
    RootSystemPtr rs = make_root_system(t);
    for (int trial = 0; trial < 50; ++trial) {
      Weight x = random_weight(rng, t.rank);
      Weight y = random_weight(rng, t.rank);
      int i = std::uniform_int_distribution<int>(0, t.rank - 1)(rng);
      CHECK(rs->reflect(rs->reflect(x, i), i) == x);
      CHECK(rs->inner_product(rs->reflect(x, i), rs->reflect(y, i)) == rs->inner_product(x, y));
    }
  }
}

TEST_CASE("pairing against roots is the Cartan pairing times the root length", "[rootsystem]") {
  // <x, alpha_i> * (alpha_i, alpha_i)/2 = (x, alpha_i); pairing_6 carries 6x.
  std::mt19937 rng(11);
  for (DynkinType t : {DynkinType(Series::C, 3), DynkinType(Series::G, 2)}) {
    RootSystemPtr rs = make_root_system(t);
    for (int trial = 0; trial < 40; ++trial) {
      Weight x = random_weight(rng, t.rank);
      int i = std::uniform_int_distribution<int>(0, t.rank - 1)(rng);
      const PosRoot& alpha = rs->simple_root(i);
      // x in fundamental coordinates: <x, alpha_i^vee> = x_i
      CHECK(alpha.pairing_6(x) == x.c[i] * rs->symmetrizer6()[i]);
    }
  }
}

TEST_CASE("dominant conjugation", "[rootsystem]") {
  std::mt19937 rng(13);
  for (DynkinType t : {DynkinType(Series::A, 3), DynkinType(Series::B, 4),
                       DynkinType(Series::F, 4), DynkinType(Series::G, 2)}) {
    RootSystemPtr rs = make_root_system(t);
    const uint32_t full = RootSystem::full_mask(t.rank);
    for (int trial = 0; trial < 100; ++trial) {
      Weight x = random_weight(rng, t.rank);
      DominantConjugate dc = rs->dominant_conjugate(x, full);
      if (dc.singular) continue;
      for (int i = 0; i < t.rank; ++i) CHECK(dc.weight.c[i] > 0);
      CHECK(dc.length <= static_cast<int>(rs->positive_roots().size()));
      // conjugating the result again is the identity
      DominantConjugate dc2 = rs->dominant_conjugate(dc.weight, full);
      CHECK(!dc2.singular);
      CHECK(dc2.length == 0);
      CHECK(dc2.weight == dc.weight);
      // the invariant norm is preserved along the walk
      CHECK(rs->inner_product(x, x) == rs->inner_product(dc.weight, dc.weight));
    }
  }
}

TEST_CASE("weyl order of marked sub-diagrams", "[rootsystem]") {
  auto sub = [](DynkinType t, std::vector<int> nodes1) {
    std::vector<int> nodes;
    for (int k : nodes1) nodes.push_back(k - 1);
    return weyl_order_of_subdiagram(cartan_matrix(t), nodes);
  };
  CHECK(sub(DynkinType(Series::B, 4), {1, 2}) == 6);          // A2
  CHECK(sub(DynkinType(Series::B, 4), {2, 3, 4}) == 48);      // B3
  CHECK(sub(DynkinType(Series::B, 4), {3, 4}) == 8);          // B2
  CHECK(sub(DynkinType(Series::C, 4), {2, 3, 4}) == 48);      // C3
  CHECK(sub(DynkinType(Series::D, 5), {1, 3, 4, 5}) == 2 * 24); // A1 x A3
  CHECK(sub(DynkinType(Series::D, 5), {2, 3, 4, 5}) == 192);  // D4
  CHECK(sub(DynkinType(Series::E, 7), {2, 3, 4, 5, 6, 7}) == 23040);    // D6
  CHECK(sub(DynkinType(Series::E, 8), {1, 2, 3, 4, 5, 6, 7}) == 2903040); // E7
  CHECK(sub(DynkinType(Series::F, 4), {1, 2}) == 6);          // A2 long
  CHECK(sub(DynkinType(Series::F, 4), {2, 3}) == 8);          // B2
  CHECK(sub(DynkinType(Series::G, 2), {1}) == 2);
  CHECK(sub(DynkinType(Series::A, 5), {1, 3, 5}) == 8);       // A1^3
}

TEST_CASE("invalid dynkin data is rejected", "[rootsystem]") {
  CHECK_THROWS_AS(DynkinType(Series::E, 9), ConstructionError);
  CHECK_THROWS_AS(DynkinType(Series::F, 3), ConstructionError);
  CHECK_THROWS_AS(DynkinType(Series::G, 3), ConstructionError);
  CHECK_THROWS_AS(DynkinType(Series::B, 1), ConstructionError);
  CHECK_THROWS_AS(parse_dynkin_type("H4"), UsageError);
  CHECK_THROWS_AS(parse_dynkin_type("B"), UsageError); // needs a rank
  CHECK(parse_dynkin_type("b6").rank == 6);
  CHECK(parse_dynkin_type("E", 8).series == Series::E);
}
