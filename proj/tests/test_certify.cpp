// End-to-end certification: occupancy analysis of the exterior-power page,
// frozen certificates for the small (co)adjoint cases, the minimal-degree
// search, the projective-space vanishing scan against the classical
// closed form, large-rank stabilization, budgets, and determinism across
// thread counts.

#include <catch2/catch_amalgamated.hpp>
#include <gmpxx.h>

#include <string>
#include <vector>

#include "bottcert/certify.hpp"
#include "bottcert/json_io.hpp"

using namespace bottcert;

namespace {

mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<Weight> survivor_reps(const Certificate& c) {
  std::vector<Weight> out;
  for (const Survivor& s : c.survivors) out.push_back(s.rep);
  return out;
}

} // namespace

TEST_CASE("exact single-degree certificates for small cases", "[certify]") {
  {
    Certificate c = certify(adjoint_marking(DynkinType(Series::G, 2)), 2);
    CHECK(c.variety == "G2/P2");
    CHECK(c.q == 2);
    CHECK(c.twist == -1);
    CHECK(c.twist_weight == Weight(2, {0, -1}));
    REQUIRE(c.certified());
    CHECK(c.exact);
    REQUIRE(c.survivors.size() == 1);
    CHECK(c.survivors[0].rep == Weight(2, {1, 0}));
    CHECK(c.survivors[0].mult == 1);
    CHECK(c.survivors[0].dim == 7);
    CHECK(c.survivors[0].kind == "single_degree");
    CHECK(c.ambiguous.empty());
    CHECK(c.stats.summands == 2);
    // Degree 0 holds one copy of the trivial module (a genuine invariant in
    // the contact bivectors); it shares no representation with degree 1.
    CHECK(c.table.multiplicity(0, Weight(2)) == 1);
    CHECK(c.table.total_dim(0) == 1);
    CHECK(c.table.total_dim(1) == 7);
    REQUIRE(c.degree_summaries.size() == 2);
    CHECK(c.degree_summaries[0].degree == 0);
    CHECK(c.degree_summaries[1].degree == 1);
    CHECK(c.degree_summaries[1].entries == 1);
  }
  {
    Certificate c = certify(coadjoint_marking(DynkinType(Series::C, 3)), 1);
    REQUIRE(c.certified());
    CHECK(c.exact);
    REQUIRE(c.survivors.size() == 1);
    CHECK(c.survivors[0].rep == Weight(3));
    CHECK(c.survivors[0].dim == 1);
    CHECK(c.survivors[0].kind == "single_degree");
    CHECK(c.table.rows().size() == 1); // nothing outside degree 1
    CHECK(c.table.total_dim(1) == 1);
  }
  {
    Certificate c = certify(adjoint_marking(DynkinType(Series::B, 3)), 3);
    REQUIRE(c.certified());
    CHECK(c.exact);
    REQUIRE(c.survivors.size() == 1);
    CHECK(c.survivors[0].rep == Weight(3, {0, 0, 2}));
    CHECK(c.survivors[0].dim == 35);
    CHECK(c.survivors[0].kind == "single_degree");
    // Degree zero carries the adjoint-of-the-Levi-side module w2 instead.
    CHECK(c.table.multiplicity(0, Weight(3, {0, 1, 0})) == 1);
    CHECK(c.table.total_dim(0) == 21);
  }
}

TEST_CASE("triality: three surviving modules on the D4 adjoint variety", "[certify]") {
  Certificate c = certify(adjoint_marking(DynkinType(Series::D, 4)), 3);
  REQUIRE(c.certified());
  CHECK(c.exact);
  REQUIRE(c.survivors.size() == 3);
  CHECK(survivor_reps(c) == std::vector<Weight>{Weight(4, {0, 0, 0, 2}), Weight(4, {0, 0, 2, 0}),
                                                Weight(4, {2, 0, 0, 0})});
  for (const Survivor& s : c.survivors) {
    CHECK(s.mult == 1);
    CHECK(s.dim == 35);
    CHECK(s.kind == "single_degree");
  }
  CHECK(c.table.total_dim(1) == 105);
  CHECK(c.table.multiplicity(0, Weight(4, {0, 1, 0, 0})) == 1);
}

TEST_CASE("multiplicity margin and ambiguous outcomes", "[certify]") {
  {
    // Adjoint A2: the trivial module occupies degrees 0 and 1 with margin
    // 2 - 1 = 1, so certification succeeds without being exact.
    Certificate c = certify(adjoint_marking(DynkinType(Series::A, 2)), 1);
    REQUIRE(c.certified());
    CHECK_FALSE(c.exact);
    REQUIRE(c.survivors.size() == 1);
    CHECK(c.survivors[0].rep == Weight(2));
    CHECK(c.survivors[0].mult == 1); // 2 copies in degree 1, 1 in degree 0
    CHECK(c.survivors[0].kind == "multiplicity_margin");
    CHECK(c.table.multiplicity(1, Weight(2)) == 2);
    CHECK(c.table.multiplicity(0, Weight(2)) == 1);
  }
  {
    // G2 with q = 1: one copy in each of degrees 0 and 1 - no certificate.
    Certificate c = certify(adjoint_marking(DynkinType(Series::G, 2)), 1);
    CHECK(c.status == CertifyStatus::Ambiguous);
    CHECK_FALSE(c.certified());
    CHECK(c.survivors.empty());
    REQUIRE(c.ambiguous.size() == 1);
    CHECK(c.ambiguous[0].rep == Weight(2));
    CHECK(c.ambiguous[0].mult_in_degree1 == 1);
    CHECK(c.ambiguous[0].degrees == std::vector<int>{0, 1});
  }
}

TEST_CASE("every aggregated entry satisfies the euler product formula", "[certify]") {
  for (MarkedDiagram md : {adjoint_marking(DynkinType(Series::B, 3)),
                           adjoint_marking(DynkinType(Series::D, 4)),
                           coadjoint_marking(DynkinType(Series::F, 4))}) {
    Certificate c = certify(md, 3);
    FlagVariety X(md);
    size_t checked = 0;
    for (const auto& [p, row] : c.table.rows())
      for (const auto& [w, e] : row)
        for (const CohSource& src : e.sources) {
          CHECK(euler_check(X, src.levi_label));
          ++checked;
        }
    CHECK(checked > 0);
  }
}

TEST_CASE("exterior degree bounds are enforced", "[certify]") {
  CertifySession s(adjoint_marking(DynkinType(Series::G, 2)));
  CHECK_THROWS_AS(s.certify(0, -1), UsageError);
  CHECK_THROWS_AS(s.certify(6, -1), UsageError);
  CHECK_NOTHROW(s.certify(5, -1));
}

TEST_CASE("session reuse matches one-shot certification", "[certify]") {
  CertifySession s(adjoint_marking(DynkinType(Series::B, 3)));
  Certificate first = s.certify(3, -1);
  Certificate again = s.certify(3, -1);  // cached decompositions
  Certificate shifted = s.certify(3, 0); // same cache, different twist
  Certificate oneshot = certify(adjoint_marking(DynkinType(Series::B, 3)), 3);
  CHECK(dump_json(certificate_json(first)) == dump_json(certificate_json(again)));
  CHECK(dump_json(certificate_json(first)) == dump_json(certificate_json(oneshot)));
  CHECK(shifted.twist_weight == Weight(3));
  CHECK(dump_json(certificate_json(first)) != dump_json(certificate_json(shifted)));
}

TEST_CASE("minimal exterior degree search on the G2 adjoint variety", "[certify]") {
  MinimalQReport r = find_minimal_q(adjoint_marking(DynkinType(Series::G, 2)), 99);
  CHECK(r.q_max == 5); // capped at the dimension
  REQUIRE(r.first_certified.has_value());
  CHECK(*r.first_certified == 2);
  REQUIRE(r.trail.size() == 2);
  CHECK(r.trail[0].status == CertifyStatus::Ambiguous);
  CHECK(r.trail[1].certified());

  MinimalQReport none = find_minimal_q(adjoint_marking(DynkinType(Series::G, 2)), 1);
  CHECK(none.q_max == 1);
  CHECK_FALSE(none.first_certified.has_value());
  CHECK(none.trail.size() == 1);
}

TEST_CASE("projective plane scan reproduces the classical dimensions", "[certify]") {
  auto cells = bott_vanishing_scan(MarkedDiagram(DynkinType(Series::A, 2), {1}), 5, 1, 5);
  auto closed_form = [](int q, int m) -> mpz_class {
    // h^0(P^2, Omega^q(m)) for m >= 1, zero when m <= q.
    return binom(m - 1, q) * binom(2 + m - q, m);
  };
  REQUIRE(cells.size() == 3 * 5); // q capped at dim = 2
  for (const ScanCell& cell : cells) {
    CHECK_FALSE(cell.higher_occupied); // ample twists never reach degree > 0
    CHECK(cell.h0_dim == closed_form(cell.q, cell.m));
    if (cell.h0_dim != 0)
      CHECK(cell.occupied_degrees == std::vector<int>{0});
    else
      CHECK(cell.occupied_degrees.empty());
  }
}

TEST_CASE("G2 scan shows the certified nonvanishing cell", "[certify]") {
  auto cells = bott_vanishing_scan(adjoint_marking(DynkinType(Series::G, 2)), 3, 1, 3);
  bool found = false;
  for (const ScanCell& cell : cells) {
    if (cell.q == 3 && cell.m == 2) {
      // Lambda^2 T(-1) = Omega^3(2): the certified failure shows up here.
      CHECK(cell.higher_occupied);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("classical families stabilize in the truncated window", "[certify]") {
  StabilizationReport b = stabilization_scan(Series::B, 6, 8, 3);
  REQUIRE(b.stable_from.has_value());
  CHECK(*b.stable_from == 6);
  for (const StabilizationRow& row : b.rows) {
    CHECK(row.support_in_window);
    CHECK(row.truncated.size() == 3);
  }
  StabilizationReport d = stabilization_scan(Series::D, 7, 9, 3);
  REQUIRE(d.stable_from.has_value());
  CHECK(*d.stable_from == 7);
  // The two families agree on the stable truncated decomposition.
  CHECK(b.rows.front().truncated == d.rows.front().truncated);
}

TEST_CASE("weight budgets abort oversized runs", "[certify]") {
  CHECK_THROWS_AS(certify(adjoint_marking(DynkinType(Series::B, 5)), 3, -1, Budget(0, 10)),
                  BudgetExceeded);
}

TEST_CASE("certificates are byte-identical across thread counts", "[certify]") {
  std::string base;
  for (int threads : {1, 2, 4}) {
    Certificate c = certify(adjoint_marking(DynkinType(Series::D, 4)), 3, -1, Budget(), threads);
    std::string text = dump_json(certificate_json(c));
    if (base.empty())
      base = text;
    else
      CHECK(text == base);
  }
  CHECK(base.find("\"schema_version\"") != std::string::npos);
}
