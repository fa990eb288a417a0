#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "bottcert/flag.hpp"

namespace bottcert {

/// Cohomology of one irreducible homogeneous bundle U^lambda on G/P:
/// either everything vanishes, or exactly one degree carries an irreducible
/// G-module.
struct LineCohomology {
  bool vanishes = true;
  int degree = -1;
  Weight rep; // highest weight of H^degree, G-dominant

  bool operator==(const LineCohomology& o) const {
    if (vanishes != o.vanishes) return false;
    return vanishes || (degree == o.degree && rep == o.rep);
  }
};

/// Resolve the cohomology of U^lambda.  lambda must be Levi-dominant (it
/// labels an irreducible P-module).  Shift by rho, conjugate into the
/// dominant chamber of the full group: a zero coordinate kills all
/// cohomology; otherwise the reflection count is the only nonvanishing
/// degree and the conjugate minus rho is the highest weight sitting there.
inline LineCohomology bundle_line_cohomology(const FlagVariety& X, const Weight& lambda) {
  for (int i : X.levi()->nodes())
    if (lambda.c[i] < 0)
      throw DominanceError("label " + lambda.pretty() + " is negative at unmarked node " +
                           std::to_string(i + 1));
  const Weight mu = lambda + X.roots().rho();
  DominantConjugate dc = X.full()->dominant_conjugate(mu);
  LineCohomology out;
  if (dc.singular) return out;
  out.vanishes = false;
  out.degree = dc.length;
  out.rep = dc.weight - X.roots().rho();
  if (out.degree > X.dimension())
    throw Error("cohomological degree exceeded the dimension of " + X.name());
  return out;
}

/// Euler characteristic of U^lambda by the shifted product formula over all
/// positive roots of G — an oracle independent of the reflection walk above
/// (it never inspects chambers; singular labels come out as zero).
inline mpz_class euler_characteristic(const FlagVariety& X, const Weight& lambda) {
  const Weight shifted = lambda * 2 + X.full()->two_rho();
  mpz_class num = 1, den = 1;
  for (const PosRoot& alpha : X.roots().positive_roots()) {
    num *= mpz_class(alpha.pairing_6(shifted));
    den *= mpz_class(alpha.pairing_6(X.full()->two_rho()));
  }
  mpz_class chi, rem;
  mpz_tdiv_qr(chi.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw Error("Euler characteristic product is not integral");
  return chi;
}

/// Where one cohomology contribution came from: the E1 composition and the
/// Levi-irreducible summand inside it.
struct CohSource {
  std::vector<int> composition;
  Weight levi_label;
  mpz_class mult;
};

struct CohEntry {
  mpz_class mult = 0;
  mpz_class dim = 0; // mult * dim of the G-irreducible
  std::vector<CohSource> sources;
};

/// Cohomology table of a direct sum of irreducible bundles: degree ->
/// G-dominant highest weight -> multiplicity (+ provenance).  Ordered maps
/// keep every traversal deterministic.
class CohomologyTable {
public:
  using Row = std::map<Weight, CohEntry>;

  void add(const FlagVariety& X, int degree, const Weight& rep, const mpz_class& mult,
           CohSource source) {
    CohEntry& e = rows_[degree][rep];
    e.mult += mult;
    e.dim = e.mult * weyl_dimension(*X.full(), rep);
    e.sources.push_back(std::move(source));
  }

  const std::map<int, Row>& rows() const { return rows_; }
  bool degree_empty(int p) const { return rows_.find(p) == rows_.end(); }

  mpz_class multiplicity(int degree, const Weight& rep) const {
    auto it = rows_.find(degree);
    if (it == rows_.end()) return 0;
    auto jt = it->second.find(rep);
    return jt == it->second.end() ? mpz_class(0) : jt->second.mult;
  }

  /// Degrees (sorted) in which `rep` appears.
  std::vector<int> degrees_of(const Weight& rep) const {
    std::vector<int> out;
    for (const auto& [p, row] : rows_)
      if (row.count(rep)) out.push_back(p);
    return out;
  }

  mpz_class total_dim(int degree) const {
    mpz_class acc = 0;
    auto it = rows_.find(degree);
    if (it != rows_.end())
      for (const auto& [w, e] : it->second) acc += e.dim;
    return acc;
  }

  /// Alternating sum over degrees of the full dimensions.
  mpz_class euler_sum() const {
    mpz_class acc = 0;
    for (const auto& [p, row] : rows_)
      for (const auto& [w, e] : row) (p % 2 == 0) ? acc += e.dim : acc -= e.dim;
    return acc;
  }

private:
  std::map<int, Row> rows_;
};

/// Push a list of E1 summands through the cohomology resolver: decompose
/// each into Levi irreducibles and resolve each irreducible bundle.
/// Returns the aggregated table; `stats` (optional) counts the work done.
struct CohStats {
  size_t summands = 0;
  size_t irreps = 0;
  size_t bwb_calls = 0;
  size_t surviving_entries = 0;
};

inline CohomologyTable bundle_cohomology(const FlagVariety& X, const std::vector<E1Summand>& page,
                                         const Budget& budget = unlimited_budget(),
                                         CohStats* stats = nullptr) {
  CohomologyTable table;
  for (const E1Summand& s : page) {
    IrrepMultiset terms = decompose(s.ch, budget);
    for (const IrrepTerm& t : terms) {
      LineCohomology lc = bundle_line_cohomology(X, t.highest);
      if (stats) ++stats->bwb_calls;
      if (lc.vanishes) continue;
      table.add(X, lc.degree, lc.rep, t.mult, CohSource{s.composition, t.highest, t.mult});
    }
    if (stats) {
      ++stats->summands;
      stats->irreps += terms.size();
    }
    budget.check_time("cohomology aggregation");
  }
  return table;
}

/// Check one bundle U^lambda against the Euler oracle: the signed dimension
/// from the reflection walk must equal the product formula.
inline bool euler_check(const FlagVariety& X, const Weight& lambda) {
  LineCohomology lc = bundle_line_cohomology(X, lambda);
  mpz_class chi = euler_characteristic(X, lambda);
  if (lc.vanishes) return chi == 0;
  mpz_class dim = weyl_dimension(*X.full(), lc.rep);
  return lc.degree % 2 == 0 ? chi == dim : chi == -dim;
}

} // namespace bottcert
