#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bottcert/bwb.hpp"
#include "bottcert/parallel.hpp"

namespace bottcert {

enum class CertifyStatus { Certified, Ambiguous, NoSurvivors };

inline const char* to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::Certified: return "certified";
    case CertifyStatus::Ambiguous: return "ambiguous";
    case CertifyStatus::NoSurvivors: return "no_survivors";
  }
  return "?";
}

/// How a representation in total degree 1 was shown to survive to
/// E_infinity.  Differentials are G-equivariant and raise total degree by 1
/// on every page, so the degree-1 isotypic part of a representation V only
/// ever interacts with the V-isotypic parts of degrees 0 and 2:
///  * single_degree: V occupies no total degree other than 1 — nothing can
///    touch it, it survives with its full multiplicity m1 (and H^1 contains
///    exactly m1 copies of V).
///  * multiplicity_margin: V also occupies other degrees; the combined rank
///    of differentials in and out of the degree-1 part is at most m0 + m2,
///    so at least m1 - m0 - m2 copies survive when that margin is positive.
struct Survivor {
  Weight rep;
  mpz_class mult;  // guaranteed surviving multiplicity (lower bound)
  mpz_class dim;   // dim of one copy of the G-module
  std::string kind; // "single_degree" | "multiplicity_margin"
};

/// A degree-1 representation whose survival the occupancy criteria cannot
/// settle: it also occupies degrees 0/2 with too much multiplicity.
struct Witness {
  Weight rep;
  std::vector<int> degrees;
  mpz_class mult_in_degree1;
};

struct DegreeSummary {
  int degree = 0;
  size_t entries = 0;
  mpz_class total_dim;
};

/// Machine-checkable outcome of one (variety, q, twist) run.
struct Certificate {
  explicit Certificate(MarkedDiagram md) : diagram(std::move(md)) {}

  MarkedDiagram diagram;
  std::string variety;
  int dim_x = 0;
  int index = 0;
  int q = 0;
  int twist = 0;       // twist as a multiple of O(1) when applicable, else 0
  Weight twist_weight; // the actual Levi-fixed twist weight
  CertifyStatus status = CertifyStatus::NoSurvivors;
  // H^1 equals the degree-1 row on the nose: every degree-1 representation
  // is absent from degrees 0 and 2, so no differential reaches the row.
  bool exact = false;
  std::vector<Survivor> survivors;
  std::vector<Witness> ambiguous;
  std::vector<DegreeSummary> degree_summaries;
  CohomologyTable table;
  CohStats stats;
  double elapsed_seconds = 0;

  bool certified() const { return status == CertifyStatus::Certified; }
};

/// Shared state for repeated certification runs on one variety: exterior
/// powers of the graded tangent pieces and per-composition decompositions
/// are computed once and reused across q and twists.
class CertifySession {
public:
  explicit CertifySession(MarkedDiagram md, Budget budget = Budget(), int threads = 1)
      : X_(std::move(md)), budget_(std::move(budget)), threads_(std::max(1, threads)) {
    powers_.resize(X_.graded_count());
    for (int j = 0; j < X_.graded_count(); ++j)
      caps_.push_back(static_cast<int>(mpz_class(X_.graded_piece(j + 1).dimension()).get_si()));
  }

  const FlagVariety& variety() const { return X_; }
  const Budget& budget() const { return budget_; }

  /// Certify non-vanishing of H^1(X, Lambda^q T_X (m)) from E1 occupancy.
  Certificate certify(int q, int twist_multiple) {
    const auto start = std::chrono::steady_clock::now();
    Certificate cert(X_.diagram());
    cert.variety = X_.name();
    cert.dim_x = X_.dimension();
    cert.index = X_.index();
    cert.q = q;
    cert.twist = twist_multiple;
    cert.twist_weight = X_.line_weight(twist_multiple);
    if (q < 1 || q > X_.dimension())
      throw UsageError("exterior degree q must lie in 1.." + std::to_string(X_.dimension()));

    ensure_powers(q);
    // Assemble the page untwisted: decompositions are cached per
    // composition and the twist is applied afterwards as a label shift.
    std::vector<E1Summand> page = e1_summands(X_, q, X_.roots().zero(), powers_, budget_);

    std::vector<size_t> missing;
    for (size_t i = 0; i < page.size(); ++i)
      if (!decomp_cache_.count(page[i].composition)) missing.push_back(i);
    if (!missing.empty()) {
      auto fresh = parallel_map<IrrepMultiset>(missing.size(), threads_, [&](size_t k) {
        return decompose(page[missing[k]].ch, budget_);
      });
      for (size_t k = 0; k < missing.size(); ++k)
        decomp_cache_.emplace(page[missing[k]].composition, std::move(fresh[k]));
    }
    std::vector<const IrrepMultiset*> decomps(page.size());
    for (size_t i = 0; i < page.size(); ++i) decomps[i] = &decomp_cache_.at(page[i].composition);

    for (size_t i = 0; i < page.size(); ++i) {
      ++cert.stats.summands;
      for (const IrrepTerm& t : *decomps[i]) {
        ++cert.stats.irreps;
        Weight label = t.highest + cert.twist_weight;
        LineCohomology lc = bundle_line_cohomology(X_, label);
        ++cert.stats.bwb_calls;
        if (lc.vanishes) continue;
        ++cert.stats.surviving_entries;
        cert.table.add(X_, lc.degree, lc.rep, t.mult,
                       CohSource{page[i].composition, label, t.mult});
      }
      budget_.check_time("cohomology aggregation");
    }

    analyze(cert);
    cert.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
  }

private:
  void ensure_powers(int q) {
    for (int j = 0; j < X_.graded_count(); ++j) {
      int need = std::min(q, caps_[j]);
      if (static_cast<int>(powers_[j].size()) > need) continue;
      powers_[j] = exterior_powers(X_.graded_piece(j + 1), need, budget_);
    }
  }

  void analyze(Certificate& cert) const {
    const auto& rows = cert.table.rows();
    for (const auto& [p, row] : rows) {
      DegreeSummary s;
      s.degree = p;
      s.entries = row.size();
      s.total_dim = cert.table.total_dim(p);
      cert.degree_summaries.push_back(std::move(s));
    }
    auto it = rows.find(1);
    if (it == rows.end()) {
      cert.status = CertifyStatus::NoSurvivors;
      cert.exact = false;
      return;
    }
    bool row_untouched = true;
    for (const auto& [rep, entry] : it->second) {
      std::vector<int> degrees = cert.table.degrees_of(rep);
      mpz_class m0 = cert.table.multiplicity(0, rep);
      mpz_class m2 = cert.table.multiplicity(2, rep);
      if (m0 != 0 || m2 != 0) row_untouched = false;
      if (degrees.size() == 1) {
        cert.survivors.push_back(
            {rep, entry.mult, weyl_dimension(*X_.full(), rep), "single_degree"});
      } else if (entry.mult > m0 + m2) {
        cert.survivors.push_back(
            {rep, entry.mult - m0 - m2, weyl_dimension(*X_.full(), rep), "multiplicity_margin"});
      } else {
        cert.ambiguous.push_back({rep, std::move(degrees), entry.mult});
      }
    }
    cert.status = cert.survivors.empty() ? CertifyStatus::Ambiguous : CertifyStatus::Certified;
    cert.exact = row_untouched;
  }

  FlagVariety X_;
  Budget budget_;
  int threads_;
  std::vector<std::vector<Character>> powers_;
  std::vector<int> caps_;
  std::map<std::vector<int>, IrrepMultiset> decomp_cache_;
};

/// One-shot helper.
inline Certificate certify(MarkedDiagram md, int q, int twist_multiple = -1,
                           Budget budget = Budget(), int threads = 1) {
  CertifySession session(std::move(md), std::move(budget), threads);
  return session.certify(q, twist_multiple);
}

/// Scan q = 1..q_max (default twist O(-1)) and stop at the first certified
/// exterior degree; earlier degrees are reported alongside.
struct MinimalQReport {
  int q_max = 0; // inclusive search bound actually used
  std::optional<int> first_certified;
  std::vector<Certificate> trail; // one certificate per tried q, in order
};

inline MinimalQReport find_minimal_q(MarkedDiagram md, int q_max, int twist_multiple = -1,
                                     Budget budget = Budget(), int threads = 1) {
  CertifySession session(std::move(md), std::move(budget), threads);
  MinimalQReport report;
  int cap = std::min(q_max, session.variety().dimension());
  report.q_max = cap;
  for (int q = 1; q <= cap; ++q) {
    report.trail.push_back(session.certify(q, twist_multiple));
    if (report.trail.back().certified()) {
      report.first_certified = q;
      break;
    }
  }
  return report;
}

/// Exhaustive vanishing scan used for sanity checks: for every exterior
/// degree in [0, q_max] and ample twist in [m_lo, m_hi], record which total
/// degrees of the E1 page are occupied and the full H^0 dimension.
struct ScanCell {
  int q = 0;
  int m = 0;
  std::vector<int> occupied_degrees;
  mpz_class h0_dim;
  bool higher_occupied = false;
};

inline std::vector<ScanCell> bott_vanishing_scan(MarkedDiagram md, int q_max, int m_lo, int m_hi,
                                                 Budget budget = Budget(), int threads = 1) {
  FlagVariety X{md};
  q_max = std::min(q_max, X.dimension());
  std::vector<std::vector<Character>> powers;
  for (int j = 1; j <= X.graded_count(); ++j) {
    // Omega^q = Lambda^{dim-q} T tensor K_X, so the page degree runs up to dim X
    // and every graded piece may contribute its full range of exterior powers.
    int cap = static_cast<int>(mpz_class(X.graded_piece(j).dimension()).get_si());
    powers.push_back(exterior_powers(X.graded_piece(j), cap, budget));
  }
  std::vector<ScanCell> cells;
  for (int q = 0; q <= q_max; ++q) {
    std::vector<E1Summand> page = e1_summands(X, X.dimension() - q, X.roots().zero(), powers, budget);
    std::vector<IrrepMultiset> decomps = parallel_map<IrrepMultiset>(
        page.size(), threads, [&](size_t i) { return decompose(page[i].ch, budget); });
    for (int m = m_lo; m <= m_hi; ++m) {
      ScanCell cell;
      cell.q = q;
      cell.m = m;
      Weight tw = X.line_weight(m) - X.index_weight();
      CohomologyTable table;
      for (size_t i = 0; i < page.size(); ++i)
        for (const IrrepTerm& t : decomps[i]) {
          LineCohomology lc = bundle_line_cohomology(X, t.highest + tw);
          if (lc.vanishes) continue;
          table.add(X, lc.degree, lc.rep, t.mult, CohSource{page[i].composition, t.highest + tw, t.mult});
        }
      for (const auto& [p, row] : table.rows()) {
        cell.occupied_degrees.push_back(p);
        if (p >= 1) cell.higher_occupied = true;
      }
      cell.h0_dim = table.total_dim(0);
      cells.push_back(std::move(cell));
      budget.check_time("vanishing scan");
    }
  }
  return cells;
}

/// Decomposition of Lambda^q(first graded piece) with every label truncated
/// to the first five fundamental coordinates: the low-rank window in which
/// the classical-family answers stabilise.
struct StabilizationRow {
  int n = 0;
  bool support_in_window = true; // no label uses a coordinate beyond the window
  std::vector<std::pair<std::vector<int32_t>, mpz_class>> truncated; // sorted
};

struct StabilizationReport {
  Series series;
  int q = 0;
  std::vector<StabilizationRow> rows;
  std::optional<int> stable_from; // least n with all later rows identical
};

inline StabilizationReport stabilization_scan(Series series, int n_lo, int n_hi, int q,
                                              Budget budget = Budget()) {
  constexpr int kWindow = 5;
  StabilizationReport report;
  report.series = series;
  report.q = q;
  for (int n = n_lo; n <= n_hi; ++n) {
    MarkedDiagram md = adjoint_marking(DynkinType(series, n));
    FlagVariety X{md};
    Character e = X.graded_piece(1);
    IrrepMultiset dec = decompose(exterior_power(e, q, budget), budget);
    StabilizationRow row;
    row.n = n;
    for (const IrrepTerm& t : dec) {
      std::vector<int32_t> head(t.highest.c.begin(), t.highest.c.begin() + kWindow);
      for (int i = kWindow; i < n; ++i)
        if (t.highest.c[i] != 0) row.support_in_window = false;
      row.truncated.emplace_back(std::move(head), t.mult);
    }
    std::sort(row.truncated.begin(), row.truncated.end());
    report.rows.push_back(std::move(row));
  }
  for (size_t k = 0; k < report.rows.size(); ++k) {
    bool all_same = true;
    for (size_t j = k + 1; j < report.rows.size(); ++j)
      if (report.rows[j].truncated != report.rows[k].truncated) { all_same = false; break; }
    if (all_same) {
      report.stable_from = report.rows[k].n;
      break;
    }
  }
  return report;
}

} // namespace bottcert
