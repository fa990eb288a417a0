#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "bottcert/dynkin.hpp"
#include "bottcert/errors.hpp"
#include "bottcert/weight.hpp"

namespace bottcert {

/// One positive root, carried in three coordinate systems at once:
/// fundamental-weight coordinates (`fund`), simple-root coordinates
/// (`simple`), and the scaled functional `func[j] = simple[j] * 6 d_j`
/// so that 6 * (x, root) = sum_j x[j] * func[j] for any weight x.
struct PosRoot {
  Weight fund;
  Weight simple;
  std::array<int32_t, kMaxRank> func{};
  int32_t height = 0;
  int32_t len6 = 0; // 6 * (root, root): 12, 6 or 4
  bool is_long = false;

  /// 6 * (x, this root); fits easily in 64 bits for the weights we meet.
  int64_t pairing_6(const Weight& x) const {
    int64_t acc = 0;
    for (int j = 0; j < x.n; ++j) acc += static_cast<int64_t>(x.c[j]) * func[j];
    return acc;
  }
};

struct DominantConjugate {
  Weight weight;   // the dominant representative
  int length = 0;  // number of simple reflections applied (minimal)
  bool singular = false; // some coordinate inside the acting sub-system is 0
};

/// Immutable root-system data for one simple type: Cartan matrix, all
/// positive roots (built by closing the simple roots under root strings),
/// the symmetric form, and chamber utilities.  Shared via shared_ptr.
class RootSystem {
public:
  explicit RootSystem(DynkinType t)
      : type_(t), cartan_(cartan_matrix(t)), s6_(symmetrizer_times_6(t)) {
    build_roots();
    build_gram();
    find_extreme_roots();
  }

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<int32_t>>& cartan() const { return cartan_; }
  const std::vector<int32_t>& symmetrizer6() const { return s6_; }
  const std::vector<PosRoot>& positive_roots() const { return roots_; }
  const PosRoot& simple_root(int i) const { return roots_[i]; } // first `rank` entries
  const Weight& highest_long_root() const { return highest_long_; }
  const Weight& highest_short_root() const { return highest_short_; }

  Weight rho() const {
    Weight r(rank());
    for (int i = 0; i < rank(); ++i) r.c[i] = 1;
    return r;
  }

  Weight zero() const { return Weight(rank()); }

  /// Reflection in the i-th simple root (0-based), fundamental coordinates.
  Weight reflect(const Weight& w, int i) const {
    Weight r = w;
    int32_t wi = w.c[i];
    if (wi == 0) return r;
    const auto& row = cartan_[i];
    for (int j = 0; j < rank(); ++j) r.c[j] -= wi * row[j];
    return r;
  }

  static uint32_t full_mask(int rank) { return (uint32_t{1} << rank) - 1; }

  /// Conjugate `w` into the dominant chamber of the reflection subgroup
  /// generated by the simple roots in `mask` (bit i = node i+1), reflecting
  /// greedily at the lowest negative coordinate.  The reflection count is
  /// the minimal length of an element achieving dominance.
  DominantConjugate dominant_conjugate(Weight w, uint32_t mask) const {
    DominantConjugate out;
    const int n = rank();
    int guard = static_cast<int>(roots_.size()) + 1;
    for (;;) {
      int neg = -1;
      for (int i = 0; i < n; ++i)
        if ((mask >> i & 1) && w.c[i] < 0) { neg = i; break; }
      if (neg < 0) break;
      if (--guard < 0) throw Error("dominant conjugation failed to terminate");
      w = reflect(w, neg);
      ++out.length;
    }
    out.weight = w;
    for (int i = 0; i < n; ++i)
      if ((mask >> i & 1) && w.c[i] == 0) { out.singular = true; break; }
    return out;
  }

  /// Entry (omega_i, omega_j) of the Gram matrix of the fundamental weights.
  const mpq_class& gram_entry(int i, int j) const { return gram_[i][j]; }

  /// Exact (x, y) under the W-invariant form with long roots of length^2 2.
  mpq_class inner_product(const Weight& x, const Weight& y) const {
    mpq_class acc = 0;
    for (int i = 0; i < rank(); ++i) {
      if (x.c[i] == 0) continue;
      for (int j = 0; j < rank(); ++j)
        if (y.c[j] != 0) acc += mpq_class(x.c[i]) * gram_[i][j] * y.c[j];
    }
    return acc;
  }

private:
  void build_roots() {
    const int n = rank();
    std::unordered_map<Weight, int, WeightHash> index;
    for (int i = 0; i < n; ++i) {
      PosRoot r;
      r.fund = Weight(n);
      for (int j = 0; j < n; ++j) r.fund.c[j] = cartan_[i][j];
      r.simple = Weight(n);
      r.simple.c[i] = 1;
      r.height = 1;
      finish_root(r);
      index.emplace(r.simple, static_cast<int>(roots_.size()));
      roots_.push_back(r);
    }
    // Close under root strings: gamma + alpha_i is a root iff
    // p - <gamma, alpha_i^vee> > 0, where p is the string depth below gamma.
    for (size_t scan = 0; scan < roots_.size(); ++scan)
      for (int i = 0; i < n; ++i) {
        PosRoot gamma = roots_[scan]; // copy: roots_ may reallocate
        Weight cand = gamma.simple;
        cand.c[i] += 1;
        if (index.count(cand)) continue;
        int p = 0;
        Weight down = gamma.simple;
        for (;;) {
          down.c[i] -= 1;
          if (!index.count(down)) break;
          ++p;
        }
        if (p - gamma.fund.c[i] <= 0) continue;
        PosRoot r;
        r.simple = cand;
        r.fund = gamma.fund;
        for (int j = 0; j < n; ++j) r.fund.c[j] += cartan_[i][j];
        r.height = gamma.height + 1;
        finish_root(r);
        index.emplace(r.simple, static_cast<int>(roots_.size()));
        roots_.push_back(r);
      }
    // Closure self-check: positive roots must sum to 2 rho.
    Weight sum(n);
    for (const PosRoot& r : roots_) sum += r.fund;
    for (int i = 0; i < n; ++i)
      if (sum.c[i] != 2) throw Error("root closure is inconsistent for " + type_.name());
  }

  void finish_root(PosRoot& r) {
    int64_t len6 = 0;
    for (int j = 0; j < rank(); ++j) {
      r.func[j] = r.simple.c[j] * s6_[j];
      len6 += static_cast<int64_t>(r.fund.c[j]) * r.func[j];
    }
    if (len6 != 12 && len6 != 6 && len6 != 4)
      throw Error("unexpected root length in " + type_.name());
    r.len6 = static_cast<int32_t>(len6);
    r.is_long = len6 == 12;
  }

  void build_gram() {
    // Solve cartan * gram = diag(d_i) exactly over the rationals.
    const int n = rank();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
      m[i][n + i] = mpq_class(s6_[i], 6);
      m[i][n + i].canonicalize(); // two-arg mpq_class ctor stores the raw pair

    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (m[piv][col] == 0) ++piv; // Cartan matrices are nonsingular
      std::swap(m[piv], m[col]);
      mpq_class inv = 1 / m[col][col];
      for (int j = col; j < 2 * n; ++j) m[col][j] *= inv;
      for (int row = 0; row < n; ++row) {
        if (row == col || m[row][col] == 0) continue;
        mpq_class f = m[row][col];
        for (int j = col; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
      }
    }
    gram_.assign(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gram_[i][j] = m[i][n + j];
  }

  void find_extreme_roots() {
    bool have_long = false, have_short = false, any_short = false;
    auto dominant = [&](const Weight& w) {
      for (int i = 0; i < rank(); ++i)
        if (w.c[i] < 0) return false;
      return true;
    };
    for (const PosRoot& r : roots_) {
      if (!r.is_long) any_short = true;
      if (!dominant(r.fund)) continue;
      if (r.is_long) {
        if (have_long) throw Error("dominant long root is not unique");
        highest_long_ = r.fund;
        have_long = true;
      } else {
        if (have_short) throw Error("dominant short root is not unique");
        highest_short_ = r.fund;
        have_short = true;
      }
    }
    if (!have_long || (any_short && !have_short))
      throw Error("missing dominant root in " + type_.name());
    if (!any_short) highest_short_ = highest_long_; // simply-laced convention
  }

  DynkinType type_;
  std::vector<std::vector<int32_t>> cartan_;
  std::vector<int32_t> s6_;
  std::vector<PosRoot> roots_;
  std::vector<std::vector<mpq_class>> gram_;
  Weight highest_long_;
  Weight highest_short_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr make_root_system(DynkinType t) { return std::make_shared<RootSystem>(t); }

} // namespace bottcert
