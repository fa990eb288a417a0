#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "bottcert/character.hpp"
#include "bottcert/irreps.hpp"

namespace bottcert {

/// A Dynkin diagram with a nonempty set of marked nodes (1-based), i.e. the
/// datum of a partial flag variety G/P with P the corresponding parabolic.
struct MarkedDiagram {
  DynkinType type;
  std::vector<int> marked; // sorted, unique, 1-based

  MarkedDiagram(DynkinType t, std::vector<int> nodes) : type(t), marked(std::move(nodes)) {
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    if (marked.empty()) throw ConstructionError("marking must contain at least one node");
    for (int k : marked)
      if (k < 1 || k > type.rank)
        throw ConstructionError("marked node " + std::to_string(k) + " outside 1.." +
                                std::to_string(type.rank));
  }

  std::string name() const {
    std::string s = type.name() + "/P";
    for (size_t i = 0; i < marked.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(marked[i]);
    }
    return s;
  }

  uint32_t marked_mask() const {
    uint32_t m = 0;
    for (int k : marked) m |= uint32_t{1} << (k - 1);
    return m;
  }
};

/// Marking by the support of the highest long root: the flag variety whose
/// open orbit in P(g) is the adjoint orbit of a highest-weight vector.
inline MarkedDiagram adjoint_marking(DynkinType t) {
  RootSystem rs(t);
  std::vector<int> nodes;
  const Weight& theta = rs.highest_long_root();
  for (int i = 0; i < t.rank; ++i)
    if (theta.c[i] != 0) nodes.push_back(i + 1);
  return MarkedDiagram(t, std::move(nodes));
}

/// Same with the highest short root (coincides with the adjoint marking in
/// the simply-laced types).
inline MarkedDiagram coadjoint_marking(DynkinType t) {
  RootSystem rs(t);
  std::vector<int> nodes;
  const Weight& theta = rs.highest_short_root();
  for (int i = 0; i < t.rank; ++i)
    if (theta.c[i] != 0) nodes.push_back(i + 1);
  return MarkedDiagram(t, std::move(nodes));
}

/// A generalized flag variety G/P.  Precomputes the Levi context, the
/// grading of the nilradical (= tangent space) by total marked coefficient,
/// the canonical-class data (index weight, Fano index, O(1) label), and the
/// graded tangent pieces as Levi characters.
class FlagVariety {
public:
  explicit FlagVariety(MarkedDiagram md)
      : md_(std::move(md)), rs_(make_root_system(md_.type)) {
    const int n = rs_->rank();
    const uint32_t levi_mask = RootSystem::full_mask(n) & ~md_.marked_mask();
    levi_ = make_context(rs_, levi_mask);
    full_ = make_full_context(rs_);

    // Nilradical roots, graded by the sum of marked simple-root coefficients.
    index_weight_ = Weight(n);
    std::vector<WeightMultiset> grade_weights;
    for (const PosRoot& r : rs_->positive_roots()) {
      int g = 0;
      for (int k : md_.marked) g += r.simple.c[k - 1];
      if (g == 0) continue;
      if (g > static_cast<int>(grade_weights.size())) grade_weights.resize(g);
      grade_weights[g - 1].emplace_back(r.fund, 1);
      index_weight_ += r.fund;
      ++dim_;
    }
    for (auto& ws : grade_weights) graded_.push_back(Character::compress(levi_, ws));

    // The index weight is supported on the marked nodes; its gcd there is
    // the Fano index, and dividing by it yields the ample generator O(1).
    index_ = 0;
    for (int i = 0; i < n; ++i) {
      const bool is_marked = (md_.marked_mask() >> i) & 1;
      if (!is_marked) {
        if (index_weight_.c[i] != 0) throw Error("index weight leaks outside the marking");
        continue;
      }
      index_ = std::gcd(index_, static_cast<int>(index_weight_.c[i]));
    }
    unit_ = Weight(n);
    for (int i = 0; i < n; ++i) unit_.c[i] = index_weight_.c[i] / index_;
  }

  const MarkedDiagram& diagram() const { return md_; }
  const RootSystemPtr& roots_ptr() const { return rs_; }
  const RootSystem& roots() const { return *rs_; }
  const ContextPtr& levi() const { return levi_; }
  const ContextPtr& full() const { return full_; }
  int dimension() const { return dim_; }
  int index() const { return index_; }
  const Weight& index_weight() const { return index_weight_; }
  /// Label of the ample generator O(1).
  const Weight& unit_weight() const { return unit_; }
  /// Label of O(m).
  Weight line_weight(int m) const { return unit_ * m; }

  int graded_count() const { return static_cast<int>(graded_.size()); }
  /// j-th graded piece of the tangent bundle, 1-based, as a Levi character.
  const Character& graded_piece(int j) const { return graded_.at(j - 1); }

  Character tangent_character() const {
    Character t(levi_);
    for (const Character& g : graded_) t += g;
    return t;
  }

  std::string name() const { return md_.name(); }

private:
  MarkedDiagram md_;
  RootSystemPtr rs_;
  ContextPtr levi_;
  ContextPtr full_;
  std::vector<Character> graded_;
  Weight index_weight_;
  Weight unit_;
  int dim_ = 0;
  int index_ = 0;
};

/// One summand of the E1 page of the exterior-power spectral sequence:
/// tensor product of exterior powers of the graded tangent pieces over one
/// composition q = q_1 + ... + q_g, twisted by a Levi-fixed weight.
struct E1Summand {
  std::vector<int> composition;
  Character ch;
};

/// All E1 summands of Lambda^q T_X (twist).  `powers[j-1]` must hold the
/// exterior powers of graded piece j at least up to min(q, rank of piece).
/// The summand dimensions are checked against binomial(dim X, q).
inline std::vector<E1Summand> e1_summands(const FlagVariety& X, int q, const Weight& twist,
                                          const std::vector<std::vector<Character>>& powers,
                                          const Budget& budget = unlimited_budget()) {
  if (q < 0 || q > X.dimension()) throw ConstructionError("exterior degree out of range");
  const int g = X.graded_count();
  std::vector<int> caps(g);
  for (int j = 0; j < g; ++j) {
    caps[j] = static_cast<int>(mpz_class(X.graded_piece(j + 1).dimension()).get_si());
    if (static_cast<int>(powers[j].size()) <= std::min(q, caps[j]))
      throw Error("exterior powers of graded piece " + std::to_string(j + 1) + " not prepared");
  }

  std::vector<E1Summand> out;
  std::vector<int> comp(g, 0);
  mpz_class total_dim = 0;
  // Enumerate compositions in lexicographic order for a deterministic page.
  auto recurse = [&](auto&& self, int j, int rest) -> void {
    if (j == g) {
      if (rest != 0) return;
      budget.check_time("E1 page assembly");
      Character prod = powers[0][comp[0]];
      for (int k = 1; k < g; ++k) prod = tensor(prod, powers[k][comp[k]], budget);
      if (prod.is_zero()) return;
      total_dim += prod.dimension();
      out.push_back({comp, prod.shifted(twist)});
      return;
    }
    for (int take = 0; take <= std::min(rest, caps[j]); ++take) {
      comp[j] = take;
      self(self, j + 1, rest - take);
    }
    comp[j] = 0;
  };
  recurse(recurse, 0, q);

  mpz_class expect;
  mpz_bin_uiui(expect.get_mpz_t(), static_cast<unsigned long>(X.dimension()),
               static_cast<unsigned long>(q));
  if (total_dim != expect)
    throw CorruptCharacter("E1 page dimensions do not add up to binomial(" +
                           std::to_string(X.dimension()) + "," + std::to_string(q) + ")");
  return out;
}

/// Convenience overload computing the needed exterior powers on the fly.
inline std::vector<E1Summand> e1_summands(const FlagVariety& X, int q, const Weight& twist,
                                          const Budget& budget = unlimited_budget()) {
  std::vector<std::vector<Character>> powers;
  for (int j = 1; j <= X.graded_count(); ++j) {
    const Character& piece = X.graded_piece(j);
    int cap = std::min<int>(q, static_cast<int>(mpz_class(piece.dimension()).get_si()));
    powers.push_back(exterior_powers(piece, cap, budget));
  }
  return e1_summands(X, q, twist, powers, budget);
}

} // namespace bottcert
