#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bottcert/budget.hpp"
#include "bottcert/context.hpp"

namespace bottcert {

using DomMap = std::unordered_map<Weight, mpz_class, WeightHash>;
using WeightMultiset = std::vector<std::pair<Weight, mpz_class>>;

/// A virtual character of the context's reflection group action: a finitely
/// supported, W_ctx-invariant multiset of weights with integer (here always
/// nonnegative) multiplicities, stored compressed as one entry per dominant
/// orbit representative.
class Character {
public:
  explicit Character(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Character trivial(ContextPtr ctx) {
    Character c(std::move(ctx));
    c.m_.emplace(c.ctx_->roots().zero(), 1);
    return c;
  }

  /// A one-dimensional character: single weight fixed by the whole context
  /// group (every context-node coordinate must vanish).
  static Character line(ContextPtr ctx, const Weight& w) {
    for (int i : ctx->nodes())
      if (w.c[i] != 0)
        throw DominanceError("line weight " + w.pretty() + " is not fixed by the context group");
    Character c(std::move(ctx));
    c.m_.emplace(w, 1);
    return c;
  }

  /// The full orbit of a weight, each element with multiplicity `mult`.
  static Character orbit(ContextPtr ctx, const Weight& w, const mpz_class& mult = 1) {
    Character c(std::move(ctx));
    if (mult < 0) throw CorruptCharacter("orbit multiplicity must be nonnegative");
    if (mult > 0) c.m_.emplace(c.ctx_->dominant_conjugate(w).weight, mult);
    return c;
  }

  /// Rebuild the compressed form from a complete weight multiset.  Verifies
  /// that the multiset really is invariant: within each orbit the total must
  /// be a uniform multiple of the orbit size.
  static Character compress(ContextPtr ctx, const WeightMultiset& full) {
    Character c(std::move(ctx));
    for (const auto& [w, m] : full) {
      if (m < 0) throw CorruptCharacter("negative multiplicity in weight multiset");
      if (m == 0) continue;
      c.m_[c.ctx_->dominant_conjugate(w).weight] += m;
    }
    for (auto it = c.m_.begin(); it != c.m_.end();) {
      mpz_class orbit(c.ctx_->orbit_size(it->first));
      if (it->second % orbit != 0)
        throw CorruptCharacter("weight multiset is not invariant under the context group near " +
                               it->first.pretty());
      it->second /= orbit;
      it->second == 0 ? void(it = c.m_.erase(it)) : void(++it);
    }
    return c;
  }

  /// Wrap an already-compressed dominant multiplicity map.
  static Character from_dominant_map(ContextPtr ctx, const DomMap& mults) {
    Character c(std::move(ctx));
    for (const auto& [w, m] : mults) c.add_to(w, m);
    return c;
  }

  /// Add `m` copies of the orbit of the dominant weight `w`.
  void add_to(const Weight& w, const mpz_class& m) {
    if (!ctx_->is_dominant(w)) throw DominanceError("add_to expects a dominant weight");
    if (m <= 0) {
      if (m < 0) throw CorruptCharacter("negative multiplicity added to character");
      return;
    }
    m_[w] += m;
  }

  const ContextPtr& context() const { return ctx_; }
  const DomMap& entries() const { return m_; }
  bool is_zero() const { return m_.empty(); }
  size_t dominant_support_size() const { return m_.size(); }

  /// Multiplicity of an arbitrary weight (conjugated into the chamber).
  mpz_class multiplicity(const Weight& w) const {
    auto it = m_.find(ctx_->dominant_conjugate(w).weight);
    return it == m_.end() ? mpz_class(0) : it->second;
  }

  /// Total dimension: sum of multiplicity * orbit size.
  mpz_class dimension() const {
    mpz_class acc = 0;
    for (const auto& [w, m] : m_) acc += m * mpz_class(ctx_->orbit_size(w));
    return acc;
  }

  /// Number of distinct weights in the full (uncompressed) support.
  mpz_class distinct_weight_count() const {
    mpz_class acc = 0;
    for (const auto& [w, m] : m_) acc += ctx_->orbit_size(w);
    return acc;
  }

  /// True when both characters live in the same context and agree entrywise.
  bool same_content(const Character& o) const {
    require_same_context(*ctx_, *o.ctx_);
    return m_ == o.m_;
  }

  /// Dominant entries in canonical (lexicographic) order.
  WeightMultiset sorted_entries() const {
    WeightMultiset out(m_.begin(), m_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  /// Expand to the complete weight multiset by walking each orbit.
  WeightMultiset full_support(const Budget& budget = unlimited_budget()) const {
    mpz_class total = distinct_weight_count();
    if (!total.fits_ulong_p()) throw BudgetExceeded("orbit expansion unreasonably large");
    budget.check_weights(total.get_ui(), "orbit expansion");
    WeightMultiset out;
    out.reserve(total.get_ui());
    std::unordered_set<Weight, WeightHash> seen;
    std::vector<Weight> stack;
    for (const auto& [dom, m] : m_) {
      size_t expect = static_cast<size_t>(ctx_->orbit_size(dom));
      seen.clear();
      seen.insert(dom);
      stack.assign(1, dom);
      while (!stack.empty()) {
        Weight w = stack.back();
        stack.pop_back();
        out.emplace_back(w, m);
        for (int i : ctx_->nodes()) {
          if (w.c[i] <= 0) continue; // walk strictly downward; revisits pruned by `seen`
          Weight r = ctx_->roots().reflect(w, i);
          if (seen.insert(r).second) stack.push_back(r);
        }
      }
      if (seen.size() != expect)
        throw CorruptCharacter("orbit walk size mismatch at " + dom.pretty());
    }
    return out;
  }

  // --- arithmetic -----------------------------------------------------

  Character& operator+=(const Character& o) {
    require_same_context(*ctx_, *o.ctx_);
    for (const auto& [w, m] : o.m_) {
      auto it = m_.emplace(w, m);
      if (!it.second) it.first->second += m;
    }
    return *this;
  }

  friend Character operator+(Character a, const Character& b) { return a += b; }

  Character scaled(const mpz_class& k) const {
    if (k < 0) throw CorruptCharacter("character scale must be nonnegative");
    Character r(ctx_);
    if (k == 0) return r;
    r.m_ = m_;
    for (auto& [w, m] : r.m_) m *= k;
    return r;
  }

  /// Tensor with a one-dimensional character: shift every weight by `w0`.
  /// `w0` must be fixed by the context group, so dominance is preserved.
  Character shifted(const Weight& w0) const {
    for (int i : ctx_->nodes())
      if (w0.c[i] != 0)
        throw DominanceError("shift weight " + w0.pretty() + " is not fixed by the context group");
    Character r(ctx_);
    for (const auto& [w, m] : m_) r.m_.emplace(w + w0, m);
    return r;
  }

  /// Adams operation: stretch every weight by the factor k >= 1.
  Character adams(int k) const {
    if (k < 1) throw CorruptCharacter("Adams exponent must be positive");
    Character r(ctx_);
    for (const auto& [w, m] : m_) r.m_.emplace(w * k, m);
    return r;
  }

  /// Dual character (negate every weight).
  Character dual() const {
    Character r(ctx_);
    for (const auto& [w, m] : m_) r.m_[ctx_->dominant_conjugate(-w).weight] += m;
    return r;
  }

private:
  friend Character tensor(const Character&, const Character&, const Budget&);
  friend std::vector<Character> exterior_powers(const Character&, int, const Budget&);

  /// Pointwise product evaluation: `big` is a compressed character and
  /// `small_full` the complete support of another character of the same
  /// context.  For every dominant weight nu that can carry a nonzero product
  /// multiplicity (nu = dominant rep of mu + s, mu a key of big, s in the
  /// small support — exhaustive because the small support is orbit-closed),
  /// evaluate  sum_s small(s) * big(nu - s)  exactly.
  static DomMap convolve(const SymmetryContext& ctx, const DomMap& big,
                         const WeightMultiset& small_full, const Budget& budget,
                         const char* phase) {
    std::unordered_set<Weight, WeightHash> candidates;
    candidates.reserve(big.size() * (small_full.size() + 1));
    for (const auto& [mu, m_big] : big)
      for (const auto& [s, m_small] : small_full)
        candidates.insert(ctx.dominant_conjugate(mu + s).weight);
    budget.check(candidates.size(), phase);
    DomMap out;
    out.reserve(candidates.size());
    size_t steps = 0;
    for (const Weight& nu : candidates) {
      mpz_class acc = 0;
      for (const auto& [s, m_small] : small_full) {
        auto it = big.find(ctx.dominant_conjugate(nu - s).weight);
        if (it != big.end()) acc += m_small * it->second;
      }
      if (acc != 0) out.emplace(nu, std::move(acc));
      if ((++steps & 0x3ff) == 0) budget.check_time(phase);
    }
    return out;
  }

  ContextPtr ctx_;
  DomMap m_;
};

/// Product of two characters, exact.  The factor with the smaller distinct
/// support is expanded to its full weight multiset; the other stays
/// compressed and is evaluated pointwise.
inline Character tensor(const Character& a, const Character& b,
                        const Budget& budget = unlimited_budget()) {
  require_same_context(*a.context(), *b.context());
  Character out(a.context());
  if (a.is_zero() || b.is_zero()) return out;
  const bool a_small = a.distinct_weight_count() <= b.distinct_weight_count();
  const Character& small = a_small ? a : b;
  const Character& big = a_small ? b : a;
  out.m_ = Character::convolve(*a.context(), big.m_, small.full_support(budget), budget,
                               "character product");
  return out;
}

/// All exterior powers Lambda^0 .. Lambda^qmax, by the Newton recursion
///   q * Lambda^q = sum_{i=1..q} (-1)^{i-1} psi^i * Lambda^{q-i}
/// over the weight-multiset ring (psi^i = Adams stretch).  Divisions are
/// exact; any remainder or negative coefficient flags a corrupt input.
/// Each power's total dimension is checked against binomial(dim, q).
inline std::vector<Character> exterior_powers(const Character& c, int qmax,
                                              const Budget& budget = unlimited_budget()) {
  const ContextPtr& ctx = c.context();
  std::vector<Character> powers;
  powers.reserve(qmax + 1);
  powers.push_back(Character::trivial(ctx));
  if (qmax == 0) return powers;

  const WeightMultiset base = c.full_support(budget);
  const mpz_class dim = c.dimension();
  WeightMultiset stretched; // psi^i support, rebuilt per i
  stretched.reserve(base.size());

  for (int q = 1; q <= qmax; ++q) {
    std::unordered_map<Weight, mpz_class, WeightHash> acc; // signed accumulator
    for (int i = 1; i <= q; ++i) {
      const Character& lower = powers[q - i];
      if (lower.is_zero()) continue;
      stretched.clear();
      for (const auto& [w, m] : base) stretched.emplace_back(w * i, m);
      DomMap term =
          Character::convolve(*ctx, lower.m_, stretched, budget, "exterior power recursion");
      const bool negative = (i % 2) == 0;
      for (auto& [w, m] : term) {
        auto it = acc.emplace(w, 0);
        negative ? it.first->second -= m : it.first->second += m;
      }
      budget.check(acc.size(), "exterior power recursion");
    }
    Character next(ctx);
    mpz_class check_dim = 0;
    for (auto& [w, m] : acc) {
      if (m == 0) continue;
      if (m < 0 || m % q != 0)
        throw CorruptCharacter("exterior power recursion produced a non-character at " +
                               w.pretty());
      mpz_class mult = m / q;
      check_dim += mult * mpz_class(ctx->orbit_size(w));
      next.m_.emplace(w, std::move(mult));
    }
    mpz_class expect;
    if (dim.fits_ulong_p()) {
      mpz_bin_ui(expect.get_mpz_t(), dim.get_mpz_t(), static_cast<unsigned long>(q));
      if (check_dim != expect)
        throw CorruptCharacter("exterior power dimension check failed at q=" +
                               std::to_string(q));
    }
    powers.push_back(std::move(next));
  }
  return powers;
}

inline Character exterior_power(const Character& c, int q,
                                const Budget& budget = unlimited_budget()) {
  if (q < 0) throw CorruptCharacter("exterior power degree must be nonnegative");
  return std::move(exterior_powers(c, q, budget)[q]);
}

/// Coefficients of `w` in the simple-root basis, restricted to `nodes`.
/// These coefficients are invariant under every reflection *not* in `nodes`,
/// so for the Levi group of a marking they are the conserved central charges.
inline std::vector<mpq_class> central_charge(const RootSystem& rs, const Weight& w,
                                             const std::vector<int>& nodes) {
  // w (fund) = c (simple basis) * cartan  =>  c = w * cartan^{-1}, and
  // cartan^{-1}[j][i] = gram[j][i] * 6 / s6[i].
  std::vector<mpq_class> out;
  out.reserve(nodes.size());
  for (int i : nodes) {
    mpq_class acc = 0;
    for (int j = 0; j < rs.rank(); ++j)
      if (w.c[j] != 0) acc += mpq_class(w.c[j]) * rs.gram_entry(j, i) * 6 / rs.symmetrizer6()[i];
    out.push_back(acc);
  }
  return out;
}

/// The common central charge of all weights of `c` along `nodes`, or
/// nullopt if the charges are not uniform (then `c` cannot arise from a
/// single irreducible module of the corresponding parabolic situation).
inline std::optional<std::vector<mpq_class>> uniform_central_charge(
    const Character& c, const std::vector<int>& nodes) {
  std::optional<std::vector<mpq_class>> charge;
  for (const auto& [w, m] : c.entries()) {
    auto cc = central_charge(c.context()->roots(), w, nodes);
    if (!charge)
      charge = std::move(cc);
    else if (*charge != cc)
      return std::nullopt;
  }
  return charge;
}

} // namespace bottcert
