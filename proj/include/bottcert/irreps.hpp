#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bottcert/character.hpp"

namespace bottcert {

/// Dimension of the irreducible module with highest weight `lambda` for the
/// context group (marked/non-context coordinates of `lambda` do not enter).
/// Product formula over the context's positive roots, evaluated exactly.
inline mpz_class weyl_dimension(const SymmetryContext& ctx, const Weight& lambda) {
  if (!ctx.is_dominant(lambda))
    throw DominanceError("weyl_dimension of non-dominant weight " + lambda.pretty());
  Weight shifted = lambda * 2 + ctx.two_rho(); // 2(lambda + rho_ctx)
  mpz_class num = 1, den = 1;
  for (const PosRoot& alpha : ctx.positive_roots()) {
    num *= mpz_class(alpha.pairing_6(shifted));
    den *= mpz_class(alpha.pairing_6(ctx.two_rho()));
  }
  mpz_class dim, rem;
  mpz_tdiv_qr(dim.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw Error("dimension product is not integral");
  return dim;
}

/// Weight multiplicities of one irreducible module, dominant part only.
struct IrrepCharacter {
  Weight highest;
  DomMap mults; // dominant weight -> multiplicity >= 1
  mpz_class dim;
};

using IrrepPtr = std::shared_ptr<const IrrepCharacter>;

namespace detail {

/// Freudenthal's recursion restricted to dominant weights.
///
/// The dominant support is generated by closure: starting from lambda,
/// subtract positive context roots and keep dominant results.  (Every
/// dominant weight of the module is reached this way: each one other than
/// lambda is covered, in the dominance order on dominant weights, by another
/// dominant weight of the module at distance a single positive root.)
/// Processing in order of increasing depth |lambda - mu| makes every
/// multiplicity lookup hit an already-computed entry: along any root string
/// upward from mu, dominant representatives are strictly shallower.
inline IrrepPtr freudenthal(const SymmetryContext& ctx, const Weight& lambda,
                            const Budget& budget) {
  if (!ctx.is_dominant(lambda))
    throw DominanceError("highest weight " + lambda.pretty() + " is not dominant");

  struct Entry {
    Weight mu;
    Weight offset; // lambda - mu in simple-root coordinates
    int32_t depth; // height of the offset
  };
  std::vector<Entry> support;
  std::unordered_map<Weight, size_t, WeightHash> index;
  support.push_back({lambda, Weight(ctx.rank()), 0});
  index.emplace(lambda, 0);
  for (size_t scan = 0; scan < support.size(); ++scan) {
    budget.check(support.size(), "dominant support closure");
    Entry cur = support[scan]; // copy: vector may grow
    for (const PosRoot& alpha : ctx.positive_roots()) {
      Weight mu = cur.mu - alpha.fund;
      if (!ctx.is_dominant(mu) || index.count(mu)) continue;
      index.emplace(mu, support.size());
      support.push_back({mu, cur.offset + alpha.simple, cur.depth + alpha.height});
    }
  }
  std::sort(support.begin(), support.end(), [](const Entry& a, const Entry& b) {
    return a.depth != b.depth ? a.depth < b.depth : a.mu < b.mu;
  });

  auto out = std::make_shared<IrrepCharacter>();
  out->highest = lambda;
  out->mults.reserve(support.size());
  out->mults.emplace(lambda, 1);
  const Weight& two_rho = ctx.two_rho();

  for (size_t k = 1; k < support.size(); ++k) {
    budget.check_time("weight multiplicities");
    const Entry& e = support[k];
    mpz_class rhs = 0;
    for (const PosRoot& alpha : ctx.positive_roots()) {
      // Walk the alpha-string upward from mu until the first absent weight.
      int64_t pairing = alpha.pairing_6(e.mu);
      Weight nu = e.mu;
      for (int step = 1;; ++step) {
        nu += alpha.fund;
        pairing += alpha.len6;
        auto it = out->mults.find(ctx.dominant_conjugate(nu).weight);
        if (it == out->mults.end()) break;
        if (pairing > 0)
          mpz_addmul_ui(rhs.get_mpz_t(), it->second.get_mpz_t(), static_cast<unsigned long>(pairing));
        else if (pairing < 0)
          mpz_submul_ui(rhs.get_mpz_t(), it->second.get_mpz_t(), static_cast<unsigned long>(-pairing));
      }
    }
    rhs *= 2;
    // Denominator: ( lambda + mu + 2 rho, lambda - mu ), scaled by 6.
    Weight y = lambda + e.mu + two_rho;
    int64_t den = 0;
    for (int i = 0; i < ctx.rank(); ++i)
      den += static_cast<int64_t>(e.offset.c[i]) * ctx.roots().symmetrizer6()[i] * y.c[i];
    if (den <= 0) throw Error("Freudenthal denominator must be positive");
    mpz_class mult, rem;
    mpz_class den_z(static_cast<long>(den));
    mpz_tdiv_qr(mult.get_mpz_t(), rem.get_mpz_t(), rhs.get_mpz_t(), den_z.get_mpz_t());
    if (rem != 0 || mult <= 0)
      throw CorruptCharacter("Freudenthal recursion produced a non-multiplicity at " +
                             e.mu.pretty());
    out->mults.emplace(e.mu, std::move(mult));
  }

  // Independent integrity gate: the weights just computed must add up to
  // the Weyl dimension.  Catches any closure or recursion defect loudly.
  mpz_class total = 0;
  for (const auto& [w, m] : out->mults) total += m * mpz_class(ctx.orbit_size(w));
  out->dim = weyl_dimension(ctx, lambda);
  if (total != out->dim)
    throw CorruptCharacter("weight multiplicities of " + lambda.pretty() +
                           " do not sum to the module dimension");
  return out;
}

/// Process-wide memo table for irreducible characters, keyed by context
/// content and highest weight.  Concurrent requests for the same key share
/// one computation; a failed (e.g. budget-cancelled) computation is evicted
/// so later calls can retry.
class IrrepCache {
public:
  static IrrepCache& instance() {
    static IrrepCache cache;
    return cache;
  }

  IrrepPtr get(const SymmetryContext& ctx, const Weight& lambda, const Budget& budget) {
    const Key key{series_letter(ctx.roots().type().series), ctx.roots().type().rank, ctx.mask(),
                  lambda};
    std::shared_future<IrrepPtr> fut;
    std::promise<IrrepPtr> promise;
    bool owner = false;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) {
        fut = it->second;
      } else {
        fut = promise.get_future().share();
        map_.emplace(key, fut);
        owner = true;
      }
    }
    if (!owner) return fut.get();
    try {
      IrrepPtr result = freudenthal(ctx, lambda, budget);
      promise.set_value(result);
      return result;
    } catch (...) {
      {
        std::lock_guard<std::mutex> lock(mu_);
        map_.erase(key);
      }
      promise.set_exception(std::current_exception());
      throw;
    }
  }

private:
  struct Key {
    char series;
    int rank;
    uint32_t mask;
    Weight lambda;
    bool operator==(const Key& o) const {
      return series == o.series && rank == o.rank && mask == o.mask && lambda == o.lambda;
    }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      size_t h = WeightHash{}(k.lambda);
      h ^= (static_cast<size_t>(k.series) << 24) ^ (static_cast<size_t>(k.rank) << 16) ^ k.mask;
      return h * 0x9e3779b97f4a7c15ull;
    }
  };
  std::mutex mu_;
  std::unordered_map<Key, std::shared_future<IrrepPtr>, KeyHash> map_;
};

} // namespace detail

/// The irreducible character with the given highest weight (memoized).
inline IrrepPtr irrep_character(const ContextPtr& ctx, const Weight& lambda,
                                const Budget& budget = unlimited_budget()) {
  return detail::IrrepCache::instance().get(*ctx, lambda, budget);
}

/// The full Character of one irreducible module.
inline Character irrep_as_character(const ContextPtr& ctx, const Weight& lambda,
                                    const Budget& budget = unlimited_budget()) {
  return Character::from_dominant_map(ctx, irrep_character(ctx, lambda, budget)->mults);
}

/// One irreducible constituent with its multiplicity.
struct IrrepTerm {
  Weight highest;
  mpz_class mult;
};

using IrrepMultiset = std::vector<IrrepTerm>;

/// Split a character into irreducible constituents by repeatedly peeling the
/// leading term: the dominant entry maximal for (height under 2 rho_ctx,
/// then lexicographic) order.  A negative remainder multiplicity means the
/// input was not a genuine module character.
inline IrrepMultiset decompose(const Character& c, const Budget& budget = unlimited_budget()) {
  const ContextPtr& ctx = c.context();
  using Key = std::pair<int64_t, Weight>;
  auto greater = [](const Key& a, const Key& b) {
    return a.first != b.first ? a.first > b.first : b.second < a.second;
  };
  std::map<Key, mpz_class, decltype(greater)> work(greater);
  for (const auto& [w, m] : c.entries()) work.emplace(Key{ctx->height_key(w), w}, m);

  IrrepMultiset out;
  while (!work.empty()) {
    budget.check(work.size(), "character decomposition");
    auto top = work.begin();
    Weight lambda = top->first.second;
    mpz_class mult = top->second;
    if (mult < 0)
      throw CorruptCharacter("leading coefficient of " + lambda.pretty() +
                             " is negative: not a module character");
    IrrepPtr irr = irrep_character(ctx, lambda, budget);
    for (const auto& [w, m] : irr->mults) {
      Key key{ctx->height_key(w), w};
      auto it = work.emplace(key, 0).first;
      it->second -= mult * m;
      if (it->second == 0) work.erase(it);
    }
    out.push_back({lambda, std::move(mult)});
  }
  return out;
}

/// Rebuild the character sum m_i * V^{lambda_i}; inverse of decompose.
inline Character compose(const ContextPtr& ctx, const IrrepMultiset& terms,
                         const Budget& budget = unlimited_budget()) {
  Character acc(ctx);
  for (const IrrepTerm& t : terms) {
    IrrepPtr irr = irrep_character(ctx, t.highest, budget);
    for (const auto& [w, m] : irr->mults) acc.add_to(w, m * t.mult);
  }
  return acc;
}

} // namespace bottcert
