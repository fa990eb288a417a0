// Shared brute-force oracles and randomized generators used by the unit
// suites and the acceptance gate.  Everything here is deliberately naive:
// these functions re-derive results by exhaustive enumeration so the engine
// has something independent to be measured against.

#pragma once

#include <gmpxx.h>

#include <map>
#include <random>
#include <vector>

#include "bottcert/character.hpp"
#include "bottcert/context.hpp"
#include "bottcert/irreps.hpp"

namespace bottcert::testsupport {

inline std::vector<DynkinType> small_types() {
  return {DynkinType(Series::A, 1), DynkinType(Series::A, 2), DynkinType(Series::A, 3),
          DynkinType(Series::B, 2), DynkinType(Series::B, 3), DynkinType(Series::C, 3),
          DynkinType(Series::D, 4), DynkinType(Series::G, 2), DynkinType(Series::F, 4)};
}

inline Weight random_dominant(std::mt19937& rng, int rank, int hi) {
  std::uniform_int_distribution<int> d(0, hi);
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w.c[i] = d(rng);
  return w;
}

/// Brute-force exterior power: expand the character into an explicit weight
/// list (with multiplicity) and sum over all q-element subsets.
inline Character subset_exterior(const ContextPtr& ctx, const Character& c, int q) {
  std::vector<Weight> letters;
  for (const auto& [w, m] : c.full_support())
    for (mpz_class i = 0; i < m; ++i) letters.push_back(w);
  std::map<Weight, mpz_class> out;
  auto rec = [&](auto&& self, int pos, int from, Weight acc) -> void {
    if (pos == q) {
      out[acc] += 1;
      return;
    }
    for (int i = from; i + (q - pos - 1) < static_cast<int>(letters.size()); ++i)
      self(self, pos + 1, i + 1, acc + letters[i]);
  };
  rec(rec, 0, 0, Weight(c.context()->rank()));
  DomMap dom;
  for (const auto& [w, m] : out)
    if (ctx->is_dominant(w)) dom[w] = m;
  return Character::from_dominant_map(ctx, std::move(dom));
}

/// A random sum of Weyl orbits, capped in dimension so the subset oracle
/// stays tractable.
inline Character random_character(std::mt19937& rng, const ContextPtr& ctx, int max_dim) {
  Character c(ctx);
  for (int tries = 0; tries < 8; ++tries) {
    Weight w = random_dominant(rng, ctx->rank(), 2);
    Character cand = c;
    cand += Character::orbit(ctx, w);
    if (cand.dimension() > max_dim) continue;
    c = std::move(cand);
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) break;
  }
  if (c.dimension() == 0) c = Character::trivial(ctx);
  return c;
}

} // namespace bottcert::testsupport
