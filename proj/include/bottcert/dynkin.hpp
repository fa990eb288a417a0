#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bottcert/errors.hpp"
#include "bottcert/weight.hpp"

namespace bottcert {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char series_letter(Series s) { return static_cast<char>(s); }

/// A simple type in Bourbaki numbering.  Validates (series, rank) on
/// construction: A_n n>=1, B_n n>=2, C_n n>=2, D_n n>=3, E_6..E_8, F_4, G_2.
struct DynkinType {
  Series series;
  int rank;

  DynkinType(Series s, int n) : series(s), rank(n) {
    if (n > kMaxRank) throw ConstructionError("rank exceeds supported maximum " + std::to_string(kMaxRank));
    bool ok = false;
    switch (s) {
      case Series::A: ok = n >= 1; break;
      case Series::B: ok = n >= 2; break;
      case Series::C: ok = n >= 2; break;
      case Series::D: ok = n >= 3; break;
      case Series::E: ok = n >= 6 && n <= 8; break;
      case Series::F: ok = n == 4; break;
      case Series::G: ok = n == 2; break;
    }
    if (!ok)
      throw ConstructionError(std::string("invalid type ") + series_letter(s) + "_" + std::to_string(n));
  }

  std::string name() const { return std::string(1, series_letter(series)) + std::to_string(rank); }

  bool operator==(const DynkinType& o) const { return series == o.series && rank == o.rank; }
  bool operator!=(const DynkinType& o) const { return !(*this == o); }
};

/// Parse "B6", "b6", or bare "E" (rank supplied separately as 0 -> error).
inline DynkinType parse_dynkin_type(const std::string& text, int rank_flag = 0) {
  if (text.empty()) throw UsageError("empty type string");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G')
    throw UsageError("unknown series letter in '" + text + "'");
  int rank = rank_flag;
  if (text.size() > 1) {
    size_t pos = 0;
    rank = std::stoi(text.substr(1), &pos);
    if (pos + 1 != text.size()) throw UsageError("bad type string '" + text + "'");
    if (rank_flag != 0 && rank_flag != rank)
      throw UsageError("type string '" + text + "' conflicts with --rank");
  }
  if (rank == 0) throw UsageError("rank missing for series " + std::string(1, letter));
  try {
    return DynkinType(static_cast<Series>(letter), rank);
  } catch (const ConstructionError& e) {
    throw UsageError(e.what());
  }
}

/// Cartan matrix, rows indexed by simple roots: a[i][j] is the j-th
/// fundamental coordinate of the simple root alpha_{i+1}.
inline std::vector<std::vector<int32_t>> cartan_matrix(const DynkinType& t) {
  const int n = t.rank;
  std::vector<std::vector<int32_t>> a(n, std::vector<int32_t>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; }; // 0-based
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::B: // alpha_n short
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Series::C: // alpha_n long
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Series::E:
      bond(0, 2);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      bond(1, 3);
      break;
    case Series::F: // alpha_1, alpha_2 long
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a[1][2] = -2;
      break;
    case Series::G: // alpha_1 short
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

/// Six times the symmetrizer d_i = (alpha_i, alpha_i)/2, normalised so that
/// long roots have squared length 2.  The factor 6 clears every denominator
/// (d_i is 1, 1/2 or 1/3), keeping inner-product functionals integral.
inline std::vector<int32_t> symmetrizer_times_6(const DynkinType& t) {
  const int n = t.rank;
  std::vector<int32_t> s(n, 6);
  switch (t.series) {
    case Series::B: s[n - 1] = 3; break;
    case Series::C: for (int i = 0; i + 1 < n; ++i) s[i] = 3; break;
    case Series::F: s[2] = 3; s[3] = 3; break;
    case Series::G: s[0] = 2; break;
    default: break;
  }
  return s;
}

/// Order of the finite reflection group of a simple type.
inline int64_t weyl_order(const DynkinType& t) {
  auto factorial = [](int m) {
    int64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  const int n = t.rank;
  switch (t.series) {
    case Series::A: return factorial(n + 1);
    case Series::B:
    case Series::C: return (int64_t{1} << n) * factorial(n);
    case Series::D: return (int64_t{1} << (n - 1)) * factorial(n);
    case Series::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  throw Error("unreachable");
}

namespace detail {

/// Classify a connected sub-diagram, given the ambient Cartan matrix and the
/// 0-based nodes of the component.  Only shapes that actually occur inside a
/// valid diagram can appear, so the fall-through is a hard error.
inline DynkinType classify_component(const std::vector<std::vector<int32_t>>& a,
                                     const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k == 1) return DynkinType(Series::A, 1);
  // Local adjacency, bond multiplicities a_ij * a_ji.
  std::vector<std::vector<int>> adj(k);
  int max_bond = 1;
  std::pair<int, int> strong{-1, -1};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || a[nodes[i]][nodes[j]] == 0) continue;
      adj[i].push_back(j);
      int m = a[nodes[i]][nodes[j]] * a[nodes[j]][nodes[i]];
      if (m > max_bond) { max_bond = m; strong = {i, j}; }
    }
  if (max_bond == 3) return DynkinType(Series::G, 2);
  if (max_bond == 2) {
    // Doubled bond with both endpoints interior <=> F_4; otherwise B/C.
    if (k == 4 && adj[strong.first].size() == 2 && adj[strong.second].size() == 2)
      return DynkinType(Series::F, 4);
    return DynkinType(Series::B, k); // same reflection group as C_k
  }
  // Simply laced: look for the (unique) branch node.
  int branch = -1;
  for (int i = 0; i < k; ++i)
    if (adj[i].size() == 3) branch = i;
  if (branch < 0) return DynkinType(Series::A, k);
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    for (;;) {
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev) next = nb;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return DynkinType(Series::D, arms[2] + 3);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return DynkinType(Series::E, arms[2] + 4);
  throw Error("sub-diagram shape is not of finite type");
}

} // namespace detail

/// Decompose a node subset (0-based) of a diagram into connected components
/// and return the product of their reflection-group orders.  Used for orbit
/// sizes |W_L| / |W_stab|; the result always fits in 64 bits for rank <= 16.
inline int64_t weyl_order_of_subdiagram(const std::vector<std::vector<int32_t>>& a,
                                        const std::vector<int>& nodes) {
  int64_t order = 1;
  std::vector<int> todo = nodes;
  std::sort(todo.begin(), todo.end());
  std::vector<bool> used(todo.size(), false);
  for (size_t seed = 0; seed < todo.size(); ++seed) {
    if (used[seed]) continue;
    std::vector<int> comp{todo[seed]};
    used[seed] = true;
    for (size_t scan = 0; scan < comp.size(); ++scan)
      for (size_t j = 0; j < todo.size(); ++j)
        if (!used[j] && a[comp[scan]][todo[j]] != 0) {
          used[j] = true;
          comp.push_back(todo[j]);
        }
    order *= weyl_order(detail::classify_component(a, comp));
  }
  return order;
}

} // namespace bottcert
