#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "bottcert/errors.hpp"

namespace bottcert {

/// Hard cap on the rank of any root system handled by the library.
/// Covers every case the engine is asked about (classical families are
/// scanned up to rank 9, exceptional types top out at rank 8).
inline constexpr int kMaxRank = 16;

/// An integral weight in fundamental-weight coordinates, value type.
/// Coordinates beyond the rank are kept at zero so that equality and
/// hashing can work on the whole array.
struct Weight {
  std::array<int32_t, kMaxRank> c{};
  int32_t n = 0; // rank

  Weight() = default;
  explicit Weight(int rank) : n(rank) {
    if (rank < 0 || rank > kMaxRank) throw ConstructionError("weight rank out of range");
  }
  Weight(int rank, std::initializer_list<int32_t> coords) : Weight(rank) {
    if (static_cast<int>(coords.size()) != rank)
      throw ConstructionError("weight coordinate count does not match rank");
    int i = 0;
    for (int32_t v : coords) c[i++] = v;
  }
  static Weight from_vector(const std::vector<int32_t>& coords) {
    Weight w(static_cast<int>(coords.size()));
    for (size_t i = 0; i < coords.size(); ++i) w.c[i] = coords[i];
    return w;
  }

  int32_t operator[](int i) const { return c[i]; }
  int32_t& operator[](int i) { return c[i]; }

  bool operator==(const Weight& o) const { return n == o.n && c == o.c; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  /// Lexicographic; total order used for canonical (deterministic) listings.
  bool operator<(const Weight& o) const {
    if (n != o.n) return n < o.n;
    return c < o.c;
  }

  Weight operator+(const Weight& o) const {
    Weight r(require_same_rank(o));
    for (int i = 0; i < n; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r(require_same_rank(o));
    for (int i = 0; i < n; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Weight operator-() const {
    Weight r(n);
    for (int i = 0; i < n; ++i) r.c[i] = -c[i];
    return r;
  }
  Weight operator*(int32_t k) const {
    Weight r(n);
    for (int i = 0; i < n; ++i) r.c[i] = k * c[i];
    return r;
  }
  Weight& operator+=(const Weight& o) {
    require_same_rank(o);
    for (int i = 0; i < n; ++i) c[i] += o.c[i];
    return *this;
  }

  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (c[i] != 0) return false;
    return true;
  }

  std::vector<int32_t> to_vector() const { return std::vector<int32_t>(c.begin(), c.begin() + n); }

  /// Render as e.g. "w1+3w2-w4"; the zero weight prints as "0".
  std::string pretty() const {
    std::string s;
    for (int i = 0; i < n; ++i) {
      int32_t v = c[i];
      if (v == 0) continue;
      if (v > 0 && !s.empty()) s += '+';
      if (v == -1)
        s += '-';
      else if (v != 1)
        s += std::to_string(v);
      s += 'w';
      s += std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
  }

private:
  int require_same_rank(const Weight& o) const {
    if (n != o.n) throw ContextMismatch("weight rank mismatch");
    return n;
  }
};

struct WeightHash {
  size_t operator()(const Weight& w) const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(w.n);
    for (int i = 0; i < w.n; ++i) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(w.c[i])) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<size_t>(h ^ (h >> 33));
  }
};

/// Parse "1,-2,0,3" into coordinates (used by the command-line front end).
inline std::vector<int32_t> parse_coordinate_list(const std::string& text) {
  std::vector<int32_t> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw UsageError("empty coordinate in list '" + text + "'");
    size_t pos = 0;
    int v = std::stoi(cur, &pos);
    if (pos != cur.size()) throw UsageError("bad coordinate '" + cur + "'");
    out.push_back(v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      cur += ch;
  }
  flush();
  return out;
}

} // namespace bottcert
