#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bottcert/root_system.hpp"

namespace bottcert {

/// A root system together with a distinguished sub-diagram (the "acting"
/// simple reflections).  Characters live relative to such a context: their
/// weight multisets are invariant under the sub-diagram's reflection group.
/// The whole group is the special case mask == full_mask(rank).
class SymmetryContext {
public:
  SymmetryContext(RootSystemPtr rs, uint32_t mask) : rs_(std::move(rs)), mask_(mask) {
    const int n = rs_->rank();
    if (mask_ & ~RootSystem::full_mask(n)) throw ConstructionError("context mask exceeds rank");
    for (int i = 0; i < n; ++i)
      if (mask_ >> i & 1) nodes_.push_back(i);
    two_rho_ = Weight(n);
    hvec_.fill(0);
    for (const PosRoot& r : rs_->positive_roots()) {
      bool inside = true;
      for (int j = 0; j < n; ++j)
        if (r.simple.c[j] != 0 && !(mask_ >> j & 1)) { inside = false; break; }
      if (!inside) continue;
      pos_roots_.push_back(r);
      two_rho_ += r.fund;
      for (int j = 0; j < n; ++j) hvec_[j] += r.func[j];
    }
    build_orbit_table();
  }

  const RootSystem& roots() const { return *rs_; }
  const RootSystemPtr& roots_ptr() const { return rs_; }
  uint32_t mask() const { return mask_; }
  int rank() const { return rs_->rank(); }
  const std::vector<int>& nodes() const { return nodes_; }
  const std::vector<PosRoot>& positive_roots() const { return pos_roots_; }
  const Weight& two_rho() const { return two_rho_; }
  int64_t group_order() const { return full_order_; }

  bool is_dominant(const Weight& w) const {
    for (int i : nodes_)
      if (w.c[i] < 0) return false;
    return true;
  }

  DominantConjugate dominant_conjugate(const Weight& w) const {
    return rs_->dominant_conjugate(w, mask_);
  }

  /// 6 * (w, 2 rho_L): strictly monotone height functional on the dominant
  /// cone of the context; drives the deterministic leading-term order.
  int64_t height_key(const Weight& w) const {
    int64_t acc = 0;
    for (int i : nodes_) acc += static_cast<int64_t>(w.c[i]) * hvec_[i];
    return acc;
  }

  /// Orbit size of a *dominant* weight: |W_ctx| / |stabiliser|, where the
  /// stabiliser is generated by the context nodes with coordinate zero.
  int64_t orbit_size(const Weight& dominant) const {
    uint32_t zero_bits = 0;
    for (size_t k = 0; k < nodes_.size(); ++k)
      if (dominant.c[nodes_[k]] == 0) zero_bits |= uint32_t{1} << k;
    return orbit_table_[zero_bits];
  }

  bool same_as(const SymmetryContext& o) const {
    return rs_->type() == o.rs_->type() && mask_ == o.mask_;
  }

private:
  void build_orbit_table() {
    // Precompute |W_ctx| / |W_S| for every subset S of the context nodes,
    // indexed by the compressed bit pattern of S.  Lock-free reads later.
    const auto& cartan = rs_->cartan();
    full_order_ = weyl_order_of_subdiagram(cartan, nodes_);
    const size_t k = nodes_.size();
    orbit_table_.assign(size_t{1} << k, 0);
    std::vector<int> subset;
    for (uint32_t bits = 0; bits < orbit_table_.size(); ++bits) {
      subset.clear();
      for (size_t j = 0; j < k; ++j)
        if (bits >> j & 1) subset.push_back(nodes_[j]);
      int64_t stab = subset.empty() ? 1 : weyl_order_of_subdiagram(cartan, subset);
      orbit_table_[bits] = full_order_ / stab;
    }
  }

  RootSystemPtr rs_;
  uint32_t mask_;
  std::vector<int> nodes_;
  std::vector<PosRoot> pos_roots_;
  Weight two_rho_;
  std::array<int64_t, kMaxRank> hvec_{};
  std::vector<int64_t> orbit_table_;
  int64_t full_order_ = 1;
};

using ContextPtr = std::shared_ptr<const SymmetryContext>;

inline ContextPtr make_context(RootSystemPtr rs, uint32_t mask) {
  return std::make_shared<SymmetryContext>(std::move(rs), mask);
}

inline ContextPtr make_full_context(RootSystemPtr rs) {
  uint32_t mask = RootSystem::full_mask(rs->rank());
  return make_context(std::move(rs), mask);
}

inline void require_same_context(const SymmetryContext& a, const SymmetryContext& b) {
  if (!a.same_as(b)) throw ContextMismatch("operands live in different symmetry contexts");
}

} // namespace bottcert
