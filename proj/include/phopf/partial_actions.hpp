#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phopf/hopf_algebroid.hpp"
#include "phopf/linalg.hpp"
#include "phopf/report.hpp"
#include "phopf/structures.hpp"

namespace phopf {

// Left partial action h⊗a ↦ h·a; act column h*dim A + a.
struct PartialAction {
  HopfPackage h;
  AlgebraSC a;
  Mat act;

  PartialAction() = default;
  PartialAction(HopfPackage h, AlgebraSC a, Mat act);
  Vec apply(const Vec& hv, const Vec& av) const;
  const SparseVec& basis_action(std::size_t hi, std::size_t ai) const { return cols_[hi * a.dim() + ai]; }

 private:
  std::vector<SparseVec> cols_;
};

// Right partial action a⊗h ↦ a·h; act column a*dim H + h.
struct RightPartialAction {
  HopfPackage h;
  AlgebraSC a;
  Mat act;
};

Report check_partial_action(const PartialAction& pa);
bool is_global(const PartialAction& pa);
// Left action of H^{op,cop} on A^op with h▷a = a·h.
PartialAction mirror(const RightPartialAction& ra);
Report check_right_partial_action(const RightPartialAction& ra);

PartialAction induced_partial_action(const PartialAction& global, const Vec& e);

struct SmashProduct {
  std::size_t dim_a = 0, dim_h = 0;
  Subspace carrier;    // inside A⊗H, index a*dim H + h
  AlgebraSC algebra;   // in carrier coordinates
  Report report;       // algebra laws and the a#h rewriting identity

  std::size_t dim() const { return carrier.dim(); }
  Vec embed(const Vec& coords) const;
  std::optional<Vec> project(const Vec& ambient) const;
};

// Carrier coordinates of a#h for arbitrary vectors a ∈ A, h ∈ H.
Vec smash_element(const PartialAction& pa, const SmashProduct& sp, const Vec& a, const Vec& h);
SmashProduct smash_product(const PartialAction& pa);
HopfAlgebroid smash_hopf_algebroid(const PartialAction& pa);

}  // namespace phopf
