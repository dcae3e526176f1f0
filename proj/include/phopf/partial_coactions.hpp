#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "phopf/hopf_algebroid.hpp"
#include "phopf/linalg.hpp"
#include "phopf/report.hpp"
#include "phopf/structures.hpp"

namespace phopf {

// Right partial coaction a ↦ a⁰⊗a¹; rho is (dim A · dim K) × dim A, index a*dim K + ξ.
struct PartialCoaction {
  HopfPackage k;
  AlgebraSC a;
  Mat rho;

  PartialCoaction() = default;
  PartialCoaction(HopfPackage k, AlgebraSC a, Mat rho);
  Vec apply(const Vec& av) const { return rho.apply(av); }
  Vec one() const { return rho.apply(a.unit()); }
};

Report check_partial_coaction(const PartialCoaction& pc);
bool is_global(const PartialCoaction& pc);
// A left coaction λ : A → K⊗A (index ξ*dim A + a) as a right coaction of K^{op,cop} on A^op.
PartialCoaction from_left_coaction(const HopfPackage& k, const AlgebraSC& a, const Mat& lambda);

PartialCoaction restricted_coaction(const PartialCoaction& global, const Vec& e);

// A⊗K with componentwise product.
AlgebraSC tensor_algebra(const AlgebraSC& a, const AlgebraSC& b);

struct ReducedTensor {
  AlgebraSC ambient;  // A⊗K
  Subspace carrier;   // (A⊗K)ρ(1_A)
  AlgebraSC algebra;  // in carrier coordinates, unit ρ(1_A)
  std::size_t dim() const { return carrier.dim(); }
};

ReducedTensor reduced_tensor(const PartialCoaction& pc);
ACoring split_coring(const PartialCoaction& pc);
HopfAlgebroid partial_split_hopf_algebroid(const PartialCoaction& pc);
// A⊗K with the structure maps of a global coaction, built without any carrier.
HopfAlgebroid split_hopf_algebroid(const PartialCoaction& pc);

// Compares the left dual ring of split_coring(pc) with (A^op # H^cop)^op through
// Θ(a#h)(x) = a·(id⊗⟨h,−⟩)(x). form(h, ξ) = ⟨e_h, f_ξ⟩ pairs H with K.
Report left_dual_ring_compare(const PartialCoaction& pc, const HopfPackage& h, const Mat& form);

}  // namespace phopf
