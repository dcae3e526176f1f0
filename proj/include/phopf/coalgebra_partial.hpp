#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "phopf/group.hpp"
#include "phopf/linalg.hpp"
#include "phopf/report.hpp"
#include "phopf/structures.hpp"

namespace phopf {

// Left partial module coalgebra h⊗c ↦ h·c; act column h*dim C + c.
struct PartialModuleCoalgebra {
  HopfPackage h;
  CoalgebraSC c;
  Mat act;

  PartialModuleCoalgebra() = default;
  PartialModuleCoalgebra(HopfPackage h, CoalgebraSC c, Mat act);
  SparseVec basis_action(std::size_t hi, std::size_t ci) const { return sparse(act.column(hi * c.dim() + ci)); }
};

// Right partial module coalgebra c⊗h ↦ c·h; act column c*dim H + h.
struct RightPartialModuleCoalgebra {
  HopfPackage h;
  CoalgebraSC c;
  Mat act;
};

Report check_partial_module_coalgebra(const PartialModuleCoalgebra& pmc);
bool is_global(const PartialModuleCoalgebra& pmc);
// Left action of H^{op,cop} on C^cop with h▷c = c·h.
PartialModuleCoalgebra mirror(const RightPartialModuleCoalgebra& r);
Report check_right_partial_module_coalgebra(const RightPartialModuleCoalgebra& r);

// P : C → C with image D, checked against the inclusion D ⊆ C.
Report check_coalgebra_projection(const Mat& p, const CoalgebraSC& c);

// Partial action of G on C by projections P_g onto C_g and isomorphisms θ_g : C_{g⁻¹} → C_g,
// both stored as dim C × dim C matrices. Only θ_g∘P_{g⁻¹} is significant.
struct CoalgebraGroupAction {
  FiniteGroup g;
  CoalgebraSC c;
  std::vector<Mat> p;
  std::vector<Mat> theta;

  friend bool operator==(const CoalgebraGroupAction& a, const CoalgebraGroupAction& b);
};

Report check_group_action_on_coalgebra(const CoalgebraGroupAction& cga);
PartialModuleCoalgebra group_to_kG(const CoalgebraGroupAction& cga);
CoalgebraGroupAction kG_to_group(const PartialModuleCoalgebra& pmc, const FiniteGroup& g);

// The subcoalgebra on the image of P with h·d = P(h▷d).
PartialModuleCoalgebra induced_module_coalgebra(const PartialModuleCoalgebra& global, const Mat& p);

// Coalgebra structure on a subcoalgebra, in coordinates of its canonical basis.
CoalgebraSC subcoalgebra(const CoalgebraSC& c, const Subspace& s);

struct CRing {
  HopfPackage h;
  CoalgebraSC c;
  Subspace carrier;       // inside H⊗C, index h*dim C + c
  Mat lambda;             // (dim C · n) × n, index c*n + x
  Mat rho;                // (n · dim C) × n, index x*dim C + c
  Mat mu;                 // n × n², defined by the product formula on all of carrier⊗carrier
  Mat eta;                // n × dim C
  Subspace cotensor;      // inside carrier⊗carrier
  std::vector<std::string> names;

  std::size_t dim() const { return carrier.dim(); }
};

CRing cring(const PartialModuleCoalgebra& pmc);
Report check_cring(const CRing& cr);

// Left partial comodule coalgebra λ(c) = c⁻¹⊗c⁰; lam is (dim K · dim C) × dim C, index ξ*dim C + c.
struct PartialComoduleCoalgebra {
  HopfPackage k;
  CoalgebraSC c;
  Mat lam;

  PartialComoduleCoalgebra() = default;
  PartialComoduleCoalgebra(HopfPackage k, CoalgebraSC c, Mat lam);
};

Report check_partial_comodule_coalgebra(const PartialComoduleCoalgebra& pcc);
bool is_global(const PartialComoduleCoalgebra& pcc);
// ψ(c) = c⁻¹ε(c⁰), a dim K × dim C matrix.
Mat psi_map(const PartialComoduleCoalgebra& pcc);

// C = D/I for a right coideal I of a global comodule coalgebra D.
PartialComoduleCoalgebra quotient_comodule_coalgebra(const PartialComoduleCoalgebra& d, const Subspace& i);

struct CosmashCoproduct {
  std::size_t dim_c = 0, dim_k = 0;
  Subspace carrier;       // inside C⊗K, index c*dim K + ξ
  CoalgebraSC coalgebra;  // in carrier coordinates

  std::size_t dim() const { return carrier.dim(); }
};

CosmashCoproduct cosmash(const PartialComoduleCoalgebra& pcc);
Report check_cosmash(const CosmashCoproduct& cs);

}  // namespace phopf
