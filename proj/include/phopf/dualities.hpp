#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "phopf/coalgebra_partial.hpp"
#include "phopf/hopf_algebroid.hpp"
#include "phopf/linalg.hpp"
#include "phopf/partial_actions.hpp"
#include "phopf/partial_coactions.hpp"
#include "phopf/report.hpp"
#include "phopf/structures.hpp"

namespace phopf {

// Hopf pairings are stored as form(h, ξ) = ⟨e_h, f_ξ⟩ with H on the rows.
// Structure pairings (A, C) are stored with A on the rows.

// h·a = a⁰⟨h,a¹⟩.
PartialAction action_from_coaction(const PartialCoaction& pc, const HopfPackage& h, const Mat& form);
// The unique ρ with h·a = (I⊗⟨h,−⟩)ρ(a).
PartialCoaction coaction_from_action(const PartialAction& pa, const HopfPackage& k, const Mat& form);
// Every partial action on a finite-dimensional algebra is rational.
inline bool is_rational(const PartialAction&) { return true; }

// ⟨⟨(a⊗ξ)ρ(1) | b#h⟩⟩ = ab(h₁·1)⟨h₂,ξ⟩ between partial_split_hopf_algebroid(pc) and
// smash_hopf_algebroid(pa).
SkewPairing canonical_skew_pairing(const PartialCoaction& pc, const PartialAction& pa, const Mat& form);

struct ModuleTransfer {
  PartialModuleCoalgebra coalgebra_side;
  RightPartialAction algebra_side;
  Report report;
};

// (a·h, c) = (a, h·c) for a non-degenerate pairing (A, C).
ModuleTransfer module_coalgebra_vs_module_algebra(const PartialModuleCoalgebra& pm, const AlgebraSC& a,
                                                  const Mat& pairing);
ModuleTransfer module_coalgebra_vs_module_algebra(const RightPartialAction& ra, const CoalgebraSC& c,
                                                  const Mat& pairing);

// (a⁰,c)a¹ = c⁻¹(a,c⁰), then both checkers.
Report comodule_coalgebra_vs_comodule_algebra(const PartialComoduleCoalgebra& pcc, const PartialCoaction& pc,
                                              const Mat& pairing);

// c·h = ⟨h,c⁻¹⟩c⁰, and back through a non-degenerate Hopf pairing.
RightPartialModuleCoalgebra module_coalgebra_from_comodule_coalgebra(const PartialComoduleCoalgebra& pcc,
                                                                     const HopfPackage& h, const Mat& form);
PartialComoduleCoalgebra comodule_coalgebra_from_module_coalgebra(const RightPartialModuleCoalgebra& r,
                                                                  const HopfPackage& k, const Mat& form);

// A with a left partial K-coaction λ (index ξ*dim A + a), checked against
// (a, h·c) = ⟨h,a⁻¹⟩(a⁰,c).
Report module_coalgebra_from_K_comodule_algebra(const HopfPackage& k, const AlgebraSC& a, const Mat& lambda,
                                                const Mat& form, const Mat& pairing,
                                                const PartialModuleCoalgebra& pm);

struct SmashCosmashPairing {
  SmashProduct smash;
  CosmashCoproduct cosmash;
  Mat form;  // smash dim × cosmash dim
  Report report;
};

// ⟨⟨⟨a#h, x>◂ξ⟩⟩⟩ = (a(h₁·1_A), x)⟨h₂, ξ⟩.
SmashCosmashPairing smash_cosmash_pairing(const PartialAction& pa, const PartialComoduleCoalgebra& pcc,
                                          const Mat& form, const Mat& pairing);

// H⊗̲A = λ(1)(H⊗A) for a left partial coaction: b·x = λ(b)x, x·b = x(1⊗b),
// Δ(h⊗a) = λ(1)(h₁⊗1) ⊗_A λ(1)(h₂⊗a), ε(h⊗a) = ε(h)a.
struct LeftSplitCoring {
  Subspace carrier;  // index h*dim A + a
  ACoring coring;
};
LeftSplitCoring left_split_coring(const HopfPackage& h, const AlgebraSC& a, const Mat& lambda);

// ⟪h⊗a, underline{ξ⊗c}⟫ = ⟨ξ,h⟩(c,a). kh(ξ, h) pairs K with H, pairing(a, c) pairs A with C.
Report cring_coring_pairing(const HopfPackage& h, const AlgebraSC& a, const Mat& lambda,
                            const PartialModuleCoalgebra& pm, const Mat& kh, const Mat& pairing);

}  // namespace phopf
