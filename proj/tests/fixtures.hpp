#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "phopf/coalgebra_partial.hpp"
#include "phopf/groups.hpp"
#include "phopf/io.hpp"
#include "phopf/partial_actions.hpp"
#include "phopf/partial_coactions.hpp"

namespace phopf::fx {

FiniteGroup z2();
HopfPackage kz2();
HopfPackage kz2_dual();
AlgebraSC fun2();
CoalgebraSC c2();
Mat z2_pairing();  // ⟨δ_u, p_v⟩ = δ_{u,v}

SetPartialAction e1set();
PartialAction e1();
PartialCoaction e2();
PartialModuleCoalgebra e3();
PartialComoduleCoalgebra e3star();
// λ : Fun(2) → kℤ₂ ⊗ Fun(2), the left form of E2 (index ξ*2 + a).
Mat e2_left();

// The global swap of ℤ₂ on two points, as a set action, kℤ₂-action and coaction.
SetPartialAction swap_set();
PartialAction swap_action();
PartialCoaction swap_coaction();

// δ_g·χ₁ = 1_A, δ_g·χ₂ = 0: passes PLA1, PLA2 and fails PLA3.
PartialAction broken_e1();
// The trivial action of kℤ₂ on M₂(k).
PartialAction matrixalg();

// ℤ₃ rotating three points, restricted to {1, 2}.
SetPartialAction z3_restricted_set();
PartialAction z3_action();
PartialCoaction z3_coaction();
// ℤ₃ rotating three grouplikes, induced on span{x₁, x₂}.
PartialModuleCoalgebra z3_module_coalgebra();

// Restriction of a global action of a random group of order ≤ 6 to a random subset of at most 5 points.
SetPartialAction random_set_action(std::mt19937_64& rng);

// Fixture files by file name, in canonical form.
std::map<std::string, FixtureFile> fixture_files();

}  // namespace phopf::fx
