#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phopf/group.hpp"
#include "phopf/hopf_algebroid.hpp"
#include "phopf/linalg.hpp"
#include "phopf/partial_actions.hpp"
#include "phopf/partial_coactions.hpp"
#include "phopf/report.hpp"
#include "phopf/structures.hpp"

namespace phopf {

// Partial action of a finite group on {0..n-1}. maps[g][x] = α_g(x) for x ∈ X_{g⁻¹}, otherwise -1.
struct SetPartialAction {
  FiniteGroup g;
  std::size_t n = 0;
  std::vector<std::vector<bool>> domains;  // domains[g][x] ⇔ x ∈ X_g
  std::vector<std::vector<std::int64_t>> maps;
  std::vector<std::string> points;

  SetPartialAction() = default;
  // Validates the shapes and that each α_g is a bijection X_{g⁻¹} → X_g (MalformedTable).
  SetPartialAction(FiniteGroup g, std::size_t n, std::vector<std::vector<bool>> domains,
                   std::vector<std::vector<std::int64_t>> maps, std::vector<std::string> points = {});
  static SetPartialAction global(FiniteGroup g, std::vector<std::vector<std::size_t>> perms,
                                 std::vector<std::string> points = {});

  bool in(std::size_t gi, std::size_t x) const { return domains[gi][x]; }
  std::int64_t alpha(std::size_t gi, std::size_t x) const { return maps[gi][x]; }

  friend bool operator==(const SetPartialAction& a, const SetPartialAction& b) {
    return a.g == b.g && a.n == b.n && a.domains == b.domains && a.maps == b.maps;
  }
};

Report check_set_partial_action(const SetPartialAction& spa);
bool is_global(const SetPartialAction& spa);
PartialAction to_kG_partial_action(const SetPartialAction& spa);
PartialCoaction to_dual_partial_coaction(const SetPartialAction& spa);

struct Arrow {
  std::size_t source, target;
  std::string name;
};

// Composition a∘b (first b, then a) is defined iff source(a) = target(b).
struct FiniteGroupoid {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<std::int64_t> compose;  // compose[a*|arrows|+b] = a∘b or -1
  std::vector<std::size_t> inverse;
  std::vector<std::size_t> units;

  std::size_t object_count() const { return objects.size(); }
  std::size_t arrow_count() const { return arrows.size(); }
  std::int64_t comp(std::size_t a, std::size_t b) const { return compose[a * arrows.size() + b]; }
};

Report check_groupoid(const FiniteGroupoid& gd);
// Arrows (x,g) with x ∈ X_g, s(x,g) = α_{g⁻¹}(x), t(x,g) = x; object-major order.
FiniteGroupoid groupoid_of_action(const SetPartialAction& spa);

struct StarFunctor {
  FiniteGroupoid domain;
  FiniteGroup codomain;
  std::vector<std::size_t> label;
};

Report check_functor(const StarFunctor& f);
StarFunctor projection_functor(const FiniteGroupoid& gd, const FiniteGroup& g);
StarFunctor projection_functor(const SetPartialAction& spa);
// Star injectivity and surjectivity over the stars 𝒮(x) = {γ | s(γ) = x}.
Report star_report(const StarFunctor& f);
bool check_star_injective(const StarFunctor& f);
bool check_star_surjective(const StarFunctor& f);
SetPartialAction action_from_functor(const StarFunctor& f);

// Fun(arrows) over Fun(objects): s_l(a) = a∘t, t_l(a) = a∘s, s_r = t_l, t_r = s_l,
// Δ(χ_γ) = Σ_{αβ=γ} χ_α⊗χ_β, ε(χ_γ) = [γ a unit], 𝒮(χ_γ) = χ_{γ⁻¹}.
HopfAlgebroid function_hopf_algebroid(const FiniteGroupoid& gd);

// Π(a⊗h) = s_l(a)F(h), as an (dim ℋ) × (dim A · dim H) matrix.
Mat dual_star_pi(const Mat& f, const HopfPackage& h, const HopfAlgebroid& hh);
Report check_dual_star_injective(const Mat& f, const HopfPackage& h, const HopfAlgebroid& hh,
                                 const std::optional<Mat>& sigma = std::nullopt);
// ρ̄ = σ∘t_l. Without σ the canonical candidate is tried.
PartialCoaction coaction_from_dual_star(const Mat& f, const std::optional<Mat>& sigma, const HopfPackage& h,
                                        const HopfAlgebroid& hh);

// F̂(p_g) = Σ_{F(γ)=g} χ_γ and σ(χ_γ) = χ_{t(γ)}⊗p_{F(γ)} for H = (kG)*.
std::pair<Mat, Mat> functor_dual_star(const StarFunctor& f);

}  // namespace phopf
