#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phopf/group.hpp"
#include "phopf/linalg.hpp"
#include "phopf/report.hpp"

namespace phopf {

std::vector<std::string> default_names(std::size_t n, const std::string& stem = "e");

class AlgebraSC {
 public:
  AlgebraSC() = default;
  // products[i*dim+j] is e_i·e_j.
  AlgebraSC(std::size_t dim, std::vector<SparseVec> products, Vec unit,
            std::vector<std::string> names = {});

  std::size_t dim() const { return dim_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  Vec multiply(const Vec& x, const Vec& y) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  Mat left_mult(const Vec& x) const;   // y ↦ x·y
  Mat right_mult(const Vec& x) const;  // y ↦ y·x
  bool is_commutative() const;
  AlgebraSC opposite() const;
  AlgebraSC renamed(std::vector<std::string> names) const;

  friend bool operator==(const AlgebraSC& a, const AlgebraSC& b) {
    return a.dim_ == b.dim_ && a.products_ == b.products_ && a.unit_ == b.unit_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVec> products_;
  Vec unit_;
  std::vector<std::string> names_;
};

class CoalgebraSC {
 public:
  CoalgebraSC() = default;
  // coproducts[i] is Δ(e_i) in C⊗C with index a*dim+b.
  CoalgebraSC(std::size_t dim, std::vector<SparseVec> coproducts, Vec counit,
              std::vector<std::string> names = {});

  std::size_t dim() const { return dim_; }
  const SparseVec& coproduct(std::size_t i) const { return coproducts_[i]; }
  SparseVec comultiply(const Vec& x) const;
  SparseVec comultiply(const SparseVec& x) const;
  const Vec& counit() const { return counit_; }
  Scalar counit_of(const Vec& x) const;
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  bool is_cocommutative() const;
  CoalgebraSC co_opposite() const;

  friend bool operator==(const CoalgebraSC& a, const CoalgebraSC& b) {
    return a.dim_ == b.dim_ && a.coproducts_ == b.coproducts_ && a.counit_ == b.counit_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVec> coproducts_;
  Vec counit_;
  std::vector<std::string> names_;
};

struct HopfPackage {
  AlgebraSC algebra;
  CoalgebraSC coalgebra;
  std::optional<Mat> antipode;

  HopfPackage() = default;
  HopfPackage(AlgebraSC a, CoalgebraSC c, std::optional<Mat> s = std::nullopt);
  std::size_t dim() const { return algebra.dim(); }
  const std::vector<std::string>& names() const { return algebra.names(); }
  const Mat& S() const;

  friend bool operator==(const HopfPackage& a, const HopfPackage& b) {
    return a.algebra == b.algebra && a.coalgebra == b.coalgebra && a.antipode == b.antipode;
  }
};

enum class PackageLevel { algebra, coalgebra, bialgebra, hopf };
enum class PairingKind { alg_coalg, bialgebra, hopf };
enum class Transform { op, cop, op_cop };

// Product in A_1⊗…⊗A_n, basis indices first-factor major.
SparseVec tensor_multiply(const std::vector<const AlgebraSC*>& factors, const SparseVec& x,
                          const SparseVec& y);
// Splits a flat tensor index into per-factor indices.
std::vector<std::size_t> split_index(std::size_t flat, const std::vector<std::size_t>& dims);
std::size_t join_index(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims);

Report check_algebra(const AlgebraSC& a, const std::string& prefix = "");
Report check_coalgebra(const CoalgebraSC& c, const std::string& prefix = "");
Report check_package(const HopfPackage& p, PackageLevel level);

HopfPackage group_algebra(const FiniteGroup& g);
HopfPackage dual_group_hopf(const FiniteGroup& g);
AlgebraSC function_algebra(std::size_t n, std::vector<std::string> names = {});
AlgebraSC matrix_algebra(std::size_t n);
// Coalgebra with a basis of grouplike elements.
CoalgebraSC grouplike_coalgebra(std::size_t n, std::vector<std::string> names = {});
// The linear dual of an algebra (dual basis), and of a coalgebra.
CoalgebraSC dual_coalgebra(const AlgebraSC& a);
AlgebraSC dual_algebra(const CoalgebraSC& c);
// Canonical pairing ⟨δ_u, p_v⟩ = δ_{u,v}.
Mat canonical_group_pairing(const FiniteGroup& g);

// (f*g)(x) = f(x₁)g(x₂) for f,g : C → A.
Mat convolution(const Mat& f, const Mat& g, const CoalgebraSC& c, const AlgebraSC& a);
// η∘ε as a matrix C → A.
Mat unit_counit(const CoalgebraSC& c, const AlgebraSC& a);
// Linear solve of S*id = ηε = id*S; nullopt if no antipode exists.
std::optional<Mat> solve_antipode(const AlgebraSC& a, const CoalgebraSC& c);

// form(i,j) = ⟨e_i, f_j⟩ between the algebra side (rows) and the coalgebra side (columns).
Report check_pairing(const Mat& form, const AlgebraSC& a, const CoalgebraSC& c, bool nondegenerate);
Report check_pairing(const Mat& form, const HopfPackage& h, const HopfPackage& k, PairingKind kind,
                     bool nondegenerate);
bool is_nondegenerate(const Mat& form);

Report check_partial_representation(const Mat& pi, const HopfPackage& h, const AlgebraSC& b);

// Human-readable label of a vector in a named basis, e.g. "χ1+2χ2".
std::string vector_label(const SparseVec& v, const std::vector<std::string>& names);
// Labels of the canonical basis of a subspace.
std::vector<std::string> basis_labels(const Subspace& s, const std::vector<std::string>& names);
// The algebra structure on a subspace closed under multiplication, with the given unit, in
// coordinates of the canonical basis.
AlgebraSC subalgebra(const AlgebraSC& a, const Subspace& s, const Vec& unit);
// Coordinates of a vector of a subspace; throws WellDefinednessFailure if it is outside.
Vec coordinates_in(const Subspace& s, const SparseVec& v, const char* what);

HopfPackage op_cop_transformers(const HopfPackage& p, Transform which);

}  // namespace phopf
