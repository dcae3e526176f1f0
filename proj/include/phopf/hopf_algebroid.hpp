#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "phopf/errors.hpp"
#include "phopf/linalg.hpp"
#include "phopf/report.hpp"
#include "phopf/structures.hpp"

namespace phopf {

// An A-bimodule structure on a space M given by the action of every basis element of A.
struct Bimodule {
  AlgebraSC base;
  std::size_t dim = 0;
  std::vector<std::vector<SparseVec>> left;   // left[a][x] = e_a ▷ e_x
  std::vector<std::vector<SparseVec>> right;  // right[a][x] = e_x ◁ e_a

  SparseVec act_left(const Vec& a, const SparseVec& x) const;
  SparseVec act_right(const SparseVec& x, const Vec& a) const;
};

// M ⊗_A M as a quotient of M⊗M (basis index i*dim+j).
class BalancedPair {
 public:
  explicit BalancedPair(const Bimodule& m);
  std::size_t dim() const { return q_.dim(); }
  std::size_t factor_dim() const { return n_; }
  const QuotientSpace& quotient() const { return q_; }
  SparseVec project(const SparseVec& x) const;
  const SparseVec& project_basis(std::size_t i, std::size_t j) const { return pair_[i * n_ + j]; }

 private:
  std::size_t n_;
  QuotientSpace q_;
  std::vector<SparseVec> pair_;
};

// (M ⊗_A M) ⊗_A M, where the first tensor sign uses `inner` and the second `outer`.
class BalancedTriple {
 public:
  BalancedTriple(const Bimodule& inner, const Bimodule& outer);
  std::size_t dim() const { return q_.dim(); }
  const BalancedPair& pair() const { return pair_; }
  // x is indexed by (i*n + j)*n + k.
  SparseVec project(const SparseVec& x) const;

 private:
  std::size_t n_;
  BalancedPair pair_;
  QuotientSpace q_;
};

struct ACoring {
  Bimodule module;
  std::vector<SparseVec> delta;  // a representative of Δ(e_x) in M⊗M
  Mat counit;                    // dim A × dim M
  std::vector<std::string> names;
};

// A as a coring over itself.
ACoring trivial_coring(const AlgebraSC& a);
Report check_coring(const ACoring& c);

enum class Side { left, right };

struct HopfAlgebroid {
  AlgebraSC total;
  AlgebraSC base;
  Mat s_l, t_l, s_r, t_r;  // dim ℋ × dim A
  std::vector<SparseVec> delta_l, delta_r;  // representatives in ℋ⊗ℋ
  Mat eps_l, eps_r;                          // dim A × dim ℋ
  std::optional<Mat> antipode;

  std::size_t dim() const { return total.dim(); }
  // Left: a▷x◁b = s_l(a)t_l(b)x. Right: a▷x◁b = x s_r(b) t_r(a).
  Bimodule bimodule(Side side) const;
  ACoring coring(Side side) const;
};

class BialgebroidFailure : public Error {
 public:
  BialgebroidFailure(const std::string& what, std::vector<Report> reports)
      : Error("BialgebroidFailure", what), reports_(std::move(reports)) {}
  const std::vector<Report>& reports() const { return reports_; }

 private:
  std::vector<Report> reports_;
};

// x holds coordinates in ℋ⊗_Aℋ (left or right balanced tensor as selected by side).
bool takeuchi_membership(const Vec& x, const HopfAlgebroid& h, Side side);
// Same test on a representative in ℋ⊗ℋ.
bool takeuchi_membership_rep(const SparseVec& x, const HopfAlgebroid& h, Side side);

Report check_left_bialgebroid(const HopfAlgebroid& h);
Report check_right_bialgebroid(const HopfAlgebroid& h);
Report check_hopf_algebroid(const HopfAlgebroid& h);

// Two left bialgebroids over the same base, with form(·, ξ*dim L + ℓ) = ⟨⟨ξ|ℓ⟩⟩ ∈ A.
struct SkewPairing {
  HopfAlgebroid lambda;
  HopfAlgebroid l;
  Mat form;

  Vec eval(const Vec& xi, const Vec& ell) const;
};

Report check_skew_pairing(const SkewPairing& sp);

}  // namespace phopf
