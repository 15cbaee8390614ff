#pragma once

// Iwahori-Hecke algebra of a finite Coxeter group in the standard basis T_w,
// with quadratic relation (T_s + 1)(T_s - q) = 0 for a monomial parameter q.
// Elements are dense coefficient vectors indexed by element handle.

#include "sigmakl/coxeter.hpp"
#include "sigmakl/laurent.hpp"

#include <map>
#include <vector>

namespace sigmakl {

using HeckeVec = std::vector<LaurentPoly>;

class HeckeAlgebra {
 public:
  /// q must be a monomial c*v^k with c = 1 (so that T_s is invertible over Z[v,v^-1]).
  HeckeAlgebra(const CoxeterSystem& sys, LaurentPoly q);

  const CoxeterSystem& system() const { return *sys_; }
  const LaurentPoly& q() const { return q_; }
  std::size_t dim() const { return dim_; }

  HeckeVec zero() const { return HeckeVec(dim_); }
  HeckeVec basis(Element w) const;

  void mult_gen(HeckeVec& h, int s, Side side) const;
  /// h * T_w (Side::Right) or T_w * h (Side::Left).
  void mult_basis(HeckeVec& h, Element w, Side side) const;
  HeckeVec multiply(const HeckeVec& a, const HeckeVec& b) const;

  /// T_w^{-1}
  HeckeVec inverse_basis(Element w) const;
  /// Semilinear involution: v -> v^-1 on scalars, T_w -> T_{w^-1}^{-1}.
  HeckeVec bar(const HeckeVec& h) const;

 private:
  const CoxeterSystem* sys_;
  std::size_t dim_;
  LaurentPoly q_;
  LaurentPoly q_minus_one_;
  LaurentPoly q_inv_;
  LaurentPoly q_inv_minus_one_;
};

/// Sparse view of a dense vector (zero entries dropped), keyed by handle.
std::map<Element, LaurentPoly> sparse(const HeckeVec& h);

}  // namespace sigmakl
