#pragma once

// Classical Kazhdan-Lusztig polynomials P_{y,w}, stored in u-form (even support
// in v, u = v^2), and the c-basis data derived from them.
//
// One table serves two normalizations:
//   ufH:  cdot_w = v^{-l(w)}  sum_y P_{y,w}(v^2) T_y,   T_s^2 = (v^2-1)T_s + v^2
//   H':   c_w    = v^{-2l(w)} sum_y P_{y,w}(v^4) T_y,   T_s^2 = (u^2-1)T_s + u^2

#include "sigmakl/coxeter.hpp"
#include "sigmakl/errors.hpp"
#include "sigmakl/hecke.hpp"
#include "sigmakl/laurent.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sigmakl {

class KLTable {
 public:
  /// Builds every column of a finite system; columns of equal length in parallel.
  explicit KLTable(const CoxeterSystem& sys, int jobs = 1);

  const CoxeterSystem& system() const { return *sys_; }

  /// P_{y,w} as a polynomial in v with even support; zero unless y <= w.
  const LaurentPoly& kl_poly(Element y, Element w) const;
  /// Coefficient of u^{(l(w)-l(y)-1)/2} in P_{y,w} (zero unless y < w).
  Integer mu(Element y, Element w) const;
  /// Pairs (z, mu(z,w)) with mu != 0, z < w.
  const std::vector<std::pair<Element, Integer>>& mu_column(Element w) const { return mu_[w.id]; }

  /// cdot_w in the T-basis of ufH.
  HeckeVec c_dot(Element w) const;
  /// c_w in the T-basis of H' (parameter u^2 = v^4).
  HeckeVec c_prime(Element w) const;
  /// Rewrites an element of ufH in the cdot basis.
  std::map<Element, LaurentPoly> to_c_dot_basis(HeckeVec h) const;

  /// cdot_z cdot_w expanded in the cdot basis; nonnegativity asserted.
  std::map<Element, LaurentPoly> c_basis_product(Element z, Element w) const;
  /// cdot_z cdot_w cdot_{z^-1}: the coefficients h_{z,w,w'}.
  std::map<Element, LaurentPoly> c_basis_triple(Element z, Element w) const;
  /// cdot_s cdot_w (Side::Left) or cdot_w cdot_s (Side::Right) from the mu formula.
  std::map<Element, LaurentPoly> cs_product(int s, Element w, Side side) const;

  const HeckeAlgebra& ufh() const { return ufh_; }

 private:
  void build_column(Element w);

  const CoxeterSystem* sys_;
  std::size_t n_;
  std::vector<std::vector<LaurentPoly>> p_;  // p_[w][y]
  std::vector<std::vector<std::pair<Element, Integer>>> mu_;
  HeckeAlgebra ufh_;
};

}  // namespace sigmakl
