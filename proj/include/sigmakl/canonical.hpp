#pragma once

// Canonical basis A_w of the module over Z[v,v^-1] and the polynomials
// P^sigma_{y,w}. With a'_y = v^{-l(y)} a_y we write A_w = sum_y pi_{y,w} a'_y,
// pi_{w,w} = 1 and pi_{y,w} in v^-1 Z[v^-1] for y != w, so that
// P^sigma_{y,w} = v^{l(w)-l(y)} pi_{y,w}.
//
// Two independent constructions are provided: solving bar(A_w) = A_w against
// the bar table, and the recursion that builds A_z from c_s A_w.

#include "sigmakl/errors.hpp"
#include "sigmakl/involution_module.hpp"

#include <utility>
#include <vector>

namespace sigmakl {

class InconsistentBar : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class RecurrenceInconsistent : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class TheoremMismatch : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

enum class CanonicalMethod { BarFix, Recursive };

class SigmaKL {
 public:
  /// BarFix requires `bar`; Recursive ignores it.
  SigmaKL(const InvolutionModule& mod, CanonicalMethod method, int jobs = 1, const BarTable* bar = nullptr);

  const InvolutionModule& module() const { return *mod_; }
  CanonicalMethod method() const { return method_; }

  const LaurentPoly& pi(std::size_t y, std::size_t w) const { return pi_[w][y]; }
  /// P^sigma_{y,w}, a polynomial in u (even support in v).
  LaurentPoly sigma_kl(std::size_t y, std::size_t w) const;
  /// Zero unless both are involutions.
  LaurentPoly sigma_kl(Element y, Element w) const;
  Integer mu_prime(std::size_t y, std::size_t w) const { return pi(y, w).coeff(-1); }
  Integer mu_double_prime(std::size_t y, std::size_t w) const { return pi(y, w).coeff(-2); }
  /// M^s_{y,w} for sy < y < sw, sw > w.
  LaurentPoly ms_constant(int s, std::size_t y, std::size_t w) const;

  /// A_w in the basis a'.
  MVector canonical(std::size_t w) const;

  /// c_s A_w = v^-2 (T_s + 1) A_w expanded in the A-basis, checked against the
  /// closed form; throws TheoremMismatch on disagreement.
  MVector cs_action_on_A(int s, std::size_t w) const;
  /// The closed form alone.
  MVector cs_theorem_rhs(int s, std::size_t w) const;
  /// Expands a vector given in the basis a' in the A-basis.
  MVector to_A_basis(MVector primed) const;

 private:
  void barfix_column(std::size_t w, const BarTable& bar);
  void recursive_column(std::size_t z);
  /// Coefficient of a'_y in c_s A_w, from the stored column w.
  LaurentPoly cs_coefficient(int s, std::size_t y, std::size_t w) const;
  /// {x in I : sx < x < sw} for sw > w.
  std::vector<std::size_t> correction_set(int s, std::size_t w) const;
  /// M^s_{x,w} without the term -mu'(x, sw) that appears when sw = w delta(s).
  LaurentPoly ms_known(int s, std::size_t x, std::size_t w) const;
  void check_column(std::size_t w) const;

  const InvolutionModule* mod_;
  CanonicalMethod method_;
  std::vector<std::vector<LaurentPoly>> pi_;  // pi_[w][y]
  // Nonzero mu'(x, w) for x != w, per column w.
  std::vector<std::vector<std::pair<std::size_t, Integer>>> mu1_;
};

/// a'-basis coordinates -> a-basis coordinates and back.
MVector primed_to_plain(const InvolutionModule& mod, const MVector& m);
MVector plain_to_primed(const InvolutionModule& mod, const MVector& m);

}  // namespace sigmakl
