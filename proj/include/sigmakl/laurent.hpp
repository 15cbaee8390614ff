#pragma once

// Exact Laurent polynomials in one variable v with arbitrary-precision integer
// coefficients. Elements of Z[u,u^-1] are represented with u = v^2, i.e. as
// polynomials whose support is contained in the even exponents.

#include "sigmakl/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigmakl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class NotDivisible : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Integer constant);
  LaurentPoly(int min_exp, std::vector<Integer> coeffs);

  static LaurentPoly monomial(Integer c, int exp);
  /// v^e
  static LaurentPoly v(int e = 1) { return monomial(1, e); }
  /// u^e = v^(2e)
  static LaurentPoly u(int e = 1) { return monomial(1, 2 * e); }
  static LaurentPoly one() { return LaurentPoly(Integer(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  // Exponent bounds; the zero polynomial reports 0 for both.
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer coeff(int exp) const;

  /// f(v) -> f(v^-1)
  LaurentPoly bar() const;
  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  /// Substitution v -> v^k for k >= 1.
  LaurentPoly stretched(int k) const;
  /// Keeps the terms with exponent >= 0.
  LaurentPoly positive_part() const;
  /// Keeps the terms with exponent < 0.
  LaurentPoly negative_part() const;
  /// Value at v = x. Throws std::domain_error at x = 0 if a negative exponent is present.
  Rational specialize(const Rational& x) const;

  bool is_even_support() const;
  bool is_bar_invariant() const { return *this == bar(); }
  bool has_nonnegative_coeffs() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);
  /// this += c * v^shift * o, without temporaries.
  void add_scaled(const LaurentPoly& o, const Integer& c, int shift = 0);
  /// this += a * b.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form in v, e.g. "v^-3 + 2v".
  std::string to_string() const;

 private:
  void trim();

  int min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

/// Value of an even-support polynomial as a function of u = v^2. Throws
/// std::invalid_argument on odd support and std::domain_error at u = 0 with negative powers.
Rational specialize_u(const LaurentPoly& f, const Rational& u);

/// Returns q with q * g == f. Throws NotDivisible when no Laurent quotient exists.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace sigmakl
