#include "sigmakl/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace sigmakl {

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly::LaurentPoly(int min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(Integer c, int exp) {
  LaurentPoly p;
  if (c != 0) {
    p.min_exp_ = exp;
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Integer& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  min_exp_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

Integer LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  LaurentPoly r;
  r.min_exp_ = -max_exp();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_exp_ += k;
  return r;
}

LaurentPoly LaurentPoly::stretched(int k) const {
  if (k < 1) throw std::invalid_argument("LaurentPoly::stretched: factor must be positive");
  if (is_zero() || k == 1) return *this;
  std::vector<Integer> c((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(k)] = coeffs_[i];
  return LaurentPoly(min_exp_ * k, std::move(c));
}

LaurentPoly LaurentPoly::positive_part() const {
  if (is_zero() || max_exp() < 0) return {};
  if (min_exp_ >= 0) return *this;
  std::vector<Integer> c(coeffs_.begin() + (-min_exp_), coeffs_.end());
  return LaurentPoly(0, std::move(c));
}

LaurentPoly LaurentPoly::negative_part() const {
  if (is_zero() || min_exp_ >= 0) return {};
  if (max_exp() < 0) return *this;
  std::vector<Integer> c(coeffs_.begin(), coeffs_.begin() + (-min_exp_));
  return LaurentPoly(min_exp_, std::move(c));
}

Rational LaurentPoly::specialize(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (min_exp_ < 0) throw std::domain_error("LaurentPoly::specialize: negative exponent at v = 0");
    return Rational(coeff(0));
  }
  // Horner on the coefficient list, then scale by x^min_exp.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  Rational scale = 1;
  const Rational base = min_exp_ >= 0 ? x : Rational(1) / x;
  for (int i = 0; i < std::abs(min_exp_); ++i) scale *= base;
  return acc * scale;
}

bool LaurentPoly::is_even_support() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0 && ((min_exp_ + static_cast<int>(i)) % 2 != 0)) return false;
  }
  return true;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Integer& c, int shift) {
  if (o.is_zero() || c == 0) return;
  if (&o == this) {
    const LaurentPoly copy = o;
    add_scaled(copy, c, shift);
    return;
  }
  const int omin = o.min_exp_ + shift;
  const int omax = o.max_exp() + shift;
  if (is_zero()) {
    min_exp_ = omin;
    coeffs_.assign(o.coeffs_.size(), Integer(0));
  } else {
    const int lo = std::min(min_exp_, omin);
    const int hi = std::max(max_exp(), omax);
    if (lo < min_exp_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), Integer(0));
      min_exp_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - min_exp_ + 1));
  }
  const std::size_t off = static_cast<std::size_t>(omin - min_exp_);
  if (c == 1) {
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[off + i] += o.coeffs_[i];
  } else if (c == -1) {
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[off + i] -= o.coeffs_[i];
  } else {
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[off + i] += c * o.coeffs_[i];
  }
  trim();
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (&a == this || &b == this) {
    *this += a * b;
    return;
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != 0) add_scaled(b, a.coeffs_[i], a.min_exp_ + static_cast<int>(i));
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.min_exp_ + b.min_exp_, std::move(c));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    min_exp_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = max_exp(); e >= min_exp_; --e) {
    Integer c = coeff(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Integer a = abs(c);
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a;
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

Rational specialize_u(const LaurentPoly& f, const Rational& u) {
  if (!f.is_even_support()) throw std::invalid_argument("specialize_u: odd exponent in " + f.to_string());
  if (f.is_zero()) return 0;
  std::vector<Integer> c;
  for (int e = f.min_exp(); e <= f.max_exp(); e += 2) c.push_back(f.coeff(e));
  return LaurentPoly(f.min_exp() / 2, std::move(c)).specialize(u);
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  if (f.is_zero()) return {};
  const int qmin = f.min_exp() - g.min_exp();
  const int qmax = f.max_exp() - g.max_exp();
  if (qmax < qmin) throw NotDivisible("exact_div: " + f.to_string() + " is not divisible by " + g.to_string());
  const Integer& lead = g.coeffs().back();
  std::vector<Integer> q(static_cast<std::size_t>(qmax - qmin + 1));
  LaurentPoly r = f;
  while (!r.is_zero()) {
    const int e = r.max_exp() - g.max_exp();
    if (e < qmin) break;
    const Integer& top = r.coeffs().back();
    Integer quot, rem;
    boost::multiprecision::divide_qr(top, lead, quot, rem);
    if (rem != 0) break;
    q[static_cast<std::size_t>(e - qmin)] = quot;
    r.add_scaled(g, -quot, e);
  }
  if (!r.is_zero()) {
    throw NotDivisible("exact_div: " + f.to_string() + " is not divisible by " + g.to_string());
  }
  return LaurentPoly(qmin, std::move(q));
}

}  // namespace sigmakl
