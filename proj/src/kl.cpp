#include "sigmakl/kl.hpp"

#include "sigmakl/parallel.hpp"

namespace sigmakl {

namespace {

const LaurentPoly kZero;

}  // namespace

KLTable::KLTable(const CoxeterSystem& sys, int jobs)
    : sys_(&sys), n_(sys.order()), p_(n_), mu_(n_), ufh_(sys, LaurentPoly::v(2)) {
  const auto& all = sys.enumerate_all();
  std::size_t begin = 0;
  while (begin < all.size()) {
    std::size_t end = begin;
    const int len = sys.length(all[begin]);
    while (end < all.size() && sys.length(all[end]) == len) ++end;
    parallel_for(end - begin, jobs, [&](std::size_t i) { build_column(all[begin + i]); });
    begin = end;
  }
}

void KLTable::build_column(Element w) {
  const CoxeterSystem& sys = *sys_;
  auto& col = p_[w.id];
  col.assign(n_, LaurentPoly{});
  const int lw = sys.length(w);
  if (lw == 0) {
    col[w.id] = LaurentPoly::one();
    return;
  }
  const int s = sys.first_descent(w, Side::Left);
  const Element v = sys.mult_gen(w, s, Side::Left);
  const auto& pv = p_[v.id];
  std::vector<std::pair<Element, Integer>> corrections;
  for (const auto& [z, m] : mu_[v.id]) {
    if (sys.is_descent(z, s, Side::Left)) corrections.emplace_back(z, m);
  }
  for (std::uint32_t i = 0; i < n_; ++i) {
    const Element y{i};
    if (!sys.bruhat_leq(y, w)) continue;
    const Element sy = sys.mult_gen(y, s, Side::Left);
    const int c = sys.length(sy) < sys.length(y) ? 1 : 0;
    LaurentPoly p;
    p.add_scaled(pv[sy.id], 1, 2 * (1 - c));
    p.add_scaled(pv[y.id], 1, 2 * c);
    for (const auto& [z, m] : corrections) {
      p.add_scaled(p_[z.id][y.id], -m, lw - sys.length(z));
    }
    const int ly = sys.length(y);
    if (!p.has_nonnegative_coeffs() || !p.is_even_support() || (y != w && p.max_exp() > lw - ly - 1) ||
        (y == w && p != LaurentPoly::one()) || p.is_zero()) {
      throw InvariantViolation("KL polynomial P_{" + sys.format(y) + "," + sys.format(w) +
                               "} = " + p.to_string() + " violates positivity/degree/normalization");
    }
    if (y != w && (lw - ly) % 2 == 1) {
      Integer m = p.coeff(lw - ly - 1);
      if (m != 0) mu_[w.id].emplace_back(y, std::move(m));
    }
    col[i] = std::move(p);
  }
}

const LaurentPoly& KLTable::kl_poly(Element y, Element w) const {
  const auto& col = p_[w.id];
  return col.empty() ? kZero : col[y.id];
}

Integer KLTable::mu(Element y, Element w) const {
  for (const auto& [z, m] : mu_[w.id]) {
    if (z == y) return m;
  }
  return 0;
}

HeckeVec KLTable::c_dot(Element w) const {
  HeckeVec h(n_);
  const int lw = sys_->length(w);
  for (std::size_t y = 0; y < n_; ++y) {
    if (!p_[w.id][y].is_zero()) h[y] = p_[w.id][y].shifted(-lw);
  }
  return h;
}

HeckeVec KLTable::c_prime(Element w) const {
  HeckeVec h(n_);
  const int lw = sys_->length(w);
  for (std::size_t y = 0; y < n_; ++y) {
    if (!p_[w.id][y].is_zero()) h[y] = p_[w.id][y].stretched(2).shifted(-2 * lw);
  }
  return h;
}

std::map<Element, LaurentPoly> KLTable::to_c_dot_basis(HeckeVec h) const {
  std::map<Element, LaurentPoly> out;
  const auto& all = sys_->enumerate_all();
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    const Element x = *it;
    if (h[x.id].is_zero()) continue;
    const int lx = sys_->length(x);
    const LaurentPoly d = h[x.id].shifted(lx);
    for (std::size_t y = 0; y < n_; ++y) {
      const LaurentPoly& p = p_[x.id][y];
      if (!p.is_zero()) h[y].add_product(p.shifted(-lx), -d);
    }
    out.emplace(x, d);
  }
  return out;
}

std::map<Element, LaurentPoly> KLTable::c_basis_product(Element z, Element w) const {
  auto out = to_c_dot_basis(ufh_.multiply(c_dot(z), c_dot(w)));
  for (const auto& [x, c] : out) {
    if (!c.has_nonnegative_coeffs()) {
      throw InvariantViolation("negative structure constant in cdot_" + sys_->format(z) + " cdot_" +
                               sys_->format(w) + " at " + sys_->format(x));
    }
  }
  return out;
}

std::map<Element, LaurentPoly> KLTable::c_basis_triple(Element z, Element w) const {
  const HeckeVec zw = ufh_.multiply(c_dot(z), c_dot(w));
  auto out = to_c_dot_basis(ufh_.multiply(zw, c_dot(sys_->inverse(z))));
  for (const auto& [x, c] : out) {
    if (!c.has_nonnegative_coeffs()) {
      throw InvariantViolation("h_{z,w,w'} not in N[v,v^-1] for z=" + sys_->format(z) + " w=" +
                               sys_->format(w) + " w'=" + sys_->format(x));
    }
  }
  return out;
}

std::map<Element, LaurentPoly> KLTable::cs_product(int s, Element w, Side side) const {
  std::map<Element, LaurentPoly> out;
  const Element sw = sys_->mult_gen(w, s, side);
  if (sys_->length(sw) < sys_->length(w)) {
    out.emplace(w, LaurentPoly::v(1) + LaurentPoly::v(-1));
    return out;
  }
  out.emplace(sw, LaurentPoly::one());
  for (const auto& [z, m] : mu_[w.id]) {
    if (sys_->is_descent(z, s, side)) out.emplace(z, LaurentPoly(m));
  }
  return out;
}

}  // namespace sigmakl
