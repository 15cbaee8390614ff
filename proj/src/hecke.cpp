#include "sigmakl/hecke.hpp"

namespace sigmakl {

HeckeAlgebra::HeckeAlgebra(const CoxeterSystem& sys, LaurentPoly q)
    : sys_(&sys), dim_(sys.order()), q_(std::move(q)) {
  if (q_.term_count() != 1 || q_.coeff(q_.min_exp()) != 1) {
    throw std::invalid_argument("HeckeAlgebra: parameter must be a monic monomial");
  }
  q_minus_one_ = q_ - LaurentPoly::one();
  q_inv_ = q_.bar();
  q_inv_minus_one_ = q_inv_ - LaurentPoly::one();
}

HeckeVec HeckeAlgebra::basis(Element w) const {
  HeckeVec h(dim_);
  h[w.id] = LaurentPoly::one();
  return h;
}

void HeckeAlgebra::mult_gen(HeckeVec& h, int s, Side side) const {
  HeckeVec out(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) {
    if (h[i].is_zero()) continue;
    const Element w{i};
    const Element ws = sys_->mult_gen(w, s, side);
    if (sys_->length(ws) > sys_->length(w)) {
      out[ws.id] += h[i];
    } else {
      // T_w T_s = T_{ws} T_s^2 = (q-1) T_w + q T_{ws}
      out[i].add_product(h[i], q_minus_one_);
      out[ws.id].add_product(h[i], q_);
    }
  }
  h = std::move(out);
}

void HeckeAlgebra::mult_basis(HeckeVec& h, Element w, Side side) const {
  const Word& word = sys_->word(w);
  if (side == Side::Right) {
    for (int s : word) mult_gen(h, s, Side::Right);
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it) mult_gen(h, *it, Side::Left);
  }
}

HeckeVec HeckeAlgebra::multiply(const HeckeVec& a, const HeckeVec& b) const {
  HeckeVec out(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) {
    if (b[i].is_zero()) continue;
    HeckeVec t = a;
    mult_basis(t, Element{i}, Side::Right);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!t[j].is_zero()) out[j].add_product(t[j], b[i]);
    }
  }
  return out;
}

HeckeVec HeckeAlgebra::inverse_basis(Element w) const {
  // T_w = T_{s1}...T_{sk}  =>  T_w^{-1} = T_{sk}^{-1}...T_{s1}^{-1}
  HeckeVec h = basis(sys_->identity());
  const Word& word = sys_->word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    // h * T_s^{-1} = h * (q^-1 T_s + (q^-1 - 1))
    HeckeVec ts = h;
    mult_gen(ts, *it, Side::Right);
    HeckeVec next(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      next[j].add_product(ts[j], q_inv_);
      next[j].add_product(h[j], q_inv_minus_one_);
    }
    h = std::move(next);
  }
  return h;
}

HeckeVec HeckeAlgebra::bar(const HeckeVec& h) const {
  HeckeVec out(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) {
    if (h[i].is_zero()) continue;
    const HeckeVec inv = inverse_basis(sys_->inverse(Element{i}));
    const LaurentPoly c = h[i].bar();
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!inv[j].is_zero()) out[j].add_product(inv[j], c);
    }
  }
  return out;
}

std::map<Element, LaurentPoly> sparse(const HeckeVec& h) {
  std::map<Element, LaurentPoly> out;
  for (std::uint32_t i = 0; i < h.size(); ++i) {
    if (!h[i].is_zero()) out.emplace(Element{i}, h[i]);
  }
  return out;
}

}  // namespace sigmakl
