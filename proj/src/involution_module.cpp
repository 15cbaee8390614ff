#include "sigmakl/involution_module.hpp"

#include "sigmakl/parallel.hpp"

#include <stdexcept>

namespace sigmakl {

void add_term(MVector& m, std::size_t i, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(i, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

void add_scaled(MVector& m, const MVector& o, const LaurentPoly& c) {
  if (c.is_zero()) return;
  for (const auto& [i, f] : o) add_term(m, i, f * c);
}

MVector scaled(const MVector& m, const LaurentPoly& c) {
  MVector out;
  add_scaled(out, m, c);
  return out;
}

MVector operator+(MVector a, const MVector& b) {
  for (const auto& [i, f] : b) add_term(a, i, f);
  return a;
}

MVector operator-(MVector a, const MVector& b) {
  for (const auto& [i, f] : b) add_term(a, i, -f);
  return a;
}

InvolutionModule::InvolutionModule(const CoxeterSystem& sys)
    : sys_(&sys), invs_(sys.twisted_involutions()), index_(sys.order(), -1) {
  for (std::size_t i = 0; i < invs_.size(); ++i) index_[invs_[i].id] = static_cast<std::int32_t>(i);
  const int n = sys.rank();
  cases_.assign(invs_.size(), std::vector<ActionCase>(static_cast<std::size_t>(n)));
  partner_.assign(invs_.size(), std::vector<std::size_t>(static_cast<std::size_t>(n)));
  for (std::size_t i = 0; i < invs_.size(); ++i) {
    const Element w = invs_[i];
    for (int s = 0; s < n; ++s) {
      const Element sw = sys.mult_gen(w, s, Side::Left);
      const Element wd = sys.mult_gen(w, sys.delta(s), Side::Right);
      const bool up = sys.length(sw) > sys.length(w);
      Element target;
      ActionCase c;
      if (sw == wd) {
        target = sw;
        c = up ? ActionCase::CommutingUp : ActionCase::CommutingDown;
      } else {
        target = sys.mult_gen(sw, sys.delta(s), Side::Right);
        c = up ? ActionCase::Up : ActionCase::Down;
      }
      cases_[i][static_cast<std::size_t>(s)] = c;
      partner_[i][static_cast<std::size_t>(s)] = index(target);
    }
  }
}

std::size_t InvolutionModule::index(Element w) const {
  if (w.id >= index_.size() || index_[w.id] < 0) {
    throw std::out_of_range(sys_->format(w) + " is not a twisted involution");
  }
  return static_cast<std::size_t>(index_[w.id]);
}

MVector InvolutionModule::ts_action(int s, const MVector& m) const {
  static const LaurentPoly u = LaurentPoly::u(1);
  static const LaurentPoly u2 = LaurentPoly::u(2);
  static const LaurentPoly one = LaurentPoly::one();
  MVector out;
  for (const auto& [i, f] : m) {
    const std::size_t j = partner(s, i);
    switch (action_case(s, i)) {
      case ActionCase::CommutingUp:
        add_term(out, i, f * u);
        add_term(out, j, f * (u + one));
        break;
      case ActionCase::CommutingDown:
        add_term(out, i, f * (u2 - u - one));
        add_term(out, j, f * (u2 - u));
        break;
      case ActionCase::Up:
        add_term(out, j, f);
        break;
      case ActionCase::Down:
        add_term(out, i, f * (u2 - one));
        add_term(out, j, f * u2);
        break;
    }
  }
  return out;
}

MVector InvolutionModule::ts_plus_one(int s, const MVector& m) const { return ts_action(s, m) + m; }

MVector InvolutionModule::word_action(const Word& word, const MVector& m) const {
  MVector out = m;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = ts_action(*it, out);
  return out;
}

MVector InvolutionModule::tw_action(Element x, const MVector& m) const { return word_action(sys_->word(x), m); }

MVector InvolutionModule::act(const HeckeVec& h, const MVector& m) const {
  MVector out;
  for (std::uint32_t y = 0; y < h.size(); ++y) {
    if (h[y].is_zero()) continue;
    add_scaled(out, tw_action(Element{y}, m), h[y]);
  }
  return out;
}

std::vector<std::vector<Rational>> InvolutionModule::case_matrix(int s, const Rational& q) const {
  std::vector<std::vector<Rational>> a(dim(), std::vector<Rational>(dim(), Rational(0)));
  for (std::size_t i = 0; i < dim(); ++i) {
    const std::size_t j = partner(s, i);
    switch (action_case(s, i)) {
      case ActionCase::CommutingUp:
        a[i][i] += q;
        a[j][i] += q + 1;
        break;
      case ActionCase::CommutingDown:
        a[i][i] += q * q - q - 1;
        a[j][i] += q * q - q;
        break;
      case ActionCase::Up:
        a[j][i] += 1;
        break;
      case ActionCase::Down:
        a[i][i] += q * q - 1;
        a[j][i] += q * q;
        break;
    }
  }
  return a;
}

BarTable::BarTable(const InvolutionModule& mod, int jobs) : mod_(&mod), table_(mod.dim()) {
  const std::size_t n = mod.dim();
  if (n == 0) return;
  table_[0] = mod.basis(0);
  std::size_t begin = 1;
  while (begin < n) {
    std::size_t end = begin;
    while (end < n && mod.length(end) == mod.length(begin)) ++end;
    parallel_for(end - begin, jobs, [&](std::size_t k) {
      const std::size_t w = begin + k;
      const int s = mod.system().first_descent(mod.involution(w), Side::Left);
      MVector col = bar_basis_via(w, s);
      check_column(w, col);
      table_[w] = std::move(col);
    });
    begin = end;
  }
}

MVector BarTable::bar_basis_via(std::size_t w, int s) const {
  const InvolutionModule& mod = *mod_;
  if (w == 0) return mod.basis(0);
  const ActionCase c = mod.action_case(s, w);
  if (c != ActionCase::CommutingDown && c != ActionCase::Down) {
    throw std::invalid_argument("bar_basis_via: generator is not a left descent");
  }
  const std::size_t x = mod.partner(s, w);
  const MVector& bx = table_[x];
  MVector lifted = scaled(mod.ts_plus_one(s, bx), LaurentPoly::u(-2));
  if (c == ActionCase::CommutingDown) {
    const LaurentPoly divisor = LaurentPoly::one() + LaurentPoly::u(-1);
    for (auto& [i, f] : lifted) f = exact_div(f, divisor);
  }
  return lifted - bx;
}

void BarTable::check_column(std::size_t w, const MVector& col) const {
  const InvolutionModule& mod = *mod_;
  const CoxeterSystem& sys = mod.system();
  const Element ew = mod.involution(w);
  for (const auto& [y, f] : col) {
    if (!f.is_even_support()) {
      throw InvariantViolation("r_{" + sys.format(mod.involution(y)) + "," + sys.format(ew) +
                               "} has odd support: " + f.to_string());
    }
    if (!sys.bruhat_leq(mod.involution(y), ew)) {
      throw InvariantViolation("bar(a_" + sys.format(ew) + ") has support outside {y <= w}");
    }
  }
  auto it = col.find(w);
  if (it == col.end() || it->second != LaurentPoly::u(-mod.length(w))) {
    throw InvariantViolation("r_{w,w} != u^-l(w) for w = " + sys.format(ew));
  }
}

MVector BarTable::bar(const MVector& m) const {
  MVector out;
  for (const auto& [i, f] : m) add_scaled(out, table_[i], f.bar());
  return out;
}

LaurentPoly BarTable::r(std::size_t y, std::size_t w) const {
  auto it = table_[w].find(y);
  return it == table_[w].end() ? LaurentPoly{} : it->second;
}

}  // namespace sigmakl
