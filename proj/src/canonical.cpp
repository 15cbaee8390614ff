#include "sigmakl/canonical.hpp"

#include "sigmakl/parallel.hpp"

namespace sigmakl {

namespace {

const LaurentPoly kVplusVinv = LaurentPoly::v(1) + LaurentPoly::v(-1);
const LaurentPoly kVminusVinv = LaurentPoly::v(1) - LaurentPoly::v(-1);

bool is_down(ActionCase c) { return c == ActionCase::CommutingDown || c == ActionCase::Down; }

}  // namespace

MVector primed_to_plain(const InvolutionModule& mod, const MVector& m) {
  MVector out;
  for (const auto& [y, f] : m) add_term(out, y, f.shifted(-mod.length(y)));
  return out;
}

MVector plain_to_primed(const InvolutionModule& mod, const MVector& m) {
  MVector out;
  for (const auto& [y, f] : m) add_term(out, y, f.shifted(mod.length(y)));
  return out;
}

SigmaKL::SigmaKL(const InvolutionModule& mod, CanonicalMethod method, int jobs, const BarTable* bar)
    : mod_(&mod), method_(method), pi_(mod.dim()), mu1_(mod.dim()) {
  if (method == CanonicalMethod::BarFix && bar == nullptr) {
    throw std::invalid_argument("SigmaKL: bar-fixing construction needs a bar table");
  }
  const std::size_t n = mod.dim();
  std::size_t begin = 0;
  while (begin < n) {
    std::size_t end = begin;
    while (end < n && mod.length(end) == mod.length(begin)) ++end;
    parallel_for(end - begin, jobs, [&](std::size_t k) {
      const std::size_t w = begin + k;
      if (method == CanonicalMethod::BarFix) {
        barfix_column(w, *bar);
      } else {
        recursive_column(w);
      }
      check_column(w);
      for (std::size_t x = 0; x < w; ++x) {
        Integer m = pi_[w][x].coeff(-1);
        if (m != 0) mu1_[w].emplace_back(x, std::move(m));
      }
    });
    begin = end;
  }
}

void SigmaKL::barfix_column(std::size_t w, const BarTable& bar) {
  const InvolutionModule& mod = *mod_;
  auto& col = pi_[w];
  col.assign(mod.dim(), LaurentPoly{});
  col[w] = LaurentPoly::one();
  for (std::size_t y = w; y-- > 0;) {
    LaurentPoly q;
    const int ly = mod.length(y);
    for (std::size_t x = y + 1; x <= w; ++x) {
      if (col[x].is_zero()) continue;
      const LaurentPoly r = bar.r(y, x);
      if (r.is_zero()) continue;
      q.add_product(col[x].bar(), r.shifted(ly + mod.length(x)));
    }
    LaurentPoly neg = q.negative_part();
    if (q.positive_part() != -neg.bar()) {
      const CoxeterSystem& sys = mod.system();
      throw InconsistentBar("bar-fixing for A_" + sys.format(mod.involution(w)) + " at y = " +
                            sys.format(mod.involution(y)) + ": q_y = " + q.to_string() +
                            " is not of the form pi - bar(pi)");
    }
    col[y] = std::move(neg);
  }
}

LaurentPoly SigmaKL::cs_coefficient(int s, std::size_t y, std::size_t w) const {
  const auto& col = pi_[w];
  const std::size_t j = mod_->partner(s, y);
  LaurentPoly out;
  switch (mod_->action_case(s, y)) {
    case ActionCase::CommutingDown:
      out.add_product(col[j], kVplusVinv);
      out.add_product(col[y], LaurentPoly::v(2) - LaurentPoly::one());
      break;
    case ActionCase::CommutingUp:
      out.add_product(col[y], LaurentPoly::one() + LaurentPoly::v(-2));
      out.add_product(col[j], kVminusVinv);
      break;
    case ActionCase::Down:
      out += col[j];
      out.add_scaled(col[y], 1, 2);
      break;
    case ActionCase::Up:
      out.add_scaled(col[y], 1, -2);
      out += col[j];
      break;
  }
  return out;
}

std::vector<std::size_t> SigmaKL::correction_set(int s, std::size_t w) const {
  const CoxeterSystem& sys = mod_->system();
  const Element sw = sys.mult_gen(mod_->involution(w), s, Side::Left);
  std::vector<std::size_t> xs;
  for (std::size_t x = 0; x < mod_->dim(); ++x) {
    if (is_down(mod_->action_case(s, x)) && sys.bruhat_less(mod_->involution(x), sw)) xs.push_back(x);
  }
  return xs;
}

LaurentPoly SigmaKL::ms_known(int s, std::size_t x, std::size_t w) const {
  const int gap = mod_->length(w) - mod_->length(x);
  if (gap % 2 != 0) return kVplusVinv * mu_prime(x, w);
  Integer m = mu_double_prime(x, w);
  for (const auto& [xp, mxw] : mu1_[w]) {
    if (!is_down(mod_->action_case(s, xp))) continue;
    const Integer mxx = mu_prime(x, xp);
    if (mxx != 0) m -= mxx * mxw;
  }
  if (mod_->action_case(s, x) == ActionCase::CommutingDown) m += mu_prime(mod_->partner(s, x), w);
  return LaurentPoly(m);
}

LaurentPoly SigmaKL::ms_constant(int s, std::size_t y, std::size_t w) const {
  LaurentPoly m = ms_known(s, y, w);
  const int gap = mod_->length(w) - mod_->length(y);
  if (gap % 2 == 0 && mod_->action_case(s, w) == ActionCase::CommutingUp) {
    m -= LaurentPoly(mu_prime(y, mod_->partner(s, w)));
  }
  return m;
}

void SigmaKL::recursive_column(std::size_t z) {
  const InvolutionModule& mod = *mod_;
  const CoxeterSystem& sys = mod.system();
  auto& col = pi_[z];
  col.assign(mod.dim(), LaurentPoly{});
  col[z] = LaurentPoly::one();
  if (z == 0) return;

  const int s = sys.first_descent(mod.involution(z), Side::Left);
  const bool commuting = mod.action_case(s, z) == ActionCase::CommutingDown;
  const std::size_t w = mod.partner(s, z);
  const int lw = mod.length(w);

  std::vector<std::pair<std::size_t, LaurentPoly>> known;
  std::vector<std::size_t> open;  // x whose M^s_{x,w} still lacks -mu'(x,z)
  for (std::size_t x : correction_set(s, w)) {
    LaurentPoly m = ms_known(s, x, w);
    if (!m.is_zero()) known.emplace_back(x, std::move(m));
    if (commuting && (lw - mod.length(x)) % 2 == 0) open.push_back(x);
  }

  for (std::size_t y = z; y-- > 0;) {
    LaurentPoly rhs = cs_coefficient(s, y, w);
    for (const auto& [x, m] : known) {
      if (x >= y && !pi_[x][y].is_zero()) rhs.add_product(m, -pi_[x][y]);
    }
    if (!commuting) {
      col[y] = std::move(rhs);
      continue;
    }
    bool self = false;
    for (std::size_t x : open) {
      if (x == y) {
        self = true;
      } else if (x > y && !pi_[x][y].is_zero()) {
        const Integer m = col[x].coeff(-1);
        if (m != 0) rhs.add_scaled(pi_[x][y], m);
      }
    }
    // (v + v^-1) pi - [self] c_1 = rhs with pi = sum_{n>=1} c_n v^-n.
    if (rhs.max_exp() > 0) {
      throw RecurrenceInconsistent("positive powers in the c_n system for A_" + sys.format(mod.involution(z)) +
                                   " at y = " + sys.format(mod.involution(y)));
    }
    const int kmax = rhs.is_zero() ? 0 : -rhs.min_exp();
    std::vector<Integer> c(static_cast<std::size_t>(std::max(kmax, 0) + 2));
    for (int k = kmax; k >= 1; --k) {
      c[static_cast<std::size_t>(k - 1)] = rhs.coeff(-k) - c[static_cast<std::size_t>(k + 1)];
    }
    const Integer r0 = rhs.coeff(0);
    const bool ok = c[0] == 0 && (self ? r0 == 0 : c.size() > 1 && c[1] == r0);
    if (!ok) {
      throw RecurrenceInconsistent("c_n system has no finitely supported solution for A_" +
                                   sys.format(mod.involution(z)) + " at y = " + sys.format(mod.involution(y)));
    }
    // pi = sum c_n v^-n, stored from the lowest exponent up.
    std::vector<Integer> coeffs(c.rbegin(), c.rend() - 1);
    col[y] = LaurentPoly(-static_cast<int>(c.size()) + 1, std::move(coeffs));
  }
}

void SigmaKL::check_column(std::size_t w) const {
  const InvolutionModule& mod = *mod_;
  const CoxeterSystem& sys = mod.system();
  const auto& col = pi_[w];
  auto fail = [&](std::size_t y, const std::string& what) {
    const std::string msg = "A_" + sys.format(mod.involution(w)) + " at y = " + sys.format(mod.involution(y)) +
                            ": " + what + " (pi = " + col[y].to_string() + ")";
    if (method_ == CanonicalMethod::BarFix) throw InconsistentBar(msg);
    throw RecurrenceInconsistent(msg);
  };
  if (col[w] != LaurentPoly::one()) fail(w, "diagonal entry is not 1");
  const int lw = mod.length(w);
  for (std::size_t y = 0; y < col.size(); ++y) {
    if (y == w || col[y].is_zero()) continue;
    if (!sys.bruhat_leq(mod.involution(y), mod.involution(w))) fail(y, "support outside {y <= w}");
    if (col[y].max_exp() > -1) fail(y, "not in v^-1 Z[v^-1]");
    const LaurentPoly p = col[y].shifted(lw - mod.length(y));
    if (!p.is_even_support() || p.min_exp() < 0) fail(y, "P^sigma not in Z[u]");
  }
}

LaurentPoly SigmaKL::sigma_kl(std::size_t y, std::size_t w) const {
  return pi(y, w).shifted(mod_->length(w) - mod_->length(y));
}

LaurentPoly SigmaKL::sigma_kl(Element y, Element w) const {
  if (!mod_->contains(y) || !mod_->contains(w)) return {};
  return sigma_kl(mod_->index(y), mod_->index(w));
}

MVector SigmaKL::canonical(std::size_t w) const {
  MVector out;
  for (std::size_t y = 0; y <= w; ++y) add_term(out, y, pi_[w][y]);
  return out;
}

MVector SigmaKL::to_A_basis(MVector primed) const {
  MVector out;
  while (!primed.empty()) {
    const auto top = std::prev(primed.end());
    const std::size_t y = top->first;
    const LaurentPoly f = top->second;
    out.emplace(y, f);
    for (std::size_t x = 0; x <= y; ++x) {
      if (!pi_[y][x].is_zero()) add_term(primed, x, -(f * pi_[y][x]));
    }
  }
  return out;
}

MVector SigmaKL::cs_theorem_rhs(int s, std::size_t w) const {
  MVector out;
  const ActionCase c = mod_->action_case(s, w);
  if (is_down(c)) {
    add_term(out, w, LaurentPoly::v(2) + LaurentPoly::v(-2));
    return out;
  }
  add_term(out, mod_->partner(s, w), c == ActionCase::CommutingUp ? kVplusVinv : LaurentPoly::one());
  for (std::size_t x : correction_set(s, w)) add_term(out, x, ms_constant(s, x, w));
  return out;
}

MVector SigmaKL::cs_action_on_A(int s, std::size_t w) const {
  MVector primed;
  for (std::size_t y = 0; y < mod_->dim(); ++y) add_term(primed, y, cs_coefficient(s, y, w));
  MVector actual = to_A_basis(std::move(primed));
  const MVector expected = cs_theorem_rhs(s, w);
  const CoxeterSystem& sys = mod_->system();
  if (actual != expected) {
    throw TheoremMismatch("c_s A_w expansion differs from the closed form for s = " + std::to_string(s) +
                          ", w = " + sys.format(mod_->involution(w)));
  }
  for (const auto& [x, m] : expected) {
    if (!m.is_bar_invariant()) {
      throw TheoremMismatch("M^s_{y,w} not bar-invariant at y = " + sys.format(mod_->involution(x)) +
                            ", w = " + sys.format(mod_->involution(w)));
    }
  }
  return actual;
}

}  // namespace sigmakl
