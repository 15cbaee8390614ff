#include "sigmakl/verify.hpp"

#include "sigmakl/canonical.hpp"
#include "sigmakl/cells.hpp"
#include "sigmakl/kl.hpp"
#include "sigmakl/specialize.hpp"

#include <memory>
#include <random>

namespace sigmakl {

namespace {

struct Check {
  SuiteResult r;
  void fail(const std::string& msg) {
    if (r.passed) r.note = msg;
    r.passed = false;
  }
  void expect(bool ok, const std::string& msg) {
    ++r.count;
    if (!ok) fail(msg);
  }
  void skip(const std::string& why) {
    r.skipped = true;
    r.note = why;
  }
};

template <class Body>
SuiteResult suite(const std::string& name, bool advisory, Body&& body) {
  Check c;
  c.r.name = name;
  c.r.advisory = advisory;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  return c.r;
}

template <class T>
struct Lazy {
  std::unique_ptr<T> value;
  std::string error;
  template <class F>
  void build(F&& f) {
    try {
      value = f();
    } catch (const std::exception& e) {
      error = e.what();
    }
  }
  const T& get() const {
    if (!value) throw std::runtime_error("unavailable: " + error);
    return *value;
  }
};

Word alternating(int s, int t, int m) {
  Word w;
  for (int i = 0; i < m; ++i) w.push_back(i % 2 == 0 ? s : t);
  return w;
}

MVector random_vector(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2), terms(1, 3);
  MVector m;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    LaurentPoly f;
    for (int j = 0; j < 2; ++j) f += LaurentPoly::monomial(coef(rng), 2 * ex(rng));
    add_term(m, idx(rng), f);
  }
  return m;
}

std::string pair_name(const InvolutionModule& mod, std::size_t y, std::size_t w) {
  const CoxeterSystem& sys = mod.system();
  return "(y, w) = (" + sys.format(mod.involution(y)) + ", " + sys.format(mod.involution(w)) + ")";
}

}  // namespace

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results) {
    if (!r.passed && !r.advisory) return false;
  }
  return true;
}

std::vector<SuiteResult> run_verification(const CoxeterSystem& sys, const VerifyOptions& opt) {
  std::vector<SuiteResult> out;
  const auto& all = sys.enumerate_all();
  const bool small_group = all.size() <= opt.group_cap;

  out.push_back(suite("coxeter-relations", false, [&](Check& c) {
    for (Element w : all) {
      for (int s = 0; s < sys.rank(); ++s) {
        const Element ws = sys.mult_gen(w, s, Side::Right);
        c.expect(sys.mult_gen(ws, s, Side::Right) == w && std::abs(sys.length(ws) - sys.length(w)) == 1,
                 "s^2 != 1 or length step != 1 at " + sys.format(w));
        for (int t = s + 1; t < sys.rank(); ++t) {
          const int m = sys.m(s, t);
          Element a = w, b = w;
          for (int s2 : alternating(s, t, m)) a = sys.mult_gen(a, s2, Side::Right);
          for (int t2 : alternating(t, s, m)) b = sys.mult_gen(b, t2, Side::Right);
          c.expect(a == b, "braid relation fails at " + sys.format(w));
        }
      }
    }
  }));

  out.push_back(suite("bruhat-order", false, [&](Check& c) {
    if (!small_group) return c.skip("group too large");
    for (Element y : all) {
      for (Element w : all) {
        if (!sys.bruhat_leq(y, w)) continue;
        c.expect(sys.length(y) < sys.length(w) || y == w,
                 "bruhat order not refined by length at " + sys.format(y) + " <= " + sys.format(w));
      }
    }
  }));

  Lazy<InvolutionModule> mod;
  mod.build([&] { return std::make_unique<InvolutionModule>(sys); });
  Lazy<BarTable> bar;
  bar.build([&] { return std::make_unique<BarTable>(mod.get(), opt.jobs); });
  Lazy<SigmaKL> rec, fix;
  rec.build([&] { return std::make_unique<SigmaKL>(mod.get(), CanonicalMethod::Recursive, opt.jobs); });
  fix.build([&] { return std::make_unique<SigmaKL>(mod.get(), CanonicalMethod::BarFix, opt.jobs, &bar.get()); });
  Lazy<KLTable> kl;
  if (small_group) kl.build([&] { return std::make_unique<KLTable>(sys, opt.jobs); });

  out.push_back(suite("involution-closure", false, [&](Check& c) {
    const auto& m = mod.get();
    for (std::size_t w = 0; w < m.dim(); ++w) {
      for (int s = 0; s < sys.rank(); ++s) {
        const Element x = sys.mult_gen(sys.mult_gen(m.involution(w), s, Side::Left), sys.delta(s), Side::Right);
        c.expect(m.contains(x), "s w delta(s) not an involution for w = " + sys.format(m.involution(w)));
      }
    }
  }));

  out.push_back(suite("quadratic-relation", false, [&](Check& c) {
    const auto& m = mod.get();
    const LaurentPoly u2 = LaurentPoly::u(2);
    for (std::size_t w = 0; w < m.dim(); ++w) {
      for (int s = 0; s < sys.rank(); ++s) {
        const MVector a = m.basis(w);
        const MVector t = m.ts_action(s, a) - scaled(a, u2);
        c.expect(m.ts_plus_one(s, t).empty(),
                 "(T_s+1)(T_s-u^2) a_w != 0 for s = " + std::to_string(s) + ", w = " + sys.format(m.involution(w)));
      }
    }
  }));

  out.push_back(suite("braid-relations", false, [&](Check& c) {
    const auto& m = mod.get();
    for (std::size_t w = 0; w < m.dim(); ++w) {
      for (int s = 0; s < sys.rank(); ++s) {
        for (int t = s + 1; t < sys.rank(); ++t) {
          const int mm = sys.m(s, t);
          c.expect(m.word_action(alternating(s, t, mm), m.basis(w)) == m.word_action(alternating(t, s, mm), m.basis(w)),
                   "braid relation for (" + std::to_string(s) + "," + std::to_string(t) + ") fails on a_" +
                       sys.format(m.involution(w)));
        }
      }
    }
  }));

  out.push_back(suite("specialization-coherence", false, [&](Check& c) {
    const auto& m = mod.get();
    for (const Rational& q : {Rational(1), Rational(2), Rational(-1, 2)}) {
      for (int s = 0; s < sys.rank(); ++s) {
        const auto cm = m.case_matrix(s, q);
        for (std::size_t i = 0; i < m.dim(); ++i) {
          const MVector col = m.ts_action(s, m.basis(i));
          bool ok = true;
          for (std::size_t r = 0; r < m.dim(); ++r) {
            auto it = col.find(r);
            const Rational val = it == col.end() ? Rational(0) : specialize_u(it->second, q);
            ok = ok && val == cm[r][i];
          }
          c.expect(ok, "specialized action differs from case matrix at u = " + q.str() + ", s = " +
                           std::to_string(s) + ", a_" + sys.format(m.involution(i)));
        }
      }
    }
  }));

  out.push_back(suite("bar-involution", false, [&](Check& c) {
    const auto& m = mod.get();
    const auto& b = bar.get();
    for (std::size_t w = 0; w < m.dim(); ++w) {
      c.expect(b.bar(b.bar_basis(w)) == m.basis(w), "bar(bar(a_w)) != a_w for w = " + sys.format(m.involution(w)));
      c.expect(b.r(w, w) == LaurentPoly::u(-m.length(w)), "r_{w,w} != u^-l(w) for w = " + sys.format(m.involution(w)));
    }
    std::mt19937_64 rng(opt.seed);
    const LaurentPoly u_2 = LaurentPoly::u(-2);
    for (int k = 0; k < opt.random_samples; ++k) {
      const MVector v = random_vector(rng, m.dim());
      c.expect(b.bar(b.bar(v)) == v, "bar is not involutive on a random vector");
      for (int s = 0; s < sys.rank(); ++s) {
        c.expect(b.bar(m.ts_plus_one(s, v)) == scaled(m.ts_plus_one(s, b.bar(v)), u_2),
                 "bar((T_s+1)m) != u^-2 (T_s+1) bar(m) for s = " + std::to_string(s));
      }
    }
  }));

  out.push_back(suite("bar-descent-independence", false, [&](Check& c) {
    const auto& m = mod.get();
    const auto& b = bar.get();
    for (std::size_t w = 1; w < m.dim(); ++w) {
      const DescentSet d = sys.descents(m.involution(w), Side::Left);
      for (int s = 0; s < sys.rank(); ++s) {
        if (!((d >> s) & 1U)) continue;
        c.expect(b.bar_basis_via(w, s) == b.bar_basis(w),
                 "bar(a_w) depends on the descent: w = " + sys.format(m.involution(w)) + ", s = " + std::to_string(s));
      }
    }
  }));

  out.push_back(suite("canonical-oracle-equivalence", false, [&](Check& c) {
    const auto& m = mod.get();
    const auto& a = rec.get();
    const auto& f = fix.get();
    for (std::size_t w = 0; w < m.dim(); ++w) {
      for (std::size_t y = 0; y <= w; ++y) {
        c.expect(a.pi(y, w) == f.pi(y, w), "recursion and bar-fixing differ at " + pair_name(m, y, w));
      }
    }
  }));

  out.push_back(suite("canonical-basis", false, [&](Check& c) {
    const auto& m = mod.get();
    const auto& a = rec.get();
    const auto& b = bar.get();
    for (std::size_t w = 0; w < m.dim(); ++w) {
      const MVector aw = primed_to_plain(m, a.canonical(w));
      c.expect(b.bar(aw) == aw, "A_w not bar-invariant for w = " + sys.format(m.involution(w)));
      c.expect(a.pi(w, w) == LaurentPoly::one(), "P^sigma_{w,w} != 1");
      for (std::size_t y = 0; y < w; ++y) {
        const LaurentPoly p = a.sigma_kl(y, w);
        if (p.is_zero()) continue;
        const int bound = m.length(w) - m.length(y) - 1;
        c.expect(p.is_even_support() && p.min_exp() >= 0 && p.max_exp() <= bound,
                 "degree bound fails at " + pair_name(m, y, w));
        const bool parity_ok = (m.length(w) - m.length(y)) % 2 == 0 ? a.mu_prime(y, w) == 0 : a.mu_double_prime(y, w) == 0;
        c.expect(parity_ok, "mu'/mu'' parity fails at " + pair_name(m, y, w));
      }
    }
  }));

  out.push_back(suite("classic-kl", false, [&](Check& c) {
    if (!small_group) return c.skip("group too large");
    const auto& k = kl.get();
    for (Element w : all) {
      for (Element y : all) {
        const LaurentPoly& p = k.kl_poly(y, w);
        const bool leq = sys.bruhat_leq(y, w);
        c.expect(leq != p.is_zero(), "support of P_{y,w} is not {y <= w}");
        if (leq && sys.length(w) - sys.length(y) <= 2) c.expect(p == LaurentPoly::one(), "P_{y,w} != 1 in short interval");
      }
    }
  }));

  out.push_back(suite("sigma-parity", false, [&](Check& c) {
    if (!small_group) return c.skip("group too large");
    const auto& m = mod.get();
    const auto& a = rec.get();
    const auto& k = kl.get();
    for (std::size_t w = 0; w < m.dim(); ++w) {
      for (std::size_t y = 0; y <= w; ++y) {
        if (!sys.bruhat_leq(m.involution(y), m.involution(w))) continue;
        const LaurentPoly& p = k.kl_poly(m.involution(y), m.involution(w));
        const LaurentPoly ps = a.sigma_kl(y, w);
        const LaurentPoly plus = p + ps, minus = p - ps;
        bool ok = plus.has_nonnegative_coeffs() && minus.has_nonnegative_coeffs();
        for (const auto& x : plus.coeffs()) ok = ok && x % 2 == 0;
        c.expect(ok, "(P +- P^sigma)/2 not in N[u] at " + pair_name(m, y, w) + ": P = " + p.to_string() +
                         ", P^sigma = " + ps.to_string());
      }
    }
  }));

  out.push_back(suite("descent-stability", sys.twisted(), [&](Check& c) {
    const auto& m = mod.get();
    const auto& a = rec.get();
    for (std::size_t w = 0; w < m.dim(); ++w) {
      for (int s = 0; s < sys.rank(); ++s) {
        const ActionCase wc = m.action_case(s, w);
        if (wc != ActionCase::CommutingDown && wc != ActionCase::Down) continue;
        for (std::size_t y = 0; y <= w; ++y) {
          if (!sys.bruhat_leq(m.involution(y), m.involution(w))) continue;
          const std::size_t other = m.partner(s, y);
          c.expect(a.sigma_kl(y, w) == a.sigma_kl(other, w),
                   "descent stability fails at " + pair_name(m, y, w) + ", s = " + std::to_string(s));
        }
      }
    }
  }));

  out.push_back(suite("cs-action-theorem", false, [&](Check& c) {
    const auto& m = mod.get();
    const auto& a = rec.get();
    for (std::size_t w = 0; w < m.dim(); ++w) {
      for (int s = 0; s < sys.rank(); ++s) {
        try {
          a.cs_action_on_A(s, w);
          c.expect(true, "");
        } catch (const TheoremMismatch& e) {
          c.expect(false, e.what());
        }
      }
    }
  }));

  Lazy<WModuleM1> m1;
  if (small_group) m1.build([&] { return std::make_unique<WModuleM1>(mod.get()); });

  out.push_back(suite("u1-module", false, [&](Check& c) {
    if (!small_group) return c.skip("group too large");
    const auto& mm = m1.get();
    const std::size_t n = mm.dim();
    auto mul = [&](const IntMatrix& x, const IntMatrix& y) {
      IntMatrix z(n, std::vector<std::int64_t>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          if (x[i][k] != 0)
            for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
      return z;
    };
    IntMatrix id(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    for (int s = 0; s < sys.rank(); ++s) {
      const IntMatrix& g = mm.generator_matrix(s);
      c.expect(mul(g, g) == id, "generator " + std::to_string(s) + " does not square to 1 on M_1");
      for (int t = s + 1; t < sys.rank(); ++t) {
        IntMatrix a = id, b = id;
        for (int x : alternating(s, t, sys.m(s, t))) a = mul(a, mm.generator_matrix(x));
        for (int x : alternating(t, s, sys.m(s, t))) b = mul(b, mm.generator_matrix(x));
        c.expect(a == b, "braid relation fails on M_1 for (" + std::to_string(s) + "," + std::to_string(t) + ")");
      }
    }
  }));

  out.push_back(suite("induced-character", false, [&](Check& c) {
    if (!small_group) return c.skip("group too large");
    for (const auto& row : m1.get().class_function_table()) {
      c.expect(row.chi_m1 == row.chi_gr && row.chi_m1 == row.chi_induced,
               "characters differ on the class of " + format_word(row.rep_word) + ": M_1 " + row.chi_m1.str() +
                   ", graded " + row.chi_gr.str() + ", induced " + row.chi_induced.str());
    }
  }));

  out.push_back(suite("h-grading", false, [&](Check& c) {
    if (!small_group) return c.skip("group too large");
    if (!sys.crystallographic()) return c.skip("h(w) is only defined here for crystallographic systems");
    const HGradingReport rep = m1.get().h_grading_check();
    c.r.count = rep.lemma_instances + mod.get().dim() * static_cast<std::size_t>(sys.rank());
    if (!rep.lemma_ok || !rep.filtration_ok) c.fail(rep.counterexample);
  }));

  const bool cells_on = opt.cells == Toggle::On ||
                        (opt.cells == Toggle::Auto && sys.rank() <= 4 && all.size() <= opt.cell_cap);
  out.push_back(suite("cells", false, [&](Check& c) {
    if (!cells_on) return c.skip("cells feature disabled for this system");
    const auto& k = kl.get();
    const auto cp = compute_cells(k, opt.cell_cap);
    const auto counts = involutions_per_cell(cp, mod.get());
    std::size_t total = 0;
    for (auto n : counts) total += n;
    c.expect(total == mod.get().dim(), "involution counts per cell do not sum to |I|");
    c.expect(cp.cells.front().size() == 1 && cp.cells.front().front() == sys.identity(), "{1} is not a cell");
    if (sys.twisted() || (opt.cells == Toggle::Auto && sys.rank() > 3)) return;
    const auto& a = rec.get();
    for (Element z : all) {
      for (std::size_t w = 0; w < mod.get().dim(); ++w) {
        const HFReport rep = check_hf_relation(k, a, z, w);
        c.r.count += rep.pairs_checked;
        if (!rep.ok) c.fail(rep.counterexample);
      }
    }
  }));

  return out;
}

}  // namespace sigmakl
