#pragma once

// Brute-force reference computations used to cross-check the library. They
// only rely on group multiplication and lengths from CoxeterSystem and never
// on the library's recursions or tables.

#include "sigmakl/coxeter.hpp"
#include "sigmakl/laurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using sigmakl::CoxeterSystem;
using sigmakl::Element;
using sigmakl::LaurentPoly;
using sigmakl::Side;
using sigmakl::Word;

using Vec = std::map<Element, LaurentPoly>;

inline void add(Vec& m, Element k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto& slot = m[k];
  slot += c;
  if (slot.is_zero()) m.erase(k);
}

inline Vec scale(const Vec& m, const LaurentPoly& c) {
  Vec out;
  for (const auto& [k, f] : m) add(out, k, f * c);
  return out;
}

inline Vec plus(Vec a, const Vec& b) {
  for (const auto& [k, f] : b) add(a, k, f);
  return a;
}

// ---- permutations: S_n with s_i = (i, i+1) ----

using Perm = std::vector<int>;

inline Perm perm_of(const Word& w, int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  // w = s_{i1} ... s_{ik} acting on positions: compose right to left
  for (auto it = w.rbegin(); it != w.rend(); ++it) std::swap(p[*it], p[*it + 1]);
  return p;
}

inline int inversions(const Perm& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv;
}

// Tableau criterion: y <= w iff for all i, k: #{j <= i : y(j) >= k} <= #{j <= i : w(j) >= k}.
inline bool perm_bruhat_leq(const Perm& y, const Perm& w) {
  const int n = static_cast<int>(y.size());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int cy = 0, cw = 0;
      for (int j = 0; j <= i; ++j) {
        cy += y[j] >= k;
        cw += w[j] >= k;
      }
      if (cy > cw) return false;
    }
  return true;
}

inline int two_cycles(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += p[i] > static_cast<int>(i);
  return c;
}

// ---- Bruhat order by subwords of a reduced word ----

inline bool subword_leq(const CoxeterSystem& sys, Element y, Element w) {
  const Word& word = sys.word(w);
  const std::size_t k = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Element x = sys.identity();
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) x = sys.mult_gen(x, word[i], Side::Right);
    if (x == y) return true;
  }
  return false;
}

// ---- Hecke algebra with T_s^2 = (v^2 - 1) T_s + v^2, T-basis as a sparse map ----

inline Vec hecke_times_gen(const CoxeterSystem& sys, const Vec& h, int s) {
  const LaurentPoly q = LaurentPoly::v(2);
  Vec out;
  for (const auto& [w, c] : h) {
    const Element ws = sys.mult_gen(w, s, Side::Right);
    if (sys.length(ws) > sys.length(w)) {
      add(out, ws, c);
    } else {
      add(out, w, c * (q - LaurentPoly::one()));
      add(out, ws, c * q);
    }
  }
  return out;
}

inline Vec hecke_times_inv_gen(const CoxeterSystem& sys, const Vec& h, int s) {
  // T_s^{-1} = v^-2 T_s + (v^-2 - 1)
  return plus(scale(hecke_times_gen(sys, h, s), LaurentPoly::v(-2)),
              scale(h, LaurentPoly::v(-2) - LaurentPoly::one()));
}

inline Vec hecke_mul(const CoxeterSystem& sys, const Vec& a, const Vec& b) {
  Vec out;
  for (const auto& [w, c] : b) {
    Vec t = a;
    for (int s : sys.word(w)) t = hecke_times_gen(sys, t, s);
    out = plus(out, scale(t, c));
  }
  return out;
}

// bar(T_x) = T_{x^-1}^{-1} = T_{s1}^{-1} ... T_{sk}^{-1} for x = s1 ... sk
inline Vec hecke_bar_basis(const CoxeterSystem& sys, Element x) {
  Vec h{{sys.identity(), LaurentPoly::one()}};
  for (int s : sys.word(x)) h = hecke_times_inv_gen(sys, h, s);
  return h;
}

// P_{y,w} in v (even support), by solving bar(C_w) = C_w in the basis H_x = v^{-l(x)} T_x.
inline std::map<std::pair<Element, Element>, LaurentPoly> kl_by_barfix(const CoxeterSystem& sys) {
  const auto& all = sys.enumerate_all();
  // rho[x][y]: coefficient of H_y in bar(H_x)
  std::map<Element, Vec> rho;
  for (Element x : all) {
    Vec b = scale(hecke_bar_basis(sys, x), LaurentPoly::v(sys.length(x)));
    Vec h;
    for (const auto& [y, c] : b) add(h, y, c.shifted(sys.length(y)));
    rho[x] = h;
  }
  std::map<std::pair<Element, Element>, LaurentPoly> p;
  for (Element w : all) {
    std::map<Element, LaurentPoly> c{{w, LaurentPoly::one()}};
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
      const Element y = *it;
      if (y == w || sys.length(y) >= sys.length(w)) continue;
      LaurentPoly q;
      for (const auto& [x, cx] : c) {
        auto r = rho[x].find(y);
        if (r != rho[x].end()) q += cx.bar() * r->second;
      }
      const LaurentPoly neg = q.negative_part();
      if (!neg.is_zero()) c[y] = neg;
    }
    for (const auto& [y, cy] : c) p[{y, w}] = cy.shifted(sys.length(w) - sys.length(y));
  }
  return p;
}

// cdot_w = v^{-l(w)} sum_y P_{y,w}(v^2) T_y
inline Vec c_dot(const CoxeterSystem& sys, const std::map<std::pair<Element, Element>, LaurentPoly>& p, Element w) {
  Vec h;
  for (const auto& [k, f] : p)
    if (k.second == w) add(h, k.first, f.shifted(-sys.length(w)));
  return h;
}

inline Vec to_c_dot(const CoxeterSystem& sys, const std::map<std::pair<Element, Element>, LaurentPoly>& p, Vec h) {
  Vec out;
  while (!h.empty()) {
    // peel the longest term
    auto top = std::max_element(h.begin(), h.end(), [&](const auto& a, const auto& b) {
      return sys.length(a.first) < sys.length(b.first);
    });
    const Element x = top->first;
    const LaurentPoly d = top->second.shifted(sys.length(x));
    add(out, x, d);
    h = plus(h, scale(c_dot(sys, p, x), -d));
  }
  return out;
}

// Two-sided cells from raw products cdot_s cdot_w and cdot_w cdot_s, closed by
// boolean transitive closure.
inline std::vector<std::set<Element>> cells_by_products(const CoxeterSystem& sys) {
  const auto p = kl_by_barfix(sys);
  const auto& all = sys.enumerate_all();
  const std::size_t n = all.size();
  std::map<Element, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[all[i]] = i;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (int s = 0; s < sys.rank(); ++s) {
      const Vec cs = c_dot(sys, p, sys.generator(s));
      const Vec cw = c_dot(sys, p, all[i]);
      for (const Vec& prod : {hecke_mul(sys, cs, cw), hecke_mul(sys, cw, cs)})
        for (const auto& [z, c] : to_c_dot(sys, p, prod)) reach[i][pos[z]] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::vector<std::set<Element>> cells;
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::set<Element> cell;
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j] && reach[j][i]) {
        cell.insert(all[j]);
        done[j] = true;
      }
    cells.push_back(cell);
  }
  return cells;
}

// ---- the involution module, keyed by group element ----

inline bool is_inv(const CoxeterSystem& sys, Element w) { return sys.apply_delta(w) == sys.inverse(w); }

inline Vec module_ts(const CoxeterSystem& sys, const Vec& m, int s) {
  const LaurentPoly u = LaurentPoly::v(2), u2 = LaurentPoly::v(4), one = LaurentPoly::one();
  Vec out;
  for (const auto& [w, f] : m) {
    const Element sw = sys.mult_gen(w, s, Side::Left);
    const Element wd = sys.mult_gen(w, sys.delta(s), Side::Right);
    const bool up = sys.length(sw) > sys.length(w);
    if (sw == wd) {
      if (up) {
        add(out, w, f * u);
        add(out, sw, f * (u + one));
      } else {
        add(out, w, f * (u2 - u - one));
        add(out, sw, f * (u2 - u));
      }
    } else {
      const Element t = sys.mult_gen(sw, sys.delta(s), Side::Right);
      if (up) {
        add(out, t, f);
      } else {
        add(out, w, f * (u2 - one));
        add(out, t, f * u2);
      }
    }
  }
  return out;
}

inline Vec module_ts_inv(const CoxeterSystem& sys, const Vec& m, int s) {
  // T_s^{-1} = u^-2 T_s + (u^-2 - 1)
  return plus(scale(module_ts(sys, m, s), LaurentPoly::v(-4)), scale(m, LaurentPoly::v(-4) - LaurentPoly::one()));
}

inline Vec bar_scalars(const Vec& m) {
  Vec out;
  for (const auto& [k, f] : m) add(out, k, f.bar());
  return out;
}

// bar(a_w) for every involution w. For a word s_k ... s_1 climbing from 1 to w,
// T_{s_k} ... T_{s_1} a_1 = c a_w + lower, and bar of it is T_{s_k}^-1 ... T_{s_1}^-1 a_1.
inline std::map<Element, Vec> bar_by_climbing(const CoxeterSystem& sys) {
  std::vector<Element> invs;
  for (Element w : sys.enumerate_all())
    if (is_inv(sys, w)) invs.push_back(w);
  std::map<Element, Word> climb{{sys.identity(), {}}};
  for (Element w : invs) {
    for (int s = 0; s < sys.rank(); ++s) {
      const Element sw = sys.mult_gen(w, s, Side::Left);
      if (sys.length(sw) < sys.length(w)) continue;
      const Element wd = sys.mult_gen(w, sys.delta(s), Side::Right);
      const Element t = sw == wd ? sw : sys.mult_gen(sw, sys.delta(s), Side::Right);
      if (!climb.count(t)) {
        Word word = climb.at(w);
        word.push_back(s);
        climb[t] = word;
      }
    }
  }
  std::map<Element, Vec> bar;
  for (Element w : invs) {
    const Word& word = climb.at(w);
    Vec up{{sys.identity(), LaurentPoly::one()}}, down = up;
    for (int s : word) {
      up = module_ts(sys, up, s);
      down = module_ts_inv(sys, down, s);
    }
    // up = c a_w + sum_{y<w} c_y a_y  =>  bar(a_w) = (down - sum bar(c_y) bar(a_y)) / bar(c)
    Vec rhs = down;
    LaurentPoly lead;
    for (const auto& [y, c] : up) {
      if (y == w) {
        lead = c;
        continue;
      }
      rhs = plus(rhs, scale(bar.at(y), -c.bar()));
    }
    Vec col;
    for (const auto& [y, f] : rhs) add(col, y, sigmakl::exact_div(f, lead.bar()));
    bar[w] = col;
  }
  return bar;
}

// pi_{y,w} by bar-fixing against a given bar table (a'-basis, a'_y = v^-l(y) a_y).
inline std::map<std::pair<Element, Element>, LaurentPoly> pi_by_barfix(const CoxeterSystem& sys,
                                                                         const std::map<Element, Vec>& bar) {
  std::vector<Element> invs;
  for (const auto& [w, col] : bar) invs.push_back(w);
  std::sort(invs.begin(), invs.end(), [&](Element a, Element b) { return sys.length(a) < sys.length(b); });
  std::map<std::pair<Element, Element>, LaurentPoly> pi;
  for (Element w : invs) {
    std::map<Element, LaurentPoly> c{{w, LaurentPoly::one()}};
    for (auto it = invs.rbegin(); it != invs.rend(); ++it) {
      const Element y = *it;
      if (sys.length(y) >= sys.length(w)) continue;
      LaurentPoly q;
      for (const auto& [x, cx] : c) {
        auto r = bar.at(x).find(y);
        if (r != bar.at(x).end()) q += cx.bar() * r->second.shifted(sys.length(x) + sys.length(y));
      }
      if (!q.negative_part().is_zero()) c[y] = q.negative_part();
    }
    for (const auto& [y, f] : c) pi[{y, w}] = f;
  }
  return pi;
}

}  // namespace oracle
