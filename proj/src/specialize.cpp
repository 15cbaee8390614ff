#include "sigmakl/specialize.hpp"

#include <algorithm>
#include <deque>

namespace sigmakl {

std::vector<ConjugacyClass> conjugacy_classes(const CoxeterSystem& sys) {
  const auto& all = sys.enumerate_all();
  std::vector<char> seen(all.size(), 0);
  std::vector<ConjugacyClass> out;
  for (Element start : all) {
    if (seen[start.id]) continue;
    ConjugacyClass cls{start, {}};
    std::deque<Element> queue{start};
    seen[start.id] = 1;
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      cls.members.push_back(x);
      for (int s = 0; s < sys.rank(); ++s) {
        const Element y = sys.mult_gen(sys.mult_gen(x, s, Side::Left), s, Side::Right);
        if (!seen[y.id]) {
          seen[y.id] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::uint64_t partition_count(int n) {
  std::vector<std::uint64_t> p(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int m = k; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
  }
  return p[static_cast<std::size_t>(std::max(n, 0))];
}

WModuleM1::WModuleM1(const InvolutionModule& mod) : mod_(&mod) {
  const CoxeterSystem& sys = mod.system();
  const std::size_t n = mod.dim();
  for (int s = 0; s < sys.rank(); ++s) {
    IntMatrix g(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = mod.partner(s, i);
      switch (mod.action_case(s, i)) {
        case ActionCase::CommutingUp:
          g[i][i] += 1;
          g[j][i] += 2;
          break;
        case ActionCase::CommutingDown:
          g[i][i] -= 1;
          break;
        case ActionCase::Up:
        case ActionCase::Down:
          g[j][i] += 1;
          break;
      }
      // Must agree with the generic action at u = 1.
      const MVector generic = mod.ts_action(s, mod.basis(i));
      for (std::size_t r = 0; r < n; ++r) {
        auto it = generic.find(r);
        const Rational val = it == generic.end() ? Rational(0) : specialize_u(it->second, 1);
        if (val != g[r][i]) {
          throw InvariantViolation("u = 1 matrix of generator " + std::to_string(s) +
                                   " disagrees with the specialized generic action at a_" +
                                   sys.format(mod.involution(i)));
        }
      }
    }
    gens_.push_back(std::move(g));
  }

  const auto& all = sys.enumerate_all();
  conj_.assign(all.size(), {});
  eps_.assign(all.size(), {});
  for (Element x : all) {
    auto& c = conj_[x.id];
    auto& e = eps_[x.id];
    c.resize(n);
    e.resize(n);
    if (x == sys.identity()) {
      for (std::size_t w = 0; w < n; ++w) {
        c[w] = static_cast<std::uint32_t>(w);
        e[w] = 1;
      }
      continue;
    }
    // x = s x', and eps_{s x', w} = eps_{s, x'.w} eps_{x', w}.
    const int s = sys.first_descent(x, Side::Left);
    const Element xp = sys.mult_gen(x, s, Side::Left);
    for (std::size_t w = 0; w < n; ++w) {
      const std::size_t mid = conj_[xp.id][w];
      const ActionCase ac = mod.action_case(s, mid);
      const bool commuting = ac == ActionCase::CommutingUp || ac == ActionCase::CommutingDown;
      c[w] = static_cast<std::uint32_t>(commuting ? mid : mod.partner(s, mid));
      e[w] = static_cast<std::int8_t>((ac == ActionCase::CommutingDown ? -1 : 1) * eps_[xp.id][w]);
    }
  }

  std::vector<char> covered(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    if (covered[w]) continue;
    orbit_reps_.push_back(w);
    for (Element x : all) covered[conj_[x.id][w]] = 1;
  }
}

IntMatrix WModuleM1::element_matrix(Element x) const {
  const std::size_t n = dim();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  const Word& word = mod_->system().word(x);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const IntMatrix& g = gens_[static_cast<std::size_t>(*it)];
    IntMatrix next(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < n; ++r) {
        if (g[r][i] == 0) continue;
        for (std::size_t col = 0; col < n; ++col) next[r][col] += g[r][i] * m[i][col];
      }
    }
    m = std::move(next);
  }
  return m;
}

std::int64_t WModuleM1::character_m1(Element x) const {
  const IntMatrix m = element_matrix(x);
  std::int64_t tr = 0;
  for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
  return tr;
}

std::int64_t WModuleM1::character_gr_m1(Element x) const {
  std::int64_t tr = 0;
  for (std::size_t w = 0; w < dim(); ++w) {
    if (conj_[x.id][w] == w) tr += eps_[x.id][w];
  }
  return tr;
}

Rational WModuleM1::induced_character_sum(Element g) const {
  const CoxeterSystem& sys = mod_->system();
  const auto& all = sys.enumerate_all();
  Rational total = 0;
  for (std::size_t w : orbit_reps_) {
    std::int64_t centralizer = 0;
    std::int64_t sum = 0;
    for (Element x : all) {
      if (conj_[x.id][w] == w) ++centralizer;
      const Element h = sys.multiply(sys.multiply(sys.inverse(x), g), x);
      if (conj_[h.id][w] == w) sum += eps_[h.id][w];
    }
    total += Rational(sum, centralizer);
  }
  return total;
}

std::vector<ClassValue> WModuleM1::class_function_table() const {
  std::vector<ClassValue> rows;
  for (const auto& cls : conjugacy_classes(mod_->system())) {
    ClassValue row;
    row.rep_word = mod_->system().word(cls.rep);
    row.class_size = cls.members.size();
    row.chi_m1 = character_m1(cls.rep);
    row.chi_gr = character_gr_m1(cls.rep);
    row.chi_induced = induced_character_sum(cls.rep);
    rows.push_back(std::move(row));
  }
  return rows;
}

HGradingReport WModuleM1::h_grading_check() const {
  const InvolutionModule& mod = *mod_;
  const CoxeterSystem& sys = mod.system();
  HGradingReport rep;
  for (Element w : mod.involutions()) rep.h.push_back(sys.h_value(w));
  auto note = [&](const std::string& msg) {
    if (rep.counterexample.empty()) rep.counterexample = msg;
  };
  for (std::size_t w = 0; w < dim(); ++w) {
    for (int s = 0; s < sys.rank(); ++s) {
      const ActionCase ac = mod.action_case(s, w);
      const std::size_t j = mod.partner(s, w);
      const std::string where = "s = " + std::to_string(s) + ", w = " + sys.format(mod.involution(w));
      if (ac == ActionCase::CommutingUp) {
        ++rep.lemma_instances;
        if (!(rep.h[j] > rep.h[w])) {
          rep.lemma_ok = false;
          note("h(sw) <= h(w) for " + where);
        }
      }
      const bool commuting = ac == ActionCase::CommutingUp || ac == ActionCase::CommutingDown;
      const std::size_t target = commuting ? w : j;
      const std::int64_t sign = ac == ActionCase::CommutingDown ? -1 : 1;
      const IntMatrix& g = gens_[static_cast<std::size_t>(s)];
      for (std::size_t r = 0; r < dim(); ++r) {
        if (g[r][w] == 0) continue;
        const bool ok = rep.h[r] > rep.h[w] || (rep.h[r] == rep.h[w] && r == target && g[r][w] == sign);
        if (!ok) {
          rep.filtration_ok = false;
          note("filtration/graded action fails for " + where + " at a_" + sys.format(mod.involution(r)));
        }
      }
      if (g[target][w] != sign) {
        rep.filtration_ok = false;
        note("graded coefficient missing for " + where);
      }
    }
  }
  return rep;
}

ModelCheck model_check_typeA(int n) {
  if (n < 2) throw std::invalid_argument("model_check_typeA: n must be at least 2");
  const CoxeterSystem sys = CoxeterSystem::from_label("A" + std::to_string(n - 1));
  const InvolutionModule mod(sys);
  const WModuleM1 m1(mod);
  ModelCheck out;
  out.dim = mod.dim();
  Rational sum = 0;
  for (const auto& cls : conjugacy_classes(sys)) {
    const std::int64_t chi = m1.character_m1(cls.rep);
    sum += Rational(chi * chi) * static_cast<std::int64_t>(cls.members.size());
  }
  out.inner_product = sum / static_cast<std::int64_t>(sys.order());
  out.partitions = partition_count(n);
  return out;
}

}  // namespace sigmakl
