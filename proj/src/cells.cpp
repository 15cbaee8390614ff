#include "sigmakl/cells.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sigmakl {

CellPartition compute_cells(const KLTable& kl, std::size_t cap) {
  const CoxeterSystem& sys = kl.system();
  const auto& all = sys.enumerate_all();
  if (all.size() > cap) {
    throw std::length_error("cells: " + std::to_string(all.size()) + " elements exceed the cap of " +
                            std::to_string(cap));
  }
  const std::size_t n = all.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[all[i].id] = i;

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int s = 0; s < sys.rank(); ++s) {
      for (Side side : {Side::Left, Side::Right}) {
        for (const auto& [z, c] : kl.cs_product(s, all[i], side)) adj[i].push_back(pos[z.id]);
      }
    }
    std::sort(adj[i].begin(), adj[i].end());
    adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
  }

  // Tarjan
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  int counter = 0, ncomp = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (std::size_t w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }

  // Renumber components by their first element.
  std::vector<int> order(static_cast<std::size_t>(ncomp), -1);
  int next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto& o = order[static_cast<std::size_t>(comp[v])];
    if (o < 0) o = next++;
  }
  CellPartition out;
  out.cells.resize(static_cast<std::size_t>(ncomp));
  for (std::size_t v = 0; v < n; ++v) out.cells[static_cast<std::size_t>(order[static_cast<std::size_t>(comp[v])])].push_back(all[v]);

  const std::size_t k = out.cells.size();
  out.below.assign(k, std::vector<bool>(k, false));
  for (std::size_t c = 0; c < k; ++c) out.below[c][c] = true;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : adj[v]) {
      const auto a = static_cast<std::size_t>(order[static_cast<std::size_t>(comp[w])]);
      const auto b = static_cast<std::size_t>(order[static_cast<std::size_t>(comp[v])]);
      out.below[a][b] = true;
    }
  }
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!out.below[i][m]) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (out.below[m][j]) out.below[i][j] = true;
      }
    }
  }
  return out;
}

std::vector<std::size_t> involutions_per_cell(const CellPartition& cells, const InvolutionModule& mod) {
  std::vector<std::size_t> counts;
  for (const auto& cell : cells.cells) {
    counts.push_back(static_cast<std::size_t>(
        std::count_if(cell.begin(), cell.end(), [&](Element x) { return mod.contains(x); })));
  }
  return counts;
}

HFReport check_hf_relation(const KLTable& kl, const SigmaKL& sigma, Element z, std::size_t w) {
  const InvolutionModule& mod = sigma.module();
  const CoxeterSystem& sys = mod.system();
  if (sys.twisted()) throw std::invalid_argument("check_hf_relation: untwisted systems only");

  const MVector a_w = primed_to_plain(mod, sigma.canonical(w));
  const MVector cz_aw = mod.act(kl.c_prime(z), a_w);
  const MVector f = sigma.to_A_basis(plain_to_primed(mod, cz_aw));
  const auto h = kl.c_basis_triple(z, mod.involution(w));

  HFReport rep;
  for (std::size_t wp = 0; wp < mod.dim(); ++wp) {
    auto fit = f.find(wp);
    auto hit = h.find(mod.involution(wp));
    const LaurentPoly fp = fit == f.end() ? LaurentPoly{} : fit->second;
    const LaurentPoly hp = hit == h.end() ? LaurentPoly{} : hit->second;
    const int lo = std::min(fp.min_exp(), hp.min_exp());
    const int hi = std::max(fp.max_exp(), hp.max_exp());
    for (int e = lo; e <= hi; ++e) {
      const Integer b = hp.coeff(e);
      const Integer bp = fp.coeff(e);
      ++rep.pairs_checked;
      if (abs(bp) > b || (b - bp) % 2 != 0) {
        rep.ok = false;
        if (rep.counterexample.empty()) {
          rep.counterexample = "z = " + sys.format(z) + ", w = " + sys.format(mod.involution(w)) +
                               ", w' = " + sys.format(mod.involution(wp)) + ", n = " + std::to_string(e) +
                               ": b_n = " + b.str() + ", b'_n = " + bp.str();
        }
      }
    }
  }
  return rep;
}

}  // namespace sigmakl
