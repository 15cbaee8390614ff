#pragma once

// Two-sided cells of a finite Coxeter group and the coefficient relation
// between h_{z,w,w'} (from cdot_z cdot_w cdot_{z^-1}) and f_{z,w,w'} (from
// c_z A_w in the canonical basis of the involution module).

#include "sigmakl/canonical.hpp"
#include "sigmakl/errors.hpp"
#include "sigmakl/kl.hpp"

#include <string>
#include <vector>

namespace sigmakl {

class RelationViolated : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

constexpr std::size_t kDefaultCellCap = 400;

struct CellPartition {
  // Each cell sorted by (length, ShortLex); cells sorted by their first element.
  std::vector<std::vector<Element>> cells;
  // below[i][j]: cell i lies under cell j in the two-sided preorder.
  std::vector<std::vector<bool>> below;
};

/// Strongly connected components of the graph w -> z for z in the support of
/// cdot_s cdot_w or cdot_w cdot_s. Throws std::length_error above `cap` elements.
CellPartition compute_cells(const KLTable& kl, std::size_t cap = kDefaultCellCap);

/// Number of (twisted) involutions in each cell, in cell order.
std::vector<std::size_t> involutions_per_cell(const CellPartition& cells, const InvolutionModule& mod);

struct HFReport {
  std::size_t pairs_checked = 0;  // (w', n) coefficient pairs
  bool ok = true;
  std::string counterexample;
};

/// Checks |b'_n| <= b_n, b'_n = b_n mod 2, and f != 0 => h != 0 for all w' in I.
/// Untwisted systems only.
HFReport check_hf_relation(const KLTable& kl, const SigmaKL& sigma, Element z, std::size_t w);

}  // namespace sigmakl
