#pragma once

// The module M with basis a_w indexed by the (twisted) involutions of W, the
// action of the generators T_s of H' (quadratic relation (T_s+1)(T_s-u^2) = 0)
// and the bar involution.
//
// Involutions are addressed by their index in the (length, ShortLex) sorted
// list, so an MVector is a sparse map index -> coefficient.

#include "sigmakl/coxeter.hpp"
#include "sigmakl/hecke.hpp"
#include "sigmakl/laurent.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sigmakl {

using MVector = std::map<std::size_t, LaurentPoly>;

void add_term(MVector& m, std::size_t i, const LaurentPoly& c);
void add_scaled(MVector& m, const MVector& o, const LaurentPoly& c);
MVector scaled(const MVector& m, const LaurentPoly& c);
MVector operator+(MVector a, const MVector& b);
MVector operator-(MVector a, const MVector& b);

enum class ActionCase {
  CommutingUp,    // sw = w delta(s) > w
  CommutingDown,  // sw = w delta(s) < w
  Up,             // sw != w delta(s), sw > w
  Down,           // sw != w delta(s), sw < w
};

class InvolutionModule {
 public:
  explicit InvolutionModule(const CoxeterSystem& sys);

  const CoxeterSystem& system() const { return *sys_; }
  std::size_t dim() const { return invs_.size(); }
  const std::vector<Element>& involutions() const { return invs_; }
  Element involution(std::size_t i) const { return invs_[i]; }
  bool contains(Element w) const { return index_[w.id] >= 0; }
  /// Throws std::out_of_range for a non-involution.
  std::size_t index(Element w) const;
  int length(std::size_t i) const { return sys_->length(invs_[i]); }

  ActionCase action_case(int s, std::size_t i) const { return cases_[i][static_cast<std::size_t>(s)]; }
  /// Index of sw in the commuting cases, of s w delta(s) otherwise.
  std::size_t partner(int s, std::size_t i) const { return partner_[i][static_cast<std::size_t>(s)]; }

  MVector basis(std::size_t i) const { return MVector{{i, LaurentPoly::one()}}; }
  MVector ts_action(int s, const MVector& m) const;
  /// (T_s + 1) m
  MVector ts_plus_one(int s, const MVector& m) const;
  /// T_x m along the normal form of x.
  MVector tw_action(Element x, const MVector& m) const;
  /// T_x m along an arbitrary reduced word.
  MVector word_action(const Word& word, const MVector& m) const;
  /// Action of an element of H' given in the T-basis (parameter u^2 = v^4).
  MVector act(const HeckeVec& h, const MVector& m) const;

  /// Matrix of T_s obtained by running the case formulas with a scalar u = q.
  /// Column j holds T_s a_j.
  std::vector<std::vector<Rational>> case_matrix(int s, const Rational& q) const;

 private:
  const CoxeterSystem* sys_;
  std::vector<Element> invs_;
  std::vector<std::int32_t> index_;
  std::vector<std::vector<ActionCase>> cases_;
  std::vector<std::vector<std::size_t>> partner_;
};

/// The expansions bar(a_w) = sum_y r_{y,w} a_y for every involution w.
class BarTable {
 public:
  /// Built by length, each column from one step of the descent recursion.
  BarTable(const InvolutionModule& mod, int jobs = 1);

  const InvolutionModule& module() const { return *mod_; }
  const MVector& bar_basis(std::size_t w) const { return table_[w]; }
  /// Recomputes bar(a_w) with the left descent s (sw < w) from the stored shorter columns.
  MVector bar_basis_via(std::size_t w, int s) const;
  /// Semilinear extension.
  MVector bar(const MVector& m) const;
  /// r_{y,w}
  LaurentPoly r(std::size_t y, std::size_t w) const;

 private:
  void check_column(std::size_t w, const MVector& col) const;

  const InvolutionModule* mod_;
  std::vector<MVector> table_;
};

}  // namespace sigmakl
