#pragma once

// The W-module M_1 obtained at u = 1: generator matrices, characters, the
// graded module attached to the h-filtration, and its induced-character
// decomposition.

#include "sigmakl/involution_module.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sigmakl {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct ConjugacyClass {
  Element rep;  // first member in (length, ShortLex) order
  std::vector<Element> members;
};

/// Conjugacy classes of W by orbit closure, sorted by representative.
std::vector<ConjugacyClass> conjugacy_classes(const CoxeterSystem& sys);

struct ClassValue {
  Word rep_word;
  std::size_t class_size = 0;
  Rational chi_m1 = 0;
  Rational chi_gr = 0;
  Rational chi_induced = 0;
};

struct ModelCheck {
  std::size_t dim = 0;
  Rational inner_product = 0;
  std::uint64_t partitions = 0;
};

struct HGradingReport {
  std::vector<int> h;  // per involution index
  std::size_t lemma_instances = 0;
  bool lemma_ok = true;
  bool filtration_ok = true;
  std::string counterexample;
};

std::uint64_t partition_count(int n);

class WModuleM1 {
 public:
  explicit WModuleM1(const InvolutionModule& mod);

  const InvolutionModule& module() const { return *mod_; }
  std::size_t dim() const { return mod_->dim(); }
  /// Column j holds s(a_j).
  const IntMatrix& generator_matrix(int s) const { return gens_[static_cast<std::size_t>(s)]; }
  /// Matrix of x, the product of generator matrices along a reduced word.
  IntMatrix element_matrix(Element x) const;

  /// Index of x w delta(x)^-1.
  std::size_t twisted_conjugate(Element x, std::size_t w) const { return conj_[x.id][w]; }
  /// The sign with which x acts on the graded basis vector of w.
  int epsilon(Element x, std::size_t w) const { return eps_[x.id][w]; }

  std::int64_t character_m1(Element x) const;
  std::int64_t character_gr_m1(Element x) const;
  /// sum over involution orbits of Ind_{Z(w)}^W(epsilon_w), evaluated at g.
  Rational induced_character_sum(Element g) const;

  /// One row per conjugacy class.
  std::vector<ClassValue> class_function_table() const;

  HGradingReport h_grading_check() const;

 private:
  const InvolutionModule* mod_;
  std::vector<IntMatrix> gens_;
  std::vector<std::vector<std::uint32_t>> conj_;  // conj_[x][w]
  std::vector<std::vector<std::int8_t>> eps_;     // eps_[x][w]
  std::vector<std::size_t> orbit_reps_;
};

/// dim M_1 and <chi, chi> for S_n; partitions holds p(n).
ModelCheck model_check_typeA(int n);

}  // namespace sigmakl
