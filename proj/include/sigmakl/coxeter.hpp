#pragma once

/*
  Finite Coxeter groups.

  Elements are represented by the permutation they induce on the (finite) root
  system of the geometric representation, and interned: every distinct group
  element receives a stable integer handle, the identity being handle 0. Once
  the whole group has been enumerated the handles are exactly 0..|W|-1, which
  lets the table-building modules use dense arrays indexed by handle.

  The normal form of an element is its ShortLex-minimal reduced word, obtained
  by repeatedly stripping the smallest left descent.
*/

#include "sigmakl/laurent.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigmakl {

class CoxeterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotCrystallographic : public CoxeterError {
 public:
  using CoxeterError::CoxeterError;
};

enum class Side { Left, Right };

struct Element {
  std::uint32_t id = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

using Word = std::vector<int>;
using CoxeterMatrix = std::vector<std::vector<int>>;
using DescentSet = std::uint32_t;
using RationalMatrix = std::vector<std::vector<Rational>>;

struct ReflectionRep {
  std::vector<RationalMatrix> matrices;  // indexed by generator
};

struct SystemOptions {
  // Involutive permutation of the generators preserving the Coxeter matrix.
  std::optional<std::vector<int>> delta;
  // Allows non-crystallographic matrices (I2(m) with m = 5 or m > 6, raw matrices).
  bool experimental = false;
  // Raw matrices only: the caller asserts the group is finite.
  bool declared_finite = false;
  std::size_t element_cap = 1'000'000;
};

/// Coxeter matrix of a type label such as "A3", "B2", "E6", "I2(5)" or a product "A1xA2".
CoxeterMatrix coxeter_matrix_for_label(const std::string& label);

/// Parses "delta=2,1,0" or "2,1,0".
std::vector<int> parse_delta(const std::string& text);

/// "[0,1,0]"
std::string format_word(const Word& w);

class CoxeterSystem {
 public:
  /// Builds from a type label (classification lookup guarantees finiteness).
  static CoxeterSystem from_label(const std::string& label, SystemOptions options = {});
  /// Builds from an explicit matrix; requires options.declared_finite.
  static CoxeterSystem from_matrix(CoxeterMatrix matrix, SystemOptions options,
                                   std::string label = "custom");

  CoxeterSystem(CoxeterSystem&&) noexcept;
  CoxeterSystem& operator=(CoxeterSystem&&) noexcept;
  ~CoxeterSystem();

  int rank() const;
  int m(int s, int t) const;
  const CoxeterMatrix& coxeter_matrix() const;
  const std::string& type_label() const;
  bool crystallographic() const;
  bool experimental() const;
  /// Generator permutation (identity when untwisted).
  const std::vector<int>& delta() const;
  int delta(int s) const { return delta()[static_cast<std::size_t>(s)]; }
  bool twisted() const;
  /// Cartan matrix of the integral realization; throws NotCrystallographic otherwise.
  const std::vector<std::vector<int>>& cartan_matrix() const;

  Element identity() const { return Element{0}; }
  Element generator(int s) const;
  Element mult_gen(Element w, int s, Side side) const;
  Element multiply(Element a, Element b) const;
  Element from_word(std::span<const int> word) const;
  Element inverse(Element w) const;
  /// Image under the diagram automorphism.
  Element apply_delta(Element w) const;

  int length(Element w) const;
  const Word& word(Element w) const;
  std::string format(Element w) const { return format_word(word(w)); }
  DescentSet descents(Element w, Side side) const;
  bool is_descent(Element w, int s, Side side) const { return (descents(w, side) >> s) & 1U; }
  /// Smallest descent on the given side, or -1 for the identity.
  int first_descent(Element w, Side side) const;

  bool bruhat_leq(Element y, Element w) const;
  bool bruhat_less(Element y, Element w) const { return y != w && bruhat_leq(y, w); }

  /// All elements of length <= max_length, sorted by (length, ShortLex).
  std::vector<Element> enumerate_up_to_length(int max_length) const;
  /// The whole group, sorted by (length, ShortLex). Throws CoxeterError past the element cap.
  const std::vector<Element>& enumerate_all() const;
  std::size_t order() const { return enumerate_all().size(); }
  bool fully_enumerated() const;
  std::size_t interned_count() const;

  /// Elements with delta(w) = w^-1, sorted by (length, ShortLex).
  std::vector<Element> twisted_involutions() const;
  bool is_twisted_involution(Element w) const;

  /// Integral geometric representation on the simple-root coordinates.
  ReflectionRep reflection_rep() const;
  /// Matrix of w (times the diagram automorphism when twisted) in the reflection representation.
  RationalMatrix twisted_action_matrix(Element w) const;
  /// dim ker(M + Id) for the matrix above: the dimension of the (-w)-fixed space.
  int h_value(Element w) const;

  struct Impl;  // implementation detail

 private:
  explicit CoxeterSystem(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

/// Rank of a rational matrix.
int matrix_rank(RationalMatrix a);
RationalMatrix matrix_product(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix identity_matrix(int n);

}  // namespace sigmakl
