#include "oracles.hpp"
#include "sigmakl/cells.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sigmakl;

namespace {

std::set<std::set<Element>> as_sets(const CellPartition& p) {
  std::set<std::set<Element>> out;
  for (const auto& c : p.cells) out.emplace(c.begin(), c.end());
  return out;
}

}  // namespace

TEST_SUITE("cells") {

TEST_CASE("cells match the product-closure oracle") {
  for (const std::string label : {"A2", "B2", "A3", "G2"}) {
    INFO(label);
    const auto sys = CoxeterSystem::from_label(label);
    KLTable kl(sys, 2);
    const auto ref = oracle::cells_by_products(sys);
    CHECK(as_sets(compute_cells(kl)) == std::set<std::set<Element>>(ref.begin(), ref.end()));
  }
}

TEST_CASE("A2 cells") {
  const auto sys = CoxeterSystem::from_label("A2");
  KLTable kl(sys);
  InvolutionModule mod(sys);
  const CellPartition p = compute_cells(kl);
  REQUIRE(p.cells.size() == 3);
  CHECK(p.cells[0] == std::vector<Element>{sys.identity()});
  CHECK(p.cells[1].size() == 4);
  CHECK(p.cells[2] == std::vector<Element>{sys.from_word(Word{0, 1, 0})});
  CHECK(involutions_per_cell(p, mod) == std::vector<std::size_t>{1, 2, 1});
  // w0 lies under everything, the identity over everything
  CHECK(p.below[2][0]);
  CHECK(p.below[1][0]);
  CHECK_FALSE(p.below[0][2]);
}

TEST_CASE("cell counts") {
  const std::vector<std::pair<std::string, std::size_t>> expected{{"A3", 5}, {"B3", 6}, {"A4", 7}, {"D4", 11}};
  for (const auto& [label, count] : expected) {
    const auto sys = CoxeterSystem::from_label(label);
    KLTable kl(sys, 4);
    const CellPartition p = compute_cells(kl);
    CHECK(p.cells.size() == count);
    InvolutionModule mod(sys);
    for (std::size_t n : involutions_per_cell(p, mod)) CHECK(n > 0);
  }
}

TEST_CASE("preorder is a partial order on cells") {
  const auto sys = CoxeterSystem::from_label("B3");
  KLTable kl(sys);
  const CellPartition p = compute_cells(kl);
  const std::size_t n = p.cells.size();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(p.below[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) CHECK_FALSE((p.below[i][j] && p.below[j][i]));
      for (std::size_t k = 0; k < n; ++k)
        if (p.below[i][j] && p.below[j][k]) CHECK(p.below[i][k]);
    }
  }
}

TEST_CASE("cap") {
  const auto sys = CoxeterSystem::from_label("B3");
  KLTable kl(sys);
  CHECK_THROWS_AS(compute_cells(kl, 10), std::length_error);
}

TEST_CASE("h and f coefficients") {
  for (const std::string label : {"A2", "B2", "A3"}) {
    INFO(label);
    const auto sys = CoxeterSystem::from_label(label);
    KLTable kl(sys);
    InvolutionModule mod(sys);
    SigmaKL sigma(mod, CanonicalMethod::Recursive);
    std::size_t pairs = 0;
    for (Element z : sys.enumerate_all())
      for (std::size_t w = 0; w < mod.dim(); ++w) {
        const HFReport r = check_hf_relation(kl, sigma, z, w);
        CHECK_MESSAGE(r.ok, r.counterexample);
        pairs += r.pairs_checked;
      }
    CHECK(pairs > 0);
  }
}

TEST_CASE("h and f relation rejects twisted systems") {
  const auto sys = CoxeterSystem::from_label("A2", {.delta = std::vector<int>{1, 0}});
  KLTable kl(sys);
  InvolutionModule mod(sys);
  SigmaKL sigma(mod, CanonicalMethod::Recursive);
  CHECK_THROWS_AS(check_hf_relation(kl, sigma, sys.identity(), 0), std::invalid_argument);
}

}
