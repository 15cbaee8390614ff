#include "oracles.hpp"
#include "sigmakl/specialize.hpp"

#include <doctest.h>

using namespace sigmakl;

namespace {

struct Fixture {
  explicit Fixture(const std::string& label, std::optional<std::vector<int>> delta = std::nullopt)
      : sys(CoxeterSystem::from_label(label, {.delta = delta})), mod(sys), m1(mod) {}
  CoxeterSystem sys;
  InvolutionModule mod;
  WModuleM1 m1;
};

// Trace of x on M at u = 1, by acting on every basis vector with the reference action.
std::int64_t reference_trace(const CoxeterSystem& sys, Element x) {
  std::int64_t tr = 0;
  for (Element w : sys.enumerate_all()) {
    if (!oracle::is_inv(sys, w)) continue;
    oracle::Vec m{{w, LaurentPoly::one()}};
    const Word& word = sys.word(x);
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = oracle::module_ts(sys, m, *it);
    auto f = m.find(w);
    if (f != m.end()) tr += static_cast<std::int64_t>(f->second.specialize(1));
  }
  return tr;
}

const std::vector<std::pair<std::string, std::optional<std::vector<int>>>> kSystems{
    {"A2", {}}, {"A3", {}}, {"B2", {}}, {"B3", {}}, {"G2", {}},
    {"A2", std::vector<int>{1, 0}}, {"A3", std::vector<int>{2, 1, 0}}};

}  // namespace

TEST_SUITE("specialize") {

TEST_CASE("A1 generator matrix") {
  Fixture f("A1");
  CHECK(f.m1.generator_matrix(0) == IntMatrix{{1, 0}, {2, -1}});
  CHECK(f.m1.character_m1(f.sys.identity()) == 2);
  CHECK(f.m1.character_m1(f.sys.generator(0)) == 0);
}

TEST_CASE("A2 characters") {
  Fixture f("A2");
  const auto rows = f.m1.class_function_table();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].chi_m1 == 4);
  CHECK(rows[1].chi_m1 == 0);
  CHECK(rows[2].chi_m1 == 1);
  CHECK(rows[0].class_size + rows[1].class_size + rows[2].class_size == 6);
  for (const auto& r : rows) {
    CHECK(r.chi_gr == r.chi_m1);
    CHECK(r.chi_induced == r.chi_m1);
  }
}

TEST_CASE("generators are involutions satisfying the braid relations") {
  for (const auto& [label, delta] : kSystems) {
    Fixture f(label, delta);
    const std::size_t n = f.m1.dim();
    auto mul = [n](const IntMatrix& a, const IntMatrix& b) {
      IntMatrix c(n, std::vector<std::int64_t>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          if (a[i][k] != 0)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
      return c;
    };
    IntMatrix id(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    for (int s = 0; s < f.sys.rank(); ++s) {
      CHECK(mul(f.m1.generator_matrix(s), f.m1.generator_matrix(s)) == id);
      for (int t = s + 1; t < f.sys.rank(); ++t) {
        IntMatrix x = id, y = id;
        for (int i = 0; i < f.sys.m(s, t); ++i) {
          x = mul(x, f.m1.generator_matrix(i % 2 ? t : s));
          y = mul(y, f.m1.generator_matrix(i % 2 ? s : t));
        }
        CHECK(x == y);
      }
    }
  }
}

TEST_CASE("characters match the reference trace and the induced formula") {
  for (const auto& [label, delta] : kSystems) {
    INFO(label);
    Fixture f(label, delta);
    for (Element x : f.sys.enumerate_all()) {
      CHECK(f.m1.character_m1(x) == reference_trace(f.sys, x));
      CHECK(f.m1.character_gr_m1(x) == f.m1.character_m1(x));
      CHECK(f.m1.induced_character_sum(x) == f.m1.character_m1(x));
    }
  }
}

TEST_CASE("twisted conjugation") {
  Fixture f("A3", std::vector<int>{2, 1, 0});
  for (Element x : f.sys.enumerate_all())
    for (std::size_t w = 0; w < f.mod.dim(); ++w) {
      const Element expect =
          f.sys.multiply(f.sys.multiply(x, f.mod.involution(w)), f.sys.inverse(f.sys.apply_delta(x)));
      CHECK(f.mod.involution(f.m1.twisted_conjugate(x, w)) == expect);
      CHECK(std::abs(f.m1.epsilon(x, w)) == 1);
    }
}

TEST_CASE("h grading") {
  Fixture f("A2");
  const HGradingReport r = f.m1.h_grading_check();
  CHECK(r.h == std::vector<int>{0, 1, 1, 1});
  CHECK(r.lemma_ok);
  CHECK(r.filtration_ok);
  for (const auto& [label, delta] : kSystems) {
    Fixture g(label, delta);
    const HGradingReport rep = g.m1.h_grading_check();
    CHECK(rep.lemma_instances > 0);
    CHECK(rep.lemma_ok);
    CHECK(rep.filtration_ok);
  }
}

TEST_CASE("h grading needs a crystallographic group") {
  const auto sys = CoxeterSystem::from_label("I2(5)", {.experimental = true});
  InvolutionModule mod(sys);
  CHECK_THROWS_AS(WModuleM1(mod).h_grading_check(), NotCrystallographic);
}

TEST_CASE("model check in type A") {
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(0) == 1);
  const std::vector<std::pair<std::size_t, int>> expected{{2, 2}, {4, 3}, {10, 5}, {26, 7}};
  for (int n = 2; n <= 5; ++n) {
    const ModelCheck mc = model_check_typeA(n);
    CHECK(mc.dim == expected[n - 2].first);
    CHECK(mc.inner_product == expected[n - 2].second);
    CHECK(mc.partitions == static_cast<std::uint64_t>(expected[n - 2].second));
  }
}

TEST_CASE("conjugacy classes partition the group") {
  const auto sys = CoxeterSystem::from_label("B3");
  const auto classes = conjugacy_classes(sys);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  CHECK(total == 48);
  CHECK(classes.size() == 10);
}

}
