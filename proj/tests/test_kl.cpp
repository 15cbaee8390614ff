#include "oracles.hpp"
#include "sigmakl/kl.hpp"

#include <doctest.h>

using namespace sigmakl;

TEST_SUITE("kl-classic") {

TEST_CASE("matches Hecke bar-fixing") {
  for (std::string label : {"A1", "A2", "A3", "B2", "G2", "B3"}) {
    auto sys = CoxeterSystem::from_label(label);
    const KLTable kl(sys);
    const auto ref = oracle::kl_by_barfix(sys);
    for (Element w : sys.enumerate_all())
      for (Element y : sys.enumerate_all()) {
        auto it = ref.find({y, w});
        const LaurentPoly expected = it == ref.end() ? LaurentPoly{} : it->second;
        CHECK_MESSAGE(kl.kl_poly(y, w) == expected, label, " y=", sys.format(y), " w=", sys.format(w));
      }
  }
}

TEST_CASE("values") {
  auto a2 = CoxeterSystem::from_label("A2");
  const KLTable kl(a2);
  const Element sts = a2.from_word(Word{0, 1, 0});
  CHECK(kl.kl_poly(a2.identity(), sts) == LaurentPoly::one());
  CHECK(kl.mu(a2.identity(), sts) == 0);
  CHECK(kl.mu(a2.generator(0), a2.from_word(Word{0, 1})) == 1);
  CHECK(kl.kl_poly(a2.generator(0), a2.generator(1)).is_zero());
  CHECK(kl.mu(a2.generator(0), a2.generator(1)) == 0);

  auto a3 = CoxeterSystem::from_label("A3");
  const KLTable k3(a3);
  // the first non-trivial polynomial in S_4
  CHECK(k3.kl_poly(a3.generator(1), a3.from_word(Word{1, 0, 2, 1})) == LaurentPoly::one() + LaurentPoly::u(1));
}

TEST_CASE("table invariants") {
  for (std::string label : {"A1", "A2", "A3", "B2", "G2", "A4", "D4"}) {
    auto sys = CoxeterSystem::from_label(label);
    const KLTable kl(sys, 3);
    for (Element w : sys.enumerate_all()) {
      CHECK(kl.kl_poly(w, w) == LaurentPoly::one());
      for (Element y : sys.enumerate_all()) {
        const LaurentPoly& p = kl.kl_poly(y, w);
        if (!sys.bruhat_leq(y, w)) {
          CHECK(p.is_zero());
          continue;
        }
        CHECK(p.has_nonnegative_coeffs());
        CHECK(p.is_even_support());
        if (y != w) CHECK(p.max_exp() <= sys.length(w) - sys.length(y) - 1);
        if (sys.length(w) - sys.length(y) <= 2) CHECK(p == LaurentPoly::one());
      }
    }
  }
}

TEST_CASE("parallel build is deterministic") {
  auto sys = CoxeterSystem::from_label("B3");
  const KLTable a(sys, 1), b(sys, 8);
  for (Element w : sys.enumerate_all())
    for (Element y : sys.enumerate_all()) CHECK(a.kl_poly(y, w) == b.kl_poly(y, w));
}

TEST_CASE("c-basis products") {
  auto a2 = CoxeterSystem::from_label("A2");
  const KLTable kl(a2);
  const Element s = a2.generator(0), sts = a2.from_word(Word{0, 1, 0});
  const LaurentPoly vv = LaurentPoly::v(1) + LaurentPoly::v(-1);
  for (Element w : a2.enumerate_all()) {
    auto p = kl.c_basis_product(a2.identity(), w);
    CHECK(p == std::map<Element, LaurentPoly>{{w, LaurentPoly::one()}});
  }
  CHECK(kl.c_basis_product(s, s) == std::map<Element, LaurentPoly>{{s, vv}});
  CHECK(kl.c_basis_product(s, sts) == std::map<Element, LaurentPoly>{{sts, vv}});

  // the mu formula agrees with raw products
  for (std::string label : {"A3", "B2", "G2"}) {
    auto sys = CoxeterSystem::from_label(label);
    const KLTable k(sys);
    for (Element w : sys.enumerate_all())
      for (int t = 0; t < sys.rank(); ++t) {
        CHECK(k.cs_product(t, w, Side::Left) == k.c_basis_product(sys.generator(t), w));
        CHECK(k.cs_product(t, w, Side::Right) == k.c_basis_product(w, sys.generator(t)));
      }
  }
}

TEST_CASE("triple products have nonnegative coefficients") {
  for (std::string label : {"A2", "B2", "A3"}) {
    auto sys = CoxeterSystem::from_label(label);
    const KLTable kl(sys);
    for (Element z : sys.enumerate_all())
      for (Element w : sys.twisted_involutions())
        for (const auto& [x, h] : kl.c_basis_triple(z, w)) CHECK(h.has_nonnegative_coeffs());
  }
}

TEST_CASE("H' normalization") {
  auto a1 = CoxeterSystem::from_label("A1");
  const KLTable kl(a1);
  const HeckeVec c = kl.c_prime(a1.generator(0));
  // c_s = u^-1 (T_s + 1) with u = v^2
  CHECK(c[a1.generator(0).id] == LaurentPoly::v(-2));
  CHECK(c[a1.identity().id] == LaurentPoly::v(-2));
}

}
