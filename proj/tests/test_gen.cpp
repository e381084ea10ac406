#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gersten/gen.hpp"
#include "helpers.hpp"

using namespace gersten;
using tst::thrown;

TEST_CASE("element generators respect valuation bounds") {
  for (Domain d : {tst::z5(), tst::qt()}) {
    Gen gen(d, 11);
    for (int i = 0; i < 60; ++i) {
      CHECK(d.is_unit(gen.unit()));
      CHECK(!d.is_zero(gen.nonzero()));
      long v = *d.valuation(gen.nonunit());
      CHECK(v >= 1);
      CHECK(v <= gen.limits().max_val);
      CHECK(d.in_domain(gen.element()));
    }
  }
}

TEST_CASE("invertible matrices have unit determinant") {
  Gen gen(tst::z5(), 3);
  for (int n : {0, 1, 2, 4}) {
    RMatrix m = gen.invertible(n);
    CHECK(mat_is_invertible(m));
    if (n > 0) CHECK(gen.domain().is_unit(mat_det(m)));
  }
  CHECK(mat_in_domain(gen.matrix(3, 5)));
}

TEST_CASE("complexes, conjugation, homotopies") {
  for (Domain d : {tst::z5(), tst::qt()}) {
    Gen gen(d, 99);
    for (int i = 0; i < 20; ++i) {
      ChainComplex x = gen.complex();
      auto [y, u] = gen.conjugate(x);
      CHECK(y.ranks() == x.ranks());
      CHECK(is_quasi_iso(u));
      if (!x.is_zero()) {
        ChainMap v = invert_chain_iso(u);
        CHECK(compose(v, u) == ChainMap::identity(x));
      }

      ChainComplex z = gen.complex();
      std::map<int, RMatrix> sigma;
      ChainMap f = gen.null_homotopic(x, z, &sigma);
      // witness actually certifies f ~ 0
      ChainHomotopy::make(f, ChainMap::zero(x, z), sigma);

      ChainHomotopy h = gen.homotopic_pair(x, z);
      CHECK(H_to_homotopy(homotopy_to_H(h)).h == h.h);
    }
  }
}

TEST_CASE("squares carry valid witnesses") {
  Gen gen(tst::z5(), 17);
  for (int i = 0; i < 12; ++i) {
    HSquare sq = gen.square();
    HSquare before = gen.strict_before(sq.f());
    HSquare after = gen.strict_after(sq.g());
    CHECK(before.H().is_zero());
    CHECK(after.H().is_zero());
    CHECK(before.g() == sq.f());
    CHECK(after.f() == sq.g());
    // both orders of pasting around sq stay valid
    compose_squares(after, sq);
    compose_squares(sq, before);
  }
}

TEST_CASE("category generators produce morphisms of the stated class") {
  Gen gen(tst::z5(), 23);
  for (int i = 0; i < 25; ++i) {
    CObject x = gen.object();
    CObject y = gen.object();
    CHECK(x.total() > 0);
    gen.morphism(x, y);
    CMorphism phi = gen.iso(x);
    CHECK(is_isomorphism(phi));
    CHECK(compose(invert(phi), phi) == CMorphism::identity(x));
    CHECK(is_upper_triangular(gen.triangular(x, y, true)));
    CHECK(is_lower_triangular(gen.triangular(x, y, false)));
    CMorphism t = gen.triangular_iso(x, false);
    CHECK(is_lower_triangular(t));
    CHECK(is_isomorphism(t));
  }

  IsoChain chain = gen.iso_chain(3);
  CHECK(chain.length() == 3);
  for (const CMorphism& a : chain.arrows) CHECK(is_isomorphism(a));
}

TEST_CASE("split triples split") {
  Gen gen(tst::z5(), 29);
  for (int i = 0; i < 10; ++i) {
    auto t = gen.split_triple(2, 1);
    CObject a = t.alpha.src(), b = t.alpha.tgt(), c = t.beta.tgt();
    CHECK(compose(t.beta, t.alpha) == CMorphism::zero(a, c));
    CHECK(compose(t.beta, t.gamma) == CMorphism::identity(c));
    CHECK(compose(t.rho, t.alpha) == CMorphism::identity(a));
    CHECK(compose(t.rho, t.gamma) == CMorphism::zero(c, a));
    SplitWitness w = split_exactness(t.alpha, t.beta);
    CHECK(compose(t.beta, w.gamma) == CMorphism::identity(c));
    CHECK(compose(w.rho, t.alpha) == CMorphism::identity(a));
    (void)b;
  }
}

TEST_CASE("sum triples stay triangular and mu-composable") {
  Gen gen(tst::z5(), 31);
  for (bool upper : {true, false}) {
    for (int i = 0; i < 8; ++i) {
      CObject x = gen.object();
      CObject y = gen.object();
      auto t = gen.sum_triple(x, y, upper);
      auto tri = upper ? is_upper_triangular : is_lower_triangular;
      CHECK(tri(t.alpha));
      CHECK(tri(t.beta));
      CHECK(tri(t.gamma));
      CHECK(tri(t.rho));
      auto mu = [&](const CMorphism& m) { return upper ? mu1(m) : mu2(m); };
      CHECK(compose(mu(t.beta), mu(t.alpha)) == mu(compose(t.beta, t.alpha)));
      CHECK(compose(mu(t.beta), mu(t.gamma)) == mu(CMorphism::identity(y)));
      CHECK(compose(mu(t.rho), mu(t.alpha)) == mu(CMorphism::identity(x)));
    }
  }
}

TEST_CASE("planted complexes classify back or get rejected") {
  for (Domain d : {tst::z5(), tst::qt()}) {
    Gen gen(d, 37);
    for (int i = 0; i < 10; ++i) {
      auto p = gen.planted(true);
      Classified cls = classify(p.x);
      CHECK(cls.object.n == p.n);
      CHECK(cls.object.m == p.m);

      auto bad = gen.planted(false);
      CHECK(thrown([&] { classify(bad.x); }) == ErrorCode::NotInC);
    }
  }
}

TEST_CASE("coherent instances pass validation and expose a composite") {
  for (Domain d : {tst::z5(), tst::qt()}) {
    Gen gen(d, 41);
    for (int i = 0; i < 6; ++i) {
      auto inst = gen.coherent();
      validate_hnat(inst.cat, inst.theta);
      check_functor(inst.cat, y_of(inst.cat, inst.theta));
      REQUIRE(inst.composite >= 0);
      CHECK(inst.cat.factorization(inst.composite).size() >= 2);
      CHECK(!inst.theta.theta_arr[inst.composite].is_zero());
      // breaking theta at one composite arrow must break Y functoriality
      HNatData skew = inst.theta;
      skew.theta_arr[inst.composite] = -skew.theta_arr[inst.composite];
      CHECK(thrown([&] { y_of(inst.cat, skew); }) == ErrorCode::NotFunctorial);
    }
  }
}

TEST_CASE("simplicial instances check out") {
  Gen gen(tst::z5(), 43);
  auto inst = gen.simplicial(2);
  SimplicialReport rep = simplicial_levels_check(inst.cat, inst.f, inst.g, inst.thetas, 2);
  CHECK(rep.monotone_maps_checked > 0);
}

TEST_CASE("short exact sequence generators are additive") {
  for (Domain d : {tst::z5(), tst::qt()}) {
    Gen gen(d, 47);
    for (int i = 0; i < 12; ++i) {
      SESWitness w = gen.ses();
      CHECK(ses_additive(w));
      SESWitness tw = gen.torsion_ses();
      CHECK(tw.a.is_torsion());
      CHECK(tw.b.is_torsion());
      CHECK(tw.c.is_torsion());
      CHECK(torsion_length(tw.b) == torsion_length(tw.a) + torsion_length(tw.c));
      FLModule m = classify_module(gen.torsion_presentation());
      CHECK(m.is_torsion());
    }
  }
}

TEST_CASE("equal seeds reproduce every structure") {
  Domain d = tst::z5();
  Gen a(d, 1234), b(d, 1234);
  for (int i = 0; i < 5; ++i) {
    CHECK(d.eq(a.element(), b.element()));
    CHECK(a.matrix(3, 3) == b.matrix(3, 3));
    CHECK(a.complex() == b.complex());
    CHECK(a.square().H() == b.square().H());
    CHECK(hnat_equal(a.coherent().theta, b.coherent().theta));
    CHECK(a.ses().map_ab == b.ses().map_ab);
  }
}
