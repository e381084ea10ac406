#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gersten;
using tst::mat;
using tst::thrown;
using tst::two_term;

static CMorphism all_ones(const CObject& x) {
  Domain d = x.domain();
  RMatrix nn = mat(d, {{1}});
  return CMorphism::make(x, x, nn, nn, nn, nn);
}

TEST_CASE("objects and standard complexes") {
  RingPtr ring = Ring::make("Z@5");
  CObject x = make_object(ring, 1, 1);
  CHECK(x.total() == 2);
  CHECK(h0_rank(x) == 1);

  Domain d = x.domain();
  ChainComplex s = standard_complex(x);
  CHECK(s.rank(0) == 2);
  CHECK(s.rank(1) == 2);
  CHECK(s.boundary(1) == mat(d, {{5, 0}, {0, 1}}));

  CHECK(standard_complex(make_object(ring, 0, 0)).is_zero());
  CHECK(standard_complex(make_object(ring, 2, 0)).boundary(1) == mat(d, {{5, 0}, {0, 5}}));
}

TEST_CASE("morphism components") {
  CObject x = make_object(Ring::make("Z@5"), 1, 1);
  Domain d = x.domain();
  CMorphism phi = all_ones(x);
  CHECK(phi.phi1() == mat(d, {{1, 1}, {5, 1}}));
  CHECK(phi.phi0() == mat(d, {{1, 5}, {1, 1}}));
  CHECK(!is_upper_triangular(phi));
  CHECK(!is_lower_triangular(phi));

  CMorphism id = CMorphism::identity(x);
  CHECK(is_upper_triangular(id));
  CHECK(is_lower_triangular(id));
  CHECK(compose(phi, id) == phi);
  CHECK(compose(id, phi) == phi);
  CHECK(phi - phi == CMorphism::zero(x, x));
  CHECK(phi + phi == CMorphism::make(x, x, mat(d, {{2}}), mat(d, {{2}}), mat(d, {{2}}), mat(d, {{2}})));
}

TEST_CASE("composition matches the chain-map oracle") {
  CObject x = make_object(Ring::make("Z@5"), 1, 1);
  Domain d = x.domain();
  CMorphism phi = all_ones(x);
  CMorphism sq = compose(phi, phi);
  CHECK(sq.nn() == mat(d, {{6}}));  // 1 + g * 1
  CHECK(to_chain_map(sq) == compose(to_chain_map(phi), to_chain_map(phi)));

  CMorphism psi = CMorphism::make(x, x, mat(d, {{2}}), mat(d, {{0}}), mat(d, {{3}}), mat(d, {{-1}}));
  CHECK(to_chain_map(compose(psi, phi)) == compose(to_chain_map(psi), to_chain_map(phi)));
  CHECK(to_chain_map(compose(phi, psi)) == compose(to_chain_map(phi), to_chain_map(psi)));

  CMorphism back = from_chain_map(to_chain_map(phi), x, x);
  CHECK(back == phi);

  // endpoints must be the standard complexes of the stated objects
  ChainComplex other = two_term(mat(d, {{25, 0}, {0, 1}}));
  CHECK(thrown([&] { from_chain_map(ChainMap::identity(other), x, x); }) ==
        ErrorCode::NotAMorphismOfC);
}

TEST_CASE("upside-down involution") {
  RingPtr ring = Ring::make("Z@5");
  CObject x = make_object(ring, 1, 2);
  CObject y = make_object(ring, 2, 1);
  Domain d = x.domain();
  CHECK(ud(x).n == 2);
  CHECK(ud(x).m == 1);

  CMorphism phi = CMorphism::make(x, y, mat(d, {{1}, {2}}), mat(d, {{3, 4}, {5, 6}}),
                                  mat(d, {{7}}), mat(d, {{8, 9}}));
  CMorphism fl = ud_object_swap(phi);
  CHECK(fl.src() == ud(x));
  CHECK(fl.tgt() == ud(y));
  CHECK(fl.nn() == mat(d, {{8, 9}}));
  CHECK(fl.mm() == mat(d, {{1}, {2}}));
  CHECK(fl.nm() == mat(d, {{7}}));
  CHECK(fl.mn() == mat(d, {{3, 4}, {5, 6}}));
  CHECK(ud_object_swap(fl) == phi);

  CMorphism psi = CMorphism::make(y, x, mat(d, {{1, 0}}), mat(d, {{2}}),
                                  mat(d, {{0, 3}, {4, 0}}), mat(d, {{5}, {6}}));
  CHECK(ud_object_swap(compose(psi, phi)) == compose(ud_object_swap(psi), ud_object_swap(phi)));
}

TEST_CASE("isomorphisms and inversion") {
  CObject x = make_object(Ring::make("Z@5"), 1, 1);
  Domain d = x.domain();
  CMorphism phi = all_ones(x);
  CHECK(is_isomorphism(phi));  // both components have unit determinant -4
  CMorphism inv = invert(phi);
  CHECK(compose(inv, phi) == CMorphism::identity(x));
  CHECK(compose(phi, inv) == CMorphism::identity(x));

  CMorphism bad = CMorphism::make(x, x, mat(d, {{5}}), mat(d, {{0}}), mat(d, {{0}}), mat(d, {{1}}));
  CHECK(!is_isomorphism(bad));
  CHECK(thrown([&] { invert(bad); }) == ErrorCode::NotInvertible);
}

TEST_CASE("triangulation twist") {
  CObject x = make_object(Ring::make("Z@5"), 1, 1);
  Domain d = x.domain();
  CMorphism low = CMorphism::make(x, x, mat(d, {{1}}), mat(d, {{0}}), mat(d, {{1}}), mat(d, {{1}}));
  CMorphism tw = ut(low);
  CHECK(tw.nn() == mat(d, {{1}}));
  CHECK(tw.nm() == mat(d, {{0}}));
  CHECK(tw.mn() == mat(d, {{-1}}));
  CHECK(is_lower_triangular(tw));
  CHECK(is_upper_triangular(compose(low, tw)));

  CMorphism phi = all_ones(x);
  CHECK(is_upper_triangular(compose(phi, ut(phi))));
  // already-upper inputs are fixed points
  CMorphism up = compose(phi, ut(phi));
  CHECK(ut(up) == CMorphism::identity(x));

  CMorphism pinched = CMorphism::make(x, x, mat(d, {{1}}), mat(d, {{0}}), mat(d, {{1}}), mat(d, {{5}}));
  CHECK(thrown([&] { ut(pinched); }) == ErrorCode::BlockNotInvertible);
}

TEST_CASE("H_0 functor") {
  CObject x = make_object(Ring::make("Z@5"), 2, 1);
  Domain d = x.domain();
  CHECK(h0_rank(x) == 2);
  CMorphism phi = CMorphism::make(x, x, mat(d, {{1, 5}, {2, 3}}), mat(d, {{0}, {1}}),
                                  mat(d, {{1, 1}}), mat(d, {{4}}));
  RMatrix h = h0_mor(phi);
  Domain rd = d.residue_domain();
  CHECK(h.domain() == rd);
  CHECK(rd.eq(h.at(0, 1), rd.zero()));
  CHECK(rd.eq(h.at(1, 0), rd.from_long(2)));

  // H_0 is functorial
  CHECK(h0_mor(compose(phi, phi)) == h0_mor(phi) * h0_mor(phi));
}

TEST_CASE("classification of two-term complexes") {
  Domain d = tst::z5();
  ChainComplex x = two_term(mat(d, {{5, 0}, {0, 1}}));
  Classified c = classify(x);
  CHECK(c.object.n == 1);
  CHECK(c.object.m == 1);
  CHECK(mat_invert(c.w0) * x.boundary(1) * c.w1 == mat(d, {{5, 0}, {0, 1}}));

  // swapped diagonal lands on the same object up to the witnesses
  ChainComplex y = two_term(mat(d, {{1, 0}, {0, 5}}));
  Classified cy = classify(y);
  CHECK(cy.object.n == 1);
  CHECK(cy.object.m == 1);
  CHECK(mat_invert(cy.w0) * y.boundary(1) * cy.w1 == mat(d, {{5, 0}, {0, 1}}));

  // a scrambled mixed example
  ChainComplex z = two_term(mat(d, {{7, 10}, {5, 10}}));
  Classified cz = classify(z);
  CHECK(cz.object.n + cz.object.m == 2);
  CHECK(mat_invert(cz.w0) * z.boundary(1) * cz.w1 ==
        standard_complex(cz.object).boundary(1));

  CHECK(classify(ChainComplex::zero(d)).object.total() == 0);

  CHECK(thrown([&] { classify(two_term(mat(d, {{25}}))); }) == ErrorCode::NotInC);
  CHECK(thrown([&] { classify(two_term(mat(d, {{5, 5}, {5, 5}}))); }) == ErrorCode::NotInjective);
  std::map<int, int> ranks{{1, 1}, {0, 2}};
  std::map<int, RMatrix> bd{{1, mat(d, {{5}, {0}})}};
  CHECK(thrown([&] { classify(ChainComplex::make(d, ranks, bd)); }) == ErrorCode::RankMismatch);
}

TEST_CASE("split exactness of residually exact pairs") {
  RingPtr ring = Ring::make("Z@5");
  CObject a = make_object(ring, 1, 0);
  CObject b = make_object(ring, 2, 0);
  Domain d = a.domain();

  auto free_mor = [&](const CObject& s, const CObject& t, const RMatrix& m) {
    return CMorphism::make(s, t, m, RMatrix::zero(d, m.rows(), 0),
                           RMatrix::zero(d, 0, m.cols()), RMatrix::zero(d, 0, 0));
  };

  CMorphism alpha = free_mor(a, b, mat(d, {{1}, {5}}));
  CMorphism beta = free_mor(b, a, mat(d, {{-5, 1}}));
  SplitWitness w = split_exactness(alpha, beta);

  CHECK(compose(w.rho, alpha) == CMorphism::identity(a));
  CHECK(compose(beta, w.gamma) == CMorphism::identity(a));
  CHECK(compose(w.rho, w.gamma) == CMorphism::zero(a, a));
  // gamma beta + alpha rho = id_b
  CHECK(compose(w.gamma, beta) + compose(alpha, w.rho) == CMorphism::identity(b));

  // composite nonzero
  CMorphism beta_bad = free_mor(b, a, mat(d, {{1, 0}}));
  CHECK(thrown([&] { split_exactness(alpha, beta_bad); }) == ErrorCode::PreconditionViolated);

  // composite zero but not exact after reduction
  CMorphism alpha2 = free_mor(a, b, mat(d, {{1}, {0}}));
  CMorphism beta2 = free_mor(b, a, mat(d, {{0, 5}}));
  CHECK(thrown([&] { split_exactness(alpha2, beta2); }) == ErrorCode::ResidueNotExact);
}

TEST_CASE("H_0 sections") {
  RingPtr ring = Ring::make("Z@5");
  ChainComplex s = section_of_h0(ring, 3);
  CHECK(s.rank(0) == 3);
  CHECK(s.rank(1) == 0);
  CHECK(!s.domain().is_base());
}
