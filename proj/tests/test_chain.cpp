#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gersten;
using tst::mat;
using tst::thrown;
using tst::two_term;

static ChainComplex b_mod_g(const Domain& d) { return two_term(mat(d, {{5}})); }

TEST_CASE("complex construction") {
  Domain d = tst::z5();
  ChainComplex x = b_mod_g(d);
  CHECK(x.rank(0) == 1);
  CHECK(x.rank(1) == 1);
  CHECK(x.rank(2) == 0);
  CHECK(x.rank(-3) == 0);
  CHECK(x.lo() == 0);
  CHECK(x.hi() == 1);
  CHECK(x.boundary(1) == mat(d, {{5}}));
  CHECK(x.boundary(7).rows() == 0);
  CHECK(ChainComplex::zero(d).is_zero());
  CHECK(ChainComplex::concentrated(d, 3, 2).rank(3) == 2);

  // d^2 = 0 is enforced
  std::map<int, int> ranks{{0, 1}, {1, 1}, {2, 1}};
  std::map<int, RMatrix> bad{{1, mat(d, {{1}})}, {2, mat(d, {{1}})}};
  CHECK(thrown([&] { ChainComplex::make(d, ranks, bad); }) == ErrorCode::NotAComplex);

  ChainComplex s = x.shifted(2);
  CHECK(s.rank(2) == 1);
  CHECK(s.boundary(3) == mat(d, {{5}}));
  CHECK(ChainComplex::direct_sum(x, s).rank(1) == 1);
  CHECK(ChainComplex::direct_sum(x, x).boundary(1) == mat(d, {{5, 0}, {0, 5}}));
}

TEST_CASE("chain maps") {
  Domain d = tst::z5();
  ChainComplex x = b_mod_g(d);
  ChainMap id = ChainMap::identity(x);
  CHECK(id.component(0).is_identity());
  CHECK(compose(id, id) == id);
  CHECK(id + id == id.scaled(d.from_long(2)));
  CHECK((id - id).is_zero());
  CHECK(ChainMap::zero(x, x).is_zero());

  // components must commute with the boundaries
  std::map<int, RMatrix> bad{{0, mat(d, {{1}})}, {1, mat(d, {{2}})}};
  CHECK(thrown([&] { ChainMap::make(x, x, bad); }) == ErrorCode::NotAComplexPair);

  ChainComplex y = two_term(mat(d, {{25}}));
  // f_0 = 5, f_1 = 1 intertwines 5 and 25
  ChainMap f = ChainMap::make(x, y, {{0, mat(d, {{5}})}, {1, mat(d, {{1}})}});
  CHECK(compose(f, id) == f);
  CHECK(ChainMap::direct_sum(f, f).component(0) == mat(d, {{5, 0}, {0, 5}}));
}

TEST_CASE("cone of a two-term complex") {
  Domain d = tst::z5();
  ChainComplex x = b_mod_g(d);
  ChainComplex c = cone(x);
  CHECK(c.rank(0) == 1);
  CHECK(c.rank(1) == 2);
  CHECK(c.rank(2) == 1);
  CHECK(c.boundary(2) == mat(d, {{-5}, {-1}}));
  CHECK(c.boundary(1) == mat(d, {{-1, 5}}));

  ChainMap i = iota(x);
  CHECK(i.component(0) == mat(d, {{1}}));
  CHECK(i.component(1) == mat(d, {{0}, {1}}));

  // the cone is contractible
  for (const auto& h : homology(c)) {
    CHECK(h.free_rank == 0);
    CHECK(h.torsion.empty());
  }

  ChainMap r = r_map(x);
  CHECK(r.src() == cone(c));
  CHECK(r.tgt() == c);
  CHECK(compose(r, iota(c)) == ChainMap::identity(c));

  ChainMap ca = cone_map(ChainMap::identity(x));
  CHECK(ca == ChainMap::identity(c));
}

TEST_CASE("homotopies and H-presentations") {
  Domain d = tst::z5();
  ChainComplex x = b_mod_g(d);
  ChainMap id = ChainMap::identity(x);
  // h_0 = 1 gives dh + hd = 5 id, so id ~ -4 id
  ChainMap g = id.scaled(d.from_long(-4));
  ChainHomotopy h = ChainHomotopy::make(id, g, {{0, mat(d, {{1}})}});
  CHECK(h.component(0) == mat(d, {{1}}));
  CHECK(h.component(5).rows() == 0);

  CHECK(thrown([&] { ChainHomotopy::make(id, id, {{0, mat(d, {{1}})}}); }) ==
        ErrorCode::NotAHomotopy);

  CHomotopyMap H = homotopy_to_H(h);
  CHECK(H.H().component(1) == mat(d, {{-1, 5}}));
  CHECK(H.H().component(0) == mat(d, {{5}}));
  CHECK(compose(H.H(), iota(x)) == id - g);

  ChainHomotopy back = H_to_homotopy(H);
  CHECK(back.component(0) == h.component(0));
  CHECK(back.f == id);
  CHECK(back.g == g);
}

TEST_CASE("homotopy squares and star composition") {
  Domain d = tst::z5();
  ChainComplex x = b_mod_g(d);
  ChainMap id = ChainMap::identity(x);
  ChainMap b = id.scaled(d.from_long(-4));
  ChainHomotopy h = ChainHomotopy::make(id, b, {{0, mat(d, {{1}})}});
  ChainMap H = homotopy_to_H(h).H();

  // H iota = id - b = g a - b f for f = g = a = id
  HSquare sq = HSquare::make(id, id, id, b, H);
  CHECK(thrown([&] { HSquare::make(id, id, id, id, H); }) == ErrorCode::NotAHomotopy);

  HSquare twice = compose_squares(sq, sq);
  CHECK(twice.b() == compose(b, b));
  CHECK(twice.H() == star(H, H, b, id));

  // strict associativity of the witness
  HSquare left = compose_squares(sq, compose_squares(sq, sq));
  HSquare right = compose_squares(compose_squares(sq, sq), sq);
  CHECK(left.H() == right.H());
  CHECK(left.b() == right.b());
}

TEST_CASE("homology invariants") {
  Domain d = tst::z5();
  auto groups = homology(b_mod_g(d));
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].degree == 0);
  CHECK(groups[0].free_rank == 0);
  CHECK(groups[0].torsion == std::vector<long>{1});
  CHECK(groups[1].degree == 1);
  CHECK(groups[1].free_rank == 0);
  CHECK(groups[1].torsion.empty());

  // B <-25- B <-5- B in degrees 0,1,2: d1 d2 = 125 != 0 rejected,
  // so use d1 = 25, d2 = 0 stacked differently: take direct sums instead
  ChainComplex y = ChainComplex::direct_sum(b_mod_g(d), two_term(mat(d, {{25}})).shifted(1));
  auto gy = homology(y);
  REQUIRE(gy.size() == 3);
  CHECK(gy[0].torsion == std::vector<long>{1});
  CHECK(gy[1].torsion == std::vector<long>{2});
  CHECK(gy[2].torsion.empty());

  ChainComplex free_part = ChainComplex::concentrated(d, 0, 2);
  auto gf = homology(free_part);
  REQUIRE(gf.size() == 1);
  CHECK(gf[0].free_rank == 2);
}

TEST_CASE("quasi-isomorphisms") {
  Domain d = tst::z5();
  ChainComplex x = b_mod_g(d);
  CHECK(is_quasi_iso(ChainMap::identity(x)));
  CHECK(is_quasi_iso(ChainMap::identity(x).scaled(d.from_long(2))));

  // equal homology groups but the induced map kills everything
  ChainMap five = ChainMap::identity(x).scaled(d.from_long(5));
  CHECK(!is_quasi_iso(five));

  // x is not acyclic, so x -> cone(x) cannot be a quasi-isomorphism
  CHECK(!is_quasi_iso(iota(x)));

  // zero complex into the contractible cone is one
  CHECK(is_quasi_iso(ChainMap::zero(ChainComplex::zero(d), cone(x))));
}
