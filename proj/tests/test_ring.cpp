#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gersten;
using tst::thrown;

TEST_CASE("ring descriptors") {
  CHECK(Ring::make("Z@5")->kind() == RingKind::LocalizedIntegers);
  CHECK(Ring::make("Z@5")->prime() == 5);
  CHECK(Ring::make("Q[t]@t")->kind() == RingKind::LocalizedRationalPolynomials);
  CHECK(thrown([] { Ring::make("Z@4"); }) == ErrorCode::NotPrime);
  CHECK(thrown([] { Ring::make("Z@1"); }) == ErrorCode::NotPrime);
  CHECK(thrown([] { Ring::make("frobnicate"); }) == ErrorCode::UnknownRingKind);
  CHECK(thrown([] { Ring::make("Q[t]@s"); }) == ErrorCode::UnknownRingKind);
}

TEST_CASE("integers localized at 5") {
  Domain d = tst::z5();
  Element fifty = d.from_long(50);
  CHECK(d.valuation(fifty) == 2);
  CHECK(d.valuation(d.from_long(3)) == 0);
  CHECK(!d.valuation(d.zero()).has_value());
  CHECK(d.is_unit(d.from_long(3)));
  CHECK(!d.is_unit(d.from_long(10)));
  CHECK(d.is_one(d.mul(d.from_long(3), d.inv(d.from_long(3)))));
  CHECK(d.in_domain(d.parse("3/4")));
  CHECK(d.valuation(d.parse("3/4")) == 0);
  CHECK(thrown([&] { d.parse("1/5"); }) == ErrorCode::ParseError);
  CHECK(d.eq(d.g(), d.from_long(5)));
  CHECK(d.eq(d.g_pow(3), d.from_long(125)));
  CHECK(thrown([&] { d.inv(fifty); }) == ErrorCode::NotInvertible);
  CHECK(thrown([&] { d.div(d.one(), d.zero()); }) == ErrorCode::NotInvertible);

  SUBCASE("residue field F_5") {
    Domain r = d.residue_domain();
    CHECK(d.eq(d.residue(d.from_long(7)), r.from_long(2)));
    // 3/4 = 3 * 4^{-1} = 3 * 4 = 12 = 2 mod 5
    CHECK(r.eq(d.residue(d.parse("3/4")), r.from_long(2)));
    CHECK(r.eq(r.div(r.one(), r.from_long(2)), r.from_long(3)));
    CHECK(d.eq(r.lift(r.from_long(2)), d.from_long(2)));
    CHECK(thrown([&] { d.residue(Element(mpq_class(1, 5))); }) == ErrorCode::DomainMismatch);
    CHECK(thrown([&] { r.valuation(r.one()); }) == ErrorCode::DomainMismatch);
    CHECK(thrown([&] { r.g(); }) == ErrorCode::DomainMismatch);
  }

  SUBCASE("printing round trips") {
    for (const char* s : {"0", "-7", "3/4", "50"}) CHECK(d.to_string(d.parse(s)) == s);
  }
}

TEST_CASE("rational polynomials localized at t") {
  Domain d = tst::qt();
  Element e = d.parse("(t^2 + t^3) / (1 - t)");
  CHECK(d.valuation(e) == 2);
  CHECK(d.is_unit(d.parse("1 + t")));
  CHECK(d.in_domain(e));
  CHECK(thrown([&] { d.parse("1/t"); }) == ErrorCode::ParseError);
  CHECK(d.eq(d.g(), d.parse("t")));
  CHECK(d.eq(d.mul(d.parse("1+t"), d.inv(d.parse("1+t"))), d.one()));

  SUBCASE("residue field Q") {
    Domain r = d.residue_domain();
    // (2 + t)/(1 + 3t) evaluates to 2 at t = 0
    CHECK(r.eq(d.residue(d.parse("(2 + t)/(1 + 3*t)")), r.from_long(2)));
    CHECK(r.eq(r.parse("3/4"), r.div(r.from_long(3), r.from_long(4))));
    CHECK(d.eq(r.lift(r.parse("3/4")), d.parse("3/4")));
  }

  SUBCASE("printing round trips") {
    for (const char* s : {"0", "t", "2*t^2 + t", "-t + 1"}) {
      Element v = d.parse(s);
      CHECK(d.eq(d.parse(d.to_string(v)), v));
    }
  }
}

TEST_CASE("field arithmetic stays exact") {
  Domain d = tst::z5();
  // (1/3 + 1/7) * 21 = 10
  Element s = d.add(d.div(d.one(), d.from_long(3)), d.div(d.one(), d.from_long(7)));
  CHECK(d.eq(d.mul(s, d.from_long(21)), d.from_long(10)));

  Domain q = tst::qt();
  // (1 - t)(1 + t + t^2 + ...) truncates nowhere: check division instead
  Element a = q.div(q.one(), q.parse("1 - t"));
  CHECK(q.eq(q.mul(a, q.parse("1 - t")), q.one()));
  CHECK(q.in_domain(a));
}

TEST_CASE("cross-domain elements are rejected") {
  Domain d = tst::z5();
  Domain q = tst::qt();
  CHECK(thrown([&] { d.add(d.one(), q.one()); }) == ErrorCode::DomainMismatch);
}
