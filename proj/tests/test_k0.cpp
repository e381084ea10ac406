#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gersten/k0.hpp"
#include "helpers.hpp"

using namespace gersten;
using tst::mat;
using tst::thrown;

TEST_CASE("module classification") {
  Domain d = tst::z5();

  FLModule free2 = classify_module(RMatrix::zero(d, 2, 0));
  CHECK(free2.free_rank == 2);
  CHECK(free2.exponents.empty());
  CHECK(!free2.is_torsion());
  CHECK(k0_class(free2) == 2);

  // R + R/25 as the cokernel of (0; 25)
  FLModule mixed = classify_module(mat(d, {{0}, {25}}));
  CHECK(mixed.free_rank == 1);
  CHECK(mixed.exponents == std::vector<long>{2});
  CHECK(k0_class(mixed) == 1);
  CHECK(torsion_length(mixed) == 2);

  FLModule tors = classify_module(mat(d, {{5, 0}, {0, 25}}));
  CHECK(tors.is_torsion());
  CHECK(tors.exponents == std::vector<long>{1, 2});
  CHECK(torsion_length(tors) == 3);
  CHECK(k0_class(tors) == 0);

  // unit relations collapse: coker(3) = 0
  FLModule zero = classify_module(mat(d, {{3}}));
  CHECK(zero.free_rank == 0);
  CHECK(zero.exponents.empty());

  CHECK(thrown([&] { classify_module(mat(d, {{5}}).residue()); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("short exact sequence certificates") {
  Domain d = tst::z5();

  // 0 -> R/5 --5--> R/25 --1--> R/5 -> 0
  SESWitness w = make_ses(mat(d, {{5}}), mat(d, {{25}}), mat(d, {{5}}),
                          mat(d, {{5}}), mat(d, {{1}}));
  CHECK(w.a.exponents == std::vector<long>{1});
  CHECK(w.b.exponents == std::vector<long>{2});
  CHECK(ses_additive(w));
  CHECK(torsion_length(w.b) == torsion_length(w.a) + torsion_length(w.c));

  // free split sequence 0 -> R -> R^2 -> R -> 0
  SESWitness s = make_ses(RMatrix::zero(d, 1, 0), RMatrix::zero(d, 2, 0), RMatrix::zero(d, 1, 0),
                          mat(d, {{1}, {5}}), mat(d, {{-5, 1}}));
  CHECK(ses_additive(s));
  CHECK(k0_class(s.b) == 2);

  // the inclusion must be compatible with the relations
  CHECK(thrown([&] {
          make_ses(mat(d, {{5}}), mat(d, {{25}}), mat(d, {{5}}), mat(d, {{1}}), mat(d, {{1}}));
        }) == ErrorCode::PreconditionViolated);

  // composite not zero in C
  CHECK(thrown([&] {
          make_ses(mat(d, {{5}}), mat(d, {{25}}), mat(d, {{25}}), mat(d, {{5}}), mat(d, {{1}}));
        }) == ErrorCode::PreconditionViolated);

  // multiplication by 5 on R/25 is exact against the image of f but not onto
  CHECK(thrown([&] {
          make_ses(mat(d, {{5}}), mat(d, {{25}}), mat(d, {{25}}), mat(d, {{5}}), mat(d, {{5}}));
        }) == ErrorCode::PreconditionViolated);

  // multiplication by 25 kills all of R/25: kernel strictly larger than the image
  CHECK(thrown([&] {
          make_ses(mat(d, {{5}}), mat(d, {{25}}), mat(d, {{25}}), mat(d, {{5}}), mat(d, {{25}}));
        }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("telescope witnesses") {
  Domain d = tst::z5();
  SESWitness w = telescope_witness(d, d.from_long(50));
  CHECK(k0_class(w.a) == 1);
  CHECK(k0_class(w.b) == 1);
  CHECK(k0_class(w.c) == 0);  // the quotient is torsion: its class telescopes away
  CHECK(w.c.exponents == std::vector<long>{2});
  CHECK(ses_additive(w));

  Domain q = tst::qt();
  SESWitness wq = telescope_witness(q, q.parse("t^3 + t^4"));
  CHECK(wq.c.exponents == std::vector<long>{3});
  CHECK(ses_additive(wq));

  CHECK(thrown([&] { telescope_witness(d, d.from_long(3)); }) == ErrorCode::UnitElement);
  CHECK(thrown([&] { telescope_witness(d, d.zero()); }) == ErrorCode::ZeroElement);
  CHECK(thrown([&] { telescope_witness(d.residue_domain(), d.residue_domain().one()); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("decomposition into uniformizer quotients") {
  Domain d = tst::z5();
  FLModule m = classify_module(mat(d, {{5, 0}, {0, 25}}));
  Decomposition dec = generator_decompose(m);
  CHECK(dec.exponents == std::vector<long>{1, 2});
  CHECK(dec.cyclic_multiplicity == 3);
  REQUIRE(dec.chain.size() == 1);  // only the 25 factor needs a peeling step
  CHECK(ses_additive(dec.chain[0]));
  CHECK(dec.chain[0].b.exponents == std::vector<long>{2});
  CHECK(dec.chain[0].a.exponents == std::vector<long>{1});
  CHECK(dec.chain[0].c.exponents == std::vector<long>{1});

  FLModule big = classify_module(mat(d, {{125}}));
  Decomposition dec3 = generator_decompose(big);
  CHECK(dec3.cyclic_multiplicity == 3);
  CHECK(dec3.chain.size() == 2);  // 125 -> 25 -> 5
  for (const SESWitness& w : dec3.chain) CHECK(ses_additive(w));

  FLModule notders = classify_module(mat(d, {{0}, {25}}));
  CHECK(thrown([&] { generator_decompose(notders); }) == ErrorCode::NotTorsion);
}
