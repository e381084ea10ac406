#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "gersten/rng.hpp"

using namespace gersten;

TEST_CASE("equal seeds give equal streams") {
  Rng a(42), b(42), c(43);
  bool same = true, differs = false;
  for (int i = 0; i < 256; ++i) {
    std::uint64_t va = a.next();
    same = same && va == b.next();
    differs = differs || va != c.next();
  }
  CHECK(same);
  CHECK(differs);
}

TEST_CASE("bounded draws stay in range") {
  Rng r(7);
  for (int i = 0; i < 200; ++i) {
    CHECK(r.below(1) == 0);
    CHECK(r.below(6) < 6);
    std::uint64_t big = (1ULL << 63) + 11;
    CHECK(r.below(big) < big);
    long v = r.range(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }

  std::set<long> seen;
  for (int i = 0; i < 400; ++i) seen.insert(r.range(0, 3));
  CHECK(seen == std::set<long>{0, 1, 2, 3});

  CHECK(!r.chance(0, 5));
  CHECK(r.chance(5, 5));
}

TEST_CASE("derived seeds separate labels and indices") {
  std::uint64_t base = derive_seed(42, "alpha", 0);
  CHECK(base == derive_seed(42, "alpha", 0));
  CHECK(base != derive_seed(42, "alpha", 1));
  CHECK(base != derive_seed(42, "beta", 0));
  CHECK(base != derive_seed(43, "alpha", 0));

  // distinct (label, index) pairs should not collide in practice
  std::set<std::uint64_t> out;
  std::vector<const char*> labels{"a", "b", "ab", "ba", ""};
  for (const char* l : labels)
    for (std::uint64_t i = 0; i < 50; ++i) out.insert(derive_seed(42, l, i));
  CHECK(out.size() == labels.size() * 50);
}
