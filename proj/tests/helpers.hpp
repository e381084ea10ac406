#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gersten/category_c.hpp"

namespace tst {

using namespace gersten;

inline Domain z5() { return Domain(Ring::make("Z@5"), Tag::Base); }
inline Domain zp(long p) { return Domain(Ring::make("Z@" + std::to_string(p)), Tag::Base); }
inline Domain qt() { return Domain(Ring::make("Q[t]@t"), Tag::Base); }

inline RMatrix mat(const Domain& d, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Element>> out;
  for (const auto& r : rows) {
    std::vector<Element> row;
    for (long v : r) row.push_back(d.from_long(v));
    out.push_back(std::move(row));
  }
  return RMatrix::from_rows(d, out);
}

inline RMatrix mats(const Domain& d, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Element>> out;
  for (const auto& r : rows) {
    std::vector<Element> row;
    for (const char* v : r) row.push_back(d.parse(v));
    out.push_back(std::move(row));
  }
  return RMatrix::from_rows(d, out);
}

/* two-term complex in degrees 1, 0 with the given boundary */
inline ChainComplex two_term(const RMatrix& d1) {
  const Domain& dom = d1.domain();
  std::map<int, int> ranks;
  if (d1.cols() > 0) ranks[1] = d1.cols();
  if (d1.rows() > 0) ranks[0] = d1.rows();
  std::map<int, RMatrix> d;
  if (d1.rows() > 0 && d1.cols() > 0) d[1] = d1;
  return ChainComplex::make(dom, ranks, d);
}

template <class F>
std::optional<ErrorCode> thrown(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace tst
