#pragma once

#include <map>
#include <vector>

#include "gersten/matrix.hpp"

namespace gersten {

/* Bounded complex of finite free modules, homological (lower) indexing:
 * d_n : x_n -> x_{n-1}, d_n d_{n+1} = 0. Degrees outside the stored
 * support read as rank 0 with zero boundaries. */
class ChainComplex {
 public:
  ChainComplex() = default;  // empty value; build real complexes through make
  static ChainComplex make(Domain dom, std::map<int, int> ranks, std::map<int, RMatrix> boundaries);
  static ChainComplex zero(const Domain& dom) { return make(dom, {}, {}); }
  /* free module of the given rank concentrated in one degree */
  static ChainComplex concentrated(const Domain& dom, int degree, int rank);

  const Domain& domain() const { return dom_; }
  int rank(int n) const;
  RMatrix boundary(int n) const;  // shape rank(n-1) x rank(n)
  int lo() const { return lo_; }  // lowest degree with nonzero rank (0 for the zero complex)
  int hi() const { return hi_; }
  bool is_zero() const;
  const std::map<int, int>& ranks() const { return ranks_; }

  bool operator==(const ChainComplex& o) const;

  ChainComplex shifted(int k) const;  // degree n of the result is degree n-k of the input
  static ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

 private:
  Domain dom_;
  std::map<int, int> ranks_;     // only nonzero ranks stored
  std::map<int, RMatrix> d_;     // only boundaries with nonzero shape stored
  int lo_ = 0, hi_ = 0;
};

/* Degreewise matrices f_n commuting with the boundaries. */
class ChainMap {
 public:
  ChainMap() = default;  // empty value; build real maps through make
  static ChainMap make(ChainComplex src, ChainComplex tgt, std::map<int, RMatrix> components);
  static ChainMap identity(const ChainComplex& x);
  static ChainMap zero(const ChainComplex& src, const ChainComplex& tgt);

  const ChainComplex& src() const { return src_; }
  const ChainComplex& tgt() const { return tgt_; }
  RMatrix component(int n) const;  // shape tgt.rank(n) x src.rank(n)

  bool operator==(const ChainMap& o) const;
  bool is_zero() const;

  friend ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f
  friend ChainMap operator+(const ChainMap& a, const ChainMap& b);
  friend ChainMap operator-(const ChainMap& a, const ChainMap& b);
  ChainMap operator-() const;
  ChainMap scaled(const Element& c) const;

  static ChainMap direct_sum(const ChainMap& a, const ChainMap& b);

 private:
  ChainComplex src_, tgt_;
  std::map<int, RMatrix> f_;
};

/* h_n : x_n -> y_{n+1} with d h + h d = f - g. */
struct ChainHomotopy {
  ChainMap f, g;
  std::map<int, RMatrix> h;

  static ChainHomotopy make(ChainMap f, ChainMap g, std::map<int, RMatrix> h);  // validates
  RMatrix component(int n) const;  // shape y.rank(n+1) x x.rank(n)
};

ChainComplex cone(const ChainComplex& x);           // (Cx)_n = x_{n-1} + x_n, d = [[-d, 0], [-id, d]]
ChainMap iota(const ChainComplex& x);               // x -> Cx, (0; id)
ChainMap r_map(const ChainComplex& x);              // CCx -> Cx, rows [0 id id 0; 0 0 0 id]
ChainMap cone_map(const ChainMap& a);               // Ca : Cx -> Cy, diag(a_{n-1}, a_n)

/* A chain map H : Cx -> y presented as a homotopy from f to g:
 * f - g = H iota. */
class CHomotopyMap {
 public:
  CHomotopyMap() = default;
  static CHomotopyMap make(ChainMap H, ChainMap f, ChainMap g);  // validates the contract
  const ChainMap& H() const { return H_; }
  const ChainMap& from() const { return f_; }
  const ChainMap& to() const { return g_; }

 private:
  ChainMap H_, f_, g_;
};

CHomotopyMap homotopy_to_H(const ChainHomotopy& h);   // H_n = [-h_{n-1} | f_n - g_n]
ChainHomotopy H_to_homotopy(const CHomotopyMap& H);   // throws BlockMismatch if the identity block disagrees

/* Homotopy commutative square from [f : x -> x'] to [g : y -> y']:
 * a : x -> y, b : x' -> y', H : Cx -> y' with H iota = g a - b f. */
class HSquare {
 public:
  HSquare() = default;
  static HSquare make(ChainMap f, ChainMap g, ChainMap a, ChainMap b, ChainMap H);
  const ChainMap& f() const { return f_; }
  const ChainMap& g() const { return g_; }
  const ChainMap& a() const { return a_; }
  const ChainMap& b() const { return b_; }
  const ChainMap& H() const { return H_; }

 private:
  ChainMap f_, g_, a_, b_, H_;
};

/* Witness of the composed square: H' * H = b' H + H' Ca. */
ChainMap star(const ChainMap& Hp, const ChainMap& H, const ChainMap& bp, const ChainMap& a);
HSquare compose_squares(const HSquare& second, const HSquare& first);

struct HomologyGroup {
  int degree = 0;
  int free_rank = 0;
  std::vector<long> torsion;  // exponents a with a summand B/g^a, ascending
  bool operator==(const HomologyGroup& o) const = default;
};

std::vector<HomologyGroup> homology(const ChainComplex& x);  // Base domains only
bool is_quasi_iso(const ChainMap& f);

}  // namespace gersten
