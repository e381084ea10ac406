#pragma once

#include <optional>
#include <vector>

#include "gersten/ring.hpp"

namespace gersten {

/* Dense matrix over a Domain. Degenerate shapes (0 x n, n x 0) are legal
 * and behave as the corresponding zero objects. Immutable in spirit: the
 * mutating accessors exist for construction only. */
class RMatrix {
 public:
  RMatrix() : rows_(0), cols_(0) {}
  RMatrix(Domain dom, int rows, int cols);

  static RMatrix zero(const Domain& dom, int rows, int cols) { return RMatrix(dom, rows, cols); }
  static RMatrix identity(const Domain& dom, int n);
  static RMatrix scalar(const Domain& dom, int n, const Element& c);
  static RMatrix from_rows(const Domain& dom, const std::vector<std::vector<Element>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Domain& domain() const { return dom_; }

  const Element& at(int i, int j) const;
  void set(int i, int j, const Element& v);

  bool operator==(const RMatrix& o) const;
  bool is_zero() const;
  bool is_identity() const;

  friend RMatrix operator+(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator-(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  RMatrix operator-() const;
  RMatrix scaled(const Element& c) const;
  RMatrix transpose() const;

  static RMatrix hcat(const RMatrix& a, const RMatrix& b);
  static RMatrix vcat(const RMatrix& a, const RMatrix& b);
  static RMatrix block2x2(const RMatrix& a, const RMatrix& b, const RMatrix& c, const RMatrix& d);
  static RMatrix block_diag(const RMatrix& a, const RMatrix& b);
  // half-open row/column ranges
  RMatrix submatrix(int r0, int r1, int c0, int c1) const;

  RMatrix residue() const;  // entrywise residue map, Base -> Residue domain

 private:
  int rows_, cols_;
  std::vector<Element> e_;
  Domain dom_;
};

bool mat_in_domain(const RMatrix& m);         // all entries members of the domain (B, or canonical residue)
Element mat_det(const RMatrix& m);            // square; exact, via fraction-field elimination
RMatrix mat_invert(const RMatrix& m);         // throws NotInvertible (det not a unit / det zero)
bool mat_is_invertible(const RMatrix& m);
int mat_rank(const RMatrix& m);               // rank over the fraction field (Base) or the field (Residue)

/* M = U * D * V with U, V invertible over B and D diagonal; every nonzero
 * diagonal entry is a plain power g^{a_i} (unit parts absorbed into U) and
 * valuations are non-decreasing along the diagonal, zeros last. */
struct SnfResult {
  RMatrix U, D, V;
  int rank = 0;                       // number of nonzero diagonal entries
  std::vector<long> exponents;        // a_1 <= ... <= a_rank
};

SnfResult smith_normal_form(const RMatrix& m);  // Base domains only

/* One solution X of M X = B over the domain (entries in B for Base tag),
 * or nullopt when none exists. */
std::optional<RMatrix> solve_exact(const RMatrix& m, const RMatrix& b);

/* Columns form a basis of { x : M x = 0 } over the domain. For Base tag
 * this is a basis of the kernel as a free B-module. */
RMatrix kernel_basis(const RMatrix& m);

}  // namespace gersten
