#include "gersten/matrix.hpp"

#include <algorithm>
#include <string>

namespace gersten {

RMatrix::RMatrix(Domain dom, int rows, int cols) : rows_(rows), cols_(cols), dom_(std::move(dom)) {
  if (rows < 0 || cols < 0) fail(ErrorCode::DimensionMismatch, "negative matrix shape");
  e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), dom_.zero());
}

RMatrix RMatrix::identity(const Domain& dom, int n) {
  RMatrix m(dom, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, dom.one());
  return m;
}

RMatrix RMatrix::scalar(const Domain& dom, int n, const Element& c) {
  RMatrix m(dom, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

RMatrix RMatrix::from_rows(const Domain& dom, const std::vector<std::vector<Element>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RMatrix m(dom, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
      fail(ErrorCode::ShapeMismatch, "ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  return m;
}

const Element& RMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) fail(ErrorCode::DimensionMismatch, "index out of range");
  return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

void RMatrix::set(int i, int j, const Element& v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) fail(ErrorCode::DimensionMismatch, "index out of range");
  e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)] = v;
}

bool RMatrix::operator==(const RMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(dom_ == o.dom_)) return false;
  for (size_t k = 0; k < e_.size(); ++k)
    if (!dom_.eq(e_[k], o.e_[k])) return false;
  return true;
}

bool RMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!dom_.is_zero(x)) return false;
  return true;
}

bool RMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(dom_, rows_);
}

namespace {
void need_same_domain(const RMatrix& a, const RMatrix& b) {
  if (!(a.domain() == b.domain())) fail(ErrorCode::DomainMismatch, "matrices over different domains");
}
}  // namespace

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
  need_same_domain(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "matrix addition shapes");
  RMatrix r(a.domain(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.domain().add(a.at(i, j), b.at(i, j)));
  return r;
}

RMatrix operator-(const RMatrix& a, const RMatrix& b) {
  need_same_domain(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "matrix subtraction shapes");
  RMatrix r(a.domain(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.domain().sub(a.at(i, j), b.at(i, j)));
  return r;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  need_same_domain(a, b);
  if (a.cols() != b.rows())
    fail(ErrorCode::DimensionMismatch,
         "matrix product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const Domain& dom = a.domain();
  RMatrix r(dom, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Element acc = dom.zero();
      for (int k = 0; k < a.cols(); ++k) acc = dom.add(acc, dom.mul(a.at(i, k), b.at(k, j)));
      r.set(i, j, acc);
    }
  return r;
}

RMatrix RMatrix::operator-() const {
  RMatrix r(dom_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, dom_.neg(at(i, j)));
  return r;
}

RMatrix RMatrix::scaled(const Element& c) const {
  RMatrix r(dom_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, dom_.mul(c, at(i, j)));
  return r;
}

RMatrix RMatrix::transpose() const {
  RMatrix r(dom_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

RMatrix RMatrix::hcat(const RMatrix& a, const RMatrix& b) {
  need_same_domain(a, b);
  if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "hcat row counts");
  RMatrix r(a.domain(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
  }
  return r;
}

RMatrix RMatrix::vcat(const RMatrix& a, const RMatrix& b) {
  need_same_domain(a, b);
  if (a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "vcat column counts");
  RMatrix r(a.domain(), a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i) r.set(a.rows() + i, j, b.at(i, j));
  }
  return r;
}

RMatrix RMatrix::block2x2(const RMatrix& a, const RMatrix& b, const RMatrix& c, const RMatrix& d) {
  return vcat(hcat(a, b), hcat(c, d));
}

RMatrix RMatrix::block_diag(const RMatrix& a, const RMatrix& b) {
  const Domain& dom = a.domain();
  return block2x2(a, RMatrix::zero(dom, a.rows(), b.cols()), RMatrix::zero(dom, b.rows(), a.cols()), b);
}

RMatrix RMatrix::submatrix(int r0, int r1, int c0, int c1) const {
  if (r0 < 0 || r1 > rows_ || c0 < 0 || c1 > cols_ || r0 > r1 || c0 > c1)
    fail(ErrorCode::DimensionMismatch, "submatrix range");
  RMatrix r(dom_, r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) r.set(i - r0, j - c0, at(i, j));
  return r;
}

RMatrix RMatrix::residue() const {
  if (!dom_.is_base()) fail(ErrorCode::DomainMismatch, "residue of a residue-domain matrix");
  RMatrix r(dom_.residue_domain(), rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, dom_.residue(at(i, j)));
  return r;
}

/* Gaussian elimination over the ambient field; returns (rank, det-of-leading-square).
 * Mutates a working copy. */
namespace {
struct Elim {
  int rank = 0;
  Element det;  // meaningful for square input only
};

Elim eliminate(RMatrix work) {
  const Domain& dom = work.domain();
  Elim out;
  out.det = dom.one();
  int r = 0;
  bool neg = false;
  for (int c = 0; c < work.cols() && r < work.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < work.rows(); ++i)
      if (!dom.is_zero(work.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < work.cols(); ++j) {
        Element t = work.at(piv, j);
        work.set(piv, j, work.at(r, j));
        work.set(r, j, t);
      }
      neg = !neg;
    }
    Element pivot = work.at(r, c);
    out.det = dom.mul(out.det, pivot);
    for (int i = r + 1; i < work.rows(); ++i) {
      if (dom.is_zero(work.at(i, c))) continue;
      Element f = dom.div(work.at(i, c), pivot);
      for (int j = c; j < work.cols(); ++j)
        work.set(i, j, dom.sub(work.at(i, j), dom.mul(f, work.at(r, j))));
    }
    ++r;
  }
  out.rank = r;
  if (work.rows() != work.cols() || r < work.rows()) out.det = dom.zero();
  if (neg) out.det = dom.neg(out.det);
  return out;
}
}  // namespace

bool mat_in_domain(const RMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.domain().in_domain(m.at(i, j))) return false;
  return true;
}

Element mat_det(const RMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return m.domain().one();
  return eliminate(m).det;
}

int mat_rank(const RMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return eliminate(m).rank;
}

bool mat_is_invertible(const RMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Element d = mat_det(m);
  return m.domain().is_unit(d);
}

RMatrix mat_invert(const RMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const Domain& dom = m.domain();
  Element d = mat_det(m);
  if (!dom.is_unit(d))
    fail(ErrorCode::NotInvertible, dom.is_base() ? "determinant is not a unit" : "determinant is zero");
  int n = m.rows();
  // Gauss-Jordan on [m | I]; with a unit determinant the result stays in B.
  RMatrix work = RMatrix::hcat(m, RMatrix::identity(dom, n));
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!dom.is_zero(work.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) fail(ErrorCode::NotInvertible, "unexpected zero column");
    if (piv != c)
      for (int j = 0; j < 2 * n; ++j) {
        Element t = work.at(piv, j);
        work.set(piv, j, work.at(c, j));
        work.set(c, j, t);
      }
    Element pivot = work.at(c, c);
    for (int j = 0; j < 2 * n; ++j) work.set(c, j, dom.div(work.at(c, j), pivot));
    for (int i = 0; i < n; ++i) {
      if (i == c || dom.is_zero(work.at(i, c))) continue;
      Element f = work.at(i, c);
      for (int j = 0; j < 2 * n; ++j) work.set(i, j, dom.sub(work.at(i, j), dom.mul(f, work.at(c, j))));
    }
  }
  return work.submatrix(0, n, n, 2 * n);
}

/* ---------------- Smith normal form over the DVR ---------------- */

SnfResult smith_normal_form(const RMatrix& m) {
  const Domain& dom = m.domain();
  if (!dom.is_base()) fail(ErrorCode::DomainMismatch, "Smith normal form needs the base ring");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!dom.in_domain(m.at(i, j))) fail(ErrorCode::DomainMismatch, "matrix entry outside B");

  SnfResult out{RMatrix::identity(dom, m.rows()), m, RMatrix::identity(dom, m.cols())};
  RMatrix& U = out.U;
  RMatrix& A = out.D;
  RMatrix& V = out.V;
  // Invariant: U * A * V == m. Row op A <- E A pairs with U <- U E^{-1};
  // column op A <- A F pairs with V <- F^{-1} V.
  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < A.cols(); ++j) {
      Element t = A.at(a, j);
      A.set(a, j, A.at(b, j));
      A.set(b, j, t);
    }
    for (int i = 0; i < U.rows(); ++i) {
      Element t = U.at(i, a);
      U.set(i, a, U.at(i, b));
      U.set(i, b, t);
    }
  };
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < A.rows(); ++i) {
      Element t = A.at(i, a);
      A.set(i, a, A.at(i, b));
      A.set(i, b, t);
    }
    for (int j = 0; j < V.cols(); ++j) {
      Element t = V.at(a, j);
      V.set(a, j, V.at(b, j));
      V.set(b, j, t);
    }
  };
  // A <- A with row r scaled by u; U compensates with u^{-1}.
  auto scale_row = [&](int r, const Element& u) {
    Element ui = dom.inv(u);
    for (int j = 0; j < A.cols(); ++j) A.set(r, j, dom.mul(u, A.at(r, j)));
    for (int i = 0; i < U.rows(); ++i) U.set(i, r, dom.mul(ui, U.at(i, r)));
  };
  // row dst -= f * row src
  auto add_row = [&](int dst, int src, const Element& f) {
    for (int j = 0; j < A.cols(); ++j) A.set(dst, j, dom.sub(A.at(dst, j), dom.mul(f, A.at(src, j))));
    for (int i = 0; i < U.rows(); ++i) U.set(i, src, dom.add(U.at(i, src), dom.mul(f, U.at(i, dst))));
  };
  // col dst -= f * col src
  auto add_col = [&](int dst, int src, const Element& f) {
    for (int i = 0; i < A.rows(); ++i) A.set(i, dst, dom.sub(A.at(i, dst), dom.mul(f, A.at(i, src))));
    for (int j = 0; j < V.cols(); ++j) V.set(src, j, dom.add(V.at(src, j), dom.mul(f, V.at(dst, j))));
  };

  int k = 0;
  int bound = std::min(A.rows(), A.cols());
  while (k < bound) {
    // entry of minimal valuation in the remaining block
    int bi = -1, bj = -1;
    long bv = 0;
    for (int i = k; i < A.rows(); ++i)
      for (int j = k; j < A.cols(); ++j) {
        auto v = dom.valuation(A.at(i, j));
        if (!v) continue;
        if (bi < 0 || *v < bv) {
          bi = i;
          bj = j;
          bv = *v;
        }
      }
    if (bi < 0) break;  // remaining block is zero
    swap_rows(k, bi);
    swap_cols(k, bj);
    // normalize the pivot to a plain power of g
    Element pivot = A.at(k, k);
    Element unit = dom.div(pivot, dom.g_pow(bv));
    scale_row(k, dom.inv(unit));
    pivot = A.at(k, k);
    // clear the pivot row and column; every remaining entry has valuation >= bv
    for (int i = k + 1; i < A.rows(); ++i) {
      if (dom.is_zero(A.at(i, k))) continue;
      add_row(i, k, dom.div(A.at(i, k), pivot));
    }
    for (int j = k + 1; j < A.cols(); ++j) {
      if (dom.is_zero(A.at(k, j))) continue;
      add_col(j, k, dom.div(A.at(k, j), pivot));
    }
    out.exponents.push_back(bv);
    ++k;
  }
  out.rank = k;
  return out;
}

std::optional<RMatrix> solve_exact(const RMatrix& m, const RMatrix& b) {
  need_same_domain(m, b);
  if (m.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "solve shapes");
  const Domain& dom = m.domain();
  if (!dom.is_base()) {
    // field case: Gauss-Jordan on [m | b]
    RMatrix work = RMatrix::hcat(m, b);
    int n = m.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < work.rows(); ++c) {
      int piv = -1;
      for (int i = r; i < work.rows(); ++i)
        if (!dom.is_zero(work.at(i, c))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != r)
        for (int j = 0; j < work.cols(); ++j) {
          Element t = work.at(piv, j);
          work.set(piv, j, work.at(r, j));
          work.set(r, j, t);
        }
      Element p = work.at(r, c);
      for (int j = 0; j < work.cols(); ++j) work.set(r, j, dom.div(work.at(r, j), p));
      for (int i = 0; i < work.rows(); ++i) {
        if (i == r || dom.is_zero(work.at(i, c))) continue;
        Element f = work.at(i, c);
        for (int j = 0; j < work.cols(); ++j) work.set(i, j, dom.sub(work.at(i, j), dom.mul(f, work.at(r, j))));
      }
      pivot_col.push_back(c);
      ++r;
    }
    for (int i = r; i < work.rows(); ++i)
      for (int j = n; j < work.cols(); ++j)
        if (!dom.is_zero(work.at(i, j))) return std::nullopt;
    RMatrix x(dom, n, b.cols());
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < b.cols(); ++j) x.set(pivot_col[static_cast<size_t>(k)], j, work.at(k, n + j));
    return x;
  }
  // DVR case via SNF: M = U D V, so M x = b iff D (V x) = U^{-1} b.
  SnfResult snf = smith_normal_form(m);
  RMatrix c = mat_invert(snf.U) * b;
  RMatrix y(dom, m.cols(), b.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      const Element& ci = c.at(i, j);
      if (i >= snf.rank) {
        if (!dom.is_zero(ci)) return std::nullopt;
        continue;
      }
      if (dom.is_zero(ci)) continue;
      Element q = dom.div(ci, snf.D.at(i, i));
      if (!dom.in_domain(q)) return std::nullopt;
      y.set(i, j, q);
    }
  }
  return mat_invert(snf.V) * y;
}

RMatrix kernel_basis(const RMatrix& m) {
  const Domain& dom = m.domain();
  if (dom.is_base()) {
    SnfResult snf = smith_normal_form(m);
    RMatrix vi = mat_invert(snf.V);
    return vi.submatrix(0, vi.rows(), snf.rank, vi.cols());
  }
  // field case: columns not carrying a pivot parameterize the kernel
  RMatrix work = m;
  int n = m.cols();
  std::vector<int> pivot_of_col(static_cast<size_t>(n), -1);
  int r = 0;
  for (int c = 0; c < n && r < work.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < work.rows(); ++i)
      if (!dom.is_zero(work.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < n; ++j) {
        Element t = work.at(piv, j);
        work.set(piv, j, work.at(r, j));
        work.set(r, j, t);
      }
    Element p = work.at(r, c);
    for (int j = 0; j < n; ++j) work.set(r, j, dom.div(work.at(r, j), p));
    for (int i = 0; i < work.rows(); ++i) {
      if (i == r || dom.is_zero(work.at(i, c))) continue;
      Element f = work.at(i, c);
      for (int j = 0; j < n; ++j) work.set(i, j, dom.sub(work.at(i, j), dom.mul(f, work.at(r, j))));
    }
    pivot_of_col[static_cast<size_t>(c)] = r;
    ++r;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (pivot_of_col[static_cast<size_t>(c)] < 0) free_cols.push_back(c);
  RMatrix k(dom, n, static_cast<int>(free_cols.size()));
  for (size_t idx = 0; idx < free_cols.size(); ++idx) {
    int fc = free_cols[idx];
    k.set(fc, static_cast<int>(idx), dom.one());
    for (int c = 0; c < n; ++c) {
      int pr = pivot_of_col[static_cast<size_t>(c)];
      if (pr >= 0) k.set(c, static_cast<int>(idx), dom.neg(work.at(pr, fc)));
    }
  }
  return k;
}

}  // namespace gersten
