#include "gersten/category_c.hpp"

namespace gersten {

namespace {

void need_same_ring(const CObject& a, const CObject& b) {
  if (!(a.ring->descriptor() == b.ring->descriptor()))
    fail(ErrorCode::DomainMismatch, "objects over different rings");
}

void need_shape(const RMatrix& m, int rows, int cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    fail(ErrorCode::DimensionMismatch, std::string("block ") + what + " has shape " +
                                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                           ", expected " + std::to_string(rows) + "x" +
                                           std::to_string(cols));
}

}  // namespace

CObject make_object(const RingPtr& ring, int n, int m) {
  if (n < 0 || m < 0) fail(ErrorCode::DimensionMismatch, "negative rank");
  return CObject{ring, n, m};
}

ChainComplex standard_complex(const CObject& x) {
  Domain dom = x.domain();
  int total = x.total();
  std::map<int, int> ranks{{0, total}, {1, total}};
  std::map<int, RMatrix> d;
  if (total > 0)
    d[1] = RMatrix::block_diag(RMatrix::scalar(dom, x.n, dom.g()), RMatrix::identity(dom, x.m));
  return ChainComplex::make(dom, ranks, d);
}

CMorphism CMorphism::make(CObject src, CObject tgt, RMatrix nn, RMatrix nm, RMatrix mn,
                          RMatrix mm) {
  need_same_ring(src, tgt);
  need_shape(nn, tgt.n, src.n, "nn");
  need_shape(nm, tgt.n, src.m, "nm");
  need_shape(mn, tgt.m, src.n, "mn");
  need_shape(mm, tgt.m, src.m, "mm");
  for (const RMatrix* b : {&nn, &nm, &mn, &mm}) {
    if (!(b->domain() == src.domain()))
      fail(ErrorCode::DomainMismatch, "block over wrong domain");
    if (!mat_in_domain(*b)) fail(ErrorCode::NotAMorphismOfC, "block entry outside the base ring");
  }
  CMorphism out;
  out.src_ = std::move(src);
  out.tgt_ = std::move(tgt);
  out.nn_ = std::move(nn);
  out.nm_ = std::move(nm);
  out.mn_ = std::move(mn);
  out.mm_ = std::move(mm);
  return out;
}

CMorphism CMorphism::identity(const CObject& x) {
  Domain dom = x.domain();
  return make(x, x, RMatrix::identity(dom, x.n), RMatrix::zero(dom, x.n, x.m),
              RMatrix::zero(dom, x.m, x.n), RMatrix::identity(dom, x.m));
}

CMorphism CMorphism::zero(const CObject& src, const CObject& tgt) {
  Domain dom = src.domain();
  return make(src, tgt, RMatrix::zero(dom, tgt.n, src.n), RMatrix::zero(dom, tgt.n, src.m),
              RMatrix::zero(dom, tgt.m, src.n), RMatrix::zero(dom, tgt.m, src.m));
}

RMatrix CMorphism::phi1() const {
  Element g = src_.domain().g();
  return RMatrix::block2x2(nn_, nm_, mn_.scaled(g), mm_);
}

RMatrix CMorphism::phi0() const {
  Element g = src_.domain().g();
  return RMatrix::block2x2(nn_, nm_.scaled(g), mn_, mm_);
}

bool CMorphism::operator==(const CMorphism& o) const {
  return src_ == o.src_ && tgt_ == o.tgt_ && nn_ == o.nn_ && nm_ == o.nm_ && mn_ == o.mn_ &&
         mm_ == o.mm_;
}

CMorphism operator+(const CMorphism& a, const CMorphism& b) {
  if (!(a.src_ == b.src_ && a.tgt_ == b.tgt_))
    fail(ErrorCode::DomainMismatch, "morphism sum endpoint mismatch");
  return CMorphism::make(a.src_, a.tgt_, a.nn_ + b.nn_, a.nm_ + b.nm_, a.mn_ + b.mn_,
                         a.mm_ + b.mm_);
}

CMorphism operator-(const CMorphism& a, const CMorphism& b) { return a + (-b); }

CMorphism CMorphism::operator-() const { return make(src_, tgt_, -nn_, -nm_, -mn_, -mm_); }

CMorphism compose(const CMorphism& psi, const CMorphism& phi) {
  if (!(phi.tgt() == psi.src())) fail(ErrorCode::DomainMismatch, "composition endpoint mismatch");
  Element g = phi.src().domain().g();
  RMatrix nn = psi.nn() * phi.nn() + (psi.nm() * phi.mn()).scaled(g);
  RMatrix nm = psi.nn() * phi.nm() + psi.nm() * phi.mm();
  RMatrix mn = psi.mn() * phi.nn() + psi.mm() * phi.mn();
  RMatrix mm = (psi.mn() * phi.nm()).scaled(g) + psi.mm() * phi.mm();
  return CMorphism::make(phi.src(), psi.tgt(), std::move(nn), std::move(nm), std::move(mn),
                         std::move(mm));
}

ChainMap to_chain_map(const CMorphism& phi) {
  std::map<int, RMatrix> comps;
  if (phi.tgt().total() > 0 || phi.src().total() > 0) {
    comps[1] = phi.phi1();
    comps[0] = phi.phi0();
  }
  return ChainMap::make(standard_complex(phi.src()), standard_complex(phi.tgt()), comps);
}

CMorphism from_chain_map(const ChainMap& f, const CObject& src, const CObject& tgt) {
  if (!(f.src() == standard_complex(src) && f.tgt() == standard_complex(tgt)))
    fail(ErrorCode::NotAMorphismOfC, "endpoints are not the standard complexes of the objects");
  const RMatrix f1 = f.component(1);
  const RMatrix f0 = f.component(0);
  RMatrix nn = f1.submatrix(0, tgt.n, 0, src.n);
  RMatrix nm = f1.submatrix(0, tgt.n, src.n, src.total());
  RMatrix mn = f0.submatrix(tgt.n, tgt.total(), 0, src.n);
  RMatrix mm = f1.submatrix(tgt.n, tgt.total(), src.n, src.total());
  CMorphism out = CMorphism::make(src, tgt, std::move(nn), std::move(nm), std::move(mn),
                                  std::move(mm));
  if (!(out.phi1() == f1 && out.phi0() == f0))
    fail(ErrorCode::NotAMorphismOfC, "chain map does not have the block form");
  return out;
}

bool is_upper_triangular(const CMorphism& phi) { return phi.mn().is_zero(); }
bool is_lower_triangular(const CMorphism& phi) { return phi.nm().is_zero(); }

CObject ud(const CObject& x) { return CObject{x.ring, x.m, x.n}; }

CMorphism ud_object_swap(const CMorphism& phi) {
  return CMorphism::make(ud(phi.src()), ud(phi.tgt()), phi.mm(), phi.mn(), phi.nm(), phi.nn());
}

bool is_isomorphism(const CMorphism& phi) {
  if (phi.src().total() != phi.tgt().total()) return false;
  return mat_is_invertible(phi.phi1()) && mat_is_invertible(phi.phi0());
}

CMorphism invert(const CMorphism& phi) {
  RMatrix inv1 = mat_invert(phi.phi1());
  RMatrix inv0 = mat_invert(phi.phi0());
  const CObject& s = phi.src();
  const CObject& t = phi.tgt();
  if (s.total() != t.total()) fail(ErrorCode::NotInvertible, "rank mismatch");
  RMatrix nn = inv1.submatrix(0, s.n, 0, t.n);
  RMatrix nm = inv1.submatrix(0, s.n, t.n, t.total());
  RMatrix mn = inv0.submatrix(s.n, s.total(), 0, t.n);
  RMatrix mm = inv1.submatrix(s.n, s.total(), t.n, t.total());
  CMorphism out = CMorphism::make(t, s, std::move(nn), std::move(nm), std::move(mn),
                                  std::move(mm));
  if (!(out.phi1() == inv1 && out.phi0() == inv0))
    fail(ErrorCode::NotInvertible, "inverse is not a morphism of the category");
  return out;
}

CMorphism ut(const CMorphism& phi) {
  const CObject& s = phi.src();
  if (phi.tgt().m != s.m || phi.tgt().n != s.n)
    fail(ErrorCode::DimensionMismatch, "triangulation needs matching source and target type");
  if (!mat_is_invertible(phi.mm())) fail(ErrorCode::BlockNotInvertible, "mm block not invertible");
  RMatrix corr = -(mat_invert(phi.mm()) * phi.mn());
  Domain dom = s.domain();
  return CMorphism::make(s, s, RMatrix::identity(dom, s.n), RMatrix::zero(dom, s.n, s.m),
                         std::move(corr), RMatrix::identity(dom, s.m));
}

int h0_rank(const CObject& x) { return x.n; }

RMatrix h0_mor(const CMorphism& phi) { return phi.nn().residue(); }

Classified classify(const ChainComplex& x) {
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (x.rank(n) > 0 && n != 0 && n != 1)
      fail(ErrorCode::PreconditionViolated, "complex not concentrated in degrees 0 and 1");
  if (x.domain().tag() != Tag::Base)
    fail(ErrorCode::PreconditionViolated, "classification works over the base ring");
  int r1 = x.rank(1), r0 = x.rank(0);
  if (r1 != r0) fail(ErrorCode::RankMismatch, "unequal ranks in degrees 1 and 0");
  Domain dom = x.domain();
  if (r1 == 0) {
    CObject obj = make_object(dom.ring(), 0, 0);
    return Classified{obj, RMatrix::zero(dom, 0, 0), RMatrix::zero(dom, 0, 0)};
  }
  RMatrix d = x.boundary(1);
  SnfResult snf = smith_normal_form(d);
  if (snf.rank < r1) fail(ErrorCode::NotInjective, "boundary map has a kernel");
  int n = 0;
  for (long a : snf.exponents) {
    if (a >= 2) fail(ErrorCode::NotInC, "g^2 divides an invariant factor");
    if (a == 1) ++n;
  }
  int m = r1 - n;
  /* exponents are non-decreasing: the m zeros come first, then the n ones.
   * P moves the ones to the front so the diagonal becomes diag(g E_n, E_m). */
  RMatrix perm_t = RMatrix::zero(dom, r1, r1);  // P^T
  for (int i = 0; i < n; ++i) perm_t.set(m + i, i, dom.one());
  for (int j = 0; j < m; ++j) perm_t.set(j, n + j, dom.one());
  RMatrix w1 = mat_invert(snf.V) * perm_t;
  RMatrix w0 = snf.U * perm_t;
  return Classified{make_object(dom.ring(), n, m), std::move(w1), std::move(w0)};
}

SplitWitness split_exactness(const CMorphism& alpha, const CMorphism& beta) {
  if (!(alpha.tgt() == beta.src()))
    fail(ErrorCode::PreconditionViolated, "maps are not composable");
  if (alpha.src().m != 0 || alpha.tgt().m != 0 || beta.tgt().m != 0)
    fail(ErrorCode::PreconditionViolated, "objects must have no torsion part");
  if (!compose(beta, alpha).nn().is_zero())
    fail(ErrorCode::PreconditionViolated, "composite is nonzero");
  const RMatrix& A = alpha.nn();
  const RMatrix& B = beta.nn();
  int n = alpha.src().n, np = alpha.tgt().n, npp = beta.tgt().n;
  RMatrix ra = A.residue();
  RMatrix rb = B.residue();
  if (mat_rank(ra) != n || mat_rank(rb) != npp || n + npp != np)
    fail(ErrorCode::ResidueNotExact, "residue sequence is not short exact");
  Domain dom = alpha.src().domain();
  Domain res = dom.residue_domain();
  /* left inverse of A over the base ring: A is equivalent to (E_n ; 0) */
  auto rho0_t = solve_exact(A.transpose(), RMatrix::identity(dom, n));
  if (!rho0_t) fail(ErrorCode::ResidueNotExact, "no retraction of the injection");
  RMatrix rho0 = rho0_t->transpose();
  /* section of B: lift a residue-field solution, then correct by the unit B gamma' */
  auto rgamma = solve_exact(rb, RMatrix::identity(res, npp));
  if (!rgamma) fail(ErrorCode::ResidueNotExact, "no residue section of the surjection");
  RMatrix gamma_lift = RMatrix::zero(dom, np, npp);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < npp; ++j) gamma_lift.set(i, j, res.lift(rgamma->at(i, j)));
  RMatrix gamma = gamma_lift * mat_invert(B * gamma_lift);
  RMatrix rho = rho0 * (RMatrix::identity(dom, np) - gamma * B);
  CObject mid = alpha.tgt();
  SplitWitness out{
      CMorphism::make(beta.tgt(), mid, std::move(gamma), RMatrix::zero(dom, np, 0),
                      RMatrix::zero(dom, 0, npp), RMatrix::zero(dom, 0, 0)),
      CMorphism::make(mid, alpha.src(), std::move(rho), RMatrix::zero(dom, n, 0),
                      RMatrix::zero(dom, 0, np), RMatrix::zero(dom, 0, 0))};
  return out;
}

ChainComplex section_of_h0(const RingPtr& ring, int r) {
  if (r < 0) fail(ErrorCode::DimensionMismatch, "negative rank");
  Domain res(ring, Tag::Residue);
  std::map<int, int> ranks;
  if (r > 0) ranks[0] = r;
  return ChainComplex::make(res, ranks, {});
}

}  // namespace gersten
