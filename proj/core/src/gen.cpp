#include "gersten/gen.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace gersten {

ChainMap invert_chain_iso(const ChainMap& u) {
  std::map<int, RMatrix> comps;
  const ChainComplex& s = u.src();
  for (int n = s.lo(); n <= s.hi(); ++n)
    if (s.rank(n) > 0) comps[n] = mat_invert(u.component(n));
  return ChainMap::make(u.tgt(), u.src(), std::move(comps));
}

FunctorData functor_from_edges(const FiniteCat& cat, std::vector<ChainComplex> objects,
                               const std::map<int, ChainMap>& edges) {
  FunctorData F;
  F.on_objects = std::move(objects);
  for (int a = 0; a < cat.arrow_count(); ++a) {
    if (cat.is_identity(a)) {
      F.on_arrows.push_back(ChainMap::identity(F.on_objects[cat.arrow(a).src]));
      continue;
    }
    const std::vector<int>& fact = cat.factorization(a);
    ChainMap m = edges.at(fact.front());
    for (std::size_t k = 1; k < fact.size(); ++k) m = compose(edges.at(fact[k]), m);
    F.on_arrows.push_back(std::move(m));
  }
  check_functor(cat, F);
  return F;
}

Gen::Gen(Domain dom, std::uint64_t seed, GenLimits lim)
    : dom_(std::move(dom)), rng_(seed), lim_(lim) {}

Element Gen::unit() {
  long c0 = 0;
  for (;;) {
    c0 = rng_.range(1, 4) * (rng_.chance(1, 2) ? 1 : -1);
    if (dom_.ring()->kind() != RingKind::LocalizedIntegers) break;
    if (mpz_class(c0) % dom_.ring()->prime() != 0) break;
  }
  Element num = dom_.from_long(c0);
  if (rng_.chance(1, 2))
    num = dom_.add(num, dom_.mul(dom_.from_long(rng_.range(-3, 3)), dom_.g()));
  if (rng_.chance(1, 4))
    num = dom_.add(num, dom_.mul(dom_.from_long(rng_.range(-2, 2)), dom_.g_pow(2)));
  Element den = dom_.one();
  if (rng_.chance(1, 3)) {
    long d0 = 0;
    for (;;) {
      d0 = rng_.range(1, 3);
      if (dom_.ring()->kind() != RingKind::LocalizedIntegers) break;
      if (mpz_class(d0) % dom_.ring()->prime() != 0) break;
    }
    Element d = dom_.from_long(d0);
    if (rng_.chance(1, 3)) d = dom_.add(d, dom_.g());
    den = d;
  }
  return dom_.div(num, den);
}

Element Gen::element() {
  if (rng_.chance(1, 8)) return dom_.zero();
  long v = rng_.range(0, lim_.max_val);
  return dom_.mul(dom_.g_pow(v), unit());
}

Element Gen::nonzero() {
  for (;;) {
    Element e = element();
    if (!dom_.is_zero(e)) return e;
  }
}

Element Gen::nonunit() { return dom_.mul(dom_.g_pow(rng_.range(1, lim_.max_val)), unit()); }

Element Gen::small_scalar() {
  Element e = dom_.from_long(rng_.range(-2, 2));
  if (rng_.chance(1, 4)) e = dom_.mul(e, dom_.g());
  return e;
}

RMatrix Gen::matrix(int rows, int cols) {
  RMatrix m(dom_, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!rng_.chance(1, 3)) m.set(i, j, element());
  return m;
}

RMatrix Gen::invertible(int n) {
  RMatrix m = RMatrix::identity(dom_, n);
  if (n == 0) return m;
  long ops = 2 * n + static_cast<long>(rng_.below(static_cast<std::uint64_t>(n) + 3));
  for (long k = 0; k < ops; ++k) {
    int i = static_cast<int>(rng_.below(n));
    int j = static_cast<int>(rng_.below(n));
    switch (rng_.below(4)) {
      case 0: {  // row_i += c row_j
        if (i == j) break;
        Element c = small_scalar();
        for (int t = 0; t < n; ++t) m.set(i, t, dom_.add(m.at(i, t), dom_.mul(c, m.at(j, t))));
        break;
      }
      case 1: {  // col_i += c col_j
        if (i == j) break;
        Element c = small_scalar();
        for (int t = 0; t < n; ++t) m.set(t, i, dom_.add(m.at(t, i), dom_.mul(c, m.at(t, j))));
        break;
      }
      case 2: {  // swap rows
        if (i == j) break;
        for (int t = 0; t < n; ++t) {
          Element tmp = m.at(i, t);
          m.set(i, t, m.at(j, t));
          m.set(j, t, tmp);
        }
        break;
      }
      default: {  // scale a row by a unit
        Element c = unit();
        for (int t = 0; t < n; ++t) m.set(i, t, dom_.mul(c, m.at(i, t)));
        break;
      }
    }
  }
  return m;
}

ChainComplex Gen::complex(int max_len, int max_rank) {
  int lo = static_cast<int>(rng_.range(-1, 1));
  int len = static_cast<int>(rng_.range(0, max_len));
  int hi = lo + len;
  /* building blocks: rank-1 pieces at one degree and two-term pieces
   * [B --g^a--> B] spanning (n, n-1); d*d = 0 holds piecewise */
  std::map<int, int> singles, pairs;  // pairs keyed by source degree
  for (int n = lo; n <= hi; ++n) singles[n] = rng_.chance(1, 2) ? 1 : 0;
  for (int n = lo + 1; n <= hi; ++n) {
    int p = rng_.chance(2, 3) ? 1 : 0;
    if (p == 1 && max_rank >= 5 && rng_.chance(1, 4)) p = 2;
    pairs[n] = p;
  }
  auto rank_at = [&](int n) {
    int r = 0;
    if (auto it = singles.find(n); it != singles.end()) r += it->second;
    if (auto it = pairs.find(n); it != pairs.end()) r += it->second;
    if (auto it = pairs.find(n + 1); it != pairs.end()) r += it->second;
    return r;
  };
  for (int n = lo; n <= hi; ++n)
    while (rank_at(n) > max_rank) {
      if (singles[n] > 0)
        --singles[n];
      else if (pairs.count(n + 1) && pairs[n + 1] > 0)
        --pairs[n + 1];
      else
        --pairs[n];
    }

  std::map<int, int> ranks;
  for (int n = lo; n <= hi; ++n)
    if (rank_at(n) > 0) ranks[n] = rank_at(n);
  if (ranks.empty()) return ChainComplex::zero(dom_);

  /* coordinates at degree n: pair sources at n, pair targets of pairs at
   * n+1, then singles */
  std::map<int, RMatrix> boundaries;
  for (int n = lo + 1; n <= hi; ++n) {
    int p = pairs.count(n) ? pairs[n] : 0;
    if (p == 0 || rank_at(n) == 0 || rank_at(n - 1) == 0) continue;
    RMatrix d(dom_, rank_at(n - 1), rank_at(n));
    int p_below = pairs.count(n - 1) ? pairs[n - 1] : 0;
    for (int j = 0; j < p; ++j)
      d.set(p_below + j, j, dom_.g_pow(rng_.range(0, lim_.max_val)));
    boundaries[n] = std::move(d);
  }
  ChainComplex x = ChainComplex::make(dom_, std::move(ranks), std::move(boundaries));
  if (rng_.chance(3, 4)) x = conjugate(x).first;
  return x;
}

std::pair<ChainComplex, ChainMap> Gen::conjugate(const ChainComplex& x) {
  if (x.is_zero()) return {x, ChainMap::identity(x)};
  std::map<int, RMatrix> q, comps, boundaries;
  for (int n = x.lo(); n <= x.hi(); ++n) q[n] = invertible(x.rank(n));
  for (int n = x.lo() + 1; n <= x.hi(); ++n)
    if (x.rank(n) > 0 && x.rank(n - 1) > 0)
      boundaries[n] = q[n - 1] * x.boundary(n) * mat_invert(q[n]);
  ChainComplex y = ChainComplex::make(dom_, x.ranks(), std::move(boundaries));
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (x.rank(n) > 0) comps[n] = q[n];
  return {y, ChainMap::make(x, y, std::move(comps))};
}

std::map<int, RMatrix> Gen::degree_one(const ChainComplex& x, const ChainComplex& y) {
  std::map<int, RMatrix> sigma;
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (x.rank(n) > 0 && y.rank(n + 1) > 0) sigma[n] = matrix(y.rank(n + 1), x.rank(n));
  return sigma;
}

ChainMap Gen::assemble(const ChainComplex& x, const ChainComplex& y,
                       const std::map<int, RMatrix>& sigma) {
  std::map<int, RMatrix> comps;
  int lo = std::min(x.lo(), y.lo());
  int hi = std::max(x.hi(), y.hi());
  for (int n = lo; n <= hi; ++n) {
    if (x.rank(n) == 0 || y.rank(n) == 0) continue;
    RMatrix f = RMatrix::zero(dom_, y.rank(n), x.rank(n));
    if (auto it = sigma.find(n); it != sigma.end()) f = f + y.boundary(n + 1) * it->second;
    if (auto it = sigma.find(n - 1); it != sigma.end()) f = f + it->second * x.boundary(n);
    if (!f.is_zero()) comps[n] = std::move(f);
  }
  return ChainMap::make(x, y, std::move(comps));
}

ChainMap Gen::null_homotopic(const ChainComplex& x, const ChainComplex& y,
                             std::map<int, RMatrix>* witness) {
  std::map<int, RMatrix> sigma = degree_one(x, y);
  ChainMap f = assemble(x, y, sigma);
  if (witness) *witness = std::move(sigma);
  return f;
}

ChainMap Gen::chain_map(const ChainComplex& x, const ChainComplex& y) {
  ChainMap f = null_homotopic(x, y);
  if (x == y && rng_.chance(1, 2)) {
    Element c = rng_.chance(1, 2) ? unit() : dom_.from_long(rng_.range(-2, 2));
    f = f + ChainMap::identity(x).scaled(c);
  }
  return f;
}

ChainHomotopy Gen::homotopic_pair(const ChainComplex& x, const ChainComplex& y) {
  ChainMap f = chain_map(x, y);
  std::map<int, RMatrix> sigma = degree_one(x, y);
  ChainMap g = f - assemble(x, y, sigma);
  return ChainHomotopy::make(std::move(f), std::move(g), std::move(sigma));
}

HSquare Gen::square_on(const ChainMap& f) {
  const ChainComplex& x = f.src();
  const ChainComplex& xp = f.tgt();
  auto [y, a] = conjugate(x);
  auto [yp, b0] = conjugate(xp);
  ChainMap b = b0 + null_homotopic(xp, yp);
  std::map<int, RMatrix> sigma;
  ChainMap k = null_homotopic(x, yp, &sigma);
  ChainMap g = compose(compose(b, f) + k, invert_chain_iso(a));
  ChainMap H =
      homotopy_to_H(ChainHomotopy::make(k, ChainMap::zero(x, yp), std::move(sigma))).H();
  return HSquare::make(f, std::move(g), std::move(a), std::move(b), std::move(H));
}

HSquare Gen::square() {
  ChainComplex x = complex();
  ChainComplex y = complex();
  return square_on(chain_map(x, y));
}

HSquare Gen::strict_before(const ChainMap& f) {
  auto [w, u] = conjugate(f.src());
  auto [wp, v] = conjugate(f.tgt());
  ChainMap a0 = invert_chain_iso(u);
  ChainMap b0 = invert_chain_iso(v);
  ChainMap e = compose(v, compose(f, a0));
  return HSquare::make(std::move(e), f, std::move(a0), std::move(b0),
                       ChainMap::zero(cone(w), f.tgt()));
}

HSquare Gen::strict_after(const ChainMap& g) {
  auto [z, r] = conjugate(g.src());
  auto [zp, s] = conjugate(g.tgt());
  ChainMap g2 = compose(s, compose(g, invert_chain_iso(r)));
  return HSquare::make(g, std::move(g2), std::move(r), std::move(s),
                       ChainMap::zero(cone(g.src()), zp));
}

CObject Gen::object() {
  int n = static_cast<int>(rng_.range(0, lim_.max_dim));
  int m = static_cast<int>(rng_.range(0, lim_.max_dim));
  if (n == 0 && m == 0) n = 1;
  return make_object(dom_.ring(), n, m);
}

CMorphism Gen::morphism(const CObject& src, const CObject& tgt) {
  return CMorphism::make(src, tgt, matrix(tgt.n, src.n), matrix(tgt.n, src.m),
                         matrix(tgt.m, src.n), matrix(tgt.m, src.m));
}

CMorphism Gen::iso(const CObject& x) {
  return CMorphism::make(x, x, invertible(x.n), matrix(x.n, x.m), matrix(x.m, x.n),
                         invertible(x.m));
}

CMorphism Gen::triangular(const CObject& src, const CObject& tgt, bool upper) {
  RMatrix nm = upper ? matrix(tgt.n, src.m) : RMatrix::zero(dom_, tgt.n, src.m);
  RMatrix mn = upper ? RMatrix::zero(dom_, tgt.m, src.n) : matrix(tgt.m, src.n);
  return CMorphism::make(src, tgt, matrix(tgt.n, src.n), std::move(nm), std::move(mn),
                         matrix(tgt.m, src.m));
}

IsoChain Gen::iso_chain(int len) {
  CObject x = object();
  std::vector<CObject> objects(static_cast<std::size_t>(len) + 1, x);
  std::vector<CMorphism> arrows;
  for (int i = 0; i < len; ++i) arrows.push_back(iso(x));
  return IsoChain::make(std::move(objects), std::move(arrows));
}

namespace {

/* direct-sum inclusion x -> s, projection s -> y, and their splittings,
 * all block-diagonal */
struct SumBlocks {
  CMorphism alpha, beta, gamma, rho;
};

SumBlocks sum_blocks(const Domain& d, const CObject& x, const CObject& y, const CObject& s) {
  auto incl = [&](int a, int b) {
    return RMatrix::vcat(RMatrix::identity(d, a), RMatrix::zero(d, b, a));
  };
  auto proj = [&](int a, int b) {
    return RMatrix::hcat(RMatrix::zero(d, b, a), RMatrix::identity(d, b));
  };
  auto coincl = [&](int a, int b) {
    return RMatrix::vcat(RMatrix::zero(d, a, b), RMatrix::identity(d, b));
  };
  auto coproj = [&](int a, int b) {
    return RMatrix::hcat(RMatrix::identity(d, a), RMatrix::zero(d, a, b));
  };
  CMorphism alpha = CMorphism::make(x, s, incl(x.n, y.n), RMatrix::zero(d, s.n, x.m),
                                    RMatrix::zero(d, s.m, x.n), incl(x.m, y.m));
  CMorphism beta = CMorphism::make(s, y, proj(x.n, y.n), RMatrix::zero(d, y.n, s.m),
                                   RMatrix::zero(d, y.m, s.n), proj(x.m, y.m));
  CMorphism gamma = CMorphism::make(y, s, coincl(x.n, y.n), RMatrix::zero(d, s.n, y.m),
                                    RMatrix::zero(d, s.m, y.n), coincl(x.m, y.m));
  CMorphism rho = CMorphism::make(s, x, coproj(x.n, y.n), RMatrix::zero(d, x.n, s.m),
                                  RMatrix::zero(d, x.m, s.n), coproj(x.m, y.m));
  return {std::move(alpha), std::move(beta), std::move(gamma), std::move(rho)};
}

}  // namespace

Gen::SplitTriple Gen::split_triple(int a, int c) {
  CObject A = make_object(dom_.ring(), a, 0);
  CObject B = make_object(dom_.ring(), a + c, 0);
  CObject C = make_object(dom_.ring(), c, 0);
  SumBlocks blocks = sum_blocks(dom_, A, C, B);
  CMorphism phi = iso(A);
  CMorphism psi = iso(B);
  CMorphism chi = iso(C);
  return {compose(psi, compose(blocks.alpha, phi)),
          compose(chi, compose(blocks.beta, invert(psi))),
          compose(psi, compose(blocks.gamma, invert(chi))),
          compose(invert(phi), compose(blocks.rho, invert(psi)))};
}

CMorphism Gen::triangular_iso(const CObject& x, bool upper) {
  RMatrix nm = upper ? matrix(x.n, x.m) : RMatrix::zero(dom_, x.n, x.m);
  RMatrix mn = upper ? RMatrix::zero(dom_, x.m, x.n) : matrix(x.m, x.n);
  return CMorphism::make(x, x, invertible(x.n), std::move(nm), std::move(mn),
                         invertible(x.m));
}

Gen::SplitTriple Gen::sum_triple(const CObject& x, const CObject& y, bool upper) {
  CObject s = make_object(dom_.ring(), x.n + y.n, x.m + y.m);
  SumBlocks blocks = sum_blocks(dom_, x, y, s);
  CMorphism u = triangular_iso(x, upper);
  CMorphism w = triangular_iso(s, upper);
  CMorphism v = triangular_iso(y, upper);
  return {compose(w, compose(blocks.alpha, u)), compose(v, compose(blocks.beta, invert(w))),
          compose(w, compose(blocks.gamma, invert(v))),
          compose(invert(u), compose(blocks.rho, invert(w)))};
}

Gen::PlantedComplex Gen::planted(bool in_c) {
  int s = static_cast<int>(rng_.range(1, lim_.max_dim));
  std::vector<long> exps;
  for (int i = 0; i < s; ++i) exps.push_back(static_cast<long>(rng_.below(2)));
  if (!in_c) exps[rng_.below(static_cast<std::uint64_t>(s))] = 2;
  RMatrix d(dom_, s, s);
  int ones = 0;
  for (int i = 0; i < s; ++i) {
    d.set(i, i, dom_.g_pow(exps[static_cast<std::size_t>(i)]));
    if (exps[static_cast<std::size_t>(i)] == 1) ++ones;
  }
  RMatrix m = invertible(s) * d * invertible(s);
  ChainComplex x = ChainComplex::make(dom_, {{1, s}, {0, s}}, {{1, std::move(m)}});
  return {std::move(x), ones, s - ones};
}

Gen::CoherentInstance Gen::coherent() {
  for (int attempt = 0; attempt < 8; ++attempt) {
    int nobj = static_cast<int>(rng_.range(3, 4));
    std::vector<std::string> names;
    for (int i = 0; i < nobj; ++i) names.push_back(std::to_string(i));
    std::vector<CatArrow> edges;
    for (int i = 0; i + 1 < nobj; ++i) edges.push_back({"e" + std::to_string(i), i, i + 1});
    if (nobj == 4 && rng_.chance(1, 2))
      edges.push_back(rng_.chance(1, 2) ? CatArrow{"c", 0, 2} : CatArrow{"c", 1, 3});
    FiniteCat cat = FiniteCat::free_on_quiver(names, edges);

    std::vector<int> edge_arrow(edges.size(), -1);
    for (int a = 0; a < cat.arrow_count(); ++a)
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (cat.arrow(a).name == edges[e].name) edge_arrow[e] = a;

    ChainComplex z = complex(2, 2);
    if (z.is_zero()) continue;

    std::vector<ChainComplex> fobj;
    std::vector<ChainMap> into_f;  // iso z -> f(i)
    for (int i = 0; i < nobj; ++i) {
      auto [fi, ui] = conjugate(z);
      fobj.push_back(std::move(fi));
      into_f.push_back(std::move(ui));
    }
    std::map<int, ChainMap> fedges;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      int i = edges[e].src, j = edges[e].dst;
      ChainMap core = ChainMap::identity(z).scaled(unit()) + null_homotopic(z, z);
      fedges[edge_arrow[e]] = compose(into_f[j], compose(core, invert_chain_iso(into_f[i]))) +
                              null_homotopic(fobj[i], fobj[j]);
    }
    FunctorData F = functor_from_edges(cat, fobj, fedges);

    std::vector<ChainComplex> gobj;
    std::vector<ChainMap> theta_obj, r_iso;
    std::vector<std::map<int, RMatrix>> sig;
    for (int i = 0; i < nobj; ++i) {
      auto [gi, ri] = conjugate(F.on_objects[i]);
      gobj.push_back(gi);
      std::map<int, RMatrix> s = degree_one(F.on_objects[i], gi);
      theta_obj.push_back(ri + assemble(F.on_objects[i], gi, s));
      r_iso.push_back(std::move(ri));
      sig.push_back(std::move(s));
    }
    std::map<int, ChainMap> gedges;
    std::map<int, std::map<int, RMatrix>> tau;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      int i = edges[e].src, j = edges[e].dst;
      std::map<int, RMatrix> t = degree_one(F.on_objects[i], gobj[j]);
      ChainMap ka = assemble(F.on_objects[i], gobj[j], t);
      gedges[edge_arrow[e]] = compose(compose(theta_obj[j], fedges[edge_arrow[e]]) + ka,
                                      invert_chain_iso(r_iso[i]));
      tau[edge_arrow[e]] = std::move(t);
    }
    FunctorData G = functor_from_edges(cat, gobj, gedges);

    std::map<int, ChainMap> theta_edges;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      int i = edges[e].src, j = edges[e].dst;
      const ChainComplex& fi = F.on_objects[i];
      const ChainComplex& gj = G.on_objects[j];
      const ChainMap& fa = fedges[edge_arrow[e]];
      const ChainMap& ga = gedges[edge_arrow[e]];
      ChainMap wa = compose(theta_obj[j], fa) - compose(ga, theta_obj[i]);
      std::map<int, RMatrix> ha;
      for (int n = fi.lo(); n <= fi.hi(); ++n) {
        if (fi.rank(n) == 0 || gj.rank(n + 1) == 0) continue;
        RMatrix h = RMatrix::zero(dom_, gj.rank(n + 1), fi.rank(n));
        if (auto it = tau[edge_arrow[e]].find(n); it != tau[edge_arrow[e]].end())
          h = h - it->second;
        if (auto it = sig[static_cast<std::size_t>(i)].find(n);
            it != sig[static_cast<std::size_t>(i)].end())
          h = h - ga.component(n + 1) * it->second;
        if (!h.is_zero()) ha[n] = std::move(h);
      }
      theta_edges[edge_arrow[e]] =
          homotopy_to_H(ChainHomotopy::make(wa, ChainMap::zero(fi, gj), std::move(ha))).H();
    }

    CoherentInstance out;
    out.theta = extend_from_generators(cat, F, G, theta_obj, theta_edges);
    out.cat = std::move(cat);
    for (int a = 0; a < out.cat.arrow_count(); ++a)
      if (out.cat.factorization(a).size() >= 2 && !out.theta.theta_arr[a].is_zero()) {
        out.composite = a;
        break;
      }
    if (out.composite >= 0) return out;
  }

  /* deterministic fallback: the two-edge path over [B --g--> B] with
   * theta scaled by powers of the unit 1 - g */
  RMatrix dg(dom_, 1, 1);
  dg.set(0, 0, dom_.g());
  ChainComplex x = ChainComplex::make(dom_, {{1, 1}, {0, 1}}, {{1, std::move(dg)}});
  FiniteCat cat = FiniteCat::free_on_quiver({"0", "1", "2"}, {{"e0", 0, 1}, {"e1", 1, 2}});
  ChainMap id = ChainMap::identity(x);
  FunctorData F{{x, x, x}, {}};
  F.on_arrows.resize(static_cast<std::size_t>(cat.arrow_count()), id);
  for (int a = 0; a < cat.arrow_count(); ++a)
    if (cat.is_identity(a)) F.on_arrows[static_cast<std::size_t>(a)] = id;
  Element u = dom_.sub(dom_.one(), dom_.g());
  RMatrix h0(dom_, 1, 1);
  h0.set(0, 0, dom_.one());
  ChainMap H = homotopy_to_H(ChainHomotopy::make(id, id.scaled(u), {{0, h0}})).H();
  std::vector<ChainMap> tobj{id, id.scaled(u), id.scaled(dom_.mul(u, u))};
  int e0 = -1, e1 = -1;
  for (int a = 0; a < cat.arrow_count(); ++a) {
    if (cat.arrow(a).name == "e0") e0 = a;
    if (cat.arrow(a).name == "e1") e1 = a;
  }
  CoherentInstance out;
  out.theta =
      extend_from_generators(cat, F, F, tobj, {{e0, -H}, {e1, H.scaled(dom_.neg(u))}});
  out.cat = std::move(cat);
  for (int a = 0; a < out.cat.arrow_count(); ++a)
    if (out.cat.factorization(a).size() >= 2 && !out.theta.theta_arr[a].is_zero())
      out.composite = a;
  return out;
}

Gen::SimplicialInstance Gen::simplicial(int N) {
  CoherentInstance inst = coherent();
  SimplicialInstance s;
  s.levels = N;
  auto constant = [&](const FunctorData& F) {
    SimplicialFunctorData d;
    d.level.assign(static_cast<std::size_t>(N) + 1, F);
    StrictNat idnat;
    for (const ChainComplex& x : F.on_objects) idnat.push_back(ChainMap::identity(x));
    d.face.resize(static_cast<std::size_t>(N) + 1);
    for (int n = 1; n <= N; ++n)
      d.face[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, idnat);
    d.degen.resize(static_cast<std::size_t>(std::max(N, 0)));
    for (int n = 0; n < N; ++n)
      d.degen[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, idnat);
    return d;
  };
  s.f = constant(inst.theta.f);
  s.g = constant(inst.theta.g);
  s.thetas.assign(static_cast<std::size_t>(N) + 1, inst.theta);
  s.cat = std::move(inst.cat);
  return s;
}

RMatrix Gen::torsion_presentation() {
  int s = static_cast<int>(rng_.range(1, lim_.max_dim));
  RMatrix d(dom_, s, s);
  for (int i = 0; i < s; ++i) d.set(i, i, dom_.g_pow(rng_.range(1, lim_.max_val)));
  return invertible(s) * d * invertible(s);
}

SESWitness Gen::split_ses(bool torsion_only) {
  auto torsion_block = [&](int gens, int* rows) {
    int k = gens;
    int extra = torsion_only ? 0 : static_cast<int>(rng_.range(0, 1));
    RMatrix p(dom_, k + extra, k);
    for (int i = 0; i < k; ++i) p.set(i, i, dom_.g_pow(rng_.range(1, lim_.max_val)));
    *rows = k + extra;
    return p;
  };
  int sa = 0, sc = 0;
  RMatrix pa0 = torsion_block(static_cast<int>(rng_.range(1, 2)), &sa);
  RMatrix pc0 = torsion_block(static_cast<int>(rng_.range(1, 2)), &sc);
  RMatrix pb0 = RMatrix::block_diag(pa0, pc0);
  RMatrix f0 = RMatrix::vcat(RMatrix::identity(dom_, sa), RMatrix::zero(dom_, sc, sa));
  RMatrix g0 = RMatrix::hcat(RMatrix::zero(dom_, sc, sa), RMatrix::identity(dom_, sc));
  RMatrix ua = invertible(sa), ub = invertible(sa + sc), uc = invertible(sc);
  RMatrix pa = ua * pa0 * invertible(pa0.cols());
  RMatrix pb = ub * pb0 * invertible(pb0.cols());
  RMatrix pc = uc * pc0 * invertible(pc0.cols());
  return make_ses(pa, pb, pc, ub * f0 * mat_invert(ua), uc * g0 * mat_invert(ub));
}

SESWitness Gen::peel_ses() {
  long j = rng_.range(2, std::max(2, lim_.max_val));
  RMatrix pa(dom_, 1, 1), pb(dom_, 1, 1), pc(dom_, 1, 1), f(dom_, 1, 1), g(dom_, 1, 1);
  pa.set(0, 0, dom_.g());
  pb.set(0, 0, dom_.g_pow(j));
  pc.set(0, 0, dom_.g_pow(j - 1));
  f.set(0, 0, dom_.g_pow(j - 1));
  g.set(0, 0, dom_.one());
  Element u1 = unit(), u2 = unit(), u3 = unit();
  pa = pa.scaled(u1);
  pb = pb.scaled(u2);
  pc = pc.scaled(u3);
  return make_ses(pa, pb, pc, f, g);
}

SESWitness Gen::quotient_ses() {
  Element fe = nonunit();
  RMatrix pa(dom_, 1, 0), pb(dom_, 1, 0), pc(dom_, 1, 1), f(dom_, 1, 1), g(dom_, 1, 1);
  pc.set(0, 0, fe);
  f.set(0, 0, fe);
  g.set(0, 0, unit());
  return make_ses(pa, pb, pc, f, g);
}

SESWitness Gen::ses() {
  switch (rng_.below(3)) {
    case 0: return split_ses(false);
    case 1: return peel_ses();
    default: return quotient_ses();
  }
}

SESWitness Gen::torsion_ses() {
  return rng_.chance(1, 2) ? split_ses(true) : peel_ses();
}

}  // namespace gersten
