#include "gersten/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "gersten/gen.hpp"

namespace gersten {

namespace {

struct CheckFail {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFail{what};
}

void put(io::Json* d, const char* key, io::Json v) {
  if (d) (*d)[key] = std::move(v);
}

/* ---- exact-algebra ---- */

void suite_valuation_arithmetic(const SuiteConfig&, Gen& gen, io::Json* d) {
  const Domain& dom = gen.domain();
  Element a = gen.nonzero();
  Element b = gen.nonzero();
  put(d, "a", dom.to_string(a));
  put(d, "b", dom.to_string(b));
  long va = *dom.valuation(a);
  long vb = *dom.valuation(b);
  require(*dom.valuation(dom.mul(a, b)) == va + vb, "valuation not additive on a product");
  Element s = dom.add(a, b);
  if (!dom.is_zero(s))
    require(*dom.valuation(s) >= std::min(va, vb), "valuation of a sum below the minimum");
  require(*dom.valuation(gen.unit()) == 0, "unit with nonzero valuation");
  require(*dom.valuation(dom.g()) == 1, "uniformizer valuation is not 1");
}

void suite_residue_homomorphism(const SuiteConfig&, Gen& gen, io::Json* d) {
  const Domain& dom = gen.domain();
  Domain rd = dom.residue_domain();
  Element a = gen.element();
  Element b = gen.element();
  put(d, "a", dom.to_string(a));
  put(d, "b", dom.to_string(b));
  require(rd.eq(dom.residue(dom.add(a, b)), rd.add(dom.residue(a), dom.residue(b))),
          "residue not additive");
  require(rd.eq(dom.residue(dom.mul(a, b)), rd.mul(dom.residue(a), dom.residue(b))),
          "residue not multiplicative");
  require(rd.is_zero(dom.residue(dom.g())), "residue of the uniformizer is nonzero");
  require(rd.is_one(dom.residue(dom.one())), "residue of one is not one");
}

void suite_smith_factorization(const SuiteConfig&, Gen& gen, io::Json* d) {
  const Domain& dom = gen.domain();
  int rows = static_cast<int>(gen.rng().range(0, 6));
  int cols = static_cast<int>(gen.rng().range(0, 6));
  RMatrix m = gen.matrix(rows, cols);
  put(d, "m", io::to_json(m));
  SnfResult s = smith_normal_form(m);
  require(s.U * s.D * s.V == m, "U D V does not reproduce the input");
  if (rows > 0) require(dom.is_unit(mat_det(s.U)), "det U is not a unit");
  if (cols > 0) require(dom.is_unit(mat_det(s.V)), "det V is not a unit");
  require(std::is_sorted(s.exponents.begin(), s.exponents.end()), "exponents not ascending");
  require(static_cast<int>(s.exponents.size()) == s.rank, "exponent count differs from rank");
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (i == j && i < s.rank) {
        require(dom.eq(s.D.at(i, j), dom.g_pow(s.exponents[i])),
                "diagonal entry is not the expected power of g");
      } else {
        require(dom.is_zero(s.D.at(i, j)), "off-diagonal entry of D is nonzero");
      }
    }
}

void suite_matrix_inverse(const SuiteConfig&, Gen& gen, io::Json* d) {
  const Domain& dom = gen.domain();
  int n = static_cast<int>(gen.rng().range(0, gen.limits().max_dim));
  RMatrix a = gen.invertible(n);
  put(d, "a", io::to_json(a));
  RMatrix inv = mat_invert(a);
  require(inv * a == RMatrix::identity(dom, n), "left inverse fails");
  require(a * inv == RMatrix::identity(dom, n), "right inverse fails");
  bool rejected = false;
  try {
    mat_invert(RMatrix::scalar(dom, 1, dom.g()));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NotInvertible;
  }
  require(rejected, "inverting g over the base must fail");
}

/* ---- chain-calculus ---- */

void suite_boundary_square_zero(const SuiteConfig&, Gen& gen, io::Json* d) {
  ChainComplex x = gen.complex();
  put(d, "x", io::to_json(x));
  for (int n = x.lo() + 2; n <= x.hi(); ++n) {
    if (x.rank(n) == 0 || x.rank(n - 1) == 0 || x.rank(n - 2) == 0) continue;
    require((x.boundary(n - 1) * x.boundary(n)).is_zero(), "d d is nonzero");
  }
  ChainComplex y = gen.complex();
  put(d, "y", io::to_json(y));
  ChainComplex s = ChainComplex::direct_sum(x, y);
  for (int n = s.lo(); n <= s.hi(); ++n)
    require(s.rank(n) == x.rank(n) + y.rank(n), "direct sum ranks disagree");
}

void suite_homotopy_round_trip(const SuiteConfig&, Gen& gen, io::Json* d) {
  ChainComplex x = gen.complex();
  ChainComplex y = gen.complex();
  ChainHomotopy h = gen.homotopic_pair(x, y);
  put(d, "h", io::to_json(h));
  CHomotopyMap hc = homotopy_to_H(h);
  require(compose(hc.H(), iota(x)) == h.f - h.g, "H iota differs from f - g");
  ChainHomotopy back = H_to_homotopy(hc);
  require(back.f == h.f && back.g == h.g, "round trip changed the endpoints");
  require(back.h == h.h, "round trip changed the witness");
}

/* negate the second identity block of the contraction, suite-local copy */
ChainMap misalign_contraction(const ChainMap& r, const ChainComplex& x) {
  std::map<int, RMatrix> comps;
  const ChainComplex& ccx = r.src();
  const ChainComplex& cx = r.tgt();
  for (int n = cx.lo(); n <= cx.hi(); ++n) {
    if (cx.rank(n) == 0 || ccx.rank(n) == 0) continue;
    RMatrix m = r.component(n);
    int p = x.rank(n - 2);
    int q = x.rank(n - 1);
    const Domain& dom = m.domain();
    for (int i = 0; i < q; ++i)
      for (int j = p; j < p + q; ++j) m.set(i, j, dom.neg(m.at(i, j)));
    comps[n] = std::move(m);
  }
  return ChainMap::make(ccx, cx, std::move(comps));
}

void suite_cone_contraction(const SuiteConfig& cfg, Gen& gen, io::Json* d) {
  ChainComplex x = gen.complex();
  put(d, "x", io::to_json(x));
  ChainMap r = r_map(x);
  if (cfg.sabotage == "r-sign") r = misalign_contraction(r, x);
  ChainComplex cx = cone(x);
  CHomotopyMap::make(r, ChainMap::identity(cx), ChainMap::zero(cx, cx));
  require(compose(r, iota(cx)) == ChainMap::identity(cx), "r iota is not the identity");
}

void suite_star_composition(const SuiteConfig& cfg, Gen& gen, io::Json* d) {
  ChainComplex x = gen.complex();
  ChainComplex y = gen.complex();
  HSquare first = gen.square_on(gen.chain_map(x, y));
  HSquare second = gen.square_on(first.g());
  put(d, "first", io::to_json(first));
  put(d, "second", io::to_json(second));
  ChainMap s = cfg.sabotage == "star-order"
                   ? star(first.H(), second.H(), first.b(), second.a())
                   : star(second.H(), first.H(), second.b(), first.a());
  ChainMap a21 = compose(second.a(), first.a());
  ChainMap b21 = compose(second.b(), first.b());
  require(compose(s, iota(x)) == compose(second.g(), a21) - compose(b21, first.f()),
          "pasted witness breaks the square identity");
  HSquare::make(first.f(), second.g(), a21, b21, s);

  // strict collapse on either side
  HSquare before = gen.strict_before(first.f());
  require(star(first.H(), before.H(), first.b(), before.a()) ==
              compose(first.H(), cone_map(before.a())),
          "strict-first collapse fails");
  HSquare after = gen.strict_after(first.g());
  require(star(after.H(), first.H(), after.b(), first.a()) == compose(after.b(), first.H()),
          "strict-second collapse fails");
}

void suite_cone_functoriality(const SuiteConfig&, Gen& gen, io::Json* d) {
  ChainComplex x = gen.complex();
  ChainComplex y = gen.complex();
  ChainComplex z = gen.complex();
  ChainMap a = gen.chain_map(x, y);
  ChainMap b = gen.chain_map(y, z);
  put(d, "a", io::to_json(a));
  put(d, "b", io::to_json(b));
  require(cone_map(ChainMap::identity(x)) == ChainMap::identity(cone(x)),
          "cone of the identity is not the identity");
  require(cone_map(compose(b, a)) == compose(cone_map(b), cone_map(a)),
          "cone does not preserve composition");
}

/* ---- category-c ---- */

void suite_composition_oracle(const SuiteConfig&, Gen& gen, io::Json* d) {
  CObject x = gen.object();
  CObject y = gen.object();
  CObject z = gen.object();
  CMorphism phi = gen.morphism(x, y);
  CMorphism psi = gen.morphism(y, z);
  put(d, "phi", io::to_json(phi));
  put(d, "psi", io::to_json(psi));
  CMorphism comp = compose(psi, phi);
  require(to_chain_map(comp) == compose(to_chain_map(psi), to_chain_map(phi)),
          "block composition differs from the chain-map composite");
  require(from_chain_map(to_chain_map(comp), x, z) == comp, "block round trip fails");
}

void suite_duality_involution(const SuiteConfig&, Gen& gen, io::Json* d) {
  CObject x = gen.object();
  CObject y = gen.object();
  CObject z = gen.object();
  CMorphism phi = gen.morphism(x, y);
  CMorphism psi = gen.morphism(y, z);
  put(d, "phi", io::to_json(phi));
  put(d, "psi", io::to_json(psi));
  require(ud(ud(x)) == x, "object involution is not involutive");
  require(ud_object_swap(ud_object_swap(phi)) == phi, "involution squared moved a morphism");
  require(ud_object_swap(compose(psi, phi)) == compose(ud_object_swap(psi), ud_object_swap(phi)),
          "involution is not functorial");

  int a = static_cast<int>(gen.rng().range(0, 2));
  int c = static_cast<int>(gen.rng().range(1, 2));
  Gen::SplitTriple t = gen.split_triple(a, c);
  CMorphism da = ud_object_swap(t.alpha);
  CMorphism db = ud_object_swap(t.beta);
  CMorphism dg = ud_object_swap(t.gamma);
  CMorphism dr = ud_object_swap(t.rho);
  require(compose(db, da) == CMorphism::zero(da.src(), db.tgt()),
          "involution broke beta alpha = 0");
  require(compose(db, dg) == CMorphism::identity(db.tgt()), "involution broke the section");
  require(compose(dr, da) == CMorphism::identity(da.src()), "involution broke the retraction");
  require(compose(dr, dg) == CMorphism::zero(dg.src(), dr.tgt()),
          "involution broke rho gamma = 0");
}

void suite_triangulation_formula(const SuiteConfig& cfg, Gen& gen, io::Json* d) {
  CObject x = gen.object();
  CMorphism phi = gen.iso(x);
  put(d, "phi", io::to_json(phi));
  require(mat_is_invertible(phi.nn()), "nn block of an isomorphism is not invertible");
  require(mat_is_invertible(phi.mm()), "mm block of an isomorphism is not invertible");

  RMatrix corr = mat_invert(phi.mm()) * phi.mn();
  if (cfg.sabotage != "ut-sign") corr = -corr;
  const Domain& dom = gen.domain();
  CMorphism display = CMorphism::make(x, x, RMatrix::identity(dom, x.n),
                                      RMatrix::zero(dom, x.n, x.m), std::move(corr),
                                      RMatrix::identity(dom, x.m));
  require(ut(phi) == display, "correction differs from the displayed block matrix");
  CMorphism product = compose(phi, display);
  require(is_upper_triangular(product), "phi UT(phi) is not upper triangular");
  require(ut(product) == CMorphism::identity(x), "UT of an upper-triangular map is not id");
}

void suite_endo_quasi_iso(const SuiteConfig&, Gen& gen, io::Json* d) {
  const Domain& dom = gen.domain();
  int n = static_cast<int>(gen.rng().range(1, gen.limits().max_dim));
  CObject e = make_object(dom.ring(), n, 0);
  CMorphism good = gen.iso(e);
  CMorphism any = gen.morphism(e, e);
  CMorphism bad = CMorphism::make(e, e, gen.matrix(n, n).scaled(dom.g()),
                                  RMatrix::zero(dom, n, 0), RMatrix::zero(dom, 0, n),
                                  RMatrix::zero(dom, 0, 0));
  put(d, "any", io::to_json(any));
  require(is_quasi_iso(to_chain_map(good)), "isomorphism endo is not a quasi-iso");
  require(!is_quasi_iso(to_chain_map(bad)), "g-divisible endo passes as a quasi-iso");
  require(is_isomorphism(any) == is_quasi_iso(to_chain_map(any)),
          "quasi-iso and isomorphism disagree on an endomorphism");
}

void suite_classification_round_trip(const SuiteConfig&, Gen& gen, io::Json* d) {
  Gen::PlantedComplex p = gen.planted(true);
  put(d, "x", io::to_json(p.x));
  Classified cls = classify(p.x);
  require(cls.object.n == p.n && cls.object.m == p.m, "classified type differs from planted");
  require(mat_is_invertible(cls.w1) && mat_is_invertible(cls.w0), "witness is not invertible");
  // the witness really is a chain isomorphism from the standard complex
  ChainComplex std_x = standard_complex(cls.object);
  ChainMap::make(std_x, p.x, {{1, cls.w1}, {0, cls.w0}});

  Gen::PlantedComplex bad = gen.planted(false);
  put(d, "bad", io::to_json(bad.x));
  bool rejected = false;
  try {
    classify(bad.x);
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NotInC;
  }
  require(rejected, "planted square factor must be rejected");
}

void suite_h0_split_additivity(const SuiteConfig&, Gen& gen, io::Json* d) {
  CObject x = gen.object();
  CObject y = gen.object();
  CObject z = gen.object();
  CMorphism phi = gen.morphism(x, y);
  CMorphism psi = gen.morphism(y, z);
  put(d, "phi", io::to_json(phi));
  put(d, "psi", io::to_json(psi));
  require(h0_mor(compose(psi, phi)) == h0_mor(psi) * h0_mor(phi), "H0 is not functorial");
  require(h0_mor(CMorphism::identity(x)) == RMatrix::identity(x.domain().residue_domain(), x.n),
          "H0 of the identity");

  int a = static_cast<int>(gen.rng().range(0, 3));
  int c = static_cast<int>(gen.rng().range(0, 3));
  Gen::SplitTriple t = gen.split_triple(a, c);
  require(h0_rank(t.alpha.tgt()) == h0_rank(t.alpha.src()) + h0_rank(t.beta.tgt()),
          "H0 ranks do not add on a split triple");

  int r = static_cast<int>(gen.rng().range(0, 4));
  ChainComplex s = section_of_h0(gen.domain().ring(), r);
  require(s.rank(0) == r && s.lo() == 0 && s.hi() == 0, "section does not have H0 rank r");
}

/* ---- zero-map-engine ---- */

void suite_zero_map_data_equality(const SuiteConfig&, Gen& gen, io::Json* d) {
  CObject x = gen.object();
  CObject y = gen.object();
  CMorphism phi = gen.morphism(x, y);
  put(d, "phi", io::to_json(phi));
  require(s1s2_equality_check(phi), "mu1 and mu2 data differ");
  require(s1s2_equality_check(CMorphism::identity(x)), "mu data differ on the identity");
  require(s1s2_equality_check(CMorphism::zero(x, y)), "mu data differ on zero");
  require(mu1(phi).nn() == phi.nn(), "mu1 component is not the nn block");
  require(mu2(phi).mm() == phi.nn(), "mu2 component is not the nn block");
}

void suite_zero_map_composition(const SuiteConfig&, Gen& gen, io::Json* d) {
  CObject x = gen.object();
  CObject y = gen.object();
  CObject z = gen.object();
  for (bool upper : {true, false}) {
    CMorphism phi = gen.triangular(x, y, upper);
    CMorphism psi = gen.triangular(y, z, upper);
    put(d, upper ? "upper_phi" : "lower_phi", io::to_json(phi));
    put(d, upper ? "upper_psi" : "lower_psi", io::to_json(psi));
    if (upper) {
      require(compose(mu1(psi), mu1(phi)) == mu1(compose(psi, phi)),
              "mu1 breaks on an upper-triangular pair");
    } else {
      require(compose(mu2(psi), mu2(phi)) == mu2(compose(psi, phi)),
              "mu2 breaks on a lower-triangular pair");
    }
  }

  Gen::SplitTriple tu = gen.sum_triple(x, y, true);
  require(compose(mu1(tu.beta), mu1(tu.alpha)) == mu1(compose(tu.beta, tu.alpha)),
          "mu1 breaks on the split composite");
  split_exactness(mu1(tu.alpha), mu1(tu.beta));  // exactness of the mu1 image in B

  Gen::SplitTriple tl = gen.sum_triple(x, y, false);
  require(compose(mu2(tl.beta), mu2(tl.alpha)) ==
              CMorphism::zero(mu2_object(x), mu2_object(y)),
          "mu2 image composite is nonzero");
  require(compose(mu2(tl.beta), mu2(tl.gamma)) == CMorphism::identity(mu2_object(y)),
          "mu2 image loses the section");
  require(compose(mu2(tl.rho), mu2(tl.alpha)) == CMorphism::identity(mu2_object(x)),
          "mu2 image loses the retraction");
}

void suite_zero_map_isomorphisms(const SuiteConfig&, Gen& gen, io::Json* d) {
  CObject x = gen.object();
  CMorphism phi = gen.iso(x);
  put(d, "phi", io::to_json(phi));
  require(is_isomorphism(mu1(phi)), "mu1 of an isomorphism is not one");
  require(is_isomorphism(mu2(phi)), "mu2 of an isomorphism is not one");
  CMorphism tri = gen.triangular_iso(x, gen.rng().chance(1, 2));
  require(is_isomorphism(mu1(tri)) && is_isomorphism(mu2(tri)),
          "mu of a triangular isomorphism is not one");
}

void suite_delta_naturality(const SuiteConfig&, Gen& gen, io::Json* d) {
  const Domain& dom = gen.domain();
  CObject x = gen.object();
  put(d, "x", io::to_json(x));
  require(is_quasi_iso(delta(x)), "projection is not an equivalence");
  DeltaEquivalence eq = delta_equivalence(x);
  require(compose(delta_mor(x), eq.incl) == CMorphism::identity(mu1_object(x)),
          "homotopy inverse is not a section");
  if (x.n + x.m > 0) {
    RMatrix h0 = eq.homotopy.component(0);
    RMatrix expect = RMatrix::block_diag(RMatrix::zero(dom, x.n, x.n),
                                         RMatrix::identity(dom, x.m));
    require(h0 == expect, "contraction witness differs from the displayed block");
  }

  CObject y = gen.object();
  CMorphism lower = gen.triangular(x, y, false);
  put(d, "lower", io::to_json(lower));
  DeltaNaturality nl = delta_naturality(lower);
  require(nl.strict, "lower-triangular case should be strict");
  require(nl.lhs == nl.rhs, "strict naturality square does not commute");

  CMorphism upper = gen.triangular(x, y, true);
  put(d, "upper", io::to_json(upper));
  DeltaNaturality nu = delta_naturality(upper);
  require(nu.homotopy.f == nu.lhs && nu.homotopy.g == nu.rhs,
          "witness endpoints differ from the naturality square");
  if (y.n > 0 && x.n + x.m > 0) {
    RMatrix expect = RMatrix::hcat(RMatrix::zero(dom, y.n, x.n), -upper.nm());
    require(nu.homotopy.component(0) == expect,
            "witness differs from the displayed block row");
  }

  CMorphism mixed = gen.morphism(x, y);
  if (!is_upper_triangular(mixed) && !is_lower_triangular(mixed)) {
    bool rejected = false;
    try {
      delta_naturality(mixed);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::NotTriangular;
    }
    require(rejected, "mixed morphism must be rejected");
  }
}

void suite_rectification(const SuiteConfig&, Gen& gen, io::Json* d) {
  CObject x = gen.object();
  int len = 1 + static_cast<int>(gen.rng().below(3));
  int k = static_cast<int>(gen.rng().below(static_cast<std::uint64_t>(len)));
  std::vector<CObject> objs(static_cast<std::size_t>(len) + 1, x);
  std::vector<CMorphism> arrows;
  for (int i = 0; i < len; ++i)
    arrows.push_back(i > k ? gen.triangular_iso(x, true) : gen.iso(x));
  IsoChain chain = IsoChain::make(objs, std::move(arrows));
  put(d, "chain", io::to_json(chain));
  put(d, "k", k);

  Rectified rec = rectify(chain, k);
  for (int i = k; i < len; ++i)
    require(is_upper_triangular(rec.chain.arrows[static_cast<std::size_t>(i)]),
            "rectified chain left a lower part at or after k");
  for (const CMorphism& gmm : rec.gamma) {
    require(is_lower_triangular(gmm), "witness component is not lower triangular");
    require(is_isomorphism(gmm), "witness component is not invertible");
  }

  Rectified fixed = rectify(rec.chain, k);
  require(fixed.chain == rec.chain, "second pass moved an already-rectified chain");
  for (const CMorphism& gmm : fixed.gamma)
    require(gmm == CMorphism::identity(x), "fixed point has a nontrivial witness");

  // naturality of the full rectification under a levelwise isomorphism;
  // small blocks here, conjugation squares entry sizes along the chain
  int n2 = static_cast<int>(gen.rng().range(0, 2));
  int m2 = static_cast<int>(gen.rng().range(n2 == 0 ? 1 : 0, 2));
  CObject x2 = make_object(gen.domain().ring(), n2, m2);
  std::vector<CObject> objs2(static_cast<std::size_t>(len) + 1, x2);
  std::vector<CMorphism> ax_arrows;
  for (int i = 0; i < len; ++i) ax_arrows.push_back(gen.iso(x2));
  IsoChain ax = IsoChain::make(objs2, std::move(ax_arrows));
  std::vector<CMorphism> theta;
  for (int i = 0; i <= len; ++i) theta.push_back(gen.iso(x2));
  std::vector<CMorphism> ay;
  for (int i = 0; i < len; ++i)
    ay.push_back(compose(theta[static_cast<std::size_t>(i) + 1],
                         compose(ax.arrows[static_cast<std::size_t>(i)],
                                 invert(theta[static_cast<std::size_t>(i)]))));
  IsoChain cy = IsoChain::make(ax.objects, std::move(ay));
  require(chain_morphism_commutes(ax, cy, theta), "levelwise squares fail before transport");
  Rectified rx = rectify_all(ax);
  Rectified ry = rectify_all(cy);
  for (const CMorphism& arr : rx.chain.arrows)
    require(is_upper_triangular(arr), "full rectification left a lower part");
  std::vector<CMorphism> moved = transport_chain_morphism(theta, rx, ry);
  require(chain_morphism_commutes(rx.chain, ry.chain, moved),
          "transported squares fail after rectification");
}

/* ---- homotopy-nat ---- */

void suite_star_associativity(const SuiteConfig&, Gen& gen, io::Json* d) {
  ChainComplex x = gen.complex();
  ChainComplex y = gen.complex();
  HSquare first = gen.square_on(gen.chain_map(x, y));
  HSquare second = gen.square_on(first.g());
  HSquare third = gen.square_on(second.g());
  put(d, "first", io::to_json(first));
  put(d, "second", io::to_json(second));
  put(d, "third", io::to_json(third));
  ChainMap s21 = star(second.H(), first.H(), second.b(), first.a());
  ChainMap s32 = star(third.H(), second.H(), third.b(), second.a());
  ChainMap lhs = star(third.H(), s21, third.b(), compose(second.a(), first.a()));
  ChainMap rhs = star(s32, first.H(), compose(third.b(), second.b()), first.a());
  require(lhs == rhs, "pasting is not associative");
  HSquare c21 = compose_squares(second, first);
  require(c21.H() == s21, "square composition disagrees with the pasting formula");
  require(compose_squares(third, c21).H() == lhs, "iterated composition disagrees");
}

void suite_y_functoriality(const SuiteConfig&, Gen& gen, io::Json* d) {
  Gen::CoherentInstance inst = gen.coherent();
  put(d, "theta", io::to_json(inst.theta));
  validate_hnat(inst.cat, inst.theta);
  FunctorData yf = y_of(inst.cat, inst.theta);
  check_functor(inst.cat, yf);

  HNatData skew = inst.theta;
  std::size_t at = static_cast<std::size_t>(inst.composite);
  skew.theta_arr[at] = -skew.theta_arr[at];
  bool caught = false;
  try {
    y_of(inst.cat, skew);
  } catch (const Error& e) {
    caught = e.code() == ErrorCode::NotFunctorial;
  }
  require(caught, "incoherent data still yields a functor");
}

void suite_j_naturality(const SuiteConfig&, Gen& gen, io::Json* d) {
  Gen::CoherentInstance inst = gen.coherent();
  put(d, "theta", io::to_json(inst.theta));
  FunctorData yf = y_of(inst.cat, inst.theta);
  StrictNat ja = j1(inst.cat, inst.theta, yf);
  StrictNat jb = j2(inst.cat, inst.theta, yf);
  require(strict_nat_commutes(inst.cat, inst.theta.f, yf, ja), "first leg is not natural");
  require(strict_nat_commutes(inst.cat, inst.theta.g, yf, jb), "second leg is not natural");
  Zigzag z = zigzag(inst.cat, inst.theta);  // validates every component
  require(z.to_y.size() == ja.size() && z.from_g.size() == jb.size(),
          "zig-zag component counts disagree");
}

void suite_projection_quasi_iso(const SuiteConfig&, Gen& gen, io::Json* d) {
  ChainComplex x = gen.complex();
  ChainComplex y = gen.complex();
  ChainMap f = gen.chain_map(x, y);
  put(d, "f", io::to_json(f));
  require(is_quasi_iso(p_map(f)), "projection off the cone summand is not a quasi-iso");
  require(is_quasi_iso(j2_map(f)), "cylinder inclusion is not a quasi-iso");
  require(compose(p_map(f), j2_map(f)) == ChainMap::identity(y),
          "projection does not retract the inclusion");
  require(compose(p_map(f), j1_map(f)) == f, "projection composed with the first leg");
}

void suite_triangle_identities(const SuiteConfig&, Gen& gen, io::Json* d) {
  HSquare sq = gen.square();
  put(d, "square", io::to_json(sq));
  EpsilonPReport rep = epsilon_p_instance(sq);
  require(rep.epsilon_coherent, "epsilon fails coherence");
  require(rep.p_coherent, "p fails coherence");
  require(rep.triangle_epsilon, "p after J1 differs from epsilon");
  require(rep.triangle_identity, "p after J2 differs from the identity");

  HSquare strict = gen.strict_before(sq.f());
  require(epsilon_p_instance(strict).all(), "strict square fails the triangle identities");
}

void suite_simplicial_truncation(const SuiteConfig& cfg, Gen& gen, io::Json* d) {
  int level = std::min(cfg.level, 3);
  Gen::SimplicialInstance inst = gen.simplicial(level);
  put(d, "levels", level);
  put(d, "theta", io::to_json(inst.thetas.front()));
  SimplicialReport rep = simplicial_levels_check(inst.cat, inst.f, inst.g, inst.thetas, level);
  require(rep.monotone_maps_checked > 0, "no monotone maps checked");
  require(rep.functor_pairs_checked > 0, "no functor pairs checked");
}

/* ---- k0-checker ---- */

void suite_k0_ses_additivity(const SuiteConfig&, Gen& gen, io::Json* d) {
  SESWitness w = gen.ses();
  put(d, "ses", io::to_json(w));
  require(ses_additive(w), "class is not additive on the sequence");

  const Domain& dom = gen.domain();
  Element f = gen.nonunit();
  put(d, "f", dom.to_string(f));
  SESWitness tw = telescope_witness(dom, f);
  require(ses_additive(tw), "telescope sequence is not additive");
  require(tw.c.is_torsion(), "quotient by a nonunit is not torsion");
  require(k0_class(tw.c) == 0, "quotient class does not vanish");

  bool unit_rejected = false;
  try {
    telescope_witness(dom, gen.unit());
  } catch (const Error& e) {
    unit_rejected = e.code() == ErrorCode::UnitElement;
  }
  require(unit_rejected, "unit element must be rejected");
  bool zero_rejected = false;
  try {
    telescope_witness(dom, dom.zero());
  } catch (const Error& e) {
    zero_rejected = e.code() == ErrorCode::ZeroElement;
  }
  require(zero_rejected, "zero element must be rejected");
}

void suite_k0_torsion_vanishing(const SuiteConfig&, Gen& gen, io::Json* d) {
  const Domain& dom = gen.domain();
  RMatrix pres = gen.torsion_presentation();
  put(d, "presentation", io::to_json(pres));
  FLModule m = classify_module(pres);
  require(m.is_torsion(), "presentation is not torsion");
  require(k0_class(m) == 0, "torsion class does not vanish");
  for (long e : m.exponents) {
    SESWitness w = telescope_witness(dom, dom.g_pow(e));
    require(k0_class(w.b) == k0_class(w.a) + k0_class(w.c),
            "telescope witness is not additive");
    require(torsion_length(w.c) == e, "quotient length differs from the exponent");
  }
}

void suite_k0_length_additivity(const SuiteConfig&, Gen& gen, io::Json* d) {
  SESWitness tw = gen.torsion_ses();
  put(d, "ses", io::to_json(tw));
  require(tw.a.is_torsion() && tw.b.is_torsion() && tw.c.is_torsion(),
          "sequence is not torsion");
  require(torsion_length(tw.b) == torsion_length(tw.a) + torsion_length(tw.c),
          "length is not additive");

  FLModule m = classify_module(gen.torsion_presentation());
  put(d, "module", io::to_json(m));
  Decomposition dec = generator_decompose(m);
  require(dec.exponents == m.exponents, "decomposition changed the invariant factors");
  require(dec.cyclic_multiplicity == torsion_length(m),
          "multiplicity differs from the length");
  for (const SESWitness& w : dec.chain) {
    require(ses_additive(w), "chain step is not additive");
    require(torsion_length(w.a) == 1, "chain step does not peel one cyclic layer");
    require(torsion_length(w.b) == torsion_length(w.a) + torsion_length(w.c),
            "chain step length mismatch");
  }

  bool rejected = false;
  try {
    generator_decompose(classify_module(RMatrix::zero(gen.domain(), 1, 0)));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NotTorsion;
  }
  require(rejected, "free module must be rejected");
}

struct Suite {
  const char* anchor;
  int weight;  // instances = max(1, count / weight)
  void (*fn)(const SuiteConfig&, Gen&, io::Json*);
};

const std::vector<Suite>& suite_table() {
  static const std::vector<Suite> table = {
      {"boundary-square-zero", 1, suite_boundary_square_zero},
      {"classification-round-trip", 1, suite_classification_round_trip},
      {"composition-oracle", 1, suite_composition_oracle},
      {"cone-contraction", 1, suite_cone_contraction},
      {"cone-functoriality", 1, suite_cone_functoriality},
      {"delta-naturality", 1, suite_delta_naturality},
      {"duality-involution", 1, suite_duality_involution},
      {"endo-quasi-iso", 1, suite_endo_quasi_iso},
      {"h0-split-additivity", 1, suite_h0_split_additivity},
      {"homotopy-round-trip", 1, suite_homotopy_round_trip},
      {"j-naturality", 4, suite_j_naturality},
      {"k0-length-additivity", 1, suite_k0_length_additivity},
      {"k0-ses-additivity", 1, suite_k0_ses_additivity},
      {"k0-torsion-vanishing", 1, suite_k0_torsion_vanishing},
      {"matrix-inverse", 1, suite_matrix_inverse},
      {"projection-quasi-iso", 1, suite_projection_quasi_iso},
      {"rectification", 2, suite_rectification},
      {"residue-homomorphism", 1, suite_residue_homomorphism},
      {"simplicial-truncation", 200, suite_simplicial_truncation},
      {"smith-factorization", 1, suite_smith_factorization},
      {"star-associativity", 1, suite_star_associativity},
      {"star-composition", 1, suite_star_composition},
      {"triangle-identities", 4, suite_triangle_identities},
      {"triangulation-formula", 1, suite_triangulation_formula},
      {"valuation-arithmetic", 1, suite_valuation_arithmetic},
      {"y-functoriality", 4, suite_y_functoriality},
      {"zero-map-composition", 2, suite_zero_map_composition},
      {"zero-map-data-equality", 1, suite_zero_map_data_equality},
      {"zero-map-isomorphisms", 1, suite_zero_map_isomorphisms},
  };
  return table;
}

std::string describe_failure(const Error& e) { return e.what(); }

CheckResult run_suite(const SuiteConfig& cfg, const Domain& dom, const Suite& suite) {
  auto start = std::chrono::steady_clock::now();
  CheckResult res;
  res.anchor = suite.anchor;
  res.instances = std::max(1, cfg.count / suite.weight);
  GenLimits lim{cfg.max_dim, cfg.max_val};
  for (int i = 0; i < res.instances; ++i) {
    std::uint64_t s = derive_seed(cfg.seed, suite.anchor, static_cast<std::uint64_t>(i));
    bool failed = false;
    std::string what;
    try {
      Gen gen(dom, s, lim);
      suite.fn(cfg, gen, nullptr);
    } catch (const Error& e) {
      failed = true;
      what = describe_failure(e);
    } catch (const CheckFail& c) {
      failed = true;
      what = c.what;
    }
    if (!failed) continue;
    ++res.failures;
    if (res.counterexample.is_null()) {
      // replay the instance to capture its data alongside the failure
      io::Json data = io::Json::object();
      try {
        Gen gen(dom, s, lim);
        suite.fn(cfg, gen, &data);
      } catch (const Error&) {
      } catch (const CheckFail&) {
      }
      res.counterexample = io::Json{{"anchor", res.anchor},
                                    {"instance", i},
                                    {"seed", cfg.seed},
                                    {"error", what},
                                    {"data", std::move(data)}};
    }
  }
  res.passed = res.failures == 0;
  auto end = std::chrono::steady_clock::now();
  res.millis =
      static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count());
  if (std::getenv("GERSTEN_LAB_TRACE"))
    std::fprintf(stderr, "%-26s %4d instances %6ld ms\n", res.anchor.c_str(), res.instances,
                 res.millis);
  return res;
}

io::Json config_json(const SuiteConfig& cfg) {
  return io::Json{{"ring", cfg.ring},         {"seed", cfg.seed},
                  {"count", cfg.count},       {"max_dim", cfg.max_dim},
                  {"max_val", cfg.max_val},   {"format", cfg.format},
                  {"level", cfg.level},       {"sabotage", cfg.sabotage}};
}

}  // namespace

void validate_config(const SuiteConfig& cfg) {
  if (cfg.count < 1) fail(ErrorCode::ConfigInvalid, "count must be at least 1");
  if (cfg.max_dim < 1) fail(ErrorCode::ConfigInvalid, "max-dim must be at least 1");
  if (cfg.max_val < 1) fail(ErrorCode::ConfigInvalid, "max-val must be at least 1");
  if (cfg.level < 1 || cfg.level > 3)
    fail(ErrorCode::ConfigInvalid, "level must be between 1 and 3");
  if (cfg.format != "json" && cfg.format != "markdown")
    fail(ErrorCode::ConfigInvalid, "format must be json or markdown");
  if (!cfg.sabotage.empty() && cfg.sabotage != "ut-sign" && cfg.sabotage != "star-order" &&
      cfg.sabotage != "r-sign")
    fail(ErrorCode::ConfigInvalid, "unknown sabotage flag");
  try {
    Ring::make(cfg.ring);
  } catch (const Error& e) {
    fail(ErrorCode::ConfigInvalid, std::string("bad ring descriptor: ") + e.what());
  }
}

bool Report::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

long Report::total_millis() const {
  long total = 0;
  for (const CheckResult& c : checks) total += c.millis;
  return total;
}

std::vector<std::string> suite_anchors() {
  std::vector<std::string> out;
  for (const Suite& s : suite_table()) out.push_back(s.anchor);
  return out;
}

Report run_all_suites(const SuiteConfig& cfg) {
  validate_config(cfg);
  Domain dom(Ring::make(cfg.ring), Tag::Base);
  Report rep;
  rep.config = cfg;
  for (const Suite& s : suite_table()) rep.checks.push_back(run_suite(cfg, dom, s));
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.anchor < b.anchor; });
  return rep;
}

std::string render_json(const Report& r) {
  io::Json checks = io::Json::array();
  for (const CheckResult& c : r.checks) {
    io::Json jc{{"anchor", c.anchor},
                {"instances", c.instances},
                {"failures", c.failures},
                {"passed", c.passed}};
    jc["counterexample"] = c.counterexample;
    checks.push_back(std::move(jc));
  }
  io::Json j{{"config", config_json(r.config)},
             {"checks", std::move(checks)},
             {"passed", r.all_passed()}};
  return j.dump(2) + "\n";
}

std::string render_markdown(const Report& r) {
  std::ostringstream out;
  out << "# verification report\n\n";
  out << "- ring: " << r.config.ring << "\n";
  out << "- seed: " << r.config.seed << "\n";
  out << "- count: " << r.config.count << "\n";
  out << "- max dimension: " << r.config.max_dim << "\n";
  out << "- max valuation: " << r.config.max_val << "\n";
  out << "- simplicial level: " << r.config.level << "\n";
  if (!r.config.sabotage.empty()) out << "- sabotage: " << r.config.sabotage << "\n";
  out << "\n| check | instances | failures | result |\n";
  out << "|---|---|---|---|\n";
  for (const CheckResult& c : r.checks)
    out << "| " << c.anchor << " | " << c.instances << " | " << c.failures << " | "
        << (c.passed ? "pass" : "fail") << " |\n";
  out << "\noverall: " << (r.all_passed() ? "pass" : "fail") << "\n";
  bool any = false;
  for (const CheckResult& c : r.checks) {
    if (c.counterexample.is_null()) continue;
    if (!any) {
      out << "\n## counterexamples\n";
      any = true;
    }
    out << "\n### " << c.anchor << "\n\n```json\n" << c.counterexample.dump(2) << "\n```\n";
  }
  return out.str();
}

std::string render(const Report& r) {
  return r.config.format == "markdown" ? render_markdown(r) : render_json(r);
}

}  // namespace gersten
