#include "gersten/zero_map.hpp"

namespace gersten {

CObject mu1_object(const CObject& x) { return CObject{x.ring, x.n, 0}; }
CObject mu2_object(const CObject& x) { return CObject{x.ring, 0, x.n}; }

CMorphism mu1(const CMorphism& phi) {
  CObject s = mu1_object(phi.src()), t = mu1_object(phi.tgt());
  Domain dom = s.domain();
  return CMorphism::make(s, t, phi.nn(), RMatrix::zero(dom, t.n, 0), RMatrix::zero(dom, 0, s.n),
                         RMatrix::zero(dom, 0, 0));
}

CMorphism mu2(const CMorphism& phi) {
  CObject s = mu2_object(phi.src()), t = mu2_object(phi.tgt());
  Domain dom = s.domain();
  return CMorphism::make(s, t, RMatrix::zero(dom, 0, 0), RMatrix::zero(dom, 0, s.m),
                         RMatrix::zero(dom, t.m, 0), phi.nn());
}

bool s1s2_equality_check(const CMorphism& phi) {
  ChainMap a = to_chain_map(mu1(phi));
  ChainMap b = to_chain_map(mu2(phi));
  for (int n = 0; n <= 1; ++n) {
    if (a.src().rank(n) != b.src().rank(n) || a.tgt().rank(n) != b.tgt().rank(n)) return false;
    if (!(a.component(n) == b.component(n))) return false;
  }
  return true;
}

CMorphism delta_mor(const CObject& x) {
  Domain dom = x.domain();
  return CMorphism::make(x, mu1_object(x), RMatrix::identity(dom, x.n),
                         RMatrix::zero(dom, x.n, x.m), RMatrix::zero(dom, 0, x.n),
                         RMatrix::zero(dom, 0, x.m));
}

ChainMap delta(const CObject& x) { return to_chain_map(delta_mor(x)); }

DeltaEquivalence delta_equivalence(const CObject& x) {
  Domain dom = x.domain();
  CMorphism incl = CMorphism::make(mu1_object(x), x, RMatrix::identity(dom, x.n),
                                   RMatrix::zero(dom, x.n, 0), RMatrix::zero(dom, x.m, x.n),
                                   RMatrix::zero(dom, x.m, 0));
  ChainMap id = to_chain_map(CMorphism::identity(x));
  ChainMap round_trip = to_chain_map(compose(incl, delta_mor(x)));
  std::map<int, RMatrix> h;
  if (x.total() > 0)
    h[0] = RMatrix::block_diag(RMatrix::zero(dom, x.n, x.n), RMatrix::identity(dom, x.m));
  return DeltaEquivalence{incl, ChainHomotopy::make(id, round_trip, std::move(h))};
}

DeltaNaturality delta_naturality(const CMorphism& phi) {
  bool lower = is_lower_triangular(phi);
  bool upper = is_upper_triangular(phi);
  if (!lower && !upper) fail(ErrorCode::NotTriangular, "morphism has both off-diagonal blocks");
  ChainMap lhs = compose(to_chain_map(mu1(phi)), delta(phi.src()));
  ChainMap rhs = compose(delta(phi.tgt()), to_chain_map(phi));
  Domain dom = phi.src().domain();
  std::map<int, RMatrix> h;
  if (phi.tgt().n > 0 && phi.src().total() > 0)
    h[0] = RMatrix::hcat(RMatrix::zero(dom, phi.tgt().n, phi.src().n), -phi.nm());
  ChainHomotopy witness = ChainHomotopy::make(lhs, rhs, std::move(h));
  return DeltaNaturality{lower, std::move(lhs), std::move(rhs), std::move(witness)};
}

IsoChain IsoChain::make(std::vector<CObject> objects, std::vector<CMorphism> arrows) {
  if (objects.empty() || objects.size() != arrows.size() + 1)
    fail(ErrorCode::PreconditionViolated, "chain needs k+1 objects for k arrows");
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (!(arrows[i].src() == objects[i] && arrows[i].tgt() == objects[i + 1]))
      fail(ErrorCode::PreconditionViolated, "arrow endpoints do not match the object list");
    if (!is_isomorphism(arrows[i]))
      fail(ErrorCode::PreconditionViolated, "chain arrow is not an isomorphism");
  }
  IsoChain out;
  out.upper.reserve(arrows.size());
  for (const CMorphism& a : arrows) out.upper.push_back(is_upper_triangular(a));
  out.objects = std::move(objects);
  out.arrows = std::move(arrows);
  return out;
}

bool IsoChain::operator==(const IsoChain& o) const {
  return objects == o.objects && arrows == o.arrows;
}

Rectified rectify(const IsoChain& chain, int k) {
  int len = chain.length();
  if (k < 0 || k >= len) fail(ErrorCode::PreconditionViolated, "index outside the arrow range");
  for (const CObject& obj : chain.objects)
    if (!(obj == chain.objects.front()))
      fail(ErrorCode::ObjectsNotEqual, "chain objects differ; normalize first");
  for (int i = k + 1; i < len; ++i)
    if (!chain.upper[i])
      fail(ErrorCode::PreconditionViolated, "arrow after the rectification index not upper triangular");
  CMorphism alpha = ut(chain.arrows[k]);
  std::vector<CMorphism> arrows = chain.arrows;
  arrows[k] = compose(chain.arrows[k], alpha);
  if (k > 0) arrows[k - 1] = compose(invert(alpha), chain.arrows[k - 1]);
  std::vector<CMorphism> gamma;
  gamma.reserve(chain.objects.size());
  for (size_t i = 0; i < chain.objects.size(); ++i)
    gamma.push_back(static_cast<int>(i) == k ? alpha : CMorphism::identity(chain.objects[i]));
  return Rectified{IsoChain::make(chain.objects, std::move(arrows)), std::move(gamma)};
}

Rectified rectify_all(const IsoChain& chain) {
  Rectified acc;
  acc.chain = chain;
  acc.gamma.reserve(chain.objects.size());
  for (const CObject& obj : chain.objects) acc.gamma.push_back(CMorphism::identity(obj));
  for (int k = chain.length() - 1; k >= 0; --k) {
    Rectified step = rectify(acc.chain, k);
    for (size_t i = 0; i < acc.gamma.size(); ++i)
      acc.gamma[i] = compose(acc.gamma[i], step.gamma[i]);
    acc.chain = std::move(step.chain);
  }
  return acc;
}

std::vector<CMorphism> transport_chain_morphism(const std::vector<CMorphism>& theta,
                                                const Rectified& rx, const Rectified& ry) {
  if (theta.size() != rx.gamma.size() || theta.size() != ry.gamma.size())
    fail(ErrorCode::PreconditionViolated, "levelwise morphism has the wrong length");
  std::vector<CMorphism> out;
  out.reserve(theta.size());
  for (size_t i = 0; i < theta.size(); ++i)
    out.push_back(compose(invert(ry.gamma[i]), compose(theta[i], rx.gamma[i])));
  return out;
}

bool chain_morphism_commutes(const IsoChain& x, const IsoChain& y,
                             const std::vector<CMorphism>& theta) {
  if (x.length() != y.length() || theta.size() != x.objects.size()) return false;
  for (int i = 0; i < x.length(); ++i)
    if (!(compose(theta[i + 1], x.arrows[i]) == compose(y.arrows[i], theta[i]))) return false;
  return true;
}

NormalizedChain normalize_complex_chain(const std::vector<ChainComplex>& xs,
                                        const std::vector<ChainMap>& fs) {
  if (xs.empty() || xs.size() != fs.size() + 1)
    fail(ErrorCode::PreconditionViolated, "chain needs k+1 complexes for k maps");
  std::vector<Classified> transports;
  transports.reserve(xs.size());
  std::vector<CObject> objects;
  for (const ChainComplex& x : xs) {
    Classified c = classify(x);
    objects.push_back(c.object);
    transports.push_back(std::move(c));
  }
  auto witness_map = [&](size_t i) {
    std::map<int, RMatrix> comps;
    if (objects[i].total() > 0) {
      comps[1] = transports[i].w1;
      comps[0] = transports[i].w0;
    }
    return ChainMap::make(standard_complex(objects[i]), xs[i], std::move(comps));
  };
  auto witness_inv = [&](size_t i) {
    std::map<int, RMatrix> comps;
    if (objects[i].total() > 0) {
      comps[1] = mat_invert(transports[i].w1);
      comps[0] = mat_invert(transports[i].w0);
    }
    return ChainMap::make(xs[i], standard_complex(objects[i]), std::move(comps));
  };
  std::vector<CMorphism> arrows;
  arrows.reserve(fs.size());
  for (size_t i = 0; i < fs.size(); ++i) {
    if (!(fs[i].src() == xs[i] && fs[i].tgt() == xs[i + 1]))
      fail(ErrorCode::PreconditionViolated, "map endpoints do not match the complex list");
    ChainMap conj = compose(witness_inv(i + 1), compose(fs[i], witness_map(i)));
    arrows.push_back(from_chain_map(conj, objects[i], objects[i + 1]));
  }
  return NormalizedChain{IsoChain::make(std::move(objects), std::move(arrows)),
                         std::move(transports)};
}

}  // namespace gersten
