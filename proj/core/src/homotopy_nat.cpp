#include "gersten/homotopy_nat.hpp"

#include <algorithm>
#include <tuple>

namespace gersten {

namespace {

StrictNat nat_compose(const StrictNat& second, const StrictNat& first) {
  if (second.size() != first.size())
    fail(ErrorCode::ShapeMismatch, "natural transformation length mismatch");
  StrictNat out;
  out.reserve(first.size());
  for (size_t i = 0; i < first.size(); ++i) out.push_back(compose(second[i], first[i]));
  return out;
}

}  // namespace

FiniteCat FiniteCat::make(std::vector<std::string> objects, std::vector<CatArrow> arrows,
                          std::vector<int> identities,
                          std::map<std::pair<int, int>, int> table) {
  FiniteCat c;
  c.objects_ = std::move(objects);
  c.arrows_ = std::move(arrows);
  c.identities_ = std::move(identities);
  c.table_ = std::move(table);
  int nobj = c.object_count(), narr = c.arrow_count();
  if (static_cast<int>(c.identities_.size()) != nobj)
    fail(ErrorCode::ConfigInvalid, "one identity arrow per object required");
  for (const CatArrow& a : c.arrows_)
    if (a.src < 0 || a.src >= nobj || a.dst < 0 || a.dst >= nobj)
      fail(ErrorCode::ConfigInvalid, "arrow endpoint out of range");
  for (int o = 0; o < nobj; ++o) {
    int e = c.identities_[o];
    if (e < 0 || e >= narr || c.arrows_[e].src != o || c.arrows_[e].dst != o)
      fail(ErrorCode::ConfigInvalid, "identity arrow endpoints wrong");
  }
  for (int s = 0; s < narr; ++s)
    for (int f = 0; f < narr; ++f) {
      if (!c.composable(s, f)) continue;
      auto it = c.table_.find({s, f});
      if (it == c.table_.end()) fail(ErrorCode::ConfigInvalid, "composition table not closed");
      int sf = it->second;
      if (sf < 0 || sf >= narr || c.arrows_[sf].src != c.arrows_[f].src ||
          c.arrows_[sf].dst != c.arrows_[s].dst)
        fail(ErrorCode::ConfigInvalid, "composite endpoints wrong");
    }
  for (int f = 0; f < narr; ++f) {
    if (c.compose(c.identities_[c.arrows_[f].dst], f) != f ||
        c.compose(f, c.identities_[c.arrows_[f].src]) != f)
      fail(ErrorCode::ConfigInvalid, "identity is not a unit");
  }
  for (int h = 0; h < narr; ++h)
    for (int g2 = 0; g2 < narr; ++g2) {
      if (!c.composable(h, g2)) continue;
      for (int f = 0; f < narr; ++f) {
        if (!c.composable(g2, f)) continue;
        if (c.compose(h, c.compose(g2, f)) != c.compose(c.compose(h, g2), f))
          fail(ErrorCode::ConfigInvalid, "composition not associative");
      }
    }
  c.factorizations_.assign(narr, {});
  return c;
}

FiniteCat FiniteCat::free_on_quiver(std::vector<std::string> objects,
                                    std::vector<CatArrow> edges) {
  int nobj = static_cast<int>(objects.size());
  for (const CatArrow& e : edges)
    if (e.src < 0 || e.src >= nobj || e.dst < 0 || e.dst >= nobj)
      fail(ErrorCode::NotFree, "edge endpoint out of range");
  /* acyclicity via Kahn's algorithm */
  std::vector<int> indeg(nobj, 0);
  for (const CatArrow& e : edges) ++indeg[e.dst];
  std::vector<int> queue;
  for (int o = 0; o < nobj; ++o)
    if (indeg[o] == 0) queue.push_back(o);
  int seen = 0;
  while (!queue.empty()) {
    int o = queue.back();
    queue.pop_back();
    ++seen;
    for (const CatArrow& e : edges)
      if (e.src == o && --indeg[e.dst] == 0) queue.push_back(e.dst);
  }
  if (seen != nobj) fail(ErrorCode::NotFree, "quiver has a cycle");

  FiniteCat c;
  c.objects_ = std::move(objects);
  c.free_ = true;
  for (int o = 0; o < nobj; ++o) {
    c.identities_.push_back(static_cast<int>(c.arrows_.size()));
    c.arrows_.push_back(CatArrow{"id:" + c.objects_[o], o, o});
    c.factorizations_.push_back({});
  }
  /* paths keyed by their edge-index sequence, first applied first */
  std::map<std::vector<int>, int> path_arrow;
  std::vector<std::vector<int>> frontier;
  auto add_path = [&](const std::vector<int>& path) {
    int src = edges[path.front()].src, dst = edges[path.back()].dst;
    std::string name = edges[path.back()].name;
    for (int i = static_cast<int>(path.size()) - 2; i >= 0; --i)
      name += "*" + edges[path[i]].name;
    int idx = static_cast<int>(c.arrows_.size());
    c.arrows_.push_back(CatArrow{name, src, dst});
    path_arrow[path] = idx;
    c.factorizations_.push_back({});  // filled after edge arrows are known
    frontier.push_back(path);
  };
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) add_path({e});
  for (size_t next = 0; next < frontier.size(); ++next) {
    std::vector<int> path = frontier[next];
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (edges[e].src != edges[path.back()].dst) continue;
      std::vector<int> longer = path;
      longer.push_back(e);
      add_path(longer);
    }
  }
  for (const auto& [path, idx] : path_arrow) {
    std::vector<int> fact;
    fact.reserve(path.size());
    for (int e : path) fact.push_back(path_arrow.at({e}));
    c.factorizations_[idx] = std::move(fact);
  }
  /* composition table: unit rules plus path concatenation */
  for (int f = 0; f < static_cast<int>(c.arrows_.size()); ++f) {
    c.table_[{c.identities_[c.arrows_[f].dst], f}] = f;
    c.table_[{f, c.identities_[c.arrows_[f].src]}] = f;
  }
  for (const auto& [p, pi] : path_arrow)
    for (const auto& [q, qi] : path_arrow) {
      if (edges[q.back()].dst != edges[p.front()].src) continue;
      std::vector<int> cat_path = q;
      cat_path.insert(cat_path.end(), p.begin(), p.end());
      c.table_[{pi, qi}] = path_arrow.at(cat_path);
    }
  return c;
}

bool FiniteCat::is_identity(int a) const {
  return std::find(identities_.begin(), identities_.end(), a) != identities_.end();
}

bool FiniteCat::composable(int second, int first) const {
  return arrows_.at(first).dst == arrows_.at(second).src;
}

int FiniteCat::compose(int second, int first) const {
  auto it = table_.find({second, first});
  if (it == table_.end()) fail(ErrorCode::ConfigInvalid, "pair missing from composition table");
  return it->second;
}

const std::vector<int>& FiniteCat::factorization(int a) const {
  if (!free_) fail(ErrorCode::NotFree, "factorizations exist only in free categories");
  return factorizations_.at(a);
}

void check_functor(const FiniteCat& cat, const FunctorData& F) {
  if (static_cast<int>(F.on_objects.size()) != cat.object_count() ||
      static_cast<int>(F.on_arrows.size()) != cat.arrow_count())
    fail(ErrorCode::NotFunctorial, "functor data incomplete");
  for (int a = 0; a < cat.arrow_count(); ++a) {
    const CatArrow& ar = cat.arrow(a);
    if (!(F.on_arrows[a].src() == F.on_objects[ar.src] &&
          F.on_arrows[a].tgt() == F.on_objects[ar.dst]))
      fail(ErrorCode::NotFunctorial, "arrow image endpoints wrong at " + ar.name);
    if (cat.is_identity(a) && !(F.on_arrows[a] == ChainMap::identity(F.on_objects[ar.src])))
      fail(ErrorCode::NotFunctorial, "identity arrow not sent to the identity");
  }
  for (int s = 0; s < cat.arrow_count(); ++s)
    for (int f = 0; f < cat.arrow_count(); ++f) {
      if (!cat.composable(s, f)) continue;
      if (!(F.on_arrows[cat.compose(s, f)] == compose(F.on_arrows[s], F.on_arrows[f])))
        fail(ErrorCode::NotFunctorial, "composition not preserved at (" + cat.arrow(s).name +
                                           ", " + cat.arrow(f).name + ")");
    }
}

bool functor_equal(const FunctorData& a, const FunctorData& b) {
  return a.on_objects == b.on_objects && a.on_arrows == b.on_arrows;
}

bool strict_nat_commutes(const FiniteCat& cat, const FunctorData& F, const FunctorData& G,
                         const StrictNat& t) {
  if (static_cast<int>(t.size()) != cat.object_count()) return false;
  for (int i = 0; i < cat.object_count(); ++i)
    if (!(t[i].src() == F.on_objects[i] && t[i].tgt() == G.on_objects[i])) return false;
  for (int a = 0; a < cat.arrow_count(); ++a) {
    const CatArrow& ar = cat.arrow(a);
    if (!(compose(t[ar.dst], F.on_arrows[a]) == compose(G.on_arrows[a], t[ar.src])))
      return false;
  }
  return true;
}

bool hnat_equal(const HNatData& a, const HNatData& b) {
  return functor_equal(a.f, b.f) && functor_equal(a.g, b.g) && a.theta_obj == b.theta_obj &&
         a.theta_arr == b.theta_arr;
}

void validate_hnat(const FiniteCat& cat, const HNatData& d) {
  check_functor(cat, d.f);
  check_functor(cat, d.g);
  if (static_cast<int>(d.theta_obj.size()) != cat.object_count() ||
      static_cast<int>(d.theta_arr.size()) != cat.arrow_count())
    fail(ErrorCode::ShapeMismatch, "transformation data incomplete");
  for (int i = 0; i < cat.object_count(); ++i)
    if (!(d.theta_obj[i].src() == d.f.on_objects[i] && d.theta_obj[i].tgt() == d.g.on_objects[i]))
      fail(ErrorCode::ShapeMismatch, "component endpoints wrong at object " + cat.object_name(i));
  for (int a = 0; a < cat.arrow_count(); ++a) {
    const CatArrow& ar = cat.arrow(a);
    const ChainMap& H = d.theta_arr[a];
    if (!(H.src() == cone(d.f.on_objects[ar.src]) && H.tgt() == d.g.on_objects[ar.dst]))
      fail(ErrorCode::ShapeMismatch, "homotopy endpoints wrong at arrow " + ar.name);
    if (cat.is_identity(a) && !H.is_zero())
      fail(ErrorCode::CoherenceFailure, "nonzero homotopy at identity arrow " + ar.name);
    ChainMap wanted = compose(d.theta_obj[ar.dst], d.f.on_arrows[a]) -
                      compose(d.g.on_arrows[a], d.theta_obj[ar.src]);
    if (!(compose(H, iota(d.f.on_objects[ar.src])) == wanted))
      fail(ErrorCode::CoherenceFailure, "homotopy identity fails at arrow " + ar.name);
  }
  for (int s = 0; s < cat.arrow_count(); ++s)
    for (int f = 0; f < cat.arrow_count(); ++f) {
      if (!cat.composable(s, f)) continue;
      ChainMap expect = star(d.theta_arr[s], d.theta_arr[f], d.g.on_arrows[s], d.f.on_arrows[f]);
      if (!(d.theta_arr[cat.compose(s, f)] == expect))
        fail(ErrorCode::CoherenceFailure, "star coherence fails at pair (" + cat.arrow(s).name +
                                              ", " + cat.arrow(f).name + ")");
    }
}

HNatData extend_from_generators(const FiniteCat& cat, FunctorData f, FunctorData g,
                                std::vector<ChainMap> theta_obj,
                                const std::map<int, ChainMap>& theta_edges) {
  if (!cat.is_free()) fail(ErrorCode::NotFree, "generator extension needs a free category");
  check_functor(cat, f);
  check_functor(cat, g);
  int narr = cat.arrow_count();
  std::vector<int> order(narr);
  for (int a = 0; a < narr; ++a) order[a] = a;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return cat.factorization(a).size() < cat.factorization(b).size();
  });
  std::vector<ChainMap> theta_arr(narr);
  for (int a : order) {
    const std::vector<int>& fact = cat.factorization(a);
    const CatArrow& ar = cat.arrow(a);
    if (fact.empty()) {
      theta_arr[a] = ChainMap::zero(cone(f.on_objects[ar.src]), g.on_objects[ar.dst]);
    } else if (fact.size() == 1) {
      auto it = theta_edges.find(a);
      if (it == theta_edges.end())
        fail(ErrorCode::PreconditionViolated, "no homotopy given for edge " + ar.name);
      theta_arr[a] = it->second;
    } else {
      int prefix = fact[0];
      for (size_t i = 1; i + 1 < fact.size(); ++i) prefix = cat.compose(fact[i], prefix);
      int last = fact.back();
      theta_arr[a] =
          star(theta_arr[last], theta_arr[prefix], g.on_arrows[last], f.on_arrows[prefix]);
    }
  }
  HNatData out{std::move(f), std::move(g), std::move(theta_obj), std::move(theta_arr)};
  validate_hnat(cat, out);
  return out;
}

HNatData compose_mixed(const FiniteCat& cat, const FunctorData& e, const StrictNat& alpha,
                       const HNatData& beta) {
  if (!strict_nat_commutes(cat, e, beta.f, alpha))
    fail(ErrorCode::ShapeMismatch, "left factor is not a strict transformation into the source");
  HNatData out;
  out.f = e;
  out.g = beta.g;
  for (int i = 0; i < cat.object_count(); ++i)
    out.theta_obj.push_back(compose(beta.theta_obj[i], alpha[i]));
  for (int a = 0; a < cat.arrow_count(); ++a)
    out.theta_arr.push_back(compose(beta.theta_arr[a], cone_map(alpha[cat.arrow(a).src])));
  return out;
}

HNatData compose_mixed2(const FiniteCat& cat, const HNatData& beta, const StrictNat& gamma,
                        const FunctorData& h) {
  if (!strict_nat_commutes(cat, beta.g, h, gamma))
    fail(ErrorCode::ShapeMismatch, "right factor is not a strict transformation out of the target");
  HNatData out;
  out.f = beta.f;
  out.g = h;
  for (int i = 0; i < cat.object_count(); ++i)
    out.theta_obj.push_back(compose(gamma[i], beta.theta_obj[i]));
  for (int a = 0; a < cat.arrow_count(); ++a)
    out.theta_arr.push_back(compose(gamma[cat.arrow(a).dst], beta.theta_arr[a]));
  return out;
}

ChainComplex y_complex(const ChainMap& f) {
  return ChainComplex::direct_sum(f.tgt(), cone(f.src()));
}

ChainMap j1_map(const ChainMap& f) {
  const ChainComplex& x = f.src();
  ChainComplex ysum = y_complex(f);
  ChainMap inc = iota(x);
  std::map<int, RMatrix> comps;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    if (x.rank(n) == 0 || ysum.rank(n) == 0) continue;
    comps[n] = RMatrix::vcat(f.component(n), -inc.component(n));
  }
  return ChainMap::make(x, ysum, std::move(comps));
}

ChainMap j2_map(const ChainMap& f) {
  const ChainComplex& y = f.tgt();
  ChainComplex cx = cone(f.src());
  ChainComplex ysum = y_complex(f);
  Domain dom = y.domain();
  std::map<int, RMatrix> comps;
  for (int n = y.lo(); n <= y.hi(); ++n) {
    if (y.rank(n) == 0) continue;
    comps[n] = RMatrix::vcat(RMatrix::identity(dom, y.rank(n)),
                             RMatrix::zero(dom, cx.rank(n), y.rank(n)));
  }
  return ChainMap::make(y, ysum, std::move(comps));
}

ChainMap p_map(const ChainMap& f) {
  const ChainComplex& y = f.tgt();
  ChainComplex cx = cone(f.src());
  ChainComplex ysum = y_complex(f);
  Domain dom = y.domain();
  std::map<int, RMatrix> comps;
  for (int n = y.lo(); n <= y.hi(); ++n) {
    if (y.rank(n) == 0) continue;
    comps[n] = RMatrix::hcat(RMatrix::identity(dom, y.rank(n)),
                             RMatrix::zero(dom, y.rank(n), cx.rank(n)));
  }
  return ChainMap::make(ysum, y, std::move(comps));
}

ChainMap y_square_map(const HSquare& sq) {
  ChainComplex src = y_complex(sq.f());
  ChainComplex tgt = y_complex(sq.g());
  ChainMap ca = cone_map(sq.a());
  const ChainComplex& xp = sq.f().tgt();
  const ChainComplex& yp = sq.g().tgt();
  ChainComplex cx = cone(sq.f().src());
  ChainComplex cy = cone(sq.g().src());
  Domain dom = xp.domain();
  std::map<int, RMatrix> comps;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    if (src.rank(n) == 0 || tgt.rank(n) == 0) continue;
    RMatrix tl = sq.b().component(n);
    RMatrix tr = -sq.H().component(n);
    RMatrix bl = RMatrix::zero(dom, cy.rank(n), xp.rank(n));
    RMatrix br = ca.component(n);
    comps[n] = RMatrix::block2x2(tl, tr, bl, br);
  }
  return ChainMap::make(std::move(src), std::move(tgt), std::move(comps));
}

ChainMap p_square_map(const HSquare& sq) {
  const ChainComplex& x = sq.f().src();
  const ChainComplex& xp = sq.f().tgt();
  const ChainComplex& yp = sq.g().tgt();
  ChainComplex cx = cone(x);
  ChainComplex src = cone(y_complex(sq.f()));
  ChainMap hr = compose(sq.H(), r_map(x));
  Domain dom = x.domain();
  std::map<int, RMatrix> comps;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    if (src.rank(n) == 0 || yp.rank(n) == 0) continue;
    RMatrix full = hr.component(n);  // columns split as Cx_{n-1} | Cx_n
    RMatrix left = full.submatrix(0, full.rows(), 0, cx.rank(n - 1));
    RMatrix right = full.submatrix(0, full.rows(), cx.rank(n - 1), full.cols());
    comps[n] = RMatrix::hcat(
        RMatrix::hcat(RMatrix::zero(dom, yp.rank(n), xp.rank(n - 1)), -left),
        RMatrix::hcat(RMatrix::zero(dom, yp.rank(n), xp.rank(n)), -right));
  }
  return ChainMap::make(std::move(src), yp, std::move(comps));
}

namespace {

/* [[g_a, -theta_a], [0, C f_a]] assembled without the square validation:
 * each block is a chain map on its own, so the assembly is always a chain
 * map, and incoherence of theta surfaces only in the composition table. */
ChainMap y_arrow(const ChainMap& ga, const ChainMap& theta_a, const ChainMap& fa) {
  ChainComplex src = ChainComplex::direct_sum(ga.src(), cone(fa.src()));
  ChainComplex tgt = ChainComplex::direct_sum(ga.tgt(), cone(fa.tgt()));
  ChainMap cfa = cone_map(fa);
  std::map<int, RMatrix> comps;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    if (src.rank(n) == 0 || tgt.rank(n) == 0) continue;
    comps[n] = RMatrix::block2x2(ga.component(n), -theta_a.component(n),
                                 RMatrix::zero(src.domain(), cfa.tgt().rank(n), ga.src().rank(n)),
                                 cfa.component(n));
  }
  return ChainMap::make(std::move(src), std::move(tgt), std::move(comps));
}

}  // namespace

FunctorData y_of(const FiniteCat& cat, const HNatData& d) {
  FunctorData Y;
  for (int i = 0; i < cat.object_count(); ++i)
    Y.on_objects.push_back(y_complex(d.theta_obj[i]));
  for (int a = 0; a < cat.arrow_count(); ++a) {
    const CatArrow& ar = cat.arrow(a);
    if (!(d.theta_arr[a].src() == cone(d.f.on_objects[ar.src])) ||
        !(d.theta_arr[a].tgt() == d.g.on_objects[ar.dst]))
      fail(ErrorCode::ShapeMismatch, "homotopy for arrow " + ar.name + " has wrong endpoints");
    Y.on_arrows.push_back(y_arrow(d.g.on_arrows[a], d.theta_arr[a], d.f.on_arrows[a]));
  }
  check_functor(cat, Y);  // fails exactly when theta is incoherent
  return Y;
}

StrictNat j1(const FiniteCat& cat, const HNatData& d, const FunctorData& y) {
  StrictNat out;
  for (int i = 0; i < cat.object_count(); ++i) {
    out.push_back(j1_map(d.theta_obj[i]));
    if (!(out.back().tgt() == y.on_objects[i]))
      fail(ErrorCode::ShapeMismatch, "rectified functor does not match the transformation");
  }
  if (!strict_nat_commutes(cat, d.f, y, out))
    fail(ErrorCode::CoherenceFailure, "inclusion of the source is not strictly natural");
  return out;
}

StrictNat j2(const FiniteCat& cat, const HNatData& d, const FunctorData& y) {
  StrictNat out;
  for (int i = 0; i < cat.object_count(); ++i) {
    out.push_back(j2_map(d.theta_obj[i]));
    if (!(out.back().tgt() == y.on_objects[i]))
      fail(ErrorCode::ShapeMismatch, "rectified functor does not match the transformation");
  }
  if (!strict_nat_commutes(cat, d.g, y, out))
    fail(ErrorCode::CoherenceFailure, "inclusion of the target is not strictly natural");
  return out;
}

Zigzag zigzag(const FiniteCat& cat, const HNatData& d) {
  validate_hnat(cat, d);
  for (int i = 0; i < cat.object_count(); ++i)
    if (!is_quasi_iso(d.theta_obj[i]))
      fail(ErrorCode::ComponentNotEquivalence,
           "component at object " + cat.object_name(i) + " is not a quasi-isomorphism");
  Zigzag out;
  out.y = y_of(cat, d);
  out.to_y = j1(cat, d, out.y);
  out.from_g = j2(cat, d, out.y);
  for (int i = 0; i < cat.object_count(); ++i)
    if (!is_quasi_iso(out.to_y[i]) || !is_quasi_iso(out.from_g[i]))
      fail(ErrorCode::ComponentNotEquivalence,
           "zig-zag leg at object " + cat.object_name(i) + " is not a quasi-isomorphism");
  return out;
}

EpsilonPReport epsilon_p_instance(const HSquare& sq) {
  FiniteCat cat = FiniteCat::free_on_quiver({"0", "1"}, {CatArrow{"a", 0, 1}});
  FunctorData s, t;
  s.on_objects = {sq.f().src(), sq.g().src()};
  t.on_objects = {sq.f().tgt(), sq.g().tgt()};
  s.on_arrows.resize(cat.arrow_count(), sq.a());
  t.on_arrows.resize(cat.arrow_count(), sq.b());
  for (int a = 0; a < cat.arrow_count(); ++a) {
    if (!cat.is_identity(a)) continue;
    int o = cat.arrow(a).src;
    s.on_arrows[a] = ChainMap::identity(s.on_objects[o]);
    t.on_arrows[a] = ChainMap::identity(t.on_objects[o]);
  }
  HNatData eps;
  eps.f = s;
  eps.g = t;
  eps.theta_obj = {sq.f(), sq.g()};
  eps.theta_arr.resize(cat.arrow_count(), sq.H());
  for (int a = 0; a < cat.arrow_count(); ++a) {
    if (!cat.is_identity(a)) continue;
    int o = cat.arrow(a).src;
    eps.theta_arr[a] = ChainMap::zero(cone(s.on_objects[o]), t.on_objects[o]);
  }

  EpsilonPReport report;
  try {
    validate_hnat(cat, eps);
    report.epsilon_coherent = true;
  } catch (const Error&) {
    return report;
  }

  FunctorData Y = y_of(cat, eps);
  StrictNat J1 = j1(cat, eps, Y);
  StrictNat J2 = j2(cat, eps, Y);

  HNatData p;
  p.f = Y;
  p.g = t;
  p.theta_obj = {p_map(sq.f()), p_map(sq.g())};
  p.theta_arr.resize(cat.arrow_count(), p_square_map(sq));
  for (int a = 0; a < cat.arrow_count(); ++a) {
    if (!cat.is_identity(a)) continue;
    int o = cat.arrow(a).src;
    p.theta_arr[a] = ChainMap::zero(cone(Y.on_objects[o]), t.on_objects[o]);
  }
  try {
    validate_hnat(cat, p);
    report.p_coherent = true;
  } catch (const Error&) {
    return report;
  }

  HNatData along_j1 = compose_mixed(cat, s, J1, p);
  report.triangle_epsilon = hnat_equal(along_j1, eps);

  HNatData idt;
  idt.f = t;
  idt.g = t;
  for (int i = 0; i < cat.object_count(); ++i)
    idt.theta_obj.push_back(ChainMap::identity(t.on_objects[i]));
  for (int a = 0; a < cat.arrow_count(); ++a)
    idt.theta_arr.push_back(
        ChainMap::zero(cone(t.on_objects[cat.arrow(a).src]), t.on_objects[cat.arrow(a).dst]));
  HNatData along_j2 = compose_mixed(cat, t, J2, p);
  report.triangle_identity = hnat_equal(along_j2, idt);
  return report;
}

namespace {

using Mono = std::vector<int>;  // monotone [m] -> [n] as its value list

void gen_monotone(int len, int n, int minval, Mono& cur, std::vector<Mono>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v = minval; v <= n; ++v) {
    cur.push_back(v);
    gen_monotone(len, n, v, cur, out);
    cur.pop_back();
  }
}

std::vector<Mono> all_monotone(int m, int n) {
  std::vector<Mono> out;
  Mono cur;
  gen_monotone(m + 1, n, 0, cur, out);
  return out;
}

std::string mono_name(int m, int n, const Mono& phi) {
  std::string s = "[" + std::to_string(m) + "]->[" + std::to_string(n) + "]:(";
  for (size_t i = 0; i < phi.size(); ++i) s += (i ? "," : "") + std::to_string(phi[i]);
  return s + ")";
}

StrictNat identity_nat(const FunctorData& F) {
  StrictNat out;
  for (const ChainComplex& x : F.on_objects) out.push_back(ChainMap::identity(x));
  return out;
}

/* X(phi) : level n => level m for monotone phi : [m] -> [n], by factoring phi
 * into faces and degeneracies. */
StrictNat induced(const SimplicialFunctorData& X, Mono phi, int m, int n) {
  bool is_id = (m == n);
  if (is_id)
    for (int i = 0; i <= m; ++i)
      if (phi[i] != i) is_id = false;
  if (is_id) return identity_nat(X.level[n]);
  /* non-surjective: peel off the face at the least value missed */
  std::vector<bool> hit(n + 1, false);
  for (int v : phi) hit[v] = true;
  for (int v = 0; v <= n; ++v) {
    if (hit[v]) continue;
    Mono smaller = phi;
    for (int& w : smaller)
      if (w > v) --w;
    StrictNat rest = induced(X, std::move(smaller), m, n - 1);
    return nat_compose(rest, X.face.at(n).at(v));
  }
  /* surjective non-identity: peel off a degeneracy at a repeated value */
  for (int i = 0; i < m; ++i) {
    if (phi[i] != phi[i + 1]) continue;
    Mono shorter = phi;
    shorter.erase(shorter.begin() + i + 1);
    StrictNat rest = induced(X, std::move(shorter), m - 1, n);
    return nat_compose(X.degen.at(m - 1).at(i), rest);
  }
  fail(ErrorCode::ConfigInvalid, "monotone map factorization failed");
}

}  // namespace

SimplicialReport simplicial_levels_check(const FiniteCat& cat, const SimplicialFunctorData& f,
                                         const SimplicialFunctorData& g,
                                         const std::vector<HNatData>& thetas, int N) {
  if (N < 0 || N > 3) fail(ErrorCode::ConfigInvalid, "truncation level must be between 0 and 3");
  auto check_shape = [&](const SimplicialFunctorData& X, const char* which) {
    if (static_cast<int>(X.level.size()) != N + 1)
      fail(ErrorCode::ConfigInvalid, std::string(which) + ": wrong number of levels");
    if (static_cast<int>(X.face.size()) < N + 1 || static_cast<int>(X.degen.size()) < N)
      fail(ErrorCode::ConfigInvalid, std::string(which) + ": missing face or degeneracy data");
    for (int n = 1; n <= N; ++n)
      if (static_cast<int>(X.face[n].size()) != n + 1)
        fail(ErrorCode::ConfigInvalid, std::string(which) + ": wrong face count");
    for (int n = 0; n < N; ++n)
      if (static_cast<int>(X.degen[n].size()) != n + 1)
        fail(ErrorCode::ConfigInvalid, std::string(which) + ": wrong degeneracy count");
  };
  check_shape(f, "source");
  check_shape(g, "target");
  if (static_cast<int>(thetas.size()) != N + 1)
    fail(ErrorCode::ConfigInvalid, "one transformation per level required");
  for (int n = 0; n <= N; ++n) {
    validate_hnat(cat, thetas[n]);
    if (!functor_equal(thetas[n].f, f.level[n]) || !functor_equal(thetas[n].g, g.level[n]))
      fail(ErrorCode::ConfigInvalid, "level transformation endpoints differ from the level data");
  }
  /* generator transformations must be strictly natural */
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      if (!strict_nat_commutes(cat, f.level[n], f.level[n - 1], f.face[n][i]) ||
          !strict_nat_commutes(cat, g.level[n], g.level[n - 1], g.face[n][i]))
        fail(ErrorCode::LevelIncompatible, "face " + std::to_string(i) + " at level " +
                                               std::to_string(n) + " is not natural");
    }
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j) {
      if (!strict_nat_commutes(cat, f.level[n], f.level[n + 1], f.degen[n][j]) ||
          !strict_nat_commutes(cat, g.level[n], g.level[n + 1], g.degen[n][j]))
        fail(ErrorCode::LevelIncompatible, "degeneracy " + std::to_string(j) + " at level " +
                                               std::to_string(n) + " is not natural");
    }

  SimplicialReport report;
  std::map<std::tuple<int, int, Mono>, std::pair<StrictNat, StrictNat>> cache;
  auto both_induced = [&](int m, int n, const Mono& phi) -> const std::pair<StrictNat, StrictNat>& {
    auto key = std::make_tuple(m, n, phi);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, std::make_pair(induced(f, phi, m, n), induced(g, phi, m, n))).first;
    return it->second;
  };

  std::vector<FunctorData> ylev;
  std::vector<StrictNat> j1lev, j2lev;
  for (int n = 0; n <= N; ++n) {
    ylev.push_back(y_of(cat, thetas[n]));
    j1lev.push_back(j1(cat, thetas[n], ylev[n]));
    j2lev.push_back(j2(cat, thetas[n], ylev[n]));
  }
  auto y_induced = [&](int m, int n, const Mono& phi) {
    const auto& [fphi, gphi] = both_induced(m, n, phi);
    StrictNat out;
    for (int i = 0; i < cat.object_count(); ++i)
      out.push_back(ChainMap::direct_sum(gphi[i], cone_map(fphi[i])));
    return out;
  };

  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m)
      for (const Mono& phi : all_monotone(m, n)) {
        const auto& [fphi, gphi] = both_induced(m, n, phi);
        HNatData lhs = compose_mixed(cat, f.level[n], fphi, thetas[m]);
        HNatData rhs = compose_mixed2(cat, thetas[n], gphi, g.level[m]);
        if (!hnat_equal(lhs, rhs))
          fail(ErrorCode::LevelIncompatible,
               "transformation incompatible with " + mono_name(m, n, phi));
        StrictNat yphi = y_induced(m, n, phi);
        if (!strict_nat_commutes(cat, ylev[n], ylev[m], yphi))
          fail(ErrorCode::LevelIncompatible,
               "rectified data not natural along " + mono_name(m, n, phi));
        for (int i = 0; i < cat.object_count(); ++i) {
          if (!(compose(yphi[i], j1lev[n][i]) == compose(j1lev[m][i], fphi[i])))
            fail(ErrorCode::LevelIncompatible,
                 "source inclusion incompatible with " + mono_name(m, n, phi));
          if (!(compose(yphi[i], j2lev[n][i]) == compose(j2lev[m][i], gphi[i])))
            fail(ErrorCode::LevelIncompatible,
                 "target inclusion incompatible with " + mono_name(m, n, phi));
        }
        ++report.monotone_maps_checked;
      }

  /* functoriality of the induced data on the truncation */
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m)
      for (const Mono& phi : all_monotone(m, n))
        for (int k = 0; k <= N; ++k)
          for (const Mono& psi : all_monotone(k, m)) {
            Mono comp(k + 1);
            for (int i = 0; i <= k; ++i) comp[i] = phi[psi[i]];
            StrictNat lhs = y_induced(k, n, comp);
            StrictNat rhs = nat_compose(y_induced(k, m, psi), y_induced(m, n, phi));
            for (int i = 0; i < cat.object_count(); ++i)
              if (!(lhs[i] == rhs[i]))
                fail(ErrorCode::LevelIncompatible,
                     "rectified data not functorial at " + mono_name(m, n, phi) + " after " +
                         mono_name(k, m, psi));
            ++report.functor_pairs_checked;
          }
  return report;
}

}  // namespace gersten
