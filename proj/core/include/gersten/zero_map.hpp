#pragma once

#include "gersten/category_c.hpp"

namespace gersten {

/* The two associations sending (n,m) to (n,0) resp. (0,n); on morphisms both
 * keep only the nn block. Not functorial in general; composition is preserved
 * on the triangular subclasses. */
CObject mu1_object(const CObject& x);
CObject mu2_object(const CObject& x);
CMorphism mu1(const CMorphism& phi);
CMorphism mu2(const CMorphism& phi);

/* Degreewise module ranks and component matrices of mu1(phi) and mu2(phi)
 * coincide (only the boundaries of the carrying complexes differ). */
bool s1s2_equality_check(const CMorphism& phi);

/* Projection x -> (n,0) with components (E_n | 0) in both degrees. */
CMorphism delta_mor(const CObject& x);
ChainMap delta(const CObject& x);

struct DeltaEquivalence {
  CMorphism incl;          // (n,0) -> x, a homotopy inverse: delta o incl = id
  ChainHomotopy homotopy;  // id_x ~ incl o delta, h_0 = diag(0, E_m)
};
DeltaEquivalence delta_equivalence(const CObject& x);

struct DeltaNaturality {
  bool strict = false;     // the square commutes on the nose (nm block zero)
  ChainMap lhs;            // mu1(phi) o delta_src
  ChainMap rhs;            // delta_tgt o phi
  ChainHomotopy homotopy;  // lhs ~ rhs with h_0 = (0 | -phi_nm)
};
/* phi must be upper or lower triangular; otherwise NotTriangular. */
DeltaNaturality delta_naturality(const CMorphism& phi);

/* A composable chain of isomorphisms of the category. */
struct IsoChain {
  std::vector<CObject> objects;   // length() + 1 entries
  std::vector<CMorphism> arrows;  // arrows[i] : objects[i] -> objects[i+1]
  std::vector<bool> upper;        // arrows[i] upper triangular

  static IsoChain make(std::vector<CObject> objects, std::vector<CMorphism> arrows);
  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const IsoChain& o) const;
};

struct Rectified {
  IsoChain chain;
  /* natural equivalence: gamma[i] : chain.objects[i] -> input objects[i],
   * every component lower triangular */
  std::vector<CMorphism> gamma;
};

/* q_k: make arrow k upper triangular by the UT twist. Requires all arrows at
 * indices > k already upper (PreconditionViolated) and all objects literally
 * equal (ObjectsNotEqual). Chains already upper at k are fixed points. */
Rectified rectify(const IsoChain& chain, int k);

/* q_0 ... q_{L-1} with the witnesses composed; output arrows all upper. */
Rectified rectify_all(const IsoChain& chain);

/* Conjugate a levelwise morphism of chains theta[i] : x_i -> y_i by the
 * rectification witnesses; the result is a morphism of the rectified chains. */
std::vector<CMorphism> transport_chain_morphism(const std::vector<CMorphism>& theta,
                                                const Rectified& rx, const Rectified& ry);
bool chain_morphism_commutes(const IsoChain& x, const IsoChain& y,
                             const std::vector<CMorphism>& theta);

struct NormalizedChain {
  IsoChain chain;                      // over the standard objects
  std::vector<Classified> transports;  // witness per position, into the input complex
};

/* Classify each two-term complex and conjugate the connecting isomorphisms to
 * the standard objects. */
NormalizedChain normalize_complex_chain(const std::vector<ChainComplex>& xs,
                                        const std::vector<ChainMap>& fs);

}  // namespace gersten
