#pragma once

#include "gersten/chain.hpp"

namespace gersten {

/* The two-term complex [B^{n+m} -> B^{n+m}] with boundary diag(g E_n, E_m),
 * in degrees 1 and 0. Identified by the pair (n, m) and the ring. */
struct CObject {
  RingPtr ring;
  int n = 0;
  int m = 0;

  Domain domain() const { return Domain(ring, Tag::Base); }
  int total() const { return n + m; }
  bool operator==(const CObject& o) const {
    return n == o.n && m == o.m && ring->descriptor() == o.ring->descriptor();
  }
};

CObject make_object(const RingPtr& ring, int n, int m);
ChainComplex standard_complex(const CObject& x);

/* Morphism (n,m) -> (n',m') recorded by its four blocks. The two chain-map
 * components are phi_1 = [[nn, nm], [g mn, mm]] and phi_0 = [[nn, g nm], [mn, mm]]. */
class CMorphism {
 public:
  CMorphism() = default;  // empty value; build real morphisms through make
  static CMorphism make(CObject src, CObject tgt, RMatrix nn, RMatrix nm, RMatrix mn, RMatrix mm);
  static CMorphism identity(const CObject& x);
  static CMorphism zero(const CObject& src, const CObject& tgt);

  const CObject& src() const { return src_; }
  const CObject& tgt() const { return tgt_; }
  const RMatrix& nn() const { return nn_; }
  const RMatrix& nm() const { return nm_; }
  const RMatrix& mn() const { return mn_; }
  const RMatrix& mm() const { return mm_; }

  RMatrix phi1() const;
  RMatrix phi0() const;

  bool operator==(const CMorphism& o) const;
  friend CMorphism operator+(const CMorphism& a, const CMorphism& b);
  friend CMorphism operator-(const CMorphism& a, const CMorphism& b);
  CMorphism operator-() const;

 private:
  CObject src_, tgt_;
  RMatrix nn_, nm_, mn_, mm_;
};

/* psi after phi, by the block formula (oracle: compose the chain maps). */
CMorphism compose(const CMorphism& psi, const CMorphism& phi);

ChainMap to_chain_map(const CMorphism& phi);
CMorphism from_chain_map(const ChainMap& f, const CObject& src, const CObject& tgt);

bool is_upper_triangular(const CMorphism& phi);  // mn block vanishes
bool is_lower_triangular(const CMorphism& phi);  // nm block vanishes

CMorphism ud_object_swap(const CMorphism& phi);  // the involution: swap the two summands
CObject ud(const CObject& x);

bool is_isomorphism(const CMorphism& phi);
CMorphism invert(const CMorphism& phi);  // throws NotInvertible

/* UT(phi) = [[E_n, 0], [-mm^{-1} mn, E_m]]; phi UT(phi) is upper triangular. */
CMorphism ut(const CMorphism& phi);  // throws BlockNotInvertible

int h0_rank(const CObject& x);              // H_0 = (B/gB)^n
RMatrix h0_mor(const CMorphism& phi);       // induced map, the residue of the nn block

struct Classified {
  CObject object;
  /* chain isomorphism standard_complex(object) -> input complex */
  RMatrix w1, w0;
};

/* Recognize a two-term complex (degrees 1, 0) as some (n,m)_B.
 * Errors: RankMismatch (unequal ranks), NotInjective (boundary has a kernel),
 * NotInC (g H_0 != 0, i.e. some invariant factor g^a with a >= 2). */
Classified classify(const ChainComplex& x);

struct SplitWitness {
  CMorphism gamma;  // section: beta gamma = id
  CMorphism rho;    // retraction: rho alpha = id and rho gamma = 0
};

/* alpha : (n,0) -> (n',0), beta : (n',0) -> (n'',0) with beta alpha = 0 and
 * exact residue sequence; produces the splitting. Errors: PreconditionViolated
 * (composite nonzero / wrong shapes), ResidueNotExact. */
SplitWitness split_exactness(const CMorphism& alpha, const CMorphism& beta);

/* Section of H_0 on free residue modules: rank r goes to [0 -> (B/gB)^r]. */
ChainComplex section_of_h0(const RingPtr& ring, int r);

}  // namespace gersten
