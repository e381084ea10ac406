#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gersten/homotopy_nat.hpp"
#include "gersten/k0.hpp"
#include "gersten/rng.hpp"
#include "gersten/zero_map.hpp"

namespace gersten {

struct GenLimits {
  int max_dim = 4;  // rank and block-dimension bound
  int max_val = 3;  // valuation bound for generated elements
};

/* Chain map u with every component invertible, inverted degreewise. */
ChainMap invert_chain_iso(const ChainMap& u);

/* Functor on a free category determined by its values on generating edges
 * (keyed by arrow index); composites follow the factorizations. */
FunctorData functor_from_edges(const FiniteCat& cat, std::vector<ChainComplex> objects,
                               const std::map<int, ChainMap>& edges);

/* Deterministic random instances of every structure the check suites
 * consume. Everything returned has been validated by the library
 * constructors; two generators with equal (domain, seed, limits) produce
 * identical streams. */
class Gen {
 public:
  Gen(Domain dom, std::uint64_t seed, GenLimits lim = {});

  const Domain& domain() const { return dom_; }
  const GenLimits& limits() const { return lim_; }
  Rng& rng() { return rng_; }

  Element element();  // member of B, sometimes zero
  Element unit();
  Element nonzero();
  Element nonunit();  // valuation in [1, max_val]

  RMatrix matrix(int rows, int cols);
  RMatrix invertible(int n);  // product of elementary operations, unit determinant

  ChainComplex complex() { return complex(3, lim_.max_dim); }
  ChainComplex complex(int max_len, int max_rank);
  /* change of basis: a complex with conjugated boundaries and the
   * degreewise-invertible chain map onto it */
  std::pair<ChainComplex, ChainMap> conjugate(const ChainComplex& x);
  ChainMap null_homotopic(const ChainComplex& x, const ChainComplex& y,
                          std::map<int, RMatrix>* witness = nullptr);
  ChainMap chain_map(const ChainComplex& x, const ChainComplex& y);
  ChainHomotopy homotopic_pair(const ChainComplex& x, const ChainComplex& y);

  HSquare square();
  HSquare square_on(const ChainMap& f);      // homotopy square out of the arrow f
  HSquare strict_before(const ChainMap& f);  // strict square into f
  HSquare strict_after(const ChainMap& g);   // strict square out of g

  CObject object();
  CMorphism morphism(const CObject& src, const CObject& tgt);
  CMorphism iso(const CObject& x);
  CMorphism triangular(const CObject& src, const CObject& tgt, bool upper);
  IsoChain iso_chain(int len);

  struct SplitTriple {
    CMorphism alpha;
    CMorphism beta;
    CMorphism gamma;  // beta gamma = id
    CMorphism rho;    // rho alpha = id, rho gamma = 0
  };
  /* (a,0) -> (a+c,0) -> (c,0), block inclusion/projection conjugated by
   * random isomorphisms; beta alpha = 0 with exact residue sequence */
  SplitTriple split_triple(int a, int c);
  /* x -> x(+)y -> y, direct-sum inclusion/projection conjugated by
   * triangular isomorphisms so the mu images stay composable */
  SplitTriple sum_triple(const CObject& x, const CObject& y, bool upper);
  CMorphism triangular_iso(const CObject& x, bool upper);

  struct PlantedComplex {
    ChainComplex x;
    int n = 0, m = 0;
  };
  /* two-term complex invertible * diag(g^{a_i}) * invertible; a_i in {0,1}
   * when in_c, with one a_i = 2 planted otherwise */
  PlantedComplex planted(bool in_c);

  struct CoherentInstance {
    FiniteCat cat;
    HNatData theta;
    int composite = -1;  // arrow with factorization length >= 2 and nonzero theta
  };
  CoherentInstance coherent();

  struct SimplicialInstance {
    FiniteCat cat;
    SimplicialFunctorData f, g;
    std::vector<HNatData> thetas;
    int levels = 0;
  };
  SimplicialInstance simplicial(int N);  // constant levels with identity faces/degeneracies

  RMatrix torsion_presentation();
  SESWitness ses();          // split sums, cyclic peels, free quotients; scrambled
  SESWitness torsion_ses();  // all three modules torsion

 private:
  Element small_scalar();  // entry for elementary operations
  ChainMap assemble(const ChainComplex& x, const ChainComplex& y,
                    const std::map<int, RMatrix>& sigma);  // d sigma + sigma d
  std::map<int, RMatrix> degree_one(const ChainComplex& x, const ChainComplex& y);
  SESWitness split_ses(bool torsion_only);
  SESWitness peel_ses();
  SESWitness quotient_ses();

  Domain dom_;
  Rng rng_;
  GenLimits lim_;
};

}  // namespace gersten
