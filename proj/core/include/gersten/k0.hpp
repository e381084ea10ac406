#pragma once

#include "gersten/matrix.hpp"

namespace gersten {

/* Finitely generated module over the base ring, presented as the cokernel of
 * the relations matrix R^cols -> R^rows. */
struct FLModule {
  RMatrix presentation;
  std::vector<long> exponents;  // positive invariant factor exponents, ascending
  int free_rank = 0;

  bool is_torsion() const { return free_rank == 0; }
};

FLModule classify_module(const RMatrix& presentation);

/* 0 -> A --f--> B --g--> C -> 0 with maps given on generators. Construction
 * certifies, via Smith normal form lattice comparisons: both maps respect
 * relations, the composite is zero on A, the induced A -> B is injective,
 * ker(B -> C) = im(A -> B), and B -> C is surjective. */
struct SESWitness {
  FLModule a, b, c;
  RMatrix map_ab;
  RMatrix map_bc;
};

SESWitness make_ses(const RMatrix& pa, const RMatrix& pb, const RMatrix& pc, const RMatrix& f,
                    const RMatrix& g);

/* 0 -> R --f--> R -> R/(f) -> 0; consequence: [R/(f)] = 0 in the Grothendieck
 * group of all finitely generated modules. */
SESWitness telescope_witness(const Domain& dom, const Element& f);

long k0_class(const FLModule& m);        // = free rank
bool ses_additive(const SESWitness& w);  // class(B) = class(A) + class(C)
long torsion_length(const FLModule& m);  // sum of invariant factor exponents

struct Decomposition {
  std::vector<long> exponents;
  long cyclic_multiplicity = 0;    // [M] = cyclic_multiplicity * [R/pi]
  std::vector<SESWitness> chain;   // steps 0 -> R/pi -> R/pi^j -> R/pi^{j-1} -> 0
};

/* Torsion modules only; throws NotTorsion. */
Decomposition generator_decompose(const FLModule& m);

}  // namespace gersten
