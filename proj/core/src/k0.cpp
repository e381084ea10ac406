#include "gersten/k0.hpp"

namespace gersten {

FLModule classify_module(const RMatrix& presentation) {
  if (presentation.domain().tag() != Tag::Base)
    fail(ErrorCode::PreconditionViolated, "module presentations live over the base ring");
  if (!mat_in_domain(presentation))
    fail(ErrorCode::PreconditionViolated, "presentation entry outside the base ring");
  SnfResult snf = smith_normal_form(presentation);
  FLModule out{presentation, {}, presentation.rows() - snf.rank};
  for (long a : snf.exponents)
    if (a > 0) out.exponents.push_back(a);
  return out;
}

namespace {

/* columns of sub generate a sublattice of the column lattice of big */
bool lattice_contained(const RMatrix& sub, const RMatrix& big) {
  return solve_exact(big, sub).has_value();
}

/* generators of {x : m x lies in the column lattice of rel} */
RMatrix constrained_preimage(const RMatrix& m, const RMatrix& rel) {
  RMatrix paired = kernel_basis(RMatrix::hcat(m, rel));
  return paired.submatrix(0, m.cols(), 0, paired.cols());
}

}  // namespace

SESWitness make_ses(const RMatrix& pa, const RMatrix& pb, const RMatrix& pc, const RMatrix& f,
                    const RMatrix& g) {
  FLModule a = classify_module(pa);
  FLModule b = classify_module(pb);
  FLModule c = classify_module(pc);
  if (f.rows() != pb.rows() || f.cols() != pa.rows() || g.rows() != pc.rows() ||
      g.cols() != pb.rows())
    fail(ErrorCode::DimensionMismatch, "map shapes do not match the presentations");
  if (!mat_in_domain(f) || !mat_in_domain(g))
    fail(ErrorCode::PreconditionViolated, "map entry outside the base ring");
  if (!lattice_contained(f * pa, pb))
    fail(ErrorCode::PreconditionViolated, "first map does not respect relations");
  if (!lattice_contained(g * pb, pc))
    fail(ErrorCode::PreconditionViolated, "second map does not respect relations");
  if (!lattice_contained(g * f, pc))
    fail(ErrorCode::PreconditionViolated, "composite is nonzero on the module");
  if (!lattice_contained(constrained_preimage(f, pb), pa))
    fail(ErrorCode::PreconditionViolated, "first induced map is not injective");
  if (!lattice_contained(constrained_preimage(g, pc), RMatrix::hcat(f, pb)))
    fail(ErrorCode::PreconditionViolated, "sequence is not exact at the middle");
  SnfResult onto = smith_normal_form(RMatrix::hcat(pc, g));
  bool surjective = onto.rank == pc.rows();
  for (long e : onto.exponents)
    if (e != 0) surjective = false;
  if (!surjective) fail(ErrorCode::PreconditionViolated, "second induced map is not surjective");
  return SESWitness{std::move(a), std::move(b), std::move(c), f, g};
}

SESWitness telescope_witness(const Domain& dom, const Element& f) {
  if (dom.tag() != Tag::Base)
    fail(ErrorCode::PreconditionViolated, "telescope works over the base ring");
  if (!dom.in_domain(f)) fail(ErrorCode::PreconditionViolated, "element outside the base ring");
  if (dom.is_zero(f)) fail(ErrorCode::ZeroElement, "telescope needs a nonzero element");
  if (dom.is_unit(f)) fail(ErrorCode::UnitElement, "telescope needs a non-unit");
  RMatrix free_pres = RMatrix::zero(dom, 1, 0);
  RMatrix quot_pres = RMatrix::from_rows(dom, {{f}});
  RMatrix mult = RMatrix::from_rows(dom, {{f}});
  RMatrix proj = RMatrix::identity(dom, 1);
  return make_ses(free_pres, free_pres, quot_pres, mult, proj);
}

long k0_class(const FLModule& m) { return m.free_rank; }

bool ses_additive(const SESWitness& w) {
  return k0_class(w.b) == k0_class(w.a) + k0_class(w.c);
}

long torsion_length(const FLModule& m) {
  long total = 0;
  for (long a : m.exponents) total += a;
  return total;
}

Decomposition generator_decompose(const FLModule& m) {
  if (!m.is_torsion()) fail(ErrorCode::NotTorsion, "decomposition needs a torsion module");
  Domain dom = m.presentation.domain();
  Decomposition out;
  out.exponents = m.exponents;
  for (long a : m.exponents) {
    out.cyclic_multiplicity += a;
    for (long j = a; j >= 2; --j) {
      RMatrix pa = RMatrix::from_rows(dom, {{dom.g()}});
      RMatrix pb = RMatrix::from_rows(dom, {{dom.g_pow(j)}});
      RMatrix pc = RMatrix::from_rows(dom, {{dom.g_pow(j - 1)}});
      RMatrix inj = RMatrix::from_rows(dom, {{dom.g_pow(j - 1)}});
      RMatrix proj = RMatrix::identity(dom, 1);
      out.chain.push_back(make_ses(pa, pb, pc, inj, proj));
    }
  }
  return out;
}

}  // namespace gersten
