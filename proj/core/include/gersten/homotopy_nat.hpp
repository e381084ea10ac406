#pragma once

#include <string>

#include "gersten/chain.hpp"

namespace gersten {

struct CatArrow {
  std::string name;
  int src = 0;
  int dst = 0;
};

/* Finite category given by an explicit composition table. Identities are
 * listed among the arrows. */
class FiniteCat {
 public:
  FiniteCat() = default;  // empty value; build real categories through make
  static FiniteCat make(std::vector<std::string> objects, std::vector<CatArrow> arrows,
                        std::vector<int> identities,
                        std::map<std::pair<int, int>, int> table);
  /* Free category on an acyclic quiver: identities plus all edge paths.
   * Throws NotFree when the quiver has a cycle. */
  static FiniteCat free_on_quiver(std::vector<std::string> objects, std::vector<CatArrow> edges);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& object_name(int i) const { return objects_.at(i); }
  const CatArrow& arrow(int a) const { return arrows_.at(a); }
  int identity(int obj) const { return identities_.at(obj); }
  bool is_identity(int a) const;
  bool composable(int second, int first) const;
  int compose(int second, int first) const;  // arrow index of second o first
  bool is_free() const { return free_; }
  /* generating edges of an arrow of a free category, first applied first;
   * empty for identities */
  const std::vector<int>& factorization(int a) const;

 private:
  std::vector<std::string> objects_;
  std::vector<CatArrow> arrows_;
  std::vector<int> identities_;
  std::map<std::pair<int, int>, int> table_;
  bool free_ = false;
  std::vector<std::vector<int>> factorizations_;
};

/* Tabulated functor to bounded complexes. */
struct FunctorData {
  std::vector<ChainComplex> on_objects;  // indexed by object
  std::vector<ChainMap> on_arrows;       // indexed by arrow
};

void check_functor(const FiniteCat& cat, const FunctorData& F);  // throws NotFunctorial
bool functor_equal(const FunctorData& a, const FunctorData& b);

/* Strict natural transformation, one chain map per object. */
using StrictNat = std::vector<ChainMap>;

bool strict_nat_commutes(const FiniteCat& cat, const FunctorData& F, const FunctorData& G,
                         const StrictNat& t);

/* Homotopy natural transformation data: per-object maps theta_i : f(i) -> g(i)
 * and per-arrow C-homotopies theta_a : C(f(i)) -> g(j) with
 * theta_a iota = theta_j f_a - g_a theta_i. */
struct HNatData {
  FunctorData f, g;
  std::vector<ChainMap> theta_obj;
  std::vector<ChainMap> theta_arr;
};

bool hnat_equal(const HNatData& a, const HNatData& b);

/* Full validation: functoriality of f and g, shapes, the per-arrow homotopy
 * identity, theta_id = 0, and theta_{ba} = theta_b * theta_a on every
 * composable pair. Errors: NotFunctorial, ShapeMismatch, CoherenceFailure. */
void validate_hnat(const FiniteCat& cat, const HNatData& d);

/* Extend theta given on objects and generating edges to all arrows of a free
 * category by iterated star composition. Throws NotFree. */
HNatData extend_from_generators(const FiniteCat& cat, FunctorData f, FunctorData g,
                                std::vector<ChainMap> theta_obj,
                                const std::map<int, ChainMap>& theta_edges);

/* (beta alpha)_a := beta_a C(alpha_i) for strict alpha : e => f, beta : f => g. */
HNatData compose_mixed(const FiniteCat& cat, const FunctorData& e, const StrictNat& alpha,
                       const HNatData& beta);
/* (gamma beta)_a := gamma_j beta_a for beta : f => g, strict gamma : g => h. */
HNatData compose_mixed2(const FiniteCat& cat, const HNatData& beta, const StrictNat& gamma,
                        const FunctorData& h);

/* Pointwise pieces of the rectification. */
ChainComplex y_complex(const ChainMap& f);                   // y + Cx for f : x -> y
ChainMap j1_map(const ChainMap& f);                          // (f; -iota_x) : x -> y + Cx
ChainMap j2_map(const ChainMap& f);                          // (id; 0) : y -> y + Cx
ChainMap p_map(const ChainMap& f);                           // (id | 0) : y + Cx -> y
ChainMap y_square_map(const HSquare& sq);                    // [[b, -H], [0, Ca]]
ChainMap p_square_map(const HSquare& sq);                    // (0 | -H r_x) : C(y + Cx) -> y'

/* Y(theta): i -> g(i) + C(f(i)), a -> [[g_a, -theta_a], [0, C f_a]].
 * The internal functoriality check is exactly coherence of theta; it throws
 * NotFunctorial on a coherence-violating input. */
FunctorData y_of(const FiniteCat& cat, const HNatData& d);

StrictNat j1(const FiniteCat& cat, const HNatData& d, const FunctorData& y);
StrictNat j2(const FiniteCat& cat, const HNatData& d, const FunctorData& y);

struct Zigzag {
  FunctorData y;
  StrictNat to_y;    // J1 : f => Y
  StrictNat from_g;  // J2 : g => Y
};

/* Requires every theta_i to be a quasi-isomorphism; then all components of
 * J1 and J2 are quasi-isomorphisms. Throws ComponentNotEquivalence. */
Zigzag zigzag(const FiniteCat& cat, const HNatData& d);

struct EpsilonPReport {
  bool epsilon_coherent = false;  // the square data is a valid transformation s => t
  bool p_coherent = false;        // (0 | -H r_x) satisfies the homotopy identity for p
  bool triangle_epsilon = false;  // p o J1 = epsilon, including homotopy parts
  bool triangle_identity = false; // p o J2 = id_t, including homotopy parts
  bool all() const { return epsilon_coherent && p_coherent && triangle_epsilon && triangle_identity; }
};

EpsilonPReport epsilon_p_instance(const HSquare& sq);

/* Simplicial data up to level N: functors per level, strict transformations
 * for faces (level n -> n-1) and degeneracies (level n -> n+1). */
struct SimplicialFunctorData {
  std::vector<FunctorData> level;               // 0..N
  std::vector<std::vector<StrictNat>> face;     // face[n][i], 1 <= n <= N, 0 <= i <= n
  std::vector<std::vector<StrictNat>> degen;    // degen[n][j], 0 <= n < N, 0 <= j <= n
};

struct SimplicialReport {
  int monotone_maps_checked = 0;
  int functor_pairs_checked = 0;
};

/* Verifies theta_m f_phi = g_phi theta_n for every monotone phi : [m] -> [n]
 * with m, n <= N, functoriality of the levelwise Y data on the truncated
 * simplex category, and levelwise compatibility of J1/J2.
 * Throws LevelIncompatible naming the offending map. */
SimplicialReport simplicial_levels_check(const FiniteCat& cat, const SimplicialFunctorData& f,
                                         const SimplicialFunctorData& g,
                                         const std::vector<HNatData>& thetas, int N);

}  // namespace gersten
