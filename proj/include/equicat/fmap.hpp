#pragma once

#include <string>
#include <vector>

#include "equicat/gset.hpp"
#include "equicat/group.hpp"

namespace equicat {

// Morphism of F: a based map {0..m} -> {0..n}, tab[0] == 0.
struct FMap {
  int cod = 0;
  std::vector<int> tab;  // size dom+1

  FMap() : tab{0} {}
  FMap(int codomain, std::vector<int> table);

  int dom() const { return static_cast<int>(tab.size()) - 1; }
  int operator()(int i) const { return tab[i]; }

  bool is_identity() const;
  bool is_ordered() const;      // i<j implies f(i) <= f(j)
  bool is_effective() const;    // preimage of 0 is {0}
  bool is_essential() const;    // effective and surjective
  bool in_pi() const;           // every nonzero fiber has at most one element
  bool is_injection() const;    // effective and injective on {1..m}
  bool is_projection() const;   // every nonzero fiber has exactly one element
  bool is_permutation() const;

  std::vector<int> fiber(int j) const;          // sorted preimage of j
  std::vector<int> fiber_sizes() const;         // sizes of fibers 1..cod
  Perm as_perm() const;

  std::string str() const;  // "[a1,...,am]->n"

  static FMap identity(int n);
  static FMap zero(int m, int n);
  static FMap from_perm(const Perm& p);
  static FMap delta(int n, int i);               // n -> 1, i to 1, rest to 0
  static FMap multiplication(int n);             // phi_n : n -> 1
  static FMap ordered_injection_skipping(int n, int i);   // n-1 -> n, misses i
  static FMap ordered_injection_skipping_set(int n, const std::vector<int>& t);
  static FMap ordered_projection_killing(int n, int i);   // n -> n-1, kills i
  static FMap ordered_projection_killing_set(int n, const std::vector<int>& t);
  static FMap merge(int n, int i);               // n -> n-1, sends i,i+1 to i
};

bool operator==(const FMap& a, const FMap& b);
bool operator<(const FMap& a, const FMap& b);

FMap compose(const FMap& g, const FMap& f);  // g after f

// All based maps m -> n in lexicographic order of (tab[1],...,tab[m]).
std::vector<FMap> all_fmaps(int m, int n);
int fmap_rank(const FMap& f);  // index within all_fmaps(dom, cod)

// phi = iota . eps . pi with iota an ordered injection, eps an ordered
// essential (OE) surjection onto the image, and pi a projection with the
// same kernel as phi. pi is ordered exactly when phi is already
// fiber-ordered; otherwise it absorbs the ordering permutation.
struct Factorization {
  FMap pi, eps, iota;
  bool composite_ok = false;
};

Factorization factorize(const FMap& phi);

// Ordered effective morphism with its block structure.
struct OEFunction {
  FMap map;
  std::vector<int> block_size;    // j_eps for j = 1..cod
  std::vector<int> block_start;   // 0-based offset of block j in {1..p}

  OEFunction() = default;
  explicit OEFunction(const FMap& f);

  int levels() const { return map.cod; }
  int points() const { return map.dom(); }
  int block_of(int i) const { return map(i); }
};

bool operator==(const OEFunction& a, const OEFunction& b);
bool operator<(const OEFunction& a, const OEFunction& b);

// eps . nu ordered, nu the stable sort of positions by their eps-value.
struct OEAssociate {
  OEFunction ordered;
  Perm nu;
};
OEAssociate oe_associate(const FMap& eps);

// Young subgroup Sigma(eps) of block-preserving permutations.
std::vector<Perm> young_subgroup(const OEFunction& eps);
bool in_young_subgroup(const OEFunction& eps, const Perm& nu);

// tau(sigma): permutes the blocks of eps as sigma permutes letters, so that
// sigma . eps . tau(sigma)^-1 is the OE-function associated to sigma . eps.
Perm tau_hom(const OEFunction& eps, const Perm& sigma);

// All OE-functions p -> n (monotone maps hitting 0 only at 0).
std::vector<OEFunction> all_oe_functions(int p, int n);

// Hom G-set of F_G (or Pi_G with restrict_to_pi) between based G-sets,
// with the conjugation action g.f = beta(g) f alpha(g^-1).
struct FGHom {
  GSet a, b;
  std::vector<FMap> maps;                    // basepoint (zero map) first
  std::vector<std::vector<int>> action;      // [g][map index] -> map index

  int size() const { return static_cast<int>(maps.size()); }
  int apply(int g, int f_idx) const { return action[g][f_idx]; }
  std::vector<int> fixed_maps(const Subgroup& h) const;
  std::vector<int> equivariant_maps(const Subgroup& h) const;  // direct check
};

FGHom fg_hom(const GSet& a, const GSet& b, bool restrict_to_pi = false);

// Simplicial circle: the F-morphism images of the faces and degeneracies.
FMap circle_face(int q, int i);        // F delta_i : q -> q-1
FMap circle_degeneracy(int q, int i);  // F sigma_i : q -> q+1

}  // namespace equicat
