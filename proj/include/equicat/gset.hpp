#pragma once

#include <vector>

#include "equicat/group.hpp"

namespace equicat {

// Based finite G-set (n, alpha): elements {0,...,n} with basepoint 0 and
// g acting as the permutation act[g] on {1..n}.
struct GSet {
  GroupPtr group;
  int n = 0;
  std::vector<Perm> act;  // indexed by group element, degree n

  int size() const { return n; }
  int apply(int g, int x) const { return act[g](x); }
  bool is_valid() const;

  static GSet trivial(const GroupPtr& g, int n);
  static GSet regular(const GroupPtr& g);      // G acting on itself, n = |G|
  static GSet from_hom(const GroupPtr& g, const std::vector<Perm>& images_of_generators);
  static GSet natural(const GroupPtr& g);      // perm groups: the defining action
  // coset G-set G/H, n = [G:H]; point i is the i-th coset in element order
  static GSet cosets(const GroupPtr& g, const Subgroup& h);

  GSet restricted(const Subgroup& h) const;    // same points, group = h.as_group()
};

// Not-necessarily-equivariant based map between based G-sets; the hom sets
// of F_G carry the conjugation action, so plain based maps are the morphisms.
struct BasedGMap {
  std::vector<int> table;  // table[0] == 0
  int apply(int x) const { return table[x]; }
};

std::vector<int> fixed_points(const GSet& x, const Subgroup& h);

struct Orbit {
  std::vector<int> elements;       // sorted
  int representative = 0;          // smallest element
  std::vector<int> stabilizer;     // member set of the stabilizer in h
  // transversal[k]: first group element (fixture order) moving the
  // representative to elements[k]
  std::vector<int> transversal;
};

std::vector<Orbit> orbit_decomposition(const GSet& x, const Subgroup& h);

// An n-tuple over the based set {0..x.n}, encoded in mixed radix with
// coordinate 1 the most significant digit.
long long encode_tuple(const std::vector<int>& t, int base);
std::vector<int> decode_tuple(long long code, int len, int base);

// Lemma-style decomposition of (X^n)^Lambda for Lambda the graph of
// alpha: H -> Sigma_n. X needs only an H-action: pass any G-set together
// with a subgroup of its group.
struct PowerFixedData {
  // formula side: per orbit of (n, alpha|H), the fixed set X^{K_i}
  std::vector<Orbit> orbits;                  // orbits of the index H-set
  std::vector<std::vector<int>> factor_fixed; // fixed_points(X, K_i) per orbit
  // the Lambda-fixed tuples themselves, sorted by code
  std::vector<long long> fixed_tuples;
  bool bijection_ok = false;  // round trip through the coset-rep formulas
};

PowerFixedData power_fixed_points(const GSet& x, const Subgroup& hx,
                                  const SymHom& alpha);

// Brute force: filter all tuples by the Lambda-action formula.
std::vector<long long> power_fixed_brute(const GSet& x, const Subgroup& hx,
                                         const SymHom& alpha);

// A = G+ smash_H B with the embedded copy of B and the retraction maps.
struct InducedGSet {
  GSet a;                     // the G-set A = (q, alpha)
  std::vector<int> iota;      // B -> A (identity onto the leading block)
  std::vector<int> pi;        // A -> B (projection, kills the complement)
  bool retract_ok = false;    // pi . iota == id and both are H-maps
};

InducedGSet induce_gset(const Subgroup& h, const GSet& b);

}  // namespace equicat
