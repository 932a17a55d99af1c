#pragma once

#include <optional>
#include <vector>

#include "equicat/operad.hpp"

namespace equicat {

// Morphism (phi, c) of D(C): labels[j-1] lies in C(|phi^-1(j)|).
struct OpMorphism {
  FMap phi;
  std::vector<int> labels;
};

bool operator==(const OpMorphism& a, const OpMorphism& b);
bool operator<(const OpMorphism& a, const OpMorphism& b);

OpMorphism dc_identity(const Operad& c, int n);
// iota: Pi -> D(C); unit labels on singleton fibers, C(0) on empty ones
OpMorphism dc_from_pi(const Operad& c, const FMap& phi);

// The full hom set D(C)(m,n); the basepoint (phi = 0) comes first and the
// rest follow in lexicographic (phi, labels) order. Components whose fiber
// sizes exceed the cap or hit an empty level are absent.
std::vector<OpMorphism> dc_hom(const Operad& c, int m, int n);

// sigma_j of the composition formula: converts the natural ordering of
// (phi.psi)^-1(j) to the ordering by blocks psi^-1(i), i ascending in
// phi^-1(j). Depends only on phi and psi.
Perm shuffle_perm(const FMap& phi, const FMap& psi, int j);

OpMorphism dc_compose(const Operad& c, const OpMorphism& f, const OpMorphism& g);

// Twisted action of Construction DtoDG: g.f = beta(g) . (gf) . alpha(g^-1),
// computed by the expanded formula.
OpMorphism dg_action(const Operad& c, int g, const OpMorphism& f,
                     const GSet& alpha, const GSet& beta);

// Hom G-set of D_G(C) with its twisted action materialized.
struct DGHom {
  GSet a, b;  // (m, alpha), (n, beta)
  std::vector<OpMorphism> morphisms;
  std::vector<std::vector<int>> action;  // [g][idx] -> idx

  int size() const { return static_cast<int>(morphisms.size()); }
  std::vector<int> fixed(const Subgroup& h) const;
};

DGHom dg_hom(const Operad& c, const GSet& alpha, const GSet& beta);

// cocycle sigma_j(h) for an H-equivariant phi: (m,alpha) -> (n,beta)
Perm cocycle_sigma(const FMap& phi, const GSet& alpha, int h, int j);
// checks sigma_j(hk) = sigma_j(h) sigma_{beta(h^-1)(j)}(k) for all h,k,j
bool cocycle_law_holds(const FMap& phi, const GSet& alpha, const GSet& beta,
                       const Subgroup& h);

bool is_equivariant(const FMap& phi, const GSet& alpha, const GSet& beta,
                    const Subgroup& h);

// One orbit block of the fixed-point decomposition of [D_G((m,a),(n,b))]^H.
struct DGFixedBlock {
  int representative = 0;            // orbit representative in (n, beta|H)
  std::vector<int> orbit;            // sorted orbit elements
  std::vector<int> stabilizer;       // K <= H (parent element indices)
  std::vector<int> transversal;      // h_j with beta(h_j)(rep) = orbit[k]
  int fiber_size = 0;                // q, constant on the orbit
  std::vector<std::pair<int, Perm>> lambda;  // graph {(k, sigma_rep(k))}
  std::vector<int> fixed_labels;     // C(q)^Lambda
};

struct DGFixedDecomposition {
  std::vector<FMap> equivariant_phis;
  std::vector<std::vector<DGFixedBlock>> blocks;  // per phi
  // the fixed morphisms rebuilt through the inverse bijection, sorted
  std::vector<OpMorphism> fixed_morphisms;
  bool bijection_ok = false;
};

DGFixedDecomposition dg_fixed_homs(const Operad& c, const GSet& alpha,
                                   const GSet& beta, const Subgroup& h);

}  // namespace equicat
