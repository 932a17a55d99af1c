#pragma once

#include <memory>
#include <string>
#include <vector>

#include "equicat/perm.hpp"

namespace equicat {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Finite group given by its multiplication table. Elements are indices
// 0..order-1 with 0 the identity. The table is validated at construction.
class Group {
public:
  static GroupPtr from_table(std::string name, std::vector<std::vector<int>> mul);
  static GroupPtr from_perm_generators(std::string name, int degree,
                                       std::vector<Perm> gens);
  static GroupPtr trivial();
  static GroupPtr cyclic(int k);
  static GroupPtr symmetric(int k);  // elements indexed by all_perms(k) rank
  static GroupPtr product(const GroupPtr& a, const GroupPtr& b);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int id() const { return 0; }

  // A short generating sequence, greedily chosen in element order.
  const std::vector<int>& generators() const { return gens_; }

  // Set by the permutation constructors; empty for table groups.
  const std::vector<Perm>& perm_rep() const { return perm_rep_; }

  // For product groups: split a product element into its factors.
  std::pair<int, int> unpair(int e) const;
  int pair(int a, int b) const;
  bool is_product() const { return factor_b_order_ > 0; }

private:
  Group() = default;
  void validate() const;
  void compute_generators();

  std::string name_;
  int order_ = 0;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<Perm> perm_rep_;
  int factor_b_order_ = 0;
};

// Subgroup of a parent group as a sorted member list (always contains 0).
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;

  bool contains(int e) const;
  int order() const { return static_cast<int>(members.size()); }

  // Standalone group on the members, plus the member list doubling as
  // the index-to-parent-element map.
  GroupPtr as_group() const;

  static Subgroup whole(const GroupPtr& g);
  static Subgroup trivial(const GroupPtr& g);
  static Subgroup generated(const GroupPtr& g, const std::vector<int>& gens);
};

bool operator==(const Subgroup& a, const Subgroup& b);
bool operator<(const Subgroup& a, const Subgroup& b);

// All subgroups of g, sorted; found by closing extensions of the trivial
// subgroup one generator at a time. Fine for |g| <= ~200.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

// Homomorphism from a subgroup H of some group into Sigma_n, stored as one
// permutation per member of H (aligned with H.members).
struct SymHom {
  Subgroup domain;
  int arity = 0;
  std::vector<Perm> images;

  const Perm& image_of(int parent_elem) const;
  bool is_valid() const;  // hom law + identity
};

// The graph subgroup Lambda_alpha = {(h, alpha(h))} of G x Sigma_n.
struct GraphSubgroup {
  SymHom hom;
  // members of the realized subgroup of product(G, symmetric(n)),
  // sorted pair codes h * n! + rank(alpha(h))
  std::vector<long long> realized;

  static GraphSubgroup of(const SymHom& hom);
};

bool operator==(const GraphSubgroup& a, const GraphSubgroup& b);
bool operator<(const GraphSubgroup& a, const GraphSubgroup& b);

// All homomorphisms G -> Sigma_n in deterministic order (lexicographic on
// the ranks of the generator images).
std::vector<SymHom> enumerate_homs(const GroupPtr& g, int n);
std::vector<SymHom> enumerate_homs(const Subgroup& h, int n);

// The family F_n of all graph subgroups Lambda_beta over subgroups of g,
// deduplicated by realized member set and sorted.
std::vector<GraphSubgroup> family_Fn(const GroupPtr& g, int n);

// Checks that the family is closed under subconjugacy inside G x Sigma_n.
bool family_subconjugacy_closed(const GroupPtr& g, int n,
                                const std::vector<GraphSubgroup>& fam);

}  // namespace equicat
