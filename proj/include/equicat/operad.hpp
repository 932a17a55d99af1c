#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "equicat/fmap.hpp"
#include "equicat/group.hpp"

namespace equicat {

// Block permutation of Sigma_{sum(sizes)} moving consecutive blocks of the
// given sizes as sigma moves letters.
Perm block_perm(const std::vector<int>& sizes, const Perm& sigma);

// Reduced discrete operad with finite (G x Sigma_j)-set levels, arity-capped.
// gamma is total within the cap; the left G and right Sigma actions are
// stored as tables.
class Operad {
public:
  GroupPtr group;
  std::string name;
  int cap = 0;
  std::vector<int> level_size;            // levels 0..cap, level_size[0] == 1
  std::vector<std::vector<int>> gact;     // [j][g * size + c]
  std::vector<std::vector<int>> sact;     // [j][rank(sigma) * size + c], right action
  int unit = 0;                           // element of level 1
  std::function<int(int k, int c, const std::vector<int>& arities,
                    const std::vector<int>& inputs)>
      gamma_fn;

  int size(int j) const { return level_size[j]; }
  int gamma(int k, int c, const std::vector<int>& arities,
            const std::vector<int>& inputs) const;
  int act_g(int j, int g, int c) const { return gact[j][g * level_size[j] + c]; }
  int act_sigma(int j, const Perm& s, int c) const {
    return sact[j][perm_rank(s) * level_size[j] + c];
  }
  // combined left action of G x Sigma_j: (g, s) . c = g . (c . s^-1)
  int act_pair(int j, int g, const Perm& s, int c) const {
    return act_g(j, g, act_sigma(j, s.inverse(), c));
  }
  int degeneracy(int j, int i, int c) const;   // gamma(c; id^{i-1}, 0, id^{j-i})

  bool sigma_free(int j) const;
  bool sigma_free_all() const;

  // c in C(q) fixed by every (g, s) of the graph
  std::vector<int> lambda_fixed(int q, const std::vector<std::pair<int, Perm>>& graph) const;

  // discrete E-infinity stand-in: Sigma-free and |C(j)^Lambda| == 1 for all
  // Lambda in F_j, within the cap
  bool einfty_like() const;

  // unit, associativity, and equivariance laws, exhaustive within the cap;
  // returns a list of violated-law descriptions (empty when lawful)
  std::vector<std::string> check_laws() const;
};

Operad make_commutativity_operad(const GroupPtr& g, int cap);   // N
Operad make_permutation_operad(const GroupPtr& g, int cap);     // Sigma
// {bottom, projections 1..j} in each arity
Operad make_projection_operad(const GroupPtr& g, int cap);
// endomorphism operad of a based G-set S (levels grow as |S|^(|S|^j);
// keep S and the cap tiny)
Operad make_endo_operad(const GroupPtr& g, const GSet& s, int cap);
// random suboperad of End({*,a}) generated from a seeded element choice
Operad make_random_operad(const GroupPtr& g, int cap, unsigned seed);
Operad make_product_operad(const Operad& a, const Operad& b);
// Sigma x (random suboperad): Sigma-free with seeded variety
Operad make_sigma_free_random_operad(const GroupPtr& g, int cap, unsigned seed);

// Explicit-table operad (fixture path).
struct OperadTables {
  GroupPtr group;
  std::string name;
  int cap = 0;
  std::vector<int> level_size;
  std::vector<std::vector<int>> gact;   // same layout as Operad
  std::vector<std::vector<int>> sact;
  int unit = 0;
  // key: (k, c, arities...) packed; value: result index
  std::map<std::vector<int>, int> gamma;
};
Operad make_table_operad(OperadTables tables);

}  // namespace equicat
