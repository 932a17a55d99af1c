#include "equicat/operators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace equicat {

bool operator==(const OpMorphism& a, const OpMorphism& b) {
  return a.phi == b.phi && a.labels == b.labels;
}

bool operator<(const OpMorphism& a, const OpMorphism& b) {
  if (!(a.phi == b.phi)) return a.phi < b.phi;
  return a.labels < b.labels;
}

OpMorphism dc_identity(const Operad& c, int n) {
  return OpMorphism{FMap::identity(n), std::vector<int>(n, c.unit)};
}

OpMorphism dc_from_pi(const Operad& c, const FMap& phi) {
  if (!phi.in_pi()) throw std::invalid_argument("dc_from_pi: map not in Pi");
  std::vector<int> labels(phi.cod);
  auto sizes = phi.fiber_sizes();
  for (int j = 1; j <= phi.cod; ++j) labels[j - 1] = sizes[j - 1] == 1 ? c.unit : 0;
  return OpMorphism{phi, std::move(labels)};
}

std::vector<OpMorphism> dc_hom(const Operad& c, int m, int n) {
  std::vector<OpMorphism> out;
  auto push_component = [&](const FMap& phi) {
    auto sizes = phi.fiber_sizes();
    for (int s : sizes)
      if (s > c.cap || c.level_size[s] == 0) return;
    std::vector<int> labels(n, 0);
    while (true) {
      out.push_back(OpMorphism{phi, labels});
      int pos = n - 1;
      while (pos >= 0 && ++labels[pos] == c.level_size[sizes[pos]]) {
        labels[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  };
  push_component(FMap::zero(m, n));
  for (const FMap& phi : all_fmaps(m, n))
    if (!(phi == FMap::zero(m, n))) push_component(phi);
  return out;
}

Perm shuffle_perm(const FMap& phi, const FMap& psi, int j) {
  FMap comp = compose(phi, psi);
  std::vector<int> nat = comp.fiber(j);  // ascending
  std::vector<int> blocks;
  for (int i : phi.fiber(j)) {
    auto f = psi.fiber(i);
    blocks.insert(blocks.end(), f.begin(), f.end());
  }
  const int q = static_cast<int>(nat.size());
  std::vector<int> pos_in_blocks(psi.dom() + 1, 0);
  for (int t = 0; t < q; ++t) pos_in_blocks[blocks[t]] = t + 1;
  // natural element nat[t-1] sits at position sigma(t) of the block ordering
  std::vector<int> img(q + 1);
  img[0] = 0;
  for (int t = 1; t <= q; ++t) img[t] = pos_in_blocks[nat[t - 1]];
  return Perm(std::move(img));
}

OpMorphism dc_compose(const Operad& c, const OpMorphism& f, const OpMorphism& g) {
  if (g.phi.cod != f.phi.dom())
    throw std::invalid_argument("dc_compose: domain mismatch");
  FMap comp = compose(f.phi, g.phi);
  std::vector<int> labels(f.phi.cod);
  for (int j = 1; j <= f.phi.cod; ++j) {
    auto fiber = f.phi.fiber(j);
    std::vector<int> arities, inputs;
    for (int i : fiber) {
      arities.push_back(static_cast<int>(g.phi.fiber(i).size()));
      inputs.push_back(g.labels[i - 1]);
    }
    int e = c.gamma(static_cast<int>(fiber.size()), f.labels[j - 1], arities, inputs);
    int q = static_cast<int>(comp.fiber(j).size());
    labels[j - 1] = c.act_sigma(q, shuffle_perm(f.phi, g.phi, j), e);
  }
  return OpMorphism{comp, std::move(labels)};
}

OpMorphism dg_action(const Operad& c, int g, const OpMorphism& f,
                     const GSet& alpha, const GSet& beta) {
  const GroupPtr& grp = alpha.group;
  int ginv = grp->inv(g);
  const Perm& bg = beta.act[g];
  FMap phi2 = compose(compose(FMap::from_perm(bg), f.phi),
                      FMap::from_perm(alpha.act[ginv]));
  const Perm bginv = bg.inverse();
  std::vector<int> labels(f.phi.cod);
  for (int j = 1; j <= f.phi.cod; ++j) {
    int src = bginv(j);
    int q = static_cast<int>(f.phi.fiber(src).size());
    Perm sigma = shuffle_perm(f.phi, FMap::from_perm(alpha.act[ginv]), src);
    labels[j - 1] = c.act_sigma(q, sigma, c.act_g(q, g, f.labels[src - 1]));
  }
  return OpMorphism{phi2, std::move(labels)};
}

std::vector<int> DGHom::fixed(const Subgroup& h) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool fix = true;
    for (int m : h.members)
      if (action[m][i] != i) { fix = false; break; }
    if (fix) out.push_back(i);
  }
  return out;
}

DGHom dg_hom(const Operad& c, const GSet& alpha, const GSet& beta) {
  DGHom out;
  out.a = alpha;
  out.b = beta;
  out.morphisms = dc_hom(c, alpha.n, beta.n);
  std::map<OpMorphism, int> index;
  for (int i = 0; i < out.size(); ++i) index[out.morphisms[i]] = i;
  const GroupPtr& g = alpha.group;
  out.action.assign(g->order(), std::vector<int>(out.size(), -1));
  for (int e = 0; e < g->order(); ++e)
    for (int i = 0; i < out.size(); ++i) {
      auto moved = dg_action(c, e, out.morphisms[i], alpha, beta);
      auto it = index.find(moved);
      if (it == index.end()) throw std::logic_error("dg_hom: action left the hom set");
      out.action[e][i] = it->second;
    }
  return out;
}

Perm cocycle_sigma(const FMap& phi, const GSet& alpha, int h, int j) {
  return shuffle_perm(phi, FMap::from_perm(alpha.act[h]), j);
}

bool is_equivariant(const FMap& phi, const GSet& alpha, const GSet& beta,
                    const Subgroup& h) {
  for (int m : h.members)
    for (int i = 1; i <= phi.dom(); ++i)
      if (phi(alpha.apply(m, i)) != beta.apply(m, phi(i))) return false;
  return true;
}

bool cocycle_law_holds(const FMap& phi, const GSet& alpha, const GSet& beta,
                       const Subgroup& h) {
  if (!is_equivariant(phi, alpha, beta, h))
    throw std::invalid_argument("cocycle: phi is not H-equivariant");
  for (int x : h.members)
    for (int y : h.members) {
      int xy = h.parent->mul(x, y);
      for (int j = 1; j <= phi.cod; ++j) {
        int jj = beta.act[h.parent->inv(x)](j);
        if (!(cocycle_sigma(phi, alpha, xy, j) ==
              cocycle_sigma(phi, alpha, x, j) * cocycle_sigma(phi, alpha, y, jj)))
          return false;
      }
    }
  return true;
}

DGFixedDecomposition dg_fixed_homs(const Operad& c, const GSet& alpha,
                                   const GSet& beta, const Subgroup& h) {
  DGFixedDecomposition out;
  GSet beta_h = beta.restricted(h);
  auto orbits = orbit_decomposition(beta_h, Subgroup::whole(beta_h.group));
  // lift orbit data back to parent element indices
  for (Orbit& o : orbits) {
    for (int& m : o.stabilizer) m = h.members[m];
    for (int& m : o.transversal) m = h.members[m];
  }

  std::set<OpMorphism> rebuilt;
  for (const FMap& phi : all_fmaps(alpha.n, beta.n)) {
    bool skip = false;
    for (int s : phi.fiber_sizes())
      if (s > c.cap || c.level_size[s] == 0) skip = true;
    if (skip || !is_equivariant(phi, alpha, beta, h)) continue;
    out.equivariant_phis.push_back(phi);

    std::vector<DGFixedBlock> blocks;
    for (const Orbit& o : orbits) {
      DGFixedBlock blk;
      blk.representative = o.representative;
      blk.orbit = o.elements;
      blk.stabilizer = o.stabilizer;
      blk.transversal = o.transversal;
      blk.fiber_size = static_cast<int>(phi.fiber(o.representative).size());
      for (int k : o.stabilizer)
        blk.lambda.emplace_back(k, cocycle_sigma(phi, alpha, k, o.representative));
      blk.fixed_labels = c.lambda_fixed(blk.fiber_size, blk.lambda);
      blocks.push_back(std::move(blk));
    }

    // rebuild every fixed morphism: pick x_rep per orbit, spread with
    // x_j = h_j . x . sigma_rep(h_j^-1)
    std::vector<size_t> pick(blocks.size(), 0);
    bool any_empty = false;
    for (const auto& b : blocks)
      if (b.fixed_labels.empty()) any_empty = true;
    if (!any_empty) {
      while (true) {
        std::vector<int> labels(beta.n, -1);
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
          const DGFixedBlock& b = blocks[bi];
          int x = b.fixed_labels[pick[bi]];
          for (size_t k = 0; k < b.orbit.size(); ++k) {
            int hj = b.transversal[k];
            int moved = c.act_g(b.fiber_size, hj, x);
            Perm s = cocycle_sigma(phi, alpha, h.parent->inv(hj), b.representative);
            labels[b.orbit[k] - 1] = c.act_sigma(b.fiber_size, s, moved);
          }
        }
        rebuilt.insert(OpMorphism{phi, labels});
        int pos = static_cast<int>(pick.size()) - 1;
        while (pos >= 0 && ++pick[pos] == blocks[pos].fixed_labels.size()) {
          pick[pos] = 0;
          --pos;
        }
        if (pos < 0 || blocks.empty()) break;
      }
    }
    out.blocks.push_back(std::move(blocks));
  }

  out.fixed_morphisms.assign(rebuilt.begin(), rebuilt.end());

  // round trip: every rebuilt morphism projects back to its block data
  out.bijection_ok = true;
  for (const OpMorphism& f : out.fixed_morphisms) {
    size_t pi = std::find_if(out.equivariant_phis.begin(), out.equivariant_phis.end(),
                             [&](const FMap& p) { return p == f.phi; }) -
                out.equivariant_phis.begin();
    if (pi == out.equivariant_phis.size()) { out.bijection_ok = false; continue; }
    for (const DGFixedBlock& b : out.blocks[pi]) {
      int x = f.labels[b.representative - 1];
      if (!std::binary_search(b.fixed_labels.begin(), b.fixed_labels.end(), x))
        out.bijection_ok = false;
    }
  }
  return out;
}

}  // namespace equicat
