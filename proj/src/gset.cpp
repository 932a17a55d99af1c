#include "equicat/gset.hpp"

#include <algorithm>
#include <stdexcept>

namespace equicat {

bool GSet::is_valid() const {
  if (static_cast<int>(act.size()) != group->order()) return false;
  for (const Perm& p : act)
    if (p.degree() != n) return false;
  if (!act[0].is_identity()) return false;
  for (int g = 0; g < group->order(); ++g)
    for (int h = 0; h < group->order(); ++h)
      if (!(act[group->mul(g, h)] == act[g] * act[h])) return false;
  return true;
}

GSet GSet::trivial(const GroupPtr& g, int n) {
  return GSet{g, n, std::vector<Perm>(g->order(), Perm(n))};
}

GSet GSet::regular(const GroupPtr& g) {
  GSet out{g, g->order(), {}};
  for (int a = 0; a < g->order(); ++a) {
    std::vector<int> img(g->order() + 1);
    img[0] = 0;
    for (int i = 1; i <= g->order(); ++i) img[i] = g->mul(a, i - 1) + 1;
    out.act.push_back(Perm(std::move(img)));
  }
  return out;
}

GSet GSet::from_hom(const GroupPtr& g, const std::vector<Perm>& gen_images) {
  const auto& gens = g->generators();
  if (gen_images.size() != gens.size())
    throw std::invalid_argument("gset: one permutation per generator required");
  const int n = gens.empty() ? 0 : gen_images[0].degree();
  std::vector<Perm> act(g->order(), Perm(n));
  std::vector<char> known(g->order(), 0);
  known[0] = 1;
  std::vector<int> work{0};
  for (size_t i = 0; i < gens.size(); ++i) {
    if (known[gens[i]]) {
      if (!(act[gens[i]] == gen_images[i]))
        throw std::invalid_argument("gset: inconsistent generator images");
    } else {
      known[gens[i]] = 1;
      act[gens[i]] = gen_images[i];
      work.push_back(gens[i]);
    }
  }
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < work.size(); ++j)
      for (auto [a, b] : {std::pair{work[i], work[j]}, std::pair{work[j], work[i]}}) {
        int p = g->mul(a, b);
        Perm img = act[a] * act[b];
        if (known[p]) {
          if (!(act[p] == img))
            throw std::invalid_argument("gset: generator images do not define an action");
        } else {
          known[p] = 1;
          act[p] = img;
          work.push_back(p);
        }
      }
  GSet out{g, n, std::move(act)};
  if (!out.is_valid()) throw std::invalid_argument("gset: action laws fail");
  return out;
}

GSet GSet::natural(const GroupPtr& g) {
  if (g->perm_rep().empty())
    throw std::invalid_argument("gset: group has no permutation representation");
  return GSet{g, g->perm_rep()[0].degree(), g->perm_rep()};
}

GSet GSet::cosets(const GroupPtr& g, const Subgroup& h) {
  std::vector<int> coset_of(g->order(), -1);
  std::vector<int> reps;
  for (int e = 0; e < g->order(); ++e) {
    if (coset_of[e] >= 0) continue;
    int k = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int m : h.members) coset_of[g->mul(e, m)] = k;
  }
  const int r = static_cast<int>(reps.size());
  GSet out{g, r, {}};
  for (int a = 0; a < g->order(); ++a) {
    std::vector<int> img(r + 1);
    img[0] = 0;
    for (int k = 0; k < r; ++k) img[k + 1] = coset_of[g->mul(a, reps[k])] + 1;
    out.act.push_back(Perm(std::move(img)));
  }
  return out;
}

GSet GSet::restricted(const Subgroup& h) const {
  if (h.parent != group) throw std::invalid_argument("gset: subgroup of a different group");
  GSet out{h.as_group(), n, {}};
  out.act.reserve(h.members.size());
  for (int m : h.members) out.act.push_back(act[m]);
  return out;
}

std::vector<int> fixed_points(const GSet& x, const Subgroup& h) {
  std::vector<int> out{0};
  for (int i = 1; i <= x.n; ++i) {
    bool fixed = true;
    for (int m : h.members)
      if (x.apply(m, i) != i) { fixed = false; break; }
    if (fixed) out.push_back(i);
  }
  return out;
}

std::vector<Orbit> orbit_decomposition(const GSet& x, const Subgroup& h) {
  std::vector<char> seen(x.n + 1, 0);
  std::vector<Orbit> out;
  for (int i = 1; i <= x.n; ++i) {
    if (seen[i]) continue;
    Orbit orb;
    orb.representative = i;
    for (int m : h.members) {
      int j = x.apply(m, i);
      if (!seen[j]) {
        seen[j] = 1;
        orb.elements.push_back(j);
      }
      if (j == i) orb.stabilizer.push_back(m);
    }
    std::sort(orb.elements.begin(), orb.elements.end());
    orb.transversal.resize(orb.elements.size(), -1);
    for (size_t k = 0; k < orb.elements.size(); ++k) {
      for (int m : h.members)
        if (x.apply(m, i) == orb.elements[k]) { orb.transversal[k] = m; break; }
    }
    out.push_back(std::move(orb));
  }
  return out;
}

long long encode_tuple(const std::vector<int>& t, int base) {
  long long code = 0;
  for (int v : t) code = code * base + v;
  return code;
}

std::vector<int> decode_tuple(long long code, int len, int base) {
  std::vector<int> t(len);
  for (int i = len - 1; i >= 0; --i) {
    t[i] = static_cast<int>(code % base);
    code /= base;
  }
  return t;
}

namespace {

void check_compatible(const GSet& x, const Subgroup& hx, const SymHom& alpha) {
  if (hx.parent != x.group)
    throw std::invalid_argument("power_fixed_points: subgroup of a different group");
  if (alpha.domain.members != hx.members || alpha.domain.parent != hx.parent)
    throw std::invalid_argument("power_fixed_points: alpha domain differs from H");
}

// the index set (n, alpha|H) as an H-set over h.as_group()
GSet index_hset(const SymHom& alpha) {
  GSet out{alpha.domain.as_group(), alpha.arity, alpha.images};
  return out;
}

}  // namespace

std::vector<long long> power_fixed_brute(const GSet& x, const Subgroup& hx,
                                         const SymHom& alpha) {
  check_compatible(x, hx, alpha);
  const int n = alpha.arity;
  const int base = x.n + 1;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= base;
  std::vector<long long> out;
  std::vector<int> t(n);
  for (long long code = 0; code < total; ++code) {
    t = decode_tuple(code, n, base);
    bool fixed = true;
    for (int m : hx.members) {
      const Perm& am_inv = alpha.image_of(hx.parent->inv(m));
      // (h, alpha(h)) (x_1,...,x_n) = (h x_{alpha(h^-1)(1)}, ..., h x_{alpha(h^-1)(n)})
      for (int j = 1; j <= n; ++j) {
        if (x.apply(m, t[am_inv(j) - 1]) != t[j - 1]) { fixed = false; break; }
      }
      if (!fixed) break;
    }
    if (fixed) out.push_back(code);
  }
  return out;
}

PowerFixedData power_fixed_points(const GSet& x, const Subgroup& hx,
                                  const SymHom& alpha) {
  check_compatible(x, hx, alpha);
  const int n = alpha.arity;
  const int base = x.n + 1;

  PowerFixedData data;
  GSet idx = index_hset(alpha);
  Subgroup hwhole = Subgroup::whole(idx.group);
  auto orbits = orbit_decomposition(idx, hwhole);
  // translate stabilizer/transversal back to parent element indices
  for (Orbit& o : orbits) {
    for (int& m : o.stabilizer) m = hx.members[m];
    for (int& m : o.transversal) m = hx.members[m];
  }
  data.orbits = orbits;

  for (const Orbit& o : data.orbits) {
    Subgroup k{x.group, o.stabilizer};
    data.factor_fixed.push_back(fixed_points(x, k));
  }

  // assemble (X^n)^Lambda from the product of the X^{K_i}: the tuple has
  // x_j = h_j y_i for j in orbit i, where y_i ranges over X^{K_i}
  std::vector<size_t> pick(data.orbits.size(), 0);
  bool done = data.orbits.empty();
  std::vector<int> t(n, 0);
  if (done) {
    if (n == 0) data.fixed_tuples.push_back(0);
  }
  while (!done) {
    std::fill(t.begin(), t.end(), 0);
    for (size_t i = 0; i < data.orbits.size(); ++i) {
      const Orbit& o = data.orbits[i];
      int y = data.factor_fixed[i][pick[i]];
      for (size_t k = 0; k < o.elements.size(); ++k)
        t[o.elements[k] - 1] = x.apply(o.transversal[k], y);
    }
    data.fixed_tuples.push_back(encode_tuple(t, base));
    int pos = static_cast<int>(pick.size()) - 1;
    while (pos >= 0 && ++pick[pos] == data.factor_fixed[pos].size()) {
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0) done = true;
  }
  std::sort(data.fixed_tuples.begin(), data.fixed_tuples.end());

  // round trip: project each assembled tuple to orbit representatives and
  // rebuild; also check the projections land in the stated fixed sets
  data.bijection_ok = true;
  for (long long code : data.fixed_tuples) {
    auto tuple = decode_tuple(code, n, base);
    std::vector<int> t2(n, 0);
    for (size_t i = 0; i < data.orbits.size(); ++i) {
      const Orbit& o = data.orbits[i];
      int y = tuple[o.representative - 1];
      if (!std::binary_search(data.factor_fixed[i].begin(), data.factor_fixed[i].end(), y)) {
        data.bijection_ok = false;
        break;
      }
      for (size_t k = 0; k < o.elements.size(); ++k)
        t2[o.elements[k] - 1] = x.apply(o.transversal[k], y);
    }
    if (encode_tuple(t2, base) != code) data.bijection_ok = false;
  }
  return data;
}

InducedGSet induce_gset(const Subgroup& h, const GSet& b) {
  const GroupPtr& g = h.parent;
  if (b.group->order() != h.order())
    throw std::invalid_argument("induce_gset: B must be an H-set over h.as_group()");

  // left cosets gH with the identity coset first
  std::vector<int> coset_of(g->order(), -1);
  std::vector<int> reps;
  for (int e = 0; e < g->order(); ++e) {
    if (coset_of[e] >= 0) continue;
    reps.push_back(e);
    for (int m : h.members) coset_of[g->mul(e, m)] = static_cast<int>(reps.size()) - 1;
  }
  const int r = static_cast<int>(reps.size());
  const int nb = b.n;
  const int q = r * nb;

  std::vector<int> pos_in_h(g->order(), -1);
  for (size_t i = 0; i < h.members.size(); ++i) pos_in_h[h.members[i]] = static_cast<int>(i);

  InducedGSet out;
  out.a.group = g;
  out.a.n = q;
  for (int e = 0; e < g->order(); ++e) {
    std::vector<int> img(q + 1);
    img[0] = 0;
    for (int k = 0; k < r; ++k) {
      int moved = g->mul(e, reps[k]);
      int k2 = coset_of[moved];
      int hh = g->mul(g->inv(reps[k2]), moved);  // moved = reps[k2] * hh with hh in H
      int hpos = pos_in_h[hh];
      if (hpos < 0) throw std::logic_error("induce_gset: coset arithmetic failed");
      for (int bb = 1; bb <= nb; ++bb)
        img[k * nb + bb] = k2 * nb + b.apply(hpos, bb);
    }
    out.a.act.push_back(Perm(std::move(img)));
  }

  out.iota.assign(nb + 1, 0);
  for (int bb = 1; bb <= nb; ++bb) out.iota[bb] = bb;
  out.pi.assign(q + 1, 0);
  for (int bb = 1; bb <= nb; ++bb) out.pi[bb] = bb;

  // retract and H-equivariance checks
  out.retract_ok = out.a.is_valid();
  for (int bb = 1; bb <= nb && out.retract_ok; ++bb)
    if (out.pi[out.iota[bb]] != bb) out.retract_ok = false;
  for (size_t i = 0; i < h.members.size() && out.retract_ok; ++i) {
    int m = h.members[i];
    for (int bb = 1; bb <= nb; ++bb)
      if (out.iota[b.apply(static_cast<int>(i), bb)] != out.a.apply(m, out.iota[bb]))
        out.retract_ok = false;
    for (int aa = 1; aa <= q; ++aa)
      if (out.pi[out.a.apply(m, aa)] != b.apply(static_cast<int>(i), out.pi[aa]))
        out.retract_ok = false;
  }
  return out;
}

}  // namespace equicat
