#include "equicat/operad.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equicat {

Perm block_perm(const std::vector<int>& sizes, const Perm& sigma) {
  const int k = static_cast<int>(sizes.size());
  if (sigma.degree() != k) throw std::invalid_argument("block_perm: arity mismatch");
  int p = std::accumulate(sizes.begin(), sizes.end(), 0);
  Perm sinv = sigma.inverse();
  std::vector<int> new_start(k + 1, 0);
  int off = 0;
  for (int jp = 1; jp <= k; ++jp) {
    new_start[jp] = off;
    off += sizes[sinv(jp) - 1];
  }
  std::vector<int> old_start(k + 1, 0);
  off = 0;
  for (int j = 1; j <= k; ++j) {
    old_start[j] = off;
    off += sizes[j - 1];
  }
  std::vector<int> img(p + 1);
  img[0] = 0;
  for (int j = 1; j <= k; ++j)
    for (int t = 1; t <= sizes[j - 1]; ++t)
      img[old_start[j] + t] = new_start[sigma(j)] + t;
  return Perm(std::move(img));
}

int Operad::gamma(int k, int c, const std::vector<int>& arities,
                  const std::vector<int>& inputs) const {
  int total = std::accumulate(arities.begin(), arities.end(), 0);
  if (k > cap || total > cap)
    throw std::out_of_range("operad: gamma arity exceeds cap " + std::to_string(cap));
  return gamma_fn(k, c, arities, inputs);
}

int Operad::degeneracy(int j, int i, int c) const {
  std::vector<int> arities(j, 1), inputs(j, unit);
  arities[i - 1] = 0;
  inputs[i - 1] = 0;
  return gamma(j, c, arities, inputs);
}

bool Operad::sigma_free(int j) const {
  for (const Perm& s : all_perms(j)) {
    if (s.is_identity()) continue;
    for (int c = 0; c < level_size[j]; ++c)
      if (act_sigma(j, s, c) == c) return false;
  }
  return true;
}

bool Operad::sigma_free_all() const {
  for (int j = 0; j <= cap; ++j)
    if (!sigma_free(j)) return false;
  return true;
}

std::vector<int> Operad::lambda_fixed(
    int q, const std::vector<std::pair<int, Perm>>& graph) const {
  std::vector<int> out;
  for (int c = 0; c < level_size[q]; ++c) {
    bool fixed = true;
    for (const auto& [g, s] : graph)
      if (act_pair(q, g, s, c) != c) { fixed = false; break; }
    if (fixed) out.push_back(c);
  }
  return out;
}

bool Operad::einfty_like() const {
  if (!sigma_free_all()) return false;
  for (int j = 0; j <= cap; ++j) {
    for (const GraphSubgroup& lam : family_Fn(group, j)) {
      std::vector<std::pair<int, Perm>> graph;
      for (size_t i = 0; i < lam.hom.domain.members.size(); ++i)
        graph.emplace_back(lam.hom.domain.members[i], lam.hom.images[i]);
      if (lambda_fixed(j, graph).size() != 1) return false;
    }
  }
  return true;
}

namespace {

// compositions of `total` into `slots` nonnegative parts
void arity_splits(int slots, int total, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(slots, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == slots) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (slots == 0) {
    if (total == 0) out.push_back({});
    return;
  }
  rec(0, total);
}

}  // namespace

std::vector<std::string> Operad::check_laws() const {
  std::vector<std::string> bad;
  auto complain = [&](const std::string& s) {
    if (bad.size() < 8) bad.push_back(name + ": " + s);
  };

  if (level_size.empty() || level_size[0] != 1) complain("C(0) is not a point");

  // group/permutation action laws per level
  for (int j = 0; j <= cap; ++j) {
    for (int c = 0; c < level_size[j]; ++c) {
      if (act_g(j, 0, c) != c) complain("identity group element moves a point");
      if (act_sigma(j, Perm(j), c) != c) complain("identity permutation moves a point");
    }
    for (int g = 0; g < group->order(); ++g)
      for (int h = 0; h < group->order(); ++h)
        for (int c = 0; c < level_size[j]; ++c)
          if (act_g(j, group->mul(g, h), c) != act_g(j, g, act_g(j, h, c)))
            complain("G-action law fails at level " + std::to_string(j));
    for (const Perm& s : all_perms(j))
      for (const Perm& t : all_perms(j))
        for (int c = 0; c < level_size[j]; ++c)
          if (act_sigma(j, s * t, c) != act_sigma(j, t, act_sigma(j, s, c)))
            complain("right Sigma-action law fails at level " + std::to_string(j));
    for (int g = 0; g < group->order(); ++g)
      for (const Perm& s : all_perms(j))
        for (int c = 0; c < level_size[j]; ++c)
          if (act_g(j, g, act_sigma(j, s, c)) != act_sigma(j, s, act_g(j, g, c)))
            complain("G and Sigma actions do not commute at level " + std::to_string(j));
  }
  if (act_g(1, 0, unit) != unit) complain("unit not present");
  for (int g = 0; g < group->order(); ++g)
    if (act_g(1, g, unit) != unit) complain("unit is not G-fixed");

  // unit laws
  for (int j = 0; j <= cap; ++j)
    for (int d = 0; d < level_size[j]; ++d)
      if (gamma(1, unit, {j}, {d}) != d) complain("left unit law fails");
  for (int k = 0; k <= cap; ++k) {
    std::vector<int> ar(k, 1), in(k, unit);
    for (int c = 0; c < level_size[k]; ++c)
      if (gamma(k, c, ar, in) != c) complain("right unit law fails");
  }

  // equivariance and associativity, exhaustive within the cap
  for (int k = 0; k <= cap; ++k) {
    std::vector<std::vector<int>> splits;
    for (int p = 0; p <= cap; ++p) arity_splits(k, p, splits);
    for (const auto& js : splits) {
      const int p = std::accumulate(js.begin(), js.end(), 0);
      // iterate over all (c, d_1..d_k)
      std::vector<int> d(k, 0);
      auto for_each_dc = [&](auto&& body) {
        for (int c = 0; c < level_size[k]; ++c) {
          std::fill(d.begin(), d.end(), 0);
          while (true) {
            body(c, d);
            int pos = k - 1;
            while (pos >= 0 && ++d[pos] == level_size[js[pos]]) {
              d[pos] = 0;
              --pos;
            }
            if (pos < 0) break;
          }
        }
      };

      for_each_dc([&](int c, const std::vector<int>& dd) {
        int base = gamma(k, c, js, dd);
        // axiom (c): gamma(c sigma; d) = gamma(c; d_{sigma^-1(t)}) . block_perm
        for (const Perm& s : all_perms(k)) {
          std::vector<int> js2(k), dd2(k);
          Perm sinv = s.inverse();
          for (int t = 1; t <= k; ++t) {
            js2[t - 1] = js[sinv(t) - 1];
            dd2[t - 1] = dd[sinv(t) - 1];
          }
          int lhs = gamma(k, act_sigma(k, s, c), js, dd);
          int rhs = act_sigma(p, block_perm(js2, s), gamma(k, c, js2, dd2));
          if (lhs != rhs) complain("Sigma equivariance (outer) fails");
        }
        // axiom (b): gamma(c; d_t tau_t) = gamma(c; d) . (tau_1 + ... + tau_k)
        for (int slot = 0; slot < k; ++slot) {
          for (const Perm& t : all_perms(js[slot])) {
            std::vector<int> dd2 = dd;
            dd2[slot] = act_sigma(js[slot], t, dd[slot]);
            std::vector<int> img(p + 1);
            std::iota(img.begin(), img.end(), 0);
            int off = 0;
            for (int u = 0; u < slot; ++u) off += js[u];
            for (int u = 1; u <= js[slot]; ++u) img[off + u] = off + t(u);
            int lhs = gamma(k, c, js, dd2);
            int rhs = act_sigma(p, Perm(img), base);
            if (lhs != rhs) complain("Sigma equivariance (inner) fails");
          }
        }
        // G-equivariance
        for (int g = 0; g < group->order(); ++g) {
          std::vector<int> dd2(k);
          for (int t = 0; t < k; ++t) dd2[t] = act_g(js[t], g, dd[t]);
          if (gamma(k, act_g(k, g, c), js, dd2) != act_g(p, g, base))
            complain("G equivariance of gamma fails");
        }
        // associativity: third layer
        std::vector<std::vector<int>> lsplits;
        for (int q = 0; q <= cap; ++q) arity_splits(p, q, lsplits);
        for (const auto& ls : lsplits) {
          std::vector<int> e(p, 0);
          while (true) {
            // left route: gamma(gamma(c; d); e)
            int left = gamma(p, base, ls, e);
            // right route: gamma(c; gamma(d_t; e-block_t))
            std::vector<int> inner(k), inner_ar(k);
            int off = 0;
            for (int t = 0; t < k; ++t) {
              std::vector<int> bar(ls.begin() + off, ls.begin() + off + js[t]);
              std::vector<int> bin(e.begin() + off, e.begin() + off + js[t]);
              inner_ar[t] = std::accumulate(bar.begin(), bar.end(), 0);
              inner[t] = gamma(js[t], dd[t], bar, bin);
              off += js[t];
            }
            if (left != gamma(k, c, inner_ar, inner)) complain("associativity fails");
            int pos = p - 1;
            while (pos >= 0 && ++e[pos] == level_size[ls[pos]]) {
              e[pos] = 0;
              --pos;
            }
            if (pos < 0) break;
          }
        }
      });
      if (bad.size() >= 8) return bad;
    }
  }
  return bad;
}

namespace {

Operad skeleton(const GroupPtr& g, const std::string& name, int cap,
                std::vector<int> sizes) {
  Operad c;
  c.group = g;
  c.name = name;
  c.cap = cap;
  c.level_size = std::move(sizes);
  c.gact.resize(cap + 1);
  c.sact.resize(cap + 1);
  return c;
}

void fill_actions(Operad& c,
                  const std::function<int(int j, int g, int x)>& gfun,
                  const std::function<int(int j, const Perm& s, int x)>& sfun) {
  for (int j = 0; j <= c.cap; ++j) {
    const int sz = c.level_size[j];
    c.gact[j].assign(static_cast<size_t>(c.group->order()) * sz, 0);
    for (int g = 0; g < c.group->order(); ++g)
      for (int x = 0; x < sz; ++x) c.gact[j][g * sz + x] = gfun(j, g, x);
    const auto& perms = all_perms(j);
    c.sact[j].assign(perms.size() * sz, 0);
    for (size_t r = 0; r < perms.size(); ++r)
      for (int x = 0; x < sz; ++x) c.sact[j][r * sz + x] = sfun(j, perms[r], x);
  }
}

}  // namespace

Operad make_commutativity_operad(const GroupPtr& g, int cap) {
  Operad c = skeleton(g, "N", cap, std::vector<int>(cap + 1, 1));
  fill_actions(c, [](int, int, int) { return 0; }, [](int, const Perm&, int) { return 0; });
  c.unit = 0;
  c.gamma_fn = [](int, int, const std::vector<int>&, const std::vector<int>&) { return 0; };
  return c;
}

Operad make_permutation_operad(const GroupPtr& g, int cap) {
  std::vector<int> sizes(cap + 1);
  for (int j = 0; j <= cap; ++j) sizes[j] = static_cast<int>(all_perms(j).size());
  Operad c = skeleton(g, "Sigma", cap, std::move(sizes));
  fill_actions(
      c, [](int, int, int x) { return x; },
      [](int j, const Perm& s, int x) { return perm_rank(all_perms(j)[x] * s); });
  c.unit = 0;
  c.gamma_fn = [](int k, int cidx, const std::vector<int>& ar, const std::vector<int>& in) {
    const Perm& cp = all_perms(k)[cidx];
    int p = std::accumulate(ar.begin(), ar.end(), 0);
    std::vector<int> img(p + 1);
    std::iota(img.begin(), img.end(), 0);
    int off = 0;
    for (int t = 0; t < k; ++t) {
      const Perm& dt = all_perms(ar[t])[in[t]];
      for (int u = 1; u <= ar[t]; ++u) img[off + u] = off + dt(u);
      off += ar[t];
    }
    return perm_rank(block_perm(ar, cp) * Perm(std::move(img)));
  };
  return c;
}

Operad make_projection_operad(const GroupPtr& g, int cap) {
  // element 0 = bottom (constant basepoint), element t = t-th coordinate selector
  std::vector<int> sizes(cap + 1);
  for (int j = 0; j <= cap; ++j) sizes[j] = j + 1;
  Operad c = skeleton(g, "Proj", cap, std::move(sizes));
  fill_actions(
      c, [](int, int, int x) { return x; },
      [](int, const Perm& s, int x) { return x == 0 ? 0 : s.inverse()(x); });
  c.unit = 1;
  c.gamma_fn = [](int, int cidx, const std::vector<int>& ar, const std::vector<int>& in) {
    if (cidx == 0) return 0;
    int off = 0;
    for (int t = 1; t < cidx; ++t) off += ar[t - 1];
    int inner = in[cidx - 1];
    return inner == 0 ? 0 : off + inner;
  };
  return c;
}

namespace {

// endomorphism-operad elements of arity j over a based set with u points are
// encoded as the base-u digit string of the value table (tuple code order,
// first coordinate most significant)
long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int endo_value(long long f, int u, long long tuple_code) {
  return static_cast<int>(f / ipow(u, static_cast<int>(tuple_code)) % u);
}

long long endo_set_value(long long f, int u, long long tuple_code, int v) {
  long long p = ipow(u, static_cast<int>(tuple_code));
  return f + (v - endo_value(f, u, tuple_code)) * p;
}

long long endo_tuple_code(const std::vector<int>& xs, int u) {
  long long code = 0;
  for (int x : xs) code = code * u + x;
  return code;
}

// gamma by substitution, sigma by PUSH (f.s)(x) = f(x_{s^-1(1)},...),
// g by conjugation
struct EndoOps {
  int u;
  std::vector<Perm> gperms;  // action of each group element on {1..u-1}, degree u-1

  int gval(int g, int x) const { return x == 0 ? 0 : gperms[g](x); }

  long long substitute(int k, long long c, const std::vector<int>& ar,
                       const std::vector<long long>& d) const {
    int p = std::accumulate(ar.begin(), ar.end(), 0);
    long long tuples = ipow(u, p);
    long long out = 0;
    std::vector<int> xs(p);
    for (long long code = 0; code < tuples; ++code) {
      long long rem = code;
      for (int i = p - 1; i >= 0; --i) {
        xs[i] = static_cast<int>(rem % u);
        rem /= u;
      }
      std::vector<int> mid(k);
      int off = 0;
      for (int t = 0; t < k; ++t) {
        std::vector<int> block(xs.begin() + off, xs.begin() + off + ar[t]);
        mid[t] = endo_value(d[t], u, endo_tuple_code(block, u));
        off += ar[t];
      }
      int val = endo_value(c, u, endo_tuple_code(mid, u));
      out = endo_set_value(out, u, code, val);
    }
    return out;
  }

  long long sigma_push(int j, const Perm& s, long long f) const {
    long long tuples = ipow(u, j);
    long long out = 0;
    Perm sinv = s.inverse();
    std::vector<int> xs(j), ys(j);
    for (long long code = 0; code < tuples; ++code) {
      long long rem = code;
      for (int i = j - 1; i >= 0; --i) {
        xs[i] = static_cast<int>(rem % u);
        rem /= u;
      }
      for (int t = 1; t <= j; ++t) ys[t - 1] = xs[sinv(t) - 1];
      out = endo_set_value(out, u, code, endo_value(f, u, endo_tuple_code(ys, u)));
    }
    return out;
  }

  long long g_conj(int j, int g, int ginv, long long f) const {
    long long tuples = ipow(u, j);
    long long out = 0;
    std::vector<int> xs(j), ys(j);
    for (long long code = 0; code < tuples; ++code) {
      long long rem = code;
      for (int i = j - 1; i >= 0; --i) {
        xs[i] = static_cast<int>(rem % u);
        rem /= u;
      }
      for (int i = 0; i < j; ++i) ys[i] = gval(ginv, xs[i]);
      out = endo_set_value(out, u, code, gval(g, endo_value(f, u, endo_tuple_code(ys, u))));
    }
    return out;
  }
};

Operad endo_like(const GroupPtr& g, const GSet& s, int cap,
                 const std::vector<std::vector<long long>>& elems,
                 const std::string& name) {
  const int u = s.n + 1;
  EndoOps ops;
  ops.u = u;
  for (int e = 0; e < g->order(); ++e) ops.gperms.push_back(s.act[e]);

  std::vector<int> sizes(cap + 1);
  for (int j = 0; j <= cap; ++j) sizes[j] = static_cast<int>(elems[j].size());
  Operad c = skeleton(g, name, cap, std::move(sizes));

  auto index_of = [elems](int j, long long f) {
    auto it = std::lower_bound(elems[j].begin(), elems[j].end(), f);
    if (it == elems[j].end() || *it != f)
      throw std::logic_error("endo operad: element escaped the level set");
    return static_cast<int>(it - elems[j].begin());
  };

  fill_actions(
      c,
      [g, ops, elems, index_of](int j, int e, int x) {
        return index_of(j, ops.g_conj(j, e, g->inv(e), elems[j][x]));
      },
      [ops, elems, index_of](int j, const Perm& sg, int x) {
        return index_of(j, ops.sigma_push(j, sg, elems[j][x]));
      });

  // identity function as unit
  long long idf = 0;
  for (int x = 0; x < u; ++x) idf = endo_set_value(idf, u, x, x);
  c.unit = index_of(1, idf);
  c.gamma_fn = [ops, elems, index_of](int k, int cidx, const std::vector<int>& ar,
                                      const std::vector<int>& in) {
    std::vector<long long> d(k);
    for (int t = 0; t < k; ++t) d[t] = elems[ar[t]][in[t]];
    int p = std::accumulate(ar.begin(), ar.end(), 0);
    return index_of(p, ops.substitute(k, elems[k][cidx], ar, d));
  };
  return c;
}

}  // namespace

Operad make_endo_operad(const GroupPtr& g, const GSet& s, int cap) {
  const int u = s.n + 1;
  if (ipow(u, ipow(u, cap) - 1) > 20000)
    throw std::invalid_argument("endo operad: level sets too large for this cap");
  std::vector<std::vector<long long>> elems(cap + 1);
  for (int j = 0; j <= cap; ++j) {
    long long tuples = ipow(u, j);
    // all based functions: value 0 at tuple 0, free elsewhere
    std::vector<long long> acc{0};
    for (long long t = 1; t < tuples; ++t) {
      std::vector<long long> next;
      for (long long f : acc)
        for (int v = 0; v < u; ++v) next.push_back(endo_set_value(f, u, t, v));
      acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    elems[j] = std::move(acc);
  }
  return endo_like(g, s, cap, elems, "End" + std::to_string(u));
}

Operad make_random_operad(const GroupPtr& g, int cap, unsigned seed) {
  // suboperad of End({*,a}) generated by a seeded pick of arity-<=2 elements;
  // seeds whose closure exceeds the size guard are bumped deterministically
  GSet s = GSet::trivial(g, 1);
  const int u = 2;
  EndoOps ops;
  ops.u = u;
  for (int e = 0; e < g->order(); ++e) ops.gperms.push_back(s.act[e]);

  unsigned state = seed * 2654435761u + 1u;
  auto rnd = [&state](unsigned mod) {
    state ^= state << 13;
    state ^= state >> 17;
    state ^= state << 5;
    return state % mod;
  };

  long long idf = 0;
  for (int x = 0; x < u; ++x) idf = endo_set_value(idf, u, x, x);

  std::vector<std::set<long long>> levels(cap + 1);
  levels[0].insert(0);
  levels[1].insert(idf);
  if (cap >= 2) {
    long long f = 0;
    for (long long code = 1; code < 4; ++code)
      f = endo_set_value(f, u, code, static_cast<int>(rnd(u)));
    levels[2].insert(f);
  }
  if (rnd(2) == 0) {
    long long f = endo_set_value(0, u, 1, static_cast<int>(rnd(u)));
    levels[1].insert(f);
  }

  // saturate under gamma (within cap) and the Sigma action
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j <= cap; ++j) {
      std::vector<long long> snapshot(levels[j].begin(), levels[j].end());
      for (long long f : snapshot)
        for (const Perm& sg : all_perms(j))
          if (levels[j].insert(ops.sigma_push(j, sg, f)).second) changed = true;
    }
    for (int k = 0; k <= cap; ++k) {
      std::vector<long long> cs(levels[k].begin(), levels[k].end());
      std::vector<std::vector<int>> splits;
      for (int p = 0; p <= cap; ++p) arity_splits(k, p, splits);
      for (const auto& ar : splits) {
        int p = std::accumulate(ar.begin(), ar.end(), 0);
        std::vector<std::vector<long long>> pools(k);
        bool empty = false;
        for (int t = 0; t < k; ++t) {
          pools[t].assign(levels[ar[t]].begin(), levels[ar[t]].end());
          if (pools[t].empty()) empty = true;
        }
        if (empty) continue;
        std::vector<size_t> pick(k, 0);
        while (true) {
          for (long long c : cs) {
            std::vector<long long> d(k);
            for (int t = 0; t < k; ++t) d[t] = pools[t][pick[t]];
            if (levels[p].insert(ops.substitute(k, c, ar, d)).second) changed = true;
          }
          int pos = k - 1;
          while (pos >= 0 && ++pick[pos] == pools[pos].size()) {
            pick[pos] = 0;
            --pos;
          }
          if (pos < 0 || k == 0) break;
        }
      }
    }
  }

  for (int j = 0; j <= cap; ++j)
    if (levels[j].size() > 60) return make_random_operad(g, cap, seed + 9973u);

  std::vector<std::vector<long long>> elems(cap + 1);
  for (int j = 0; j <= cap; ++j) elems[j].assign(levels[j].begin(), levels[j].end());
  Operad c = endo_like(g, s, cap, elems, "Rand" + std::to_string(seed));
  return c;
}

Operad make_product_operad(const Operad& a, const Operad& b) {
  if (a.group != b.group || a.cap != b.cap)
    throw std::invalid_argument("product operad: mismatched factors");
  std::vector<int> sizes(a.cap + 1);
  for (int j = 0; j <= a.cap; ++j) sizes[j] = a.level_size[j] * b.level_size[j];
  Operad c = skeleton(a.group, a.name + "x" + b.name, a.cap, std::move(sizes));
  Operad af = a, bf = b;  // capture by value
  fill_actions(
      c,
      [af, bf](int j, int g, int x) {
        int bs = bf.level_size[j];
        return af.act_g(j, g, x / bs) * bs + bf.act_g(j, g, x % bs);
      },
      [af, bf](int j, const Perm& s, int x) {
        int bs = bf.level_size[j];
        return af.act_sigma(j, s, x / bs) * bs + bf.act_sigma(j, s, x % bs);
      });
  c.unit = a.unit * b.level_size[1] + b.unit;
  c.gamma_fn = [af, bf](int k, int cidx, const std::vector<int>& ar,
                        const std::vector<int>& in) {
    int p = 0;
    for (int v : ar) p += v;
    std::vector<int> ina(k), inb(k);
    for (int t = 0; t < k; ++t) {
      ina[t] = in[t] / bf.level_size[ar[t]];
      inb[t] = in[t] % bf.level_size[ar[t]];
    }
    int ra = af.gamma(k, cidx / bf.level_size[k], ar, ina);
    int rb = bf.gamma(k, cidx % bf.level_size[k], ar, inb);
    return ra * bf.level_size[p] + rb;
  };
  return c;
}

Operad make_sigma_free_random_operad(const GroupPtr& g, int cap, unsigned seed) {
  Operad c = make_product_operad(make_permutation_operad(g, cap),
                                 make_random_operad(g, cap, seed));
  c.name = "SigmaFree" + std::to_string(seed);
  return c;
}

Operad make_table_operad(OperadTables t) {
  Operad c = skeleton(t.group, t.name, t.cap, t.level_size);
  c.gact = std::move(t.gact);
  c.sact = std::move(t.sact);
  c.unit = t.unit;
  auto table = std::make_shared<std::map<std::vector<int>, int>>(std::move(t.gamma));
  c.gamma_fn = [table](int k, int cidx, const std::vector<int>& ar,
                       const std::vector<int>& in) {
    std::vector<int> key{k, cidx};
    key.insert(key.end(), ar.begin(), ar.end());
    key.insert(key.end(), in.begin(), in.end());
    auto it = table->find(key);
    if (it == table->end())
      throw std::out_of_range("table operad: missing gamma entry");
    return it->second;
  };
  return c;
}

}  // namespace equicat
