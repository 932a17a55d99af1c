#include "equicat/fmap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace equicat {

FMap::FMap(int codomain, std::vector<int> table) : cod(codomain), tab(std::move(table)) {
  if (tab.empty() || tab[0] != 0) throw std::invalid_argument("FMap: tab[0] must be 0");
  for (int v : tab)
    if (v < 0 || v > cod) throw std::invalid_argument("FMap: value out of range");
}

bool FMap::is_identity() const {
  if (cod != dom()) return false;
  for (int i = 0; i <= dom(); ++i)
    if (tab[i] != i) return false;
  return true;
}

bool FMap::is_ordered() const {
  for (int i = 1; i < dom(); ++i)
    if (tab[i] > tab[i + 1]) return false;
  return true;
}

bool FMap::is_effective() const {
  for (int i = 1; i <= dom(); ++i)
    if (tab[i] == 0) return false;
  return true;
}

bool FMap::is_essential() const {
  if (!is_effective()) return false;
  std::vector<char> hit(cod + 1, 0);
  for (int i = 1; i <= dom(); ++i) hit[tab[i]] = 1;
  for (int j = 1; j <= cod; ++j)
    if (!hit[j]) return false;
  return true;
}

bool FMap::in_pi() const {
  std::vector<int> count(cod + 1, 0);
  for (int i = 1; i <= dom(); ++i) ++count[tab[i]];
  for (int j = 1; j <= cod; ++j)
    if (count[j] > 1) return false;
  return true;
}

bool FMap::is_injection() const { return is_effective() && in_pi(); }

bool FMap::is_projection() const {
  std::vector<int> count(cod + 1, 0);
  for (int i = 1; i <= dom(); ++i) ++count[tab[i]];
  for (int j = 1; j <= cod; ++j)
    if (count[j] != 1) return false;
  return true;
}

bool FMap::is_permutation() const { return dom() == cod && is_injection(); }

std::vector<int> FMap::fiber(int j) const {
  std::vector<int> out;
  for (int i = 1; i <= dom(); ++i)
    if (tab[i] == j) out.push_back(i);
  return out;
}

std::vector<int> FMap::fiber_sizes() const {
  std::vector<int> count(cod + 1, 0);
  for (int i = 1; i <= dom(); ++i) ++count[tab[i]];
  return std::vector<int>(count.begin() + 1, count.end());
}

Perm FMap::as_perm() const {
  if (!is_permutation()) throw std::invalid_argument("FMap: not a permutation");
  return Perm(tab);
}

std::string FMap::str() const {
  std::ostringstream out;
  out << '[';
  for (int i = 1; i <= dom(); ++i) {
    if (i > 1) out << ',';
    out << tab[i];
  }
  out << "]->" << cod;
  return out.str();
}

FMap FMap::identity(int n) {
  std::vector<int> t(n + 1);
  std::iota(t.begin(), t.end(), 0);
  return FMap(n, std::move(t));
}

FMap FMap::zero(int m, int n) { return FMap(n, std::vector<int>(m + 1, 0)); }

FMap FMap::from_perm(const Perm& p) { return FMap(p.degree(), p.images()); }

FMap FMap::delta(int n, int i) {
  std::vector<int> t(n + 1, 0);
  t[i] = 1;
  return FMap(1, std::move(t));
}

FMap FMap::multiplication(int n) {
  std::vector<int> t(n + 1, 1);
  t[0] = 0;
  return FMap(1, std::move(t));
}

FMap FMap::ordered_injection_skipping(int n, int i) {
  std::vector<int> t(n);
  t[0] = 0;
  for (int k = 1; k <= n - 1; ++k) t[k] = k < i ? k : k + 1;
  return FMap(n, std::move(t));
}

FMap FMap::ordered_injection_skipping_set(int n, const std::vector<int>& skip) {
  std::vector<char> skipped(n + 1, 0);
  for (int s : skip) skipped[s] = 1;
  std::vector<int> t{0};
  for (int k = 1; k <= n; ++k)
    if (!skipped[k]) t.push_back(k);
  return FMap(n, std::move(t));
}

FMap FMap::ordered_projection_killing(int n, int i) {
  std::vector<int> t(n + 1);
  t[0] = 0;
  for (int k = 1; k <= n; ++k) t[k] = k < i ? k : (k == i ? 0 : k - 1);
  return FMap(n - 1, std::move(t));
}

FMap FMap::ordered_projection_killing_set(int n, const std::vector<int>& kill) {
  std::vector<char> killed(n + 1, 0);
  for (int s : kill) killed[s] = 1;
  std::vector<int> t(n + 1, 0);
  int next = 0;
  for (int k = 1; k <= n; ++k) t[k] = killed[k] ? 0 : ++next;
  return FMap(n - static_cast<int>(kill.size()), std::move(t));
}

FMap FMap::merge(int n, int i) {
  std::vector<int> t(n + 1);
  t[0] = 0;
  for (int k = 1; k <= n; ++k) t[k] = k <= i ? k : k - 1;
  return FMap(n - 1, std::move(t));
}

bool operator==(const FMap& a, const FMap& b) { return a.cod == b.cod && a.tab == b.tab; }

bool operator<(const FMap& a, const FMap& b) {
  if (a.cod != b.cod) return a.cod < b.cod;
  return a.tab < b.tab;
}

FMap compose(const FMap& g, const FMap& f) {
  if (f.cod != g.dom()) throw std::invalid_argument("compose: domain mismatch");
  std::vector<int> t(f.dom() + 1);
  for (int i = 0; i <= f.dom(); ++i) t[i] = g(f(i));
  return FMap(g.cod, std::move(t));
}

std::vector<FMap> all_fmaps(int m, int n) {
  std::vector<FMap> out;
  std::vector<int> t(m + 1, 0);
  while (true) {
    out.push_back(FMap(n, t));
    int pos = m;
    while (pos >= 1 && ++t[pos] == n + 1) {
      t[pos] = 0;
      --pos;
    }
    if (pos < 1) break;
  }
  return out;
}

int fmap_rank(const FMap& f) {
  int rank = 0;
  for (int i = 1; i <= f.dom(); ++i) rank = rank * (f.cod + 1) + f(i);
  return rank;
}

Factorization factorize(const FMap& phi) {
  const int m = phi.dom(), n = phi.cod;
  std::vector<int> kernel, survivors;
  for (int i = 1; i <= m; ++i)
    (phi(i) == 0 ? kernel : survivors).push_back(i);

  std::vector<int> image;
  for (int j = 1; j <= n; ++j)
    if (!phi.fiber(j).empty()) image.push_back(j);
  const int r = static_cast<int>(image.size());

  // ordered injection onto the image
  std::vector<int> iota_t{0};
  iota_t.insert(iota_t.end(), image.begin(), image.end());
  FMap iota(n, std::move(iota_t));

  std::vector<int> image_pos(n + 1, 0);
  for (int k = 0; k < r; ++k) image_pos[image[k]] = k + 1;

  // survivor-restricted map, then its ordered associate
  std::vector<int> zeta_t{0};
  for (int s : survivors) zeta_t.push_back(image_pos[phi(s)]);
  FMap zeta(r, std::move(zeta_t));
  OEAssociate assoc = oe_associate(zeta);

  // pi = nu^-1 . (ordered projection); ordered iff nu == id
  FMap pi0 = FMap::ordered_projection_killing_set(m, kernel);
  FMap pi = compose(FMap::from_perm(assoc.nu.inverse()), pi0);

  Factorization out{pi, assoc.ordered.map, iota, false};
  out.composite_ok = compose(iota, compose(out.eps, pi)) == phi;
  return out;
}

OEFunction::OEFunction(const FMap& f) : map(f) {
  if (!f.is_ordered() || !f.is_effective())
    throw std::invalid_argument("OEFunction: map is not ordered effective");
  block_size = f.fiber_sizes();
  block_start.resize(f.cod);
  int off = 0;
  for (int j = 0; j < f.cod; ++j) {
    block_start[j] = off;
    off += block_size[j];
  }
}

bool operator==(const OEFunction& a, const OEFunction& b) { return a.map == b.map; }
bool operator<(const OEFunction& a, const OEFunction& b) { return a.map < b.map; }

OEAssociate oe_associate(const FMap& eps) {
  if (!eps.is_effective()) throw std::invalid_argument("oe_associate: map not effective");
  const int p = eps.dom();
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return eps(a) < eps(b); });
  std::vector<int> nu_img(p + 1);
  nu_img[0] = 0;
  for (int k = 1; k <= p; ++k) nu_img[k] = order[k - 1];
  Perm nu(std::move(nu_img));
  FMap ordered = compose(eps, FMap::from_perm(nu));
  return OEAssociate{OEFunction(ordered), nu};
}

std::vector<Perm> young_subgroup(const OEFunction& eps) {
  std::vector<Perm> out{Perm(eps.points())};
  for (int j = 0; j < eps.levels(); ++j) {
    const int s = eps.block_start[j], sz = eps.block_size[j];
    if (sz <= 1) continue;
    std::vector<Perm> next;
    for (const Perm& base : out)
      for (const Perm& blk : all_perms(sz)) {
        std::vector<int> img = base.images();
        for (int t = 1; t <= sz; ++t) img[s + t] = s + blk(t);
        next.push_back(Perm(std::move(img)));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_young_subgroup(const OEFunction& eps, const Perm& nu) {
  if (nu.degree() != eps.points()) return false;
  for (int i = 1; i <= eps.points(); ++i)
    if (eps.block_of(nu(i)) != eps.block_of(i)) return false;
  return true;
}

Perm tau_hom(const OEFunction& eps, const Perm& sigma) {
  const int n = eps.levels(), p = eps.points();
  if (sigma.degree() != n) throw std::invalid_argument("tau_hom: arity mismatch");
  // start offsets of the permuted blocks: new block j' holds old block sigma^-1(j')
  Perm sinv = sigma.inverse();
  std::vector<int> new_start(n + 1, 0);
  int off = 0;
  for (int jp = 1; jp <= n; ++jp) {
    new_start[jp] = off;
    off += eps.block_size[sinv(jp) - 1];
  }
  std::vector<int> img(p + 1);
  img[0] = 0;
  for (int j = 1; j <= n; ++j) {
    const int s = eps.block_start[j - 1], sz = eps.block_size[j - 1];
    for (int t = 1; t <= sz; ++t) img[s + t] = new_start[sigma(j)] + t;
  }
  return Perm(std::move(img));
}

std::vector<OEFunction> all_oe_functions(int p, int n) {
  std::vector<OEFunction> out;
  if (p == 0) {
    out.push_back(OEFunction(FMap::zero(0, n)));
    return out;
  }
  if (n == 0) return out;  // no effective map p>0 -> 0
  std::vector<int> t(p + 1, 1);
  t[0] = 0;
  while (true) {
    out.push_back(OEFunction(FMap(n, t)));
    int pos = p;
    while (pos >= 1 && t[pos] == n) --pos;
    if (pos < 1) break;
    ++t[pos];
    for (int k = pos + 1; k <= p; ++k) t[k] = t[pos];
  }
  return out;
}

std::vector<int> FGHom::fixed_maps(const Subgroup& h) const {
  std::vector<int> out;
  for (int f = 0; f < size(); ++f) {
    bool fixed = true;
    for (int m : h.members)
      if (action[m][f] != f) { fixed = false; break; }
    if (fixed) out.push_back(f);
  }
  return out;
}

std::vector<int> FGHom::equivariant_maps(const Subgroup& h) const {
  std::vector<int> out;
  for (int f = 0; f < size(); ++f) {
    bool eq = true;
    for (int m : h.members) {
      for (int x = 0; x <= a.n && eq; ++x)
        if (maps[f](a.apply(m, x)) != b.apply(m, maps[f](x))) eq = false;
      if (!eq) break;
    }
    if (eq) out.push_back(f);
  }
  return out;
}

FGHom fg_hom(const GSet& a, const GSet& b, bool restrict_to_pi) {
  if (a.group != b.group) throw std::invalid_argument("fg_hom: different groups");
  FGHom out;
  out.a = a;
  out.b = b;
  out.maps.push_back(FMap::zero(a.n, b.n));
  for (const FMap& f : all_fmaps(a.n, b.n)) {
    if (f == out.maps[0]) continue;
    if (restrict_to_pi && !f.in_pi()) continue;
    out.maps.push_back(f);
  }
  int total = 1;
  for (int i = 0; i < a.n; ++i) total *= (b.n + 1);
  std::vector<int> rank_to_idx(total, -1);
  for (int i = 0; i < out.size(); ++i) rank_to_idx[fmap_rank(out.maps[i])] = i;

  const GroupPtr& g = a.group;
  out.action.assign(g->order(), std::vector<int>(out.size(), -1));
  for (int e = 0; e < g->order(); ++e) {
    FMap ae = FMap::from_perm(a.act[g->inv(e)]);
    FMap be = FMap::from_perm(b.act[e]);
    for (int f = 0; f < out.size(); ++f) {
      FMap moved = compose(be, compose(out.maps[f], ae));
      int idx = rank_to_idx[fmap_rank(moved)];
      if (idx < 0) throw std::logic_error("fg_hom: action left the hom set");
      out.action[e][f] = idx;
    }
  }
  return out;
}

FMap circle_face(int q, int i) {
  if (i < 0 || i > q || q < 1) throw std::out_of_range("circle_face");
  std::vector<int> t(q + 1);
  t[0] = 0;
  for (int k = 1; k <= q; ++k) {
    if (i == q)
      t[k] = k == q ? 0 : k;
    else
      t[k] = k <= i ? k : k - 1;
  }
  return FMap(q - 1, std::move(t));
}

FMap circle_degeneracy(int q, int i) {
  if (i < 0 || i > q) throw std::out_of_range("circle_degeneracy");
  return FMap::ordered_injection_skipping(q + 1, i + 1);
}

}  // namespace equicat
