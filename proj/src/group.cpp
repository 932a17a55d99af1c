#include "equicat/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equicat {

namespace {

std::string table_error(const std::string& what, int a, int b, int c) {
  std::ostringstream out;
  out << what << " at triple (" << a << ", " << b << ", " << c << ")";
  return out.str();
}

}  // namespace

void Group::validate() const {
  const int k = order_;
  if (k <= 0) throw std::invalid_argument("group: empty element list");
  if (static_cast<int>(mul_.size()) != k)
    throw std::invalid_argument("group: table row count != order");
  for (int a = 0; a < k; ++a) {
    if (static_cast<int>(mul_[a].size()) != k)
      throw std::invalid_argument("group: table column count != order");
    for (int b = 0; b < k; ++b)
      if (mul_[a][b] < 0 || mul_[a][b] >= k)
        throw std::invalid_argument(table_error("group: table entry out of range", a, b, mul_[a][b]));
  }
  for (int a = 0; a < k; ++a)
    if (mul_[0][a] != a || mul_[a][0] != a)
      throw std::invalid_argument(table_error("group: element 0 is not an identity", 0, a, mul_[0][a]));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw std::invalid_argument(table_error("group: associativity fails", a, b, c));
  for (int a = 0; a < k; ++a) {
    int i = inv_[a];
    if (i < 0 || i >= k || mul_[a][i] != 0 || mul_[i][a] != 0)
      throw std::invalid_argument(table_error("group: bad inverse", a, i, 0));
  }
}

void Group::compute_generators() {
  std::vector<char> in_closure(order_, 0);
  in_closure[0] = 1;
  int closed = 1;
  auto close_over = [&](int g) {
    std::vector<int> work{g};
    if (!in_closure[g]) { in_closure[g] = 1; ++closed; }
    while (!work.empty()) {
      int a = work.back();
      work.pop_back();
      for (int b = 0; b < order_; ++b) {
        if (!in_closure[b]) continue;
        for (int c : {mul_[a][b], mul_[b][a]}) {
          if (!in_closure[c]) {
            in_closure[c] = 1;
            ++closed;
            work.push_back(c);
          }
        }
      }
    }
  };
  for (int g = 1; g < order_ && closed < order_; ++g) {
    if (in_closure[g]) continue;
    gens_.push_back(g);
    close_over(g);
  }
  if (gens_.empty()) gens_.push_back(0);  // trivial group
}

GroupPtr Group::from_table(std::string name, std::vector<std::vector<int>> mul) {
  auto g = std::shared_ptr<Group>(new Group);
  g->name_ = std::move(name);
  g->order_ = static_cast<int>(mul.size());
  g->mul_ = std::move(mul);
  g->inv_.assign(g->order_, -1);
  for (int a = 0; a < g->order_; ++a)
    for (int b = 0; b < g->order_; ++b)
      if (g->mul_[a][b] == 0) g->inv_[a] = b;
  g->validate();
  g->compute_generators();
  return g;
}

GroupPtr Group::from_perm_generators(std::string name, int degree,
                                     std::vector<Perm> gens) {
  // close under composition, identity first
  std::vector<Perm> elems{Perm(degree)};
  std::map<Perm, int> index{{elems[0], 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : gens) {
      for (const Perm& p : {elems[i] * g, g * elems[i]}) {
        if (index.emplace(p, static_cast<int>(elems.size())).second)
          elems.push_back(p);
      }
    }
  }
  const int k = static_cast<int>(elems.size());
  std::vector<std::vector<int>> mul(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) mul[a][b] = index.at(elems[a] * elems[b]);
  auto g = from_table(std::move(name), std::move(mul));
  const_cast<Group*>(g.get())->perm_rep_ = std::move(elems);
  return g;
}

GroupPtr Group::trivial() { return cyclic(1); }

GroupPtr Group::cyclic(int k) {
  std::vector<std::vector<int>> mul(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) mul[a][b] = (a + b) % k;
  auto g = from_table("C" + std::to_string(k), std::move(mul));
  if (k > 1) {
    std::vector<Perm> rep;
    for (int a = 0; a < k; ++a) {
      std::vector<int> img(k + 1);
      img[0] = 0;
      for (int i = 1; i <= k; ++i) img[i] = (i - 1 + a) % k + 1;
      rep.push_back(Perm(std::move(img)));
    }
    const_cast<Group*>(g.get())->perm_rep_ = std::move(rep);
  }
  return g;
}

GroupPtr Group::symmetric(int k) {
  const auto& perms = all_perms(k);
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = perm_rank(perms[a] * perms[b]);
  auto g = from_table("S" + std::to_string(k), std::move(mul));
  const_cast<Group*>(g.get())->perm_rep_ = perms;
  return g;
}

GroupPtr Group::product(const GroupPtr& a, const GroupPtr& b) {
  const int ka = a->order(), kb = b->order();
  std::vector<std::vector<int>> mul(ka * kb, std::vector<int>(ka * kb));
  for (int x = 0; x < ka * kb; ++x)
    for (int y = 0; y < ka * kb; ++y)
      mul[x][y] = a->mul(x / kb, y / kb) * kb + b->mul(x % kb, y % kb);
  auto g = from_table(a->name() + "x" + b->name(), std::move(mul));
  const_cast<Group*>(g.get())->factor_b_order_ = kb;
  return g;
}

std::pair<int, int> Group::unpair(int e) const {
  if (!is_product()) throw std::logic_error("unpair on non-product group");
  return {e / factor_b_order_, e % factor_b_order_};
}

int Group::pair(int a, int b) const {
  if (!is_product()) throw std::logic_error("pair on non-product group");
  return a * factor_b_order_ + b;
}

bool Subgroup::contains(int e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

GroupPtr Subgroup::as_group() const {
  const int k = order();
  std::vector<int> pos(parent->order(), -1);
  for (int i = 0; i < k; ++i) pos[members[i]] = i;
  std::vector<std::vector<int>> mul(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int m = pos[parent->mul(members[a], members[b])];
      if (m < 0) throw std::invalid_argument("subgroup: member set not closed");
      mul[a][b] = m;
    }
  return Group::from_table(parent->name() + "-sub" + std::to_string(k), std::move(mul));
}

Subgroup Subgroup::whole(const GroupPtr& g) {
  Subgroup s{g, {}};
  s.members.resize(g->order());
  for (int i = 0; i < g->order(); ++i) s.members[i] = i;
  return s;
}

Subgroup Subgroup::trivial(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup Subgroup::generated(const GroupPtr& g, const std::vector<int>& gens) {
  std::vector<char> in(g->order(), 0);
  in[0] = 1;
  std::vector<int> work{0};
  for (int x : gens)
    if (!in[x]) { in[x] = 1; work.push_back(x); }
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < work.size(); ++j) {
      int p = g->mul(work[i], work[j]);
      if (!in[p]) { in[p] = 1; work.push_back(p); }
    }
  std::sort(work.begin(), work.end());
  return Subgroup{g, std::move(work)};
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent == b.parent && a.members == b.members;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.members.size() != b.members.size())
    return a.members.size() < b.members.size();
  return a.members < b.members;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> found;
  found.insert({0});
  std::vector<std::vector<int>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier) {
      for (int x = 1; x < g->order(); ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<int> gens = h;
        gens.push_back(x);
        auto ext = Subgroup::generated(g, gens).members;
        if (found.insert(ext).second) next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(Subgroup{g, m});
  std::sort(out.begin(), out.end());
  return out;
}

const Perm& SymHom::image_of(int parent_elem) const {
  auto it = std::lower_bound(domain.members.begin(), domain.members.end(), parent_elem);
  if (it == domain.members.end() || *it != parent_elem)
    throw std::invalid_argument("SymHom: element outside domain");
  return images[it - domain.members.begin()];
}

bool SymHom::is_valid() const {
  const auto& g = *domain.parent;
  const auto& mem = domain.members;
  for (size_t i = 0; i < mem.size(); ++i) {
    for (size_t j = 0; j < mem.size(); ++j) {
      int p = g.mul(mem[i], mem[j]);
      if (image_of(p) != images[i] * images[j]) return false;
    }
  }
  return image_of(0).is_identity();
}

GraphSubgroup GraphSubgroup::of(const SymHom& hom) {
  GraphSubgroup out{hom, {}};
  long long nfact = static_cast<long long>(all_perms(hom.arity).size());
  for (size_t i = 0; i < hom.domain.members.size(); ++i)
    out.realized.push_back(hom.domain.members[i] * nfact + perm_rank(hom.images[i]));
  std::sort(out.realized.begin(), out.realized.end());
  return out;
}

bool operator==(const GraphSubgroup& a, const GraphSubgroup& b) {
  return a.realized == b.realized;
}

bool operator<(const GraphSubgroup& a, const GraphSubgroup& b) {
  if (a.realized.size() != b.realized.size())
    return a.realized.size() < b.realized.size();
  return a.realized < b.realized;
}

namespace {

// Try to extend generator images to a full homomorphism by table closure;
// returns false on conflict.
bool complete_hom(const Group& g, const std::vector<int>& gens,
                  const std::vector<Perm>& gen_images, int n,
                  std::vector<Perm>& out) {
  const int k = g.order();
  std::vector<char> known(k, 0);
  out.assign(k, Perm(n));
  known[0] = 1;
  std::vector<int> work{0};
  for (size_t i = 0; i < gens.size(); ++i) {
    int e = gens[i];
    if (known[e]) {
      if (out[e] != gen_images[i]) return false;
    } else {
      known[e] = 1;
      out[e] = gen_images[i];
      work.push_back(e);
    }
  }
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < work.size(); ++j) {
      for (auto [a, b] : {std::pair{work[i], work[j]}, std::pair{work[j], work[i]}}) {
        int p = g.mul(a, b);
        Perm img = out[a] * out[b];
        if (known[p]) {
          if (out[p] != img) return false;
        } else {
          known[p] = 1;
          out[p] = img;
          work.push_back(p);
        }
      }
    }
  }
  for (int e = 0; e < k; ++e)
    if (!known[e]) return false;  // generators failed to generate
  return true;
}

}  // namespace

std::vector<SymHom> enumerate_homs(const GroupPtr& g, int n) {
  const auto& gens = g->generators();
  const auto& perms = all_perms(n);
  const int m = static_cast<int>(gens.size());
  std::vector<SymHom> out;
  std::vector<int> choice(m, 0);
  Subgroup whole = Subgroup::whole(g);
  while (true) {
    std::vector<Perm> gen_images(m);
    bool ok = true;
    for (int i = 0; i < m; ++i) {
      gen_images[i] = perms[choice[i]];
      // generator image order must divide generator order; cheap prefilter
    }
    std::vector<Perm> full;
    if (complete_hom(*g, gens, gen_images, n, full)) {
      SymHom hom{whole, n, std::move(full)};
      if (hom.is_valid()) out.push_back(std::move(hom));
      else ok = false;
    }
    (void)ok;
    int pos = m - 1;
    while (pos >= 0 && ++choice[pos] == static_cast<int>(perms.size())) {
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<SymHom> enumerate_homs(const Subgroup& h, int n) {
  auto hg = h.as_group();
  auto homs = enumerate_homs(hg, n);
  std::vector<SymHom> out;
  out.reserve(homs.size());
  for (auto& f : homs) {
    // hg's element i corresponds to parent element h.members[i]
    SymHom lifted{h, n, {}};
    lifted.images.resize(h.members.size());
    for (size_t i = 0; i < h.members.size(); ++i) lifted.images[i] = f.images[i];
    out.push_back(std::move(lifted));
  }
  return out;
}

std::vector<GraphSubgroup> family_Fn(const GroupPtr& g, int n) {
  std::set<GraphSubgroup> fam;
  for (const Subgroup& h : all_subgroups(g))
    for (const SymHom& beta : enumerate_homs(h, n))
      fam.insert(GraphSubgroup::of(beta));
  return std::vector<GraphSubgroup>(fam.begin(), fam.end());
}

bool family_subconjugacy_closed(const GroupPtr& g, int n,
                                const std::vector<GraphSubgroup>& fam) {
  auto prod = Group::product(g, Group::symmetric(n));
  long long nfact = static_cast<long long>(all_perms(n).size());
  std::set<std::vector<long long>> fam_sets;
  for (const auto& lam : fam) fam_sets.insert(lam.realized);

  auto code_of = [&](int e) {
    auto [a, b] = prod->unpair(e);
    return a * nfact + b;
  };
  auto elem_of = [&](long long code) {
    return prod->pair(static_cast<int>(code / nfact), static_cast<int>(code % nfact));
  };

  for (const auto& lam : fam) {
    std::vector<int> elems;
    for (long long code : lam.realized) elems.push_back(elem_of(code));
    // conjugates stay in the family
    for (int t = 0; t < prod->order(); ++t) {
      std::vector<long long> conj;
      for (int e : elems) conj.push_back(code_of(prod->mul(prod->mul(t, e), prod->inv(t))));
      std::sort(conj.begin(), conj.end());
      if (!fam_sets.count(conj)) return false;
    }
    // subgroups stay in the family
    Subgroup s{prod, {}};
    for (int e : elems) s.members.push_back(e);
    std::sort(s.members.begin(), s.members.end());
    for (const Subgroup& sub : all_subgroups(s.as_group())) {
      std::vector<long long> codes;
      for (int i : sub.members) codes.push_back(code_of(s.members[i]));
      std::sort(codes.begin(), codes.end());
      if (!fam_sets.count(codes)) return false;
    }
  }
  return true;
}

}  // namespace equicat
