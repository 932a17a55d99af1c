#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "equicat/gset.hpp"

using namespace equicat;

namespace {

SymHom hom_of_gset(const GSet& a, const Subgroup& h) {
  SymHom out{h, a.n, {}};
  for (int m : h.members) out.images.push_back(a.act[m]);
  return out;
}

}  // namespace

TEST_CASE("fixed points") {
  auto c2 = Group::cyclic(2);
  GSet reg = GSet::regular(c2);
  Subgroup whole = Subgroup::whole(c2);
  Subgroup triv = Subgroup::trivial(c2);

  CHECK(fixed_points(reg, triv).size() == 3);     // everything
  CHECK(fixed_points(reg, whole) == std::vector<int>{0});  // free action
  GSet t2 = GSet::trivial(c2, 2);
  CHECK(fixed_points(t2, whole).size() == 3);
}

TEST_CASE("orbit decomposition") {
  auto s3 = Group::symmetric(3);
  Subgroup whole = Subgroup::whole(s3);

  GSet reg = GSet::regular(s3);
  auto orbs = orbit_decomposition(reg, whole);
  REQUIRE(orbs.size() == 1);
  CHECK(orbs[0].elements.size() == 6);
  CHECK(orbs[0].stabilizer == std::vector<int>{0});

  GSet nat = GSet::natural(s3);
  orbs = orbit_decomposition(nat, whole);
  REQUIRE(orbs.size() == 1);
  CHECK(orbs[0].stabilizer.size() == 2);  // stabilizer of a point in S3 on 3 points
  CHECK(orbs[0].representative == 1);

  GSet triv = GSet::trivial(s3, 4);
  orbs = orbit_decomposition(triv, whole);
  CHECK(orbs.size() == 4);
  for (const auto& o : orbs) CHECK(o.stabilizer.size() == 6);
}

TEST_CASE("power fixed points: spec examples") {
  auto c2 = Group::cyclic(2);
  Subgroup whole = Subgroup::whole(c2);

  // X = C2+ regular, A = (2, swap): 3 fixed tuples
  GSet x = GSet::regular(c2);
  SymHom swap{whole, 2, {Perm(2), Perm::transposition(2, 1, 2)}};
  REQUIRE(swap.is_valid());
  auto data = power_fixed_points(x, whole, swap);
  CHECK(data.fixed_tuples.size() == 3);
  CHECK(data.bijection_ok);
  CHECK(data.fixed_tuples == power_fixed_brute(x, whole, swap));
  // formula side: single orbit with trivial stabilizer, so X^{e} of size 3
  REQUIRE(data.orbits.size() == 1);
  CHECK(data.factor_fixed[0].size() == 3);

  // trivial alpha: (X^n)^Lambda = (X^H)^n
  SymHom triv2{whole, 2, {Perm(2), Perm(2)}};
  auto dt = power_fixed_points(x, whole, triv2);
  auto xh = fixed_points(x, whole);
  CHECK(dt.fixed_tuples.size() == xh.size() * xh.size());
}

TEST_CASE("power fixed points: S3 regular with natural alpha") {
  auto s3 = Group::symmetric(3);
  Subgroup whole = Subgroup::whole(s3);
  GSet x = GSet::regular(s3);  // size 7 with basepoint
  SymHom nat = hom_of_gset(GSet::natural(s3), whole);
  REQUIRE(nat.is_valid());
  auto data = power_fixed_points(x, whole, nat);
  CHECK(data.fixed_tuples.size() == 1);  // only the basepoint tuple
  CHECK(data.bijection_ok);
  CHECK(data.fixed_tuples == power_fixed_brute(x, whole, nat));
}

TEST_CASE("power fixed points agree with brute force on small sweeps") {
  for (auto& g : {Group::cyclic(2), Group::cyclic(3), Group::symmetric(3)}) {
    auto subs = all_subgroups(g);
    for (const Subgroup& h : subs) {
      for (int n = 0; n <= 2; ++n) {
        for (const SymHom& alpha : enumerate_homs(h, n)) {
          GSet x = GSet::regular(g);
          auto data = power_fixed_points(x, alpha.domain, alpha);
          CHECK(data.bijection_ok);
          CHECK(data.fixed_tuples == power_fixed_brute(x, alpha.domain, alpha));
        }
      }
    }
  }
}

TEST_CASE("naturality of the fixed-point bijection") {
  // for an H-map f: X -> Y, the induced maps commute with the projections
  // to orbit representatives
  auto c2 = Group::cyclic(2);
  Subgroup whole = Subgroup::whole(c2);
  GSet x = GSet::regular(c2);
  GSet y = GSet::trivial(c2, 1);
  // f: collapse both free points to the single fixed point
  std::vector<int> f{0, 1, 1};
  for (int m : whole.members)
    for (int i = 0; i <= x.n; ++i)
      REQUIRE(f[x.apply(m, i)] == y.apply(m, f[i]));

  SymHom swap{whole, 2, {Perm(2), Perm::transposition(2, 1, 2)}};
  auto dx = power_fixed_points(x, whole, swap);
  auto dy = power_fixed_points(y, whole, swap);
  for (long long code : dx.fixed_tuples) {
    auto t = decode_tuple(code, 2, x.n + 1);
    for (int& v : t) v = f[v];
    long long moved = encode_tuple(t, y.n + 1);
    CHECK(std::binary_search(dy.fixed_tuples.begin(), dy.fixed_tuples.end(), moved));
  }
}

TEST_CASE("induce_gset") {
  auto s3 = Group::symmetric(3);
  auto subs = all_subgroups(s3);

  // H = G: A == B
  Subgroup whole = Subgroup::whole(s3);
  GSet b = GSet::natural(s3);
  auto ind = induce_gset(whole, b.restricted(whole));
  CHECK(ind.a.n == b.n);
  CHECK(ind.retract_ok);

  // H = {e}, B = (1, triv): A = regular G-set
  Subgroup triv = Subgroup::trivial(s3);
  GSet one = GSet::trivial(triv.as_group(), 1);
  ind = induce_gset(triv, one);
  CHECK(ind.a.n == 6);
  CHECK(ind.retract_ok);
  // regular: free and transitive
  auto orbs = orbit_decomposition(ind.a, whole);
  REQUIRE(orbs.size() == 1);
  CHECK(orbs[0].stabilizer == std::vector<int>{0});

  // G = S3, H = C2: A of size 3, the coset G-set
  for (const Subgroup& h : subs) {
    if (h.order() != 2) continue;
    GSet b1 = GSet::trivial(h.as_group(), 1);
    ind = induce_gset(h, b1);
    CHECK(ind.a.n == 3);
    CHECK(ind.retract_ok);
    break;
  }
}
