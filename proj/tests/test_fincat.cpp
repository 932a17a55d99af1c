#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "equicat/fmap.hpp"
#include "equicat/operad.hpp"

using namespace equicat;

TEST_CASE("compose and classify") {
  FMap id3 = FMap::identity(3);
  FMap f(2, {0, 2, 0, 2});  // 3 -> 2: 1->2, 2->0, 3->2
  CHECK(compose(FMap::identity(2), f) == f);
  CHECK(compose(f, id3) == f);
  CHECK(!f.is_effective());
  CHECK(!f.in_pi());
  CHECK(FMap::multiplication(3).is_essential());
  CHECK(FMap::delta(3, 2).in_pi());

  // delta_i . sigma = delta_{sigma^-1(i)}
  for (const Perm& s : all_perms(3))
    for (int i = 1; i <= 3; ++i)
      CHECK(compose(FMap::delta(3, i), FMap::from_perm(s)) ==
            FMap::delta(3, s.inverse()(i)));
}

TEST_CASE("factorize spec examples") {
  auto fac = factorize(FMap::identity(4));
  CHECK(fac.composite_ok);
  CHECK(fac.pi.is_identity());
  CHECK(fac.eps.is_identity());
  CHECK(fac.iota.is_identity());

  FMap phi(2, {0, 2, 0, 2});  // 1->2, 2->0, 3->2
  fac = factorize(phi);
  CHECK(fac.composite_ok);
  CHECK(fac.pi == FMap(2, {0, 1, 0, 2}));       // kills index 2
  CHECK(fac.eps == FMap::multiplication(2));    // fold 2 -> 1
  CHECK(fac.iota == FMap(2, {0, 2}));           // hits 2

  fac = factorize(FMap::multiplication(4));
  CHECK(fac.composite_ok);
  CHECK(fac.pi.is_identity());
  CHECK(fac.eps == FMap::multiplication(4));
  CHECK(fac.iota.is_identity());
}

TEST_CASE("factorize composite identity, exhaustive") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const FMap& phi : all_fmaps(m, n)) {
        auto fac = factorize(phi);
        CHECK(fac.composite_ok);
        CHECK(fac.eps.is_ordered());
        CHECK(fac.eps.is_essential());
        CHECK(fac.iota.is_ordered());
        CHECK(fac.iota.is_injection());
        CHECK(fac.pi.is_projection());
        // pi kills exactly the kernel of phi
        for (int i = 1; i <= m; ++i) CHECK((fac.pi(i) == 0) == (phi(i) == 0));
      }
}

TEST_CASE("factorization unique up to permutation") {
  // scramble the canonical factorization by random-ish permutations and
  // search for the connecting permutations of the lemma
  FMap phi(3, {0, 2, 2, 0, 3, 2});  // 5 -> 3
  auto fac = factorize(phi);
  REQUIRE(fac.composite_ok);
  const int q = fac.eps.dom(), r = fac.eps.cod;
  for (const Perm& s : all_perms(q)) {
    for (const Perm& t : all_perms(r)) {
      // alternative factorization: pi' = s^-1 pi, eps' = t^-1 eps s, iota' = iota t
      FMap pi2 = compose(FMap::from_perm(s.inverse()), fac.pi);
      FMap eps2 = compose(FMap::from_perm(t.inverse()), compose(fac.eps, FMap::from_perm(s)));
      FMap iota2 = compose(fac.iota, FMap::from_perm(t));
      if (!eps2.is_essential()) continue;
      CHECK(compose(iota2, compose(eps2, pi2)) == phi);
    }
  }
}

TEST_CASE("oe_associate") {
  // already ordered
  FMap mult = FMap::multiplication(3);
  auto assoc = oe_associate(mult);
  CHECK(assoc.ordered.map == mult);
  CHECK(assoc.nu.is_identity());

  // bijection: the associate of any permutation is the identity map
  FMap swap(2, {0, 2, 1});
  assoc = oe_associate(swap);
  CHECK(assoc.ordered.map.is_identity());

  // eps: 3 -> 2 with fibers {2}, {1,3}: ordered associate has fibers {1},{2,3}
  FMap eps(2, {0, 2, 1, 2});
  assoc = oe_associate(eps);
  CHECK(assoc.ordered.map == FMap(2, {0, 1, 2, 2}));
  CHECK(compose(eps, FMap::from_perm(assoc.nu)) == assoc.ordered.map);

  CHECK_THROWS(oe_associate(FMap(1, {0, 0})));
}

TEST_CASE("young subgroup characterization (Lemma order2)") {
  for (int n = 1; n <= 2; ++n)
    for (int p = 0; p <= 5; ++p)
      for (const OEFunction& eps : all_oe_functions(p, n)) {
        auto young = young_subgroup(eps);
        std::set<Perm> members(young.begin(), young.end());
        for (const Perm& nu : all_perms(p)) {
          bool ordered = compose(eps.map, FMap::from_perm(nu)).is_ordered();
          bool same = compose(eps.map, FMap::from_perm(nu)) == eps.map;
          CHECK(ordered == members.count(nu));
          CHECK(ordered == same);
          CHECK(in_young_subgroup(eps, nu) == ordered);
        }
      }
}

TEST_CASE("tau is a homomorphism and reorders correctly") {
  CHECK(tau_hom(OEFunction(FMap::identity(3)), Perm::from_cycles(3, "(1 2)")) ==
        Perm::from_cycles(3, "(1 2)"));

  // spec example: eps : 3 -> 2 with blocks {1},{2,3}, sigma = (12)
  OEFunction eps(FMap(2, {0, 1, 2, 2}));
  Perm sigma = Perm::from_cycles(2, "(1 2)");
  Perm tau = tau_hom(eps, sigma);
  CHECK(tau(1) == 3);
  CHECK(tau(2) == 1);
  CHECK(tau(3) == 2);
  FMap conj = compose(FMap::from_perm(sigma), compose(eps.map, FMap::from_perm(tau.inverse())));
  CHECK(conj.is_ordered());
  CHECK(conj == oe_associate(compose(FMap::from_perm(sigma), eps.map)).ordered.map);

  // homomorphism property, all OE functions with p <= 6, n <= 3
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= 6; ++p)
      for (const OEFunction& e : all_oe_functions(p, n)) {
        for (const Perm& s : all_perms(n))
          for (const Perm& t : all_perms(n)) {
            CHECK(tau_hom(e, s * t) == tau_hom(e, s) * tau_hom(e, t));
          }
        for (const Perm& s : all_perms(n)) {
          FMap c = compose(FMap::from_perm(s), compose(e.map, FMap::from_perm(tau_hom(e, s).inverse())));
          CHECK(c.is_ordered());
        }
      }

  // tau matches block_perm
  OEFunction e2(FMap(3, {0, 1, 1, 2, 3, 3}));
  for (const Perm& s : all_perms(3))
    CHECK(tau_hom(e2, s) == block_perm(e2.block_size, s));
}

TEST_CASE("fg_hom") {
  auto c2 = Group::cyclic(2);
  Subgroup whole = Subgroup::whole(c2);

  GSet one = GSet::trivial(c2, 1);
  auto hom = fg_hom(one, one);
  CHECK(hom.size() == 2);  // zero and id
  for (int g = 0; g < 2; ++g)
    for (int f = 0; f < hom.size(); ++f) CHECK(hom.apply(g, f) == f);

  GSet swap2 = GSet::from_hom(c2, {Perm::transposition(2, 1, 2)});
  auto hom22 = fg_hom(swap2, swap2);
  CHECK(hom22.size() == 9);
  CHECK(hom22.fixed_maps(whole) == hom22.equivariant_maps(whole));

  GSet zero = GSet::trivial(c2, 0);
  auto homz = fg_hom(swap2, zero);
  CHECK(homz.size() == 1);

  // action laws
  for (int g = 0; g < 2; ++g)
    for (int h = 0; h < 2; ++h)
      for (int f = 0; f < hom22.size(); ++f)
        CHECK(hom22.apply(c2->mul(g, h), f) == hom22.apply(g, hom22.apply(h, f)));

  // Pi_G restriction
  auto pi22 = fg_hom(swap2, swap2, true);
  for (const FMap& f : pi22.maps) CHECK(f.in_pi());
  CHECK(pi22.size() == 7);  // 0, two deltas each way... count checked by filter
}

TEST_CASE("simplicial circle functor") {
  // F delta_1 = phi_2 : 2 -> 1
  CHECK(circle_face(2, 1) == FMap::multiplication(2));
  // F sigma_i skips i+1
  for (int q = 0; q <= 3; ++q)
    for (int i = 0; i <= q; ++i)
      CHECK(circle_degeneracy(q, i) == FMap::ordered_injection_skipping(q + 1, i + 1));

  // simplicial identities at q = 3 via table composition:
  // d_i d_j = d_{j-1} d_i for i < j (composition in F: later face applied second)
  for (int q = 2; q <= 4; ++q)
    for (int j = 1; j <= q; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(circle_face(q - 1, i), circle_face(q, j)) ==
              compose(circle_face(q - 1, j - 1), circle_face(q, i)));
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int q = 0; q <= 3; ++q)
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i <= j; ++i)
        CHECK(compose(circle_degeneracy(q + 1, i), circle_degeneracy(q, j)) ==
              compose(circle_degeneracy(q + 1, j + 1), circle_degeneracy(q, i)));
  // d_i s_j relations
  for (int q = 1; q <= 3; ++q)
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i <= q + 1; ++i) {
        FMap lhs = compose(circle_face(q + 1, i), circle_degeneracy(q, j));
        if (i == j || i == j + 1) {
          CHECK(lhs == FMap::identity(q));
        } else if (i < j) {
          CHECK(lhs == compose(circle_degeneracy(q - 1, j - 1), circle_face(q, i)));
        } else {
          CHECK(lhs == compose(circle_degeneracy(q - 1, j), circle_face(q, i - 1)));
        }
      }
}
