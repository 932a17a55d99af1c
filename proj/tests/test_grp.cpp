#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "equicat/group.hpp"

using namespace equicat;

namespace {

// oracle: all homomorphisms G -> Sigma_n by filtering every function table
int count_homs_brute(const GroupPtr& g, int n) {
  const auto& perms = all_perms(n);
  const int k = g->order();
  std::vector<int> choice(k, 0);
  int count = 0;
  while (true) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = 0; b < k && ok; ++b)
        if (!(perms[choice[g->mul(a, b)]] == perms[choice[a]] * perms[choice[b]]))
          ok = false;
    if (ok) ++count;
    int pos = k - 1;
    while (pos >= 0 && ++choice[pos] == static_cast<int>(perms.size())) {
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return count;
}

// oracle: filter all subgroups of G x Sigma_n by the intersection condition
std::set<std::vector<long long>> family_brute(const GroupPtr& g, int n) {
  auto prod = Group::product(g, Group::symmetric(n));
  long long nfact = static_cast<long long>(all_perms(n).size());
  std::set<std::vector<long long>> out;
  for (const Subgroup& lam : all_subgroups(prod)) {
    bool graph = true;
    for (int e : lam.members) {
      auto [a, b] = prod->unpair(e);
      if (a == 0 && b != 0) { graph = false; break; }
    }
    if (!graph) continue;
    std::vector<long long> codes;
    for (int e : lam.members) {
      auto [a, b] = prod->unpair(e);
      codes.push_back(a * nfact + b);
    }
    out.insert(codes);
  }
  return out;
}

}  // namespace

TEST_CASE("permutations") {
  Perm a = Perm::from_cycles(3, "(1 2)");
  Perm b = Perm::from_cycles(3, "(1 2 3)");
  CHECK(b(1) == 2);
  CHECK((a * b)(1) == 1);  // a after b: 1 -> 2 -> 1
  CHECK((a * b)(3) == 2);
  CHECK(a.inverse() == a);
  CHECK((b * b.inverse()).is_identity());
  CHECK(all_perms(3).size() == 6);
  for (int r = 0; r < 6; ++r) CHECK(perm_rank(all_perms(3)[r]) == r);
  CHECK(Perm::from_cycles(4, "(1 2)(3 4)").cycles() == "(1 2)(3 4)");
}

TEST_CASE("group construction and laws") {
  auto c2 = Group::cyclic(2);
  CHECK(c2->order() == 2);
  CHECK(c2->mul(1, 1) == 0);
  auto s3 = Group::symmetric(3);
  CHECK(s3->order() == 6);
  CHECK(s3->generators().size() == 2);
  auto v4 = Group::product(Group::cyclic(2), Group::cyclic(2));
  CHECK(v4->order() == 4);
  for (int e = 0; e < 4; ++e) CHECK(v4->mul(e, e) == 0);

  auto s3p = Group::from_perm_generators("S3", 3,
                                         {Perm::from_cycles(3, "(1 2)"),
                                          Perm::from_cycles(3, "(1 2 3)")});
  CHECK(s3p->order() == 6);

  CHECK_THROWS(Group::from_table("bad", {{0, 1}, {1, 1}}));
}

TEST_CASE("subgroup enumeration") {
  CHECK(all_subgroups(Group::cyclic(1)).size() == 1);
  CHECK(all_subgroups(Group::cyclic(2)).size() == 2);
  CHECK(all_subgroups(Group::cyclic(4)).size() == 3);
  CHECK(all_subgroups(Group::symmetric(3)).size() == 6);
  CHECK(all_subgroups(Group::product(Group::cyclic(2), Group::cyclic(2))).size() == 5);
  CHECK(all_subgroups(Group::symmetric(4)).size() == 30);

  auto s3 = Group::symmetric(3);
  for (const Subgroup& h : all_subgroups(s3)) {
    auto hg = h.as_group();
    CHECK(hg->order() == h.order());
  }
}

TEST_CASE("enumerate_homs spec examples") {
  CHECK(enumerate_homs(Group::cyclic(1), 3).size() == 1);
  CHECK(enumerate_homs(Group::cyclic(2), 2).size() == 2);
  CHECK(enumerate_homs(Group::cyclic(3), 2).size() == 1);
  // n = 0: unique trivial homomorphism
  CHECK(enumerate_homs(Group::cyclic(2), 0).size() == 1);
}

TEST_CASE("enumerate_homs against the brute-force oracle") {
  for (auto& g : {Group::cyclic(2), Group::cyclic(3), Group::cyclic(4),
                  Group::product(Group::cyclic(2), Group::cyclic(2)),
                  Group::symmetric(3)}) {
    for (int n = 0; n <= 3; ++n) {
      auto homs = enumerate_homs(g, n);
      for (const auto& h : homs) CHECK(h.is_valid());
      CHECK(static_cast<int>(homs.size()) == count_homs_brute(g, n));
    }
  }
}

TEST_CASE("hom count equals number of based G-actions on n") {
  // Notation bijection: actions correspond to homomorphisms
  auto s3 = Group::symmetric(3);
  auto homs = enumerate_homs(s3, 3);
  std::set<std::vector<int>> actions;
  for (const auto& h : homs) {
    std::vector<int> key;
    for (const Perm& p : h.images) key.insert(key.end(), p.images().begin(), p.images().end());
    actions.insert(key);
  }
  CHECK(actions.size() == homs.size());
}

TEST_CASE("family_Fn spec examples") {
  CHECK(family_Fn(Group::cyclic(1), 2).size() == 1);
  CHECK(family_Fn(Group::cyclic(1), 4).size() == 1);
  // Sigma_1 trivial: F_1 = subgroups of G
  CHECK(family_Fn(Group::cyclic(2), 1).size() == 2);
  // oracle count for (C2, n=2)
  auto fam = family_Fn(Group::cyclic(2), 2);
  auto brute = family_brute(Group::cyclic(2), 2);
  CHECK(fam.size() == brute.size());
}

TEST_CASE("family_Fn equals subgroup filter oracle") {
  for (auto& g : {Group::cyclic(2), Group::cyclic(3),
                  Group::product(Group::cyclic(2), Group::cyclic(2))}) {
    for (int n = 1; n <= 3; ++n) {
      auto fam = family_Fn(g, n);
      auto brute = family_brute(g, n);
      REQUIRE(fam.size() == brute.size());
      for (const auto& lam : fam) CHECK(brute.count(lam.realized) == 1);
    }
  }
}

TEST_CASE("graph subgroups meet Sigma_n trivially") {
  auto s3 = Group::symmetric(3);
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : family_Fn(s3, n)) {
      // projection to G injective: all first coordinates distinct
      std::set<long long> firsts;
      long long nfact = static_cast<long long>(all_perms(n).size());
      for (long long code : lam.realized) firsts.insert(code / nfact);
      CHECK(firsts.size() == lam.realized.size());
    }
}

TEST_CASE("family closed under subconjugacy") {
  for (auto& g : {Group::cyclic(4), Group::symmetric(3)}) {
    for (int n = 1; n <= 2; ++n)
      CHECK(family_subconjugacy_closed(g, n, family_Fn(g, n)));
  }
}
