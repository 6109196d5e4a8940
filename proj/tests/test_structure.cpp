#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "tvl/corpus.hpp"
#include "tvl/structure.hpp"

using namespace tvl;

TEST_CASE("subgroup construction validates") {
  auto d8 = dihedral_group(8);
  CHECK_THROWS_AS(Subgroup(d8, {0, 1}), NotASubgroup);       // not closed
  CHECK_THROWS_AS(Subgroup(d8, {1, 2, 3}), NotASubgroup);    // no identity
  CHECK_THROWS_AS(Subgroup(d8, {0, 9}), NotASubgroup);       // out of range
  CHECK_THROWS_AS(Subgroup(d8, {}), NotASubgroup);
  CHECK(Subgroup(d8, {0, 2}).order() == 2);
}

TEST_CASE("subgroup closure") {
  auto d8 = dihedral_group(8);
  CHECK(subgroup_closure(d8, {}).members() == std::vector<int>{0});
  CHECK(subgroup_closure(d8, {0}).members() == std::vector<int>{0});
  CHECK(subgroup_closure(d8, {1}).members() == std::vector<int>{0, 1, 2, 3});
  CHECK(subgroup_closure(d8, {1, 4}).order() == 8);
  CHECK(subgroup_closure(d8, {5}).members() == oracle::o_closure(*d8, {5}));
}

TEST_CASE("centralizers") {
  auto d8 = dihedral_group(8);
  CHECK(centralizer(d8, 0).order() == 8);
  CHECK(centralizer(d8, 1).members() == std::vector<int>{0, 1, 2, 3});
  auto q8 = quaternion_group();
  CHECK(centralizer(q8, std::vector<int>{1, 4}).members() == std::vector<int>{0, 2});
}

TEST_CASE("center") {
  auto c12 = cyclic_group(12);
  CHECK(center(c12).order() == 12);
  auto d8 = dihedral_group(8);
  CHECK(center(d8).members() == std::vector<int>{0, 2});
  auto q8c2 = direct_product(quaternion_group(), cyclic_group(2)).group;
  CHECK(center(q8c2).order() == 4);
  CHECK(center(d8).members() == oracle::o_center(*d8));
}

TEST_CASE("commutator subgroup") {
  CHECK(commutator_subgroup(cyclic_group(9)).is_trivial());
  auto d8 = dihedral_group(8);
  CHECK(commutator_subgroup(d8).members() == std::vector<int>{0, 2});
  auto s4 = symmetric_group(4);
  Subgroup a4 = commutator_subgroup(s4);
  CHECK(a4.order() == 12);
  CHECK(a4.members() == oracle::o_derived(*s4));
  // members of A4 are exactly the even permutations
  for (int x : a4.members()) {
    const auto& img = s4->perm_images()[x];
    int inversions = 0;
    for (size_t i = 0; i < img.size(); ++i)
      for (size_t j = i + 1; j < img.size(); ++j)
        if (img[i] > img[j]) ++inversions;
    CHECK(inversions % 2 == 0);
  }
}

TEST_CASE("normality") {
  auto c8 = cyclic_group(8);
  CHECK(is_normal(subgroup_closure(c8, {2})));
  auto d8 = dihedral_group(8);
  CHECK_FALSE(is_normal(subgroup_closure(d8, {4})));  // a reflection
  auto s3 = symmetric_group(3);
  CHECK(is_normal(commutator_subgroup(s3)));  // A3
  for (const auto& g : builtin_corpus())
    for (const auto& h : normal_subgroups(g)) CHECK(oracle::o_is_normal(*g, h.members()));
}

TEST_CASE("conjugacy classes") {
  auto c5 = cyclic_group(5);
  CHECK(conjugacy_classes(c5).count() == 5);

  auto d8 = dihedral_group(8);
  ClassPartition p = conjugacy_classes(d8);
  CHECK(p.count() == 5);
  std::multiset<size_t> sizes;
  for (const auto& c : p.classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 1, 2, 2, 2});

  auto s4 = symmetric_group(4);
  ClassPartition ps4 = conjugacy_classes(s4);
  CHECK(ps4.count() == 5);
  std::multiset<size_t> s4sizes;
  for (const auto& c : ps4.classes) s4sizes.insert(c.size());
  CHECK(s4sizes == std::multiset<size_t>{1, 3, 6, 6, 8});

  SUBCASE("partition structure and determinism") {
    size_t total = 0;
    for (int i = 0; i < p.count(); ++i) {
      total += p.classes[i].size();
      CHECK(p.representatives[i] == p.classes[i].front());
      for (int m : p.classes[i]) CHECK(p.class_of[m] == i);
    }
    CHECK(total == 8);
    CHECK(p.classes[0] == std::vector<int>{0});
    // ids ordered by least member
    for (int i = 1; i < p.count(); ++i)
      CHECK(p.representatives[i - 1] < p.representatives[i]);
  }
}

TEST_CASE("orbit-stabilizer across the corpus") {
  for (const auto& g : builtin_corpus()) {
    ClassPartition p = conjugacy_classes(g);
    for (int i = 0; i < p.count(); ++i) {
      Subgroup c = centralizer(g, p.representatives[i]);
      CHECK(static_cast<size_t>(c.order()) * p.classes[i].size() ==
            static_cast<size_t>(g->order()));
    }
    // the center is the union of the singleton classes...
    std::vector<int> singles;
    for (const auto& cls : p.classes)
      if (cls.size() == 1) singles.push_back(cls.front());
    std::sort(singles.begin(), singles.end());
    CHECK(center(g).members() == singles);
    // ...and the meet of the class representatives' centralizers
    Subgroup meet = whole_group(g);
    for (int rep : p.representatives) meet = intersect(meet, centralizer(g, rep));
    CHECK(meet.members() == center(g).members());
  }
}

TEST_CASE("quotients") {
  auto d8 = dihedral_group(8);
  SUBCASE("by the trivial subgroup: an isomorphic copy") {
    QuotientMap q = quotient(d8, trivial_subgroup(d8));
    REQUIRE(q.quotient->order() == 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) CHECK(q.quotient->mul(i, j) == d8->mul(i, j));
  }
  SUBCASE("D8 over its center: the Klein group") {
    QuotientMap q = quotient(d8, center(d8));
    REQUIRE(q.quotient->order() == 4);
    CHECK(q.quotient->is_abelian());
    for (int x = 1; x < 4; ++x) CHECK(q.quotient->element_order(x) == 2);
    CHECK(conjugacy_classes(q.quotient).count() == 4);
  }
  SUBCASE("Q8 over its center") {
    auto q8 = quaternion_group();
    QuotientMap q = quotient(q8, center(q8));
    CHECK(q.quotient->order() == 4);
    CHECK(conjugacy_classes(q.quotient).count() == 4);
  }
  SUBCASE("projection is a homomorphism with the right kernel") {
    QuotientMap q = quotient(d8, center(d8));
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b)
        CHECK(q.projection[d8->mul(a, b)] ==
              q.quotient->mul(q.projection[a], q.projection[b]));
      CHECK((q.projection[a] == 0) == center(d8).contains(a));
    }
    for (int c = 0; c < 4; ++c) CHECK(q.projection[q.section[c]] == c);
    CHECK(q.section[0] == 0);
  }
  SUBCASE("classes map into classes") {
    QuotientMap q = quotient(d8, center(d8));
    ClassPartition up = conjugacy_classes(d8);
    ClassPartition down = conjugacy_classes(q.quotient);
    for (const auto& cls : up.classes) {
      std::set<int> images;
      for (int m : cls) images.insert(down.class_of[q.projection[m]]);
      CHECK(images.size() == 1);
    }
  }
  SUBCASE("non-normal kernels are rejected") {
    CHECK_THROWS_AS(quotient(d8, subgroup_closure(d8, {4})), NotNormal);
  }
}

TEST_CASE("normal subgroup lattice") {
  auto c7 = cyclic_group(7);
  CHECK(normal_subgroups(c7).size() == 2);

  auto d8 = dihedral_group(8);
  auto normals = normal_subgroups(d8);
  std::vector<int> orders;
  for (const auto& h : normals) orders.push_back(h.order());
  CHECK(orders == std::vector<int>{1, 2, 4, 4, 4, 8});

  auto q8 = quaternion_group();
  orders.clear();
  for (const auto& h : normal_subgroups(q8)) orders.push_back(h.order());
  CHECK(orders == std::vector<int>{1, 2, 4, 4, 4, 8});

  SUBCASE("matches the exhaustive subgroup enumeration") {
    for (const auto& g : builtin_corpus()) {
      if (g->order() > 16) continue;
      std::set<std::vector<int>> expected;
      for (const auto& h : oracle::o_all_subgroups(*g))
        if (oracle::o_is_normal(*g, h)) expected.insert(h);
      std::set<std::vector<int>> got;
      for (const auto& h : normal_subgroups(g)) got.insert(h.members());
      CHECK(got == expected);
    }
  }
  SUBCASE("the derived subgroup is the least normal subgroup with abelian quotient") {
    auto s4 = symmetric_group(4);
    Subgroup derived = commutator_subgroup(s4);
    QuotientMap q = quotient(s4, derived);
    CHECK(conjugacy_classes(q.quotient).count() == q.quotient->order());
    for (const auto& h : normal_subgroups(s4)) {
      if (h.order() >= derived.order()) continue;
      QuotientMap qq = quotient(s4, h);
      CHECK_FALSE(qq.quotient->is_abelian());
    }
  }
  SUBCASE("class cap") {
    Config tight;
    tight.class_cap = 3;
    CHECK_THROWS_AS(normal_subgroups(cyclic_group(5), tight), TooManyClasses);
  }
}

TEST_CASE("sylow subgroups") {
  auto s4 = symmetric_group(4);
  SUBCASE("p not dividing the order gives the trivial subgroup") {
    CHECK(sylow_subgroup(s4, 5).is_trivial());
  }
  SUBCASE("S4 at p=2: dihedral of order 8") {
    Subgroup p = sylow_subgroup(s4, 2);
    REQUIRE(p.order() == 8);
    std::multiset<int> orders;
    for (int m : p.members()) orders.insert(s4->element_order(m));
    CHECK(orders == std::multiset<int>{1, 2, 2, 2, 2, 2, 4, 4});
  }
  SUBCASE("S3 x C4 at p=2: abelian of order 8") {
    auto g = direct_product(symmetric_group(3), cyclic_group(4)).group;
    Subgroup p = sylow_subgroup(g, 2);
    REQUIRE(p.order() == 8);
    CHECK(is_abelian(p));
    std::multiset<int> orders;
    for (int m : p.members()) orders.insert(g->element_order(m));
    CHECK(orders == std::multiset<int>{1, 2, 2, 2, 4, 4, 4, 4});  // C2 x C4
  }
  SUBCASE("rejects composite p") { CHECK_THROWS_AS(sylow_subgroup(s4, 4), NotPrime); }
  SUBCASE("order and element orders across the corpus") {
    for (const auto& g : builtin_corpus()) {
      for (int p : {2, 3, 5, 7}) {
        if (g->order() % p != 0) continue;
        Subgroup syl = sylow_subgroup(g, p);
        int part = 1;
        for (int n = g->order(); n % p == 0; n /= p) part *= p;
        CHECK(syl.order() == part);
        for (int m : syl.members()) {
          int ord = g->element_order(m);
          while (ord % p == 0) ord /= p;
          CHECK(ord == 1);
        }
      }
    }
  }
}

TEST_CASE("subgroup_to_group relabels faithfully") {
  auto s4 = symmetric_group(4);
  Subgroup p = sylow_subgroup(s4, 2);
  SubgroupGroup sg = subgroup_to_group(p);
  REQUIRE(sg.group->order() == 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(sg.to_parent[sg.group->mul(i, j)] ==
            s4->mul(sg.to_parent[i], sg.to_parent[j]));
  CHECK(class_count(p) == 5);  // a dihedral group of order 8
}

TEST_CASE("linear characters") {
  auto c4 = cyclic_group(4);
  auto c2 = cyclic_group(2);

  SUBCASE("trivial subgroup has one character") {
    auto chars = linear_characters(trivial_subgroup(c4));
    REQUIRE(chars.size() == 1);
    CHECK(chars[0].modulus == 1);
    CHECK(chars[0].is_faithful());  // kernel is trivially trivial
  }
  SUBCASE("C2: the sign character") {
    auto chars = linear_characters(whole_group(c2));
    REQUIRE(chars.size() == 2);
    CHECK(chars[0].exponent_of(1) == 0);
    CHECK(chars[1].exponent_of(1) == 1);
    CHECK(chars[1].modulus == 2);
    CHECK(chars[1].is_faithful());
  }
  SUBCASE("C2 x C2: four characters, none faithful") {
    auto klein = direct_product(c2, c2).group;
    auto chars = linear_characters(whole_group(klein));
    REQUIRE(chars.size() == 4);
    int faithful = 0;
    for (const auto& chi : chars) faithful += chi.is_faithful() ? 1 : 0;
    CHECK(faithful == 0);
  }
  SUBCASE("C4: four characters, exactly two faithful") {
    auto chars = linear_characters(whole_group(c4));
    REQUIRE(chars.size() == 4);
    int faithful = 0;
    for (const auto& chi : chars) faithful += chi.is_faithful() ? 1 : 0;
    CHECK(faithful == 2);
  }
  SUBCASE("every character is a homomorphism; pointwise sums stay in the list") {
    auto g = direct_product(cyclic_group(2), cyclic_group(4)).group;
    Subgroup h = whole_group(g);
    auto chars = linear_characters(h);
    REQUIRE(chars.size() == 8);
    std::set<std::vector<int>> table;
    for (const auto& chi : chars) {
      for (int a : h.members())
        for (int b : h.members())
          CHECK((chi.exponent_of(a) + chi.exponent_of(b)) % chi.modulus ==
                chi.exponent_of(g->mul(a, b)));
      table.insert(chi.exponents);
    }
    CHECK(table.size() == 8);  // distinct
    for (const auto& x : chars)
      for (const auto& y : chars) {
        std::vector<int> sum(x.exponents.size());
        for (size_t i = 0; i < sum.size(); ++i)
          sum[i] = (x.exponents[i] + y.exponents[i]) % x.modulus;
        CHECK(table.count(sum) == 1);
      }
  }
  SUBCASE("brute-force enumeration agrees on small abelian subgroups") {
    for (const auto& g : builtin_corpus()) {
      if (g->order() > 12) continue;
      Subgroup h = center(g);
      if (h.order() > 8) continue;
      auto chars = linear_characters(h);
      // independently count homomorphisms H -> Z/m by trying all maps
      SubgroupGroup sg = subgroup_to_group(h);
      int m = static_cast<int>(sg.group->exponent());
      int k = h.order();
      long long found = 0;
      std::vector<int> assign(k, 0);
      for (;;) {
        bool is_hom = true;
        for (int x = 0; x < k && is_hom; ++x)
          for (int y = 0; y < k; ++y)
            if ((assign[x] + assign[y]) % m != assign[sg.group->mul(x, y)]) {
              is_hom = false;
              break;
            }
        if (is_hom) ++found;
        int d = k - 1;
        while (d >= 0 && ++assign[d] == m) assign[d--] = 0;
        if (d < 0) break;
      }
      CHECK(found == static_cast<long long>(chars.size()));
    }
  }
  SUBCASE("rejects non-abelian subgroups") {
    auto d8 = dihedral_group(8);
    CHECK_THROWS_AS(linear_characters(whole_group(d8)), NotAbelian);
  }
}
