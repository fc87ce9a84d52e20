#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "groupext/families.hpp"
#include "groupext/group.hpp"
#include "groupext/isomorphism.hpp"
#include "groupext/numeric.hpp"

using namespace groupext;

namespace {

int count_of_order(const Group& g, int k) {
  int c = 0;
  for (int o : g.orders)
    if (o == k) ++c;
  return c;
}

}  // namespace

TEST_CASE("make_group rejects broken tables") {
  // wrong identity
  CHECK_THROWS_AS(make_group(2, {1, 0, 0, 1}), std::invalid_argument);
  // not a latin square
  CHECK_THROWS_AS(make_group(2, {0, 1, 1, 1}), std::invalid_argument);
  // latin square with identity but not associative (order 5 quasigroup)
  std::vector<Elem> t = {
      0, 1, 2, 3, 4,
      1, 0, 3, 4, 2,
      2, 4, 0, 1, 3,
      3, 2, 4, 0, 1,
      4, 3, 1, 2, 0,
  };
  CHECK_THROWS_AS(make_group(5, t), std::invalid_argument);
  // size mismatch
  CHECK_THROWS_AS(make_group(3, {0, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("cyclic groups") {
  Group z1 = cyclic_group(1);
  CHECK(z1.order == 1);
  Group z6 = cyclic_group(6);
  CHECK(z6.order == 6);
  CHECK(z6.is_abelian());
  CHECK(z6.is_cyclic());
  CHECK(z6.order_of(1) == 6);
  CHECK(z6.inv(2) == 4);
  CHECK_THROWS_AS(cyclic_group(0), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_group(5000), std::invalid_argument);
}

TEST_CASE("dihedral groups satisfy the defining relations") {
  for (int n : {1, 2, 3, 4, 6, 9}) {
    Group d = dihedral_group(2 * n);
    CHECK(d.order == 2 * n);
    Elem a = n == 1 ? 0 : 1;
    Elem b = n;
    CHECK(d.order_of(a) == n);        // a^n = 1
    CHECK(d.mul(b, b) == 0);          // b^2 = 1
    CHECK(d.conj(b, a) == d.inv(a));  // b a b^-1 = a^-1
  }
  CHECK_FALSE(dihedral_group(6).is_abelian());
  CHECK(dihedral_group(4).is_abelian());  // Klein four-group
  CHECK_THROWS_AS(dihedral_group(5), std::invalid_argument);
  CHECK_THROWS_AS(dihedral_group(0), std::invalid_argument);
}

TEST_CASE("quaternion groups: relations and unique involution") {
  for (int m : {2, 3, 4, 5}) {
    Group q = quaternion_group(4 * m);
    Elem x = 1, y = 2 * m;
    CHECK(q.order_of(x) == 2 * m);
    CHECK(q.mul(y, y) == q.power(x, m));  // y^2 = x^m
    CHECK(q.conj(y, x) == q.inv(x));      // y x y^-1 = x^-1
  }
  CHECK(count_of_order(quaternion_group(8), 2) == 1);
  CHECK(count_of_order(quaternion_group(20), 2) == 1);
  CHECK_THROWS_AS(quaternion_group(4), std::invalid_argument);
  CHECK_THROWS_AS(quaternion_group(10), std::invalid_argument);
}

TEST_CASE("element orders divide the group order") {
  for (const Group& g : {dihedral_group(12), quaternion_group(16), symmetric_group(4)}) {
    CHECK(g.order_of(0) == 1);
    for (Elem x = 0; x < g.order; ++x) CHECK(g.order % g.order_of(x) == 0);
  }
}

TEST_CASE("direct products") {
  Group z2z3 = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(z2z3.order == 6);
  CHECK(is_isomorphic(z2z3, cyclic_group(6)));

  Group e8 = direct_product(dihedral_group(4), cyclic_group(2));
  CHECK(e8.order == 8);
  for (Elem x = 1; x < 8; ++x) CHECK(e8.order_of(x) == 2);  // elementary abelian

  Group big = direct_product(alternating_group(5), cyclic_group(2));
  CHECK(big.order == 120);
  CHECK(center(big).order() == 2);
  CHECK(center(symmetric_group(5)).order() == 1);
  CHECK_FALSE(is_isomorphic(big, symmetric_group(5)));
}

TEST_CASE("semidirect products") {
  for (int n : {3, 4, 5, 8}) {
    Group zn = cyclic_group(n);
    ActionSpec inv{multiplication_automorphism({n}, {n - 1})};
    Group sd = semidirect_product(zn, cyclic_group(2), inv);
    CHECK(is_isomorphic(sd, dihedral_group(2 * n)));
  }

  // trivial action gives exactly the direct product table
  Group z5 = cyclic_group(5);
  ActionSpec triv{identity_automorphism(5)};
  Group sd = semidirect_product(z5, cyclic_group(3), triv);
  CHECK(sd.table == direct_product(z5, cyclic_group(3)).table);

  // Z5 x| Z4 with phi(1) = multiply-by-2
  ActionSpec by2{multiplication_automorphism({5}, {2})};
  Group ga = semidirect_product(z5, cyclic_group(4), by2);
  CHECK(ga.order == 20);
  CHECK_FALSE(ga.is_abelian());
  CHECK(count_of_order(ga, 4) == 10);

  // invalid action: order of multiply-by-2 mod 5 is 4, which does not divide 2
  CHECK_THROWS_AS(semidirect_product(z5, cyclic_group(2), by2), std::invalid_argument);
}

TEST_CASE("generated subgroups") {
  Group s5 = symmetric_group(5);
  Subgroup t = generated_subgroup(s5, {});
  CHECK(t.members == std::vector<Elem>{0});

  // <(12345), (2354)> has order 20
  Elem c5 = *symmetric_index(5, std::vector<int>{1, 2, 3, 4, 0});
  Elem c4 = *symmetric_index(5, std::vector<int>{0, 2, 4, 1, 3});
  Subgroup ga = generated_subgroup(s5, {c5, c4});
  CHECK(ga.order() == 20);

  // <a^2> in D_2n for even n has order n/2
  for (int n : {4, 6, 10}) {
    Group d = dihedral_group(2 * n);
    CHECK(generated_subgroup(d, {2}).order() == n / 2);
  }
}

TEST_CASE("Lagrange for random generated subgroups") {
  std::mt19937 rng(7);
  std::vector<Group> corpus;
  corpus.push_back(symmetric_group(4));
  corpus.push_back(alternating_group(5));
  corpus.push_back(dihedral_group(24));
  corpus.push_back(quaternion_group(16));
  corpus.push_back(cyclic_group(30));
  for (int trial = 0; trial < 500; ++trial) {
    const Group& g = corpus[rng() % corpus.size()];
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Elem> gens(k);
    for (int i = 0; i < k; ++i) gens[i] = static_cast<Elem>(rng() % g.order);
    Subgroup h = generated_subgroup(g, gens);
    CHECK(g.order % h.order() == 0);
    CHECK(is_subgroup(g, h));
  }
}

TEST_CASE("normality") {
  for (int n : {3, 4, 5, 8}) {
    Group d = dihedral_group(2 * n);
    CHECK(is_normal(d, generated_subgroup(d, {1})));  // Z_n inside D_2n
  }
  // <b> is not normal in D_2n for n >= 3
  for (int n : {3, 4, 7}) {
    Group d = dihedral_group(2 * n);
    CHECK_FALSE(is_normal(d, generated_subgroup(d, {n})));
  }
  // the Klein subgroup of A4 is normal
  Group a4 = alternating_group(4);
  Elem p1 = *alternating_index(4, std::vector<int>{1, 0, 3, 2});
  Elem p2 = *alternating_index(4, std::vector<int>{2, 3, 0, 1});
  Subgroup v = generated_subgroup(a4, {p1, p2});
  CHECK(v.order() == 4);
  CHECK(is_normal(a4, v));
  // error path: not a subgroup
  CHECK_THROWS_AS(is_normal(a4, Subgroup{{0, 1}}), std::invalid_argument);
}

TEST_CASE("centers") {
  CHECK(center(symmetric_group(4)).order() == 1);
  Group z12 = cyclic_group(12);
  CHECK(center(z12).order() == 12);
  Subgroup zq8 = center(quaternion_group(8));
  CHECK(zq8.order() == 2);
  for (const Group& g : {dihedral_group(8), dihedral_group(10), quaternion_group(12)}) {
    Subgroup z = center(g);
    Group q = quotient_group(g, z);
    CHECK(q.order == g.order / z.order());
  }
}

TEST_CASE("quotients") {
  Group d12 = dihedral_group(12);
  Group q = quotient_group(d12, generated_subgroup(d12, {1}));
  CHECK(q.order == 2);

  Group a4 = alternating_group(4);
  CHECK(quotient_group(a4, full_subgroup(a4)).order == 1);

  // S4 / V4 is isomorphic to S3
  Group s4 = symmetric_group(4);
  Elem p1 = *symmetric_index(4, std::vector<int>{1, 0, 3, 2});
  Elem p2 = *symmetric_index(4, std::vector<int>{2, 3, 0, 1});
  Subgroup v = generated_subgroup(s4, {p1, p2});
  CHECK(is_isomorphic(quotient_group(s4, v), symmetric_group(3)));

  // non-normal subgroup is rejected
  Group d6 = dihedral_group(6);
  CHECK_THROWS_AS(quotient_group(d6, generated_subgroup(d6, {3})), std::invalid_argument);
}

TEST_CASE("sylow subgroups") {
  Group s4 = symmetric_group(4);
  Subgroup p2 = sylow_subgroup(s4, 2);
  CHECK(p2.order() == 8);
  Group p2g = subgroup_as_group(s4, p2);
  CHECK_FALSE(p2g.is_cyclic());
  CHECK(is_isomorphic(p2g, dihedral_group(8)));

  Subgroup p3 = sylow_subgroup(cyclic_group(6), 3);
  CHECK(p3.members == std::vector<Elem>{0, 2, 4});

  Group psl7 = psl2_group(7);
  Subgroup p7 = sylow_subgroup(psl7, 7);
  CHECK(p7.order() == 7);
  CHECK(subgroup_as_group(psl7, p7).is_cyclic());

  CHECK(sylow_subgroup(s4, 5).order() == 1);
  CHECK_THROWS_AS(sylow_subgroup(s4, 4), std::invalid_argument);

  for (const Group& g : {symmetric_group(4), alternating_group(5), dihedral_group(24)})
    for (int p : {2, 3, 5})
      CHECK(sylow_subgroup(g, p).order() == p_part(g.order, p));

  // deterministic: repeated calls agree
  CHECK(sylow_subgroup(s4, 2).members == sylow_subgroup(s4, 2).members);
}

TEST_CASE("normalizer") {
  Group s4 = symmetric_group(4);
  Elem r3 = *symmetric_index(4, std::vector<int>{1, 2, 0, 3});
  Subgroup c3 = generated_subgroup(s4, {r3});
  Subgroup n = normalizer(s4, c3);
  CHECK(n.order() == 6);
}

TEST_CASE("relabeled tables still validate and are isomorphic") {
  std::mt19937 rng(99);
  for (const Group& g : {dihedral_group(12), quaternion_group(8), alternating_group(4)}) {
    std::vector<Elem> pi(g.order);
    for (int i = 0; i < g.order; ++i) pi[i] = i;
    std::shuffle(pi.begin() + 1, pi.end(), rng);  // keep the identity at 0
    std::vector<Elem> t(static_cast<size_t>(g.order) * g.order);
    for (Elem a = 0; a < g.order; ++a)
      for (Elem b = 0; b < g.order; ++b)
        t[static_cast<size_t>(pi[a]) * g.order + pi[b]] = pi[g.mul(a, b)];
    Group shuffled = make_group(g.order, std::move(t));
    CHECK(is_isomorphic(g, shuffled));
  }
}

TEST_CASE("minimal generating sets") {
  CHECK(minimal_generating_set(cyclic_group(1)).empty());
  CHECK(minimal_generating_set(cyclic_group(12)).size() == 1);
  CHECK(minimal_generating_set(dihedral_group(12)).size() == 2);
  CHECK(minimal_generating_set(direct_product(cyclic_group(2), cyclic_group(2))).size() == 2);
}
