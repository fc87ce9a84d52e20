#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupext/cohomology.hpp"
#include "groupext/families.hpp"
#include "groupext/isomorphism.hpp"
#include "groupext/numeric.hpp"

using namespace groupext;

namespace {

AbelianModule z_mod(int n, int unit) {
  return make_module(cyclic_group(n), multiplication_automorphism({n}, {unit}));
}

// All abelian groups of order <= max_order as invariant-factor chains.
void abelian_chains(int order, int min_factor, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (order == 1) {
    out.push_back(cur);
    return;
  }
  for (int d = std::max(2, min_factor); d <= order; ++d) {
    if (order % d != 0) continue;
    // chain condition: previous factor divides this one
    if (!cur.empty() && d % cur.back() != 0) continue;
    cur.push_back(d);
    abelian_chains(order / d, d, cur, out);
    cur.pop_back();
  }
}

Group from_chain(const std::vector<int>& chain) {
  Group g = cyclic_group(1);
  for (int d : chain) g = direct_product(g, cyclic_group(d));
  return g;
}

}  // namespace

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(cyclic_group(1)).empty());
  CHECK(abelian_invariants(cyclic_group(12)) == AbelianInvariants{12});
  CHECK(abelian_invariants(dihedral_group(4)) == AbelianInvariants{2, 2});
  CHECK(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(6))) ==
        AbelianInvariants{2, 6});
  CHECK(abelian_invariants(direct_product(cyclic_group(4), cyclic_group(6))) ==
        AbelianInvariants{2, 12});
  CHECK_THROWS_AS(abelian_invariants(symmetric_group(3)), std::invalid_argument);
}

TEST_CASE("H2(Z2, Z_2n) has order 2 for odd n, both signs") {
  for (int n : {1, 3, 5, 7, 9}) {
    CHECK(h2_cyclic(2, z_mod(2 * n, 1)) == AbelianInvariants{2});
    CHECK(h2_cyclic(2, z_mod(2 * n, 2 * n - 1)) == AbelianInvariants{2});
  }
}

TEST_CASE("H2 vanishes for the 2^(k-1)+-1 actions") {
  for (int k : {3, 4}) {
    int m = 1 << k;
    for (int n : {1, 3, 5}) {
      for (int sign : {1, -1}) {
        int u = crt(mod_norm((1 << (k - 1)) + sign, m), m, 1, n);
        CHECK(h2_cyclic(2, z_mod(m * n, u)).empty());
      }
    }
  }
}

TEST_CASE("H2 with coprime coefficients vanishes") {
  for (int p : {3, 5, 7})
    for (int a : {2, 4, 8})
      if (std::gcd(p, a) == 1) CHECK(h2_cyclic(p, z_mod(a, 1)).empty());
}

TEST_CASE("trivial coefficients give trivial H2 for every m") {
  AbelianModule one = trivial_module(cyclic_group(1));
  for (int m = 1; m <= 12; ++m) CHECK(h2_cyclic(m, one).empty());
}

TEST_CASE("action order must divide m") {
  CHECK_THROWS_AS(h2_cyclic(2, z_mod(5, 2)), std::invalid_argument);  // order 4 action
  CHECK_NOTHROW(h2_cyclic(4, z_mod(5, 2)));
}

TEST_CASE("factor-set oracle counts match the closed form") {
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  for (int order = 1; order <= 12; ++order) abelian_chains(order, 2, cur, chains);
  for (const auto& chain : chains) {
    Group a = from_chain(chain);
    auto auts = automorphism_group(a);
    for (int p : {2, 3}) {
      for (const Automorphism& act : auts) {
        if (!(automorphism_power(act, p) == identity_automorphism(a.order))) continue;
        AbelianModule mod = make_module(a, act);
        auto classes = cocycle_classes(p, mod);
        CHECK(static_cast<int>(classes.size()) == invariants_order(h2_cyclic(p, mod)));
      }
    }
  }
}

TEST_CASE("returned factor sets satisfy the cocycle identity") {
  AbelianModule m1 = z_mod(6, 1);
  for (const FactorSet& fs : cocycle_classes(2, m1)) CHECK(is_cocycle(m1, fs));
  AbelianModule m2 = z_mod(3, 1);
  for (const FactorSet& fs : cocycle_classes(3, m2)) CHECK(is_cocycle(m2, fs));
}

TEST_CASE("two classes for Z6 by Z2 with trivial action: Z6xZ2 and Z12") {
  AbelianModule mod = z_mod(6, 1);
  auto classes = cocycle_classes(2, mod);
  REQUIRE(classes.size() == 2);
  Group g0 = group_from_factor_set(mod, classes[0]);
  Group g1 = group_from_factor_set(mod, classes[1]);
  Group z6z2 = direct_product(cyclic_group(6), cyclic_group(2));
  Group z12 = cyclic_group(12);
  CHECK(is_isomorphic(g0, z6z2) != is_isomorphic(g1, z6z2));
  CHECK(is_isomorphic(g0, z12) != is_isomorphic(g1, z12));
}

TEST_CASE("one class for odd cyclic kernels by Z2, any involutive action") {
  for (int n : {3, 5, 9, 15}) {
    for (int u = 1; u < n; ++u) {
      if (std::gcd(u, n) != 1 || mod_mul(u, u, n) != 1) continue;
      CHECK(cocycle_classes(2, z_mod(n, u)).size() == 1);
    }
  }
}

TEST_CASE("three classes for Z3 by Z3 with trivial action") {
  CHECK(cocycle_classes(3, z_mod(3, 1)).size() == 3);
}

TEST_CASE("zero factor set builds the split extension") {
  AbelianModule mod = z_mod(5, 4);  // inversion on Z5
  FactorSet zero{2, std::vector<Elem>(4, 0)};
  Group g = group_from_factor_set(mod, zero);
  CHECK(is_isomorphic(g, dihedral_group(10)));
}

TEST_CASE("oracle budget is enforced") {
  CHECK_THROWS_AS(cocycle_classes(5, z_mod(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(cocycle_classes(2, trivial_module(cyclic_group(30))), std::invalid_argument);
}
