#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "groupext/extension.hpp"
#include "groupext/families.hpp"
#include "groupext/isomorphism.hpp"
#include "groupext/numeric.hpp"
#include "groupext/ok_catalog.hpp"

using namespace groupext;

namespace {

bool has_kind(const std::vector<Finding>& fs, OKDescriptor::Kind k) {
  for (const Finding& f : fs)
    if (f.descriptor.kind == k) return true;
  return false;
}

// All subgroups by closure-growing; feasible for small orders only.
std::vector<Subgroup> all_subgroups(const Group& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> queue{trivial_subgroup()};
  seen.insert(queue[0].members);
  for (size_t head = 0; head < queue.size(); ++head) {
    Subgroup cur = queue[head];
    for (Elem x = 1; x < g.order; ++x) {
      if (cur.contains(x)) continue;
      std::vector<Elem> gens = cur.members;
      gens.push_back(x);
      Subgroup next = generated_subgroup(g, gens);
      if (seen.insert(next.members).second) queue.push_back(next);
    }
  }
  return queue;
}

bool has_odd_noncyclic_subgroup(const Group& g) {
  for (const Subgroup& h : all_subgroups(g)) {
    if (h.order() % 2 == 0 || h.order() == 1) continue;
    if (!subgroup_as_group(g, h).is_cyclic()) return true;
  }
  return false;
}

Group zq_rtimes_zm(int q, int m, int unit) {
  ActionSpec act{multiplication_automorphism({q}, {unit})};
  return semidirect_product(cyclic_group(q), cyclic_group(m), act);
}

}  // namespace

TEST_CASE("descriptor validation") {
  CHECK_NOTHROW(validate_descriptor(OKDescriptor::type0(3, 5)));
  CHECK_THROWS_AS(validate_descriptor(OKDescriptor::type0(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(validate_descriptor(OKDescriptor::type0(2, 5)), std::invalid_argument);
  CHECK_THROWS_AS(validate_descriptor(OKDescriptor::type1(1)), std::invalid_argument);
  CHECK_THROWS_AS(validate_descriptor(OKDescriptor::type2(9, 1)), std::invalid_argument);
  CHECK_THROWS_AS(validate_descriptor(OKDescriptor::type4(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(validate_descriptor(OKDescriptor::type4(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(validate_descriptor(OKDescriptor::type5(7, 2)), std::invalid_argument);
  CHECK_THROWS_AS(validate_descriptor(OKDescriptor::type5(5, 1)), std::invalid_argument);
  CHECK_NOTHROW(validate_descriptor(OKDescriptor::type5(5, 2)));
  CHECK_THROWS_AS(validate_descriptor(OKDescriptor::type6(5, 0)), std::invalid_argument);
  CHECK_THROWS_AS(validate_descriptor(OKDescriptor::type6(6, 1)), std::invalid_argument);
  CHECK_NOTHROW(validate_descriptor(OKDescriptor::type6(6, 0)));
}

TEST_CASE("building the catalog groups") {
  CHECK(is_isomorphic(build_ok(OKDescriptor::type1(2)),
                      direct_product(cyclic_group(4), cyclic_group(2))));
  CHECK(is_isomorphic(build_ok(OKDescriptor::type3(2)), quaternion_group(8)));
  CHECK(is_isomorphic(build_ok(OKDescriptor::type2(3, 1)), quaternion_group(12)));
  CHECK(build_ok(OKDescriptor::type0(3, 5)).order == 30);
  CHECK(build_ok(OKDescriptor::type4(3, -1)).order == 16);
  CHECK(build_ok(OKDescriptor::type6(4, 2)).order == 16);

  Group t5 = build_ok(OKDescriptor::type5(5, 2));
  CHECK(t5.order == 20);
  CHECK(is_isomorphic(t5, zq_rtimes_zm(5, 4, 2)));

  CHECK_THROWS_AS(build_ok(OKDescriptor::rule_t2()), std::invalid_argument);
  CHECK_THROWS_AS(build_ok(OKDescriptor::rule_r_odd()), std::invalid_argument);
}

TEST_CASE("ok_order matches the built group") {
  std::vector<OKDescriptor> ds = {
      OKDescriptor::type0(3, 5), OKDescriptor::type1(3),    OKDescriptor::type2(5, 1),
      OKDescriptor::type3(4),    OKDescriptor::type4(4, 1), OKDescriptor::type5(13, 5),
      OKDescriptor::type6(6, 2),
  };
  for (const auto& d : ds) CHECK(build_ok(d).order == ok_order(d));
}

TEST_CASE("spot scans") {
  CHECK(scan(cyclic_group(7)).empty());
  // Z2^3 trips the 2-group rule
  Group e8 = direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
  auto f8 = scan(e8);
  REQUIRE(f8.size() == 1);
  CHECK(f8[0].descriptor.kind == OKDescriptor::Kind::RuleT2);

  // GA(1,5) is itself a Type 5 obstruction
  auto fga = scan(zq_rtimes_zm(5, 4, 2));
  CHECK(has_kind(fga, OKDescriptor::Kind::Type5));

  // Q12 carries both Type 2 and Type 3
  auto fq = scan(quaternion_group(12));
  CHECK(has_kind(fq, OKDescriptor::Kind::Type2));
  CHECK(has_kind(fq, OKDescriptor::Kind::Type3));
}

TEST_CASE("S5 contains a Type 5 obstruction through GA(1,5)") {
  Group s5 = symmetric_group(5);
  auto fs = scan(s5);
  CHECK(has_kind(fs, OKDescriptor::Kind::Type5));
  // the named witness subgroup <(12345),(2354)> really is the obstruction
  Elem c5 = *symmetric_index(5, std::vector<int>{1, 2, 3, 4, 0});
  Elem c4 = *symmetric_index(5, std::vector<int>{0, 2, 4, 1, 3});
  Subgroup ga = generated_subgroup(s5, {c5, c4});
  Group gag = subgroup_as_group(s5, ga);
  bool matches_a_type5 = false;
  for (int n : roots_of_minus_one(5))
    matches_a_type5 |= is_isomorphic(gag, build_ok(OKDescriptor::type5(5, n)));
  CHECK(matches_a_type5);
}

TEST_CASE("A5 x Z2 trips the 2-group rule") {
  auto fs = scan(direct_product(alternating_group(5), cyclic_group(2)));
  CHECK(has_kind(fs, OKDescriptor::Kind::RuleT2));
}

TEST_CASE("self-detection on catalog groups up to order 100") {
  std::vector<OKDescriptor> ds;
  for (int p : {3, 5, 7})
    for (int q : {3, 5, 7, 11})
      if (p != q && 2 * p * q <= 100) ds.push_back(OKDescriptor::type0(p, q));
  for (int m = 2; 4 * m <= 100; ++m) ds.push_back(OKDescriptor::type1(m));
  for (int q : {3, 5, 7, 11})
    for (int k = 1; q * (1 << (k + 1)) <= 100; ++k) ds.push_back(OKDescriptor::type2(q, k));
  for (int m = 2; 4 * m <= 100; ++m) ds.push_back(OKDescriptor::type3(m));
  for (int k = 3; (1 << (k + 1)) <= 100; ++k)
    for (int sign : {1, -1}) ds.push_back(OKDescriptor::type4(k, sign));
  for (int p : {5, 13, 17})
    if (4 * p <= 100) ds.push_back(OKDescriptor::type5(p, roots_of_minus_one(p)[0]));
  for (int n = 4; 4 * n <= 100; n += 2)
    for (int t = 0; t < n; t += 2) ds.push_back(OKDescriptor::type6(n, t));

  for (const auto& d : ds) {
    CAPTURE(to_string(d));
    Group g = build_ok(d);
    CHECK_FALSE(scan(g).empty());
    // no obstruction group is admissible in the SO(3) taxonomy
    CHECK(classify(g).kind == Classification::Kind::Other);
  }
}

TEST_CASE("soundness: admissible families scan clean") {
  for (int n = 1; n <= 40; ++n) CHECK(scan(cyclic_group(n)).empty());
  for (int n = 1; n <= 20; ++n) CHECK(scan(dihedral_group(2 * n)).empty());
  CHECK(scan(alternating_group(4)).empty());
  CHECK(scan(symmetric_group(4)).empty());
  CHECK(scan(alternating_group(5)).empty());
}

TEST_CASE("odd-rule detector agrees with a brute-force subgroup oracle") {
  std::vector<Group> corpus;
  corpus.push_back(cyclic_group(15));
  corpus.push_back(cyclic_group(45));
  corpus.push_back(dihedral_group(18));
  corpus.push_back(dihedral_group(30));
  corpus.push_back(alternating_group(4));
  corpus.push_back(symmetric_group(3));
  corpus.push_back(direct_product(cyclic_group(3), cyclic_group(3)));
  corpus.push_back(direct_product(cyclic_group(3), cyclic_group(9)));
  corpus.push_back(zq_rtimes_zm(7, 3, 2));   // Z7 x| Z3
  corpus.push_back(zq_rtimes_zm(7, 9, 2));   // Z7 x| Z9, only the top layer acts
  corpus.push_back(zq_rtimes_zm(13, 3, 3));  // Z13 x| Z3
  corpus.push_back(direct_product(zq_rtimes_zm(7, 3, 2), cyclic_group(2)));
  corpus.push_back(zq_rtimes_zm(13, 6, 4));  // Sylow-13 normalizer shape
  for (const Group& g : corpus) {
    CAPTURE(g.order);
    bool oracle = has_odd_noncyclic_subgroup(g);
    bool detector = has_kind(scan(g), OKDescriptor::Kind::RuleROdd);
    CHECK(oracle == detector);
  }
}

TEST_CASE("2-group rule fires exactly when the Sylow-2 is bad") {
  struct Case {
    Group g;
    bool expect;
  };
  std::vector<Case> cases;
  cases.push_back({cyclic_group(8), false});
  cases.push_back({dihedral_group(16), false});
  cases.push_back({quaternion_group(16), true});
  cases.push_back({direct_product(cyclic_group(4), cyclic_group(2)), true});
  cases.push_back({symmetric_group(4), false});
  cases.push_back({direct_product(dihedral_group(8), cyclic_group(2)), true});
  for (const auto& c : cases)
    CHECK(has_kind(scan(c.g), OKDescriptor::Kind::RuleT2) == c.expect);
}

TEST_CASE("witnesses generate a subgroup isomorphic to the descriptor group") {
  std::vector<Group> hosts;
  hosts.push_back(direct_product(quaternion_group(8), cyclic_group(3)));
  hosts.push_back(direct_product(cyclic_group(12), cyclic_group(2)));
  hosts.push_back(build_ok(OKDescriptor::type0(3, 5)));
  hosts.push_back(symmetric_group(5));
  hosts.push_back(build_ok(OKDescriptor::type6(6, 0)));
  for (const Group& g : hosts) {
    for (const Finding& f : scan(g)) {
      if (f.descriptor.kind == OKDescriptor::Kind::RuleT2 ||
          f.descriptor.kind == OKDescriptor::Kind::RuleROdd)
        continue;
      Subgroup h = generated_subgroup(g, f.witness);
      CHECK(h.order() == ok_order(f.descriptor));
      CHECK(is_isomorphic(subgroup_as_group(g, h), build_ok(f.descriptor)));
    }
  }
}

TEST_CASE("rule witnesses violate the structural condition") {
  Group g = direct_product(alternating_group(5), cyclic_group(2));
  for (const Finding& f : scan(g)) {
    if (f.descriptor.kind != OKDescriptor::Kind::RuleT2) continue;
    Group w = subgroup_as_group(g, generated_subgroup(g, f.witness));
    CHECK((w.order & (w.order - 1)) == 0);  // a 2-group
    Classification c = classify(w);
    CHECK(c.kind != Classification::Kind::Cyclic);
    CHECK(c.kind != Classification::Kind::Dihedral);
  }
  Group h = zq_rtimes_zm(7, 3, 2);
  for (const Finding& f : scan(h)) {
    if (f.descriptor.kind != OKDescriptor::Kind::RuleROdd) continue;
    Group w = subgroup_as_group(h, generated_subgroup(h, f.witness));
    CHECK(w.order % 2 == 1);
    CHECK_FALSE(w.is_cyclic());
  }
}

TEST_CASE("monotonicity on a corpus of subgroup pairs") {
  std::vector<Group> hosts;
  hosts.push_back(symmetric_group(4));
  hosts.push_back(quaternion_group(16));
  hosts.push_back(direct_product(cyclic_group(4), cyclic_group(2)));
  hosts.push_back(build_ok(OKDescriptor::type0(3, 5)));
  hosts.push_back(zq_rtimes_zm(7, 3, 2));
  hosts.push_back(direct_product(cyclic_group(10), cyclic_group(2)));
  for (const Group& g : hosts) {
    bool g_flagged = !scan(g).empty();
    for (const Subgroup& h : all_subgroups(g)) {
      Group hg = subgroup_as_group(g, h);
      if (!scan(hg).empty()) CHECK(g_flagged);
    }
  }
}

TEST_CASE("deterministic output and exhaustive mode") {
  Group g = direct_product(cyclic_group(12), cyclic_group(2));
  auto f1 = scan(g);
  auto f2 = scan(g);
  REQUIRE(f1.size() == f2.size());
  for (size_t i = 0; i < f1.size(); ++i) {
    CHECK(f1[i].descriptor == f2[i].descriptor);
    CHECK(f1[i].witness == f2[i].witness);
  }
  auto all = scan(g, ScanOptions{kDefaultOrderCap, true});
  CHECK(all.size() >= f1.size());
  // exhaustive mode sees both Type1 parameterizations (m = 2 via Z4xZ2, m = 6)
  std::set<int> type1_ms;
  for (const Finding& f : all)
    if (f.descriptor.kind == OKDescriptor::Kind::Type1) type1_ms.insert(f.descriptor.a);
  CHECK(type1_ms.count(2) == 1);
  CHECK(type1_ms.count(6) == 1);
}

TEST_CASE("scan cap") {
  CHECK_THROWS_AS(scan(cyclic_group(100), ScanOptions{50, false}), std::invalid_argument);
}
