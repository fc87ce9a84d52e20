#pragma once

// The obstruction-kernel catalog: seven parameterized families of forbidden
// subgroups (Types 0-6) plus two structural rejection rules, and a scanner
// that searches a group for any of them.
//
//   Type 0: (Z_p + Z_q) x| Z_2, identity on Z_p, inversion on Z_q;
//           p, q distinct odd primes. Order 2pq.
//   Type 1: Z_2m x Z_2, m >= 2. Order 4m.
//   Type 2: Z_q x| Z_2^(k+1), inversion action; q odd prime, k >= 1.
//   Type 3: generalized quaternion Q_4m, m >= 2.
//   Type 4: Z_2^k x| Z_2, multiplication by 2^(k-1) +- 1; k >= 3.
//   Type 5: Z_p x| Z_4, multiplication by n with n^2 = -1 (mod p);
//           p prime, p = 1 (mod 4). Order 4p.
//   Type 6: D_2n x| Z_2 by the dihedral automorphism (t, -1); n even >= 4,
//           t even (t is reduced mod n before the parity test). Order 4n.
//   Rule T2:    a Sylow-2 subgroup is neither cyclic nor dihedral.
//   Rule R-ODD: some odd-order subgroup is not cyclic.

#include "groupext/group.hpp"

namespace groupext {

struct OKDescriptor {
  enum class Kind { Type0, Type1, Type2, Type3, Type4, Type5, Type6, RuleT2, RuleROdd };
  Kind kind = Kind::RuleT2;
  int a = 0;  // Type0: p; Type1: m; Type2: q; Type3: m; Type4: k; Type5: p; Type6: n
  int b = 0;  // Type0: q; Type2: k; Type4: sign (+1/-1); Type5: n; Type6: t

  static OKDescriptor type0(int p, int q) { return {Kind::Type0, p, q}; }
  static OKDescriptor type1(int m) { return {Kind::Type1, m, 0}; }
  static OKDescriptor type2(int q, int k) { return {Kind::Type2, q, k}; }
  static OKDescriptor type3(int m) { return {Kind::Type3, m, 0}; }
  static OKDescriptor type4(int k, int sign) { return {Kind::Type4, k, sign}; }
  static OKDescriptor type5(int p, int n) { return {Kind::Type5, p, n}; }
  static OKDescriptor type6(int n, int t) { return {Kind::Type6, n, t}; }
  static OKDescriptor rule_t2() { return {Kind::RuleT2, 0, 0}; }
  static OKDescriptor rule_r_odd() { return {Kind::RuleROdd, 0, 0}; }

  friend bool operator==(const OKDescriptor&, const OKDescriptor&) = default;
};

std::string to_string(const OKDescriptor& d);

// Throws std::invalid_argument unless the descriptor parameters are valid.
void validate_descriptor(const OKDescriptor& d);

// Group order of a type descriptor (rules have no single group).
int ok_order(const OKDescriptor& d);

// Builds the descriptor's group; rejects rule descriptors.
Group build_ok(const OKDescriptor& d, int cap = kDefaultOrderCap);

struct Finding {
  OKDescriptor descriptor;
  std::vector<Elem> witness;  // generators of the offending subgroup
};

struct ScanOptions {
  int cap = kDefaultOrderCap;
  // When set, one finding per parameterization instead of one per kind.
  bool exhaustive = false;
};

// Scans for every catalog kind present in g. Returns at most one Finding per
// kind (the first witness in element-index order) unless exhaustive is set;
// kinds appear in enum order. Empty result means the group is admissible.
std::vector<Finding> scan(const Group& g, const ScanOptions& opt = {});

}  // namespace groupext
