#include "groupext/ok_catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "groupext/automorphism.hpp"
#include "groupext/extension.hpp"
#include "groupext/families.hpp"
#include "groupext/numeric.hpp"

namespace groupext {

std::string to_string(const OKDescriptor& d) {
  using K = OKDescriptor::Kind;
  switch (d.kind) {
    case K::Type0: return "Type0(p=" + std::to_string(d.a) + ",q=" + std::to_string(d.b) + ")";
    case K::Type1: return "Type1(m=" + std::to_string(d.a) + ")";
    case K::Type2: return "Type2(q=" + std::to_string(d.a) + ",k=" + std::to_string(d.b) + ")";
    case K::Type3: return "Type3(m=" + std::to_string(d.a) + ")";
    case K::Type4:
      return "Type4(k=" + std::to_string(d.a) + ",sign=" + (d.b > 0 ? "+1" : "-1") + ")";
    case K::Type5: return "Type5(p=" + std::to_string(d.a) + ",n=" + std::to_string(d.b) + ")";
    case K::Type6: return "Type6(n=" + std::to_string(d.a) + ",t=" + std::to_string(d.b) + ")";
    case K::RuleT2: return "RuleT2";
    case K::RuleROdd: return "RuleROdd";
  }
  return "?";
}

void validate_descriptor(const OKDescriptor& d) {
  using K = OKDescriptor::Kind;
  auto bad = [&](const char* why) {
    throw std::invalid_argument("descriptor " + to_string(d) + ": " + why);
  };
  switch (d.kind) {
    case K::Type0:
      if (d.a == d.b || d.a < 3 || d.b < 3 || !is_prime(d.a) || !is_prime(d.b))
        bad("p, q must be distinct odd primes");
      break;
    case K::Type1:
      if (d.a < 2) bad("m must be >= 2");
      break;
    case K::Type2:
      if (d.a < 3 || !is_prime(d.a)) bad("q must be an odd prime");
      if (d.b < 1) bad("k must be >= 1");
      break;
    case K::Type3:
      if (d.a < 2) bad("m must be >= 2");
      break;
    case K::Type4:
      if (d.a < 3) bad("k must be >= 3");
      if (d.b != 1 && d.b != -1) bad("sign must be +1 or -1");
      break;
    case K::Type5:
      if (!is_prime(d.a) || d.a % 4 != 1) bad("p must be a prime = 1 (mod 4)");
      if (mod_norm(static_cast<long long>(d.b) * d.b, d.a) != d.a - 1)
        bad("n^2 must be -1 (mod p)");
      break;
    case K::Type6:
      if (d.a < 4 || d.a % 2 != 0) bad("n must be even and >= 4");
      if (mod_norm(d.b, d.a) % 2 != 0) bad("t must be even (mod n)");
      break;
    case K::RuleT2:
    case K::RuleROdd:
      break;
  }
}

int ok_order(const OKDescriptor& d) {
  using K = OKDescriptor::Kind;
  validate_descriptor(d);
  switch (d.kind) {
    case K::Type0: return 2 * d.a * d.b;
    case K::Type1: return 4 * d.a;
    case K::Type2: return d.a * (1 << (d.b + 1));
    case K::Type3: return 4 * d.a;
    case K::Type4: return 1 << (d.a + 1);
    case K::Type5: return 4 * d.a;
    case K::Type6: return 4 * d.a;
    default: throw std::invalid_argument("ok_order: rules have no group order");
  }
}

Group build_ok(const OKDescriptor& d, int cap) {
  using K = OKDescriptor::Kind;
  validate_descriptor(d);
  switch (d.kind) {
    case K::Type0: {
      Group n = direct_product(cyclic_group(d.a, cap), cyclic_group(d.b, cap), cap);
      ActionSpec act{multiplication_automorphism({d.a, d.b}, {1, d.b - 1})};
      return semidirect_product(n, cyclic_group(2), act, cap);
    }
    case K::Type1:
      return direct_product(cyclic_group(2 * d.a, cap), cyclic_group(2), cap);
    case K::Type2: {
      ActionSpec act{multiplication_automorphism({d.a}, {d.a - 1})};
      return semidirect_product(cyclic_group(d.a, cap), cyclic_group(1 << (d.b + 1), cap), act,
                                cap);
    }
    case K::Type3:
      return quaternion_group(4 * d.a, cap);
    case K::Type4: {
      int m = 1 << d.a;
      int u = mod_norm((1 << (d.a - 1)) + d.b, m);
      ActionSpec act{multiplication_automorphism({m}, {u})};
      return semidirect_product(cyclic_group(m, cap), cyclic_group(2), act, cap);
    }
    case K::Type5: {
      ActionSpec act{multiplication_automorphism({d.a}, {d.b})};
      return semidirect_product(cyclic_group(d.a, cap), cyclic_group(4), act, cap);
    }
    case K::Type6: {
      int n = d.a;
      ActionSpec act{to_automorphism(DihedralAut{n, mod_norm(d.b, n), n - 1})};
      return semidirect_product(dihedral_group(2 * n, cap), cyclic_group(2), act, cap);
    }
    default:
      throw std::invalid_argument("build_ok: " + to_string(d) + " is a rule, not a group");
  }
}

namespace {

// Shared element data for the scanners.
struct ScanContext {
  const Group& g;
  std::vector<Elem> involutions;
  // powers[x] is filled lazily: membership bitmap and discrete log for <x>.
  explicit ScanContext(const Group& gr) : g(gr) {
    for (Elem x = 1; x < g.order; ++x)
      if (g.order_of(x) == 2) involutions.push_back(x);
  }

  std::vector<char> power_bitmap(Elem x) const {
    std::vector<char> in(g.order, 0);
    Elem y = 0;
    do {
      in[y] = 1;
      y = g.mul(y, x);
    } while (y != 0);
    return in;
  }

  // index k with x^k = v, or -1
  int discrete_log(Elem x, Elem v) const {
    Elem y = 0;
    int k = 0;
    do {
      if (y == v) return k;
      y = g.mul(y, x);
      ++k;
    } while (y != 0);
    return -1;
  }
};

class Scanner {
 public:
  Scanner(const Group& g, const ScanOptions& opt) : ctx_(g), opt_(opt) {}

  std::vector<Finding> run() {
    scan_type0();
    scan_type1();
    scan_type2();
    scan_type3();
    scan_type4();
    scan_type5();
    scan_type6();
    scan_rule_t2();
    scan_rule_r_odd();
    return std::move(findings_);
  }

 private:
  ScanContext ctx_;
  ScanOptions opt_;
  std::vector<Finding> findings_;
  std::set<std::pair<int, int>> seen_params_;
  bool kind_done_ = false;

  const Group& g() const { return ctx_.g; }

  void begin_kind() {
    kind_done_ = false;
    seen_params_.clear();
  }

  // Returns true when the caller should stop scanning this kind.
  bool emit(const OKDescriptor& d, std::vector<Elem> witness) {
    if (!opt_.exhaustive) {
      findings_.push_back({d, std::move(witness)});
      kind_done_ = true;
      return true;
    }
    if (seen_params_.insert({d.a, d.b}).second)
      findings_.push_back({d, std::move(witness)});
    return false;
  }

  void scan_type0() {
    begin_kind();
    for (Elem x = 1; x < g().order && !kind_done_; ++x) {
      auto fac = factorize(g().order_of(x));
      if (fac.size() != 2 || fac[0].second != 1 || fac[1].second != 1) continue;
      int p = fac[0].first, q = fac[1].first;
      if (p == 2) continue;
      // u fixes the Z_p part and inverts the Z_q part (and the swap)
      int u1 = crt(1, p, q - 1, q);
      int u2 = crt(p - 1, p, 1, q);
      Elem xu1 = g().power(x, u1), xu2 = g().power(x, u2);
      for (Elem t : ctx_.involutions) {
        Elem c = g().conj(t, x);
        if (c == xu1) {
          if (emit(OKDescriptor::type0(p, q), {x, t})) break;
        } else if (c == xu2) {
          if (emit(OKDescriptor::type0(q, p), {x, t})) break;
        }
      }
    }
  }

  void scan_type1() {
    begin_kind();
    for (Elem x = 1; x < g().order && !kind_done_; ++x) {
      int o = g().order_of(x);
      if (o < 4 || o % 2 != 0) continue;
      auto in_x = ctx_.power_bitmap(x);
      for (Elem y : ctx_.involutions) {
        if (in_x[y]) continue;
        if (g().mul(x, y) != g().mul(y, x)) continue;
        if (emit(OKDescriptor::type1(o / 2), {x, y})) break;
      }
    }
  }

  void scan_type2() {
    begin_kind();
    for (Elem x = 1; x < g().order && !kind_done_; ++x) {
      int q = g().order_of(x);
      if (q % 2 == 0 || !is_prime(q) || q < 3) continue;
      Elem xinv = g().inv(x);
      for (Elem y = 1; y < g().order; ++y) {
        int o = g().order_of(y);
        if (o < 4 || (o & (o - 1)) != 0) continue;  // 2-power >= 4
        if (g().conj(y, x) != xinv) continue;
        int k = 0;
        while ((1 << (k + 1)) < o) ++k;  // o = 2^(k+1)
        if (emit(OKDescriptor::type2(q, k), {x, y})) break;
      }
    }
  }

  void scan_type3() {
    begin_kind();
    for (Elem x = 1; x < g().order && !kind_done_; ++x) {
      int o = g().order_of(x);
      if (o < 4 || o % 2 != 0) continue;
      Elem xm = g().power(x, o / 2);
      Elem xinv = g().inv(x);
      auto in_x = ctx_.power_bitmap(x);
      for (Elem y = 1; y < g().order; ++y) {
        if (in_x[y]) continue;
        if (g().mul(y, y) != xm || g().conj(y, x) != xinv) continue;
        if (emit(OKDescriptor::type3(o / 2), {x, y})) break;
      }
    }
  }

  void scan_type4() {
    begin_kind();
    for (Elem x = 1; x < g().order && !kind_done_; ++x) {
      int o = g().order_of(x);
      if (o < 8 || (o & (o - 1)) != 0) continue;  // 2^k, k >= 3
      int k = 0;
      while ((1 << k) < o) ++k;
      auto in_x = ctx_.power_bitmap(x);
      for (int sign : {1, -1}) {
        Elem xu = g().power(x, mod_norm((1 << (k - 1)) + sign, o));
        for (Elem y : ctx_.involutions) {
          if (in_x[y]) continue;
          if (g().conj(y, x) != xu) continue;
          if (emit(OKDescriptor::type4(k, sign), {x, y})) break;
        }
        if (kind_done_) break;
      }
    }
  }

  void scan_type5() {
    begin_kind();
    for (Elem x = 1; x < g().order && !kind_done_; ++x) {
      int p = g().order_of(x);
      if (!is_prime(p) || p % 4 != 1) continue;
      auto roots = roots_of_minus_one(p);
      for (Elem y = 1; y < g().order; ++y) {
        if (g().order_of(y) != 4) continue;
        Elem c = g().conj(y, x);
        bool done = false;
        for (int r : roots) {
          if (c == g().power(x, r)) {
            done = emit(OKDescriptor::type5(p, r), {x, y});
            break;
          }
        }
        if (done) break;
      }
    }
  }

  void scan_type6() {
    begin_kind();
    for (Elem a = 1; a < g().order && !kind_done_; ++a) {
      int n = g().order_of(a);
      if (n < 4 || n % 2 != 0 || g().order % (4 * n) != 0) continue;
      Elem ainv = g().inv(a);
      auto in_a = ctx_.power_bitmap(a);
      // involutions inverting a
      std::vector<Elem> inverters;
      for (Elem v : ctx_.involutions)
        if (g().conj(v, a) == ainv) inverters.push_back(v);
      for (Elem b : inverters) {
        if (in_a[b]) continue;
        // D = <a, b>, dihedral of order 2n: powers of a and b * powers of a
        std::vector<char> in_d(g().order, 0);
        for (Elem e = 0; e < g().order; ++e)
          if (in_a[e]) {
            in_d[e] = 1;
            in_d[g().mul(b, e)] = 1;
          }
        for (Elem c : inverters) {
          if (in_d[c]) continue;
          // c b c^-1 must be a^t b with t even
          Elem e = g().mul(g().conj(c, b), g().inv(b));
          int t = in_a[e] ? ctx_.discrete_log(a, e) : -1;
          if (t < 0 || t % 2 != 0) continue;
          if (emit(OKDescriptor::type6(n, t), {a, b, c})) break;
        }
        if (kind_done_) break;
      }
    }
  }

  void scan_rule_t2() {
    begin_kind();
    if (g().order % 2 != 0) return;
    Subgroup s2 = sylow_subgroup(g(), 2);
    Group s2g = subgroup_as_group(g(), s2);
    Classification c = classify(s2g);
    if (c.kind == Classification::Kind::Cyclic || c.kind == Classification::Kind::Dihedral)
      return;
    std::vector<Elem> witness;
    for (Elem i : minimal_generating_set(s2g)) witness.push_back(s2.members[i]);
    findings_.push_back({OKDescriptor::rule_t2(), std::move(witness)});
  }

  void scan_rule_r_odd() {
    begin_kind();
    // (a) an odd Sylow subgroup is not cyclic
    for (auto [p, e] : factorize(g().order)) {
      if (p == 2) continue;
      Subgroup sp = sylow_subgroup(g(), p);
      Group spg = subgroup_as_group(g(), sp);
      if (spg.is_cyclic()) continue;
      std::vector<Elem> witness;
      for (Elem i : minimal_generating_set(spg)) witness.push_back(sp.members[i]);
      if (emit(OKDescriptor::rule_r_odd(), std::move(witness))) return;
    }
    // (b) x of odd prime-power order normalized nontrivially by y of coprime
    // odd prime-power order: <x, y> is an odd non-cyclic subgroup
    for (Elem x = 1; x < g().order && !kind_done_; ++x) {
      int ox = g().order_of(x);
      if (ox % 2 == 0 || ox == 1) continue;
      auto fx = factorize(ox);
      if (fx.size() != 1) continue;
      int qx = fx[0].first;
      auto in_x = ctx_.power_bitmap(x);
      for (Elem y = 1; y < g().order; ++y) {
        int oy = g().order_of(y);
        if (oy % 2 == 0 || oy == 1) continue;
        auto fy = factorize(oy);
        if (fy.size() != 1 || fy[0].first == qx) continue;
        Elem c = g().conj(y, x);
        if (c == x || !in_x[c]) continue;
        if (emit(OKDescriptor::rule_r_odd(), {x, y})) return;
      }
    }
  }
};

}  // namespace

std::vector<Finding> scan(const Group& g, const ScanOptions& opt) {
  if (g.order > opt.cap) throw std::invalid_argument("scan: order exceeds cap");
  return Scanner(g, opt).run();
}

}  // namespace groupext
