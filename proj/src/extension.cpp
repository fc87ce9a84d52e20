#include "groupext/extension.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "groupext/families.hpp"
#include "groupext/isomorphism.hpp"
#include "groupext/numeric.hpp"

namespace groupext {

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::Cyclic: return "Cyclic(" + std::to_string(c.n) + ")";
    case Classification::Kind::Dihedral: return "Dihedral(" + std::to_string(c.n) + ")";
    case Classification::Kind::A4: return "A4";
    case Classification::Kind::S4: return "S4";
    case Classification::Kind::A5: return "A5";
    case Classification::Kind::Other: return "Other";
  }
  return "Other";
}

namespace {

const Group& canonical_a4() {
  static const Group g = alternating_group(4);
  return g;
}
const Group& canonical_s4() {
  static const Group g = symmetric_group(4);
  return g;
}
const Group& canonical_a5() {
  static const Group g = alternating_group(5);
  return g;
}

}  // namespace

Classification classify(const Group& g) {
  using K = Classification::Kind;
  if (g.is_cyclic()) return {K::Cyclic, g.order};
  if (g.order % 2 == 0) {
    int half = g.order / 2;
    for (Elem a = 1; a < g.order; ++a) {
      if (g.order_of(a) != half) continue;
      std::vector<char> in_cyc(g.order, 0);
      Elem x = 0;
      do {
        in_cyc[x] = 1;
        x = g.mul(x, a);
      } while (x != 0);
      for (Elem b = 1; b < g.order; ++b) {
        if (in_cyc[b] || g.mul(b, b) != 0) continue;
        if (g.conj(b, a) == g.inv(a)) return {K::Dihedral, half};
      }
    }
  }
  if (g.order == 12 && is_isomorphic(g, canonical_a4())) return {K::A4, 0};
  if (g.order == 24 && is_isomorphic(g, canonical_s4())) return {K::S4, 0};
  if (g.order == 60 && is_isomorphic(g, canonical_a5())) return {K::A5, 0};
  return {K::Other, 0};
}

Extension build_extension(const Group& kernel, int p, const Automorphism& alpha, Elem z,
                          int cap) {
  if (!is_prime(p)) throw std::invalid_argument("build_extension: p must be prime");
  if (!is_automorphism(kernel, alpha))
    throw std::invalid_argument("build_extension: alpha is not an automorphism");
  if (automorphism_power(alpha, p) != conjugation_by(kernel, z) || alpha(z) != z)
    throw std::invalid_argument("build_extension: (alpha, z) is not a compatible pair");
  long long order = static_cast<long long>(kernel.order) * p;
  if (order > cap) throw std::invalid_argument("build_extension: order exceeds cap");
  int m = static_cast<int>(order);

  std::vector<Automorphism> pow(p, identity_automorphism(kernel.order));
  for (int k = 1; k < p; ++k) pow[k] = compose(alpha, pow[k - 1]);

  std::vector<Elem> table(static_cast<size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (Elem n = 0; n < kernel.order; ++n)
    for (int i = 0; i < p; ++i)
      labels[n * p + i] = "(" + kernel.labels[n] + "," + std::to_string(i) + ")";
  for (Elem n1 = 0; n1 < kernel.order; ++n1)
    for (int i = 0; i < p; ++i)
      for (Elem n2 = 0; n2 < kernel.order; ++n2)
        for (int j = 0; j < p; ++j) {
          Elem n = kernel.mul(n1, pow[i](n2));
          if (i + j >= p) n = kernel.mul(n, z);
          int a = n1 * p + i, b = n2 * p + j;
          table[static_cast<size_t>(a) * m + b] = n * p + (i + j) % p;
        }

  Extension e;
  e.total = make_group(m, std::move(table), std::move(labels), Family::Extension);
  e.kernel = kernel;
  e.p = p;
  e.embedding.resize(kernel.order);
  for (Elem n = 0; n < kernel.order; ++n) e.embedding[n] = n * p;
  e.projection.resize(m);
  for (int x = 0; x < m; ++x) e.projection[x] = x % p;
  e.alpha = alpha;
  e.z = z;
  return e;
}

std::vector<Extension> enumerate_extensions(const ExtensionProblem& prob) {
  const Group& n = prob.kernel;
  if (!is_prime(prob.p)) throw std::invalid_argument("enumerate_extensions: p must be prime");
  if (static_cast<long long>(n.order) * prob.p > prob.cap)
    throw std::invalid_argument("enumerate_extensions: order exceeds cap");

  if (prob.outer_class && !is_automorphism(n, *prob.outer_class))
    throw std::invalid_argument("enumerate_extensions: outer_class is not an automorphism");

  std::vector<Automorphism> reps;
  std::set<std::vector<Elem>> inn_set;
  if (prob.outer_class && n.is_abelian()) {
    // Inn is trivial, so the prescribed action is its own coset representative.
    reps.push_back(*prob.outer_class);
    inn_set.insert(identity_automorphism(n.order).map);
  } else {
    std::vector<Automorphism> auts = automorphism_group(n, prob.aut_cap);
    InnOut io = inn_out_from(n, auts);
    for (const Automorphism& f : io.inn) inn_set.insert(f.map);
    reps = std::move(io.out_reps);
  }

  Subgroup zn = center(n);

  std::vector<Extension> out;
  for (const Automorphism& a0 : reps) {
    if (prob.outer_class &&
        !inn_set.count(compose(a0, inverse(*prob.outer_class)).map))
      continue;

    Automorphism ap = automorphism_power(a0, prob.p);
    // alpha^p must be conjugation by some z0; candidates differ by the center.
    std::optional<Elem> z0;
    for (Elem x = 0; x < n.order; ++x)
      if (conjugation_by(n, x) == ap) { z0 = x; break; }
    if (!z0) continue;  // abstract kernel has no compatible pair

    std::vector<Elem> valid;
    for (Elem c : zn.members) {
      Elem z = n.mul(*z0, c);
      if (a0(z) == z) valid.push_back(z);
    }
    std::sort(valid.begin(), valid.end());

    // Norm image {c alpha(c) ... alpha^(p-1)(c) : c central}: twisting z by it
    // changes the lift, not the class.
    std::set<Elem> norm_img;
    for (Elem c : zn.members) {
      Elem acc = 0, y = c;
      for (int i = 0; i < prob.p; ++i) {
        acc = n.mul(acc, y);
        y = a0(y);
      }
      norm_img.insert(acc);
    }

    std::set<Elem> assigned;
    for (Elem z : valid) {
      if (assigned.count(z)) continue;
      for (Elem t : norm_img) assigned.insert(n.mul(z, t));
      out.push_back(build_extension(n, prob.p, a0, z, prob.cap));
    }
  }
  return out;
}

Extension extension_from_factor_set(const AbelianModule& mod, const FactorSet& fs, int cap) {
  Extension e;
  e.total = group_from_factor_set(mod, fs, cap);
  e.kernel = mod.a;
  e.p = fs.m;
  int m = fs.m;
  e.embedding.resize(mod.a.order);
  for (Elem x = 0; x < mod.a.order; ++x) e.embedding[x] = x * m;
  e.projection.resize(e.total.order);
  for (int x = 0; x < e.total.order; ++x) e.projection[x] = x % m;
  // Recover (alpha, z) from the canonical lift t = (0, 1).
  Elem t = 1;
  e.alpha.map.resize(mod.a.order);
  for (Elem x = 0; x < mod.a.order; ++x)
    e.alpha.map[x] = e.total.conj(t, e.embedding[x]) / m;
  e.z = e.total.power(t, m) / m;
  return e;
}

bool is_split(const Extension& e) {
  for (Elem x = 0; x < e.total.order; ++x)
    if (e.total.order_of(x) == e.p && e.projection[x] != 0) return true;
  return false;
}

bool equivalent(const Extension& e1, const Extension& e2) {
  if (e1.kernel.table != e2.kernel.table || e1.p != e2.p)
    throw std::invalid_argument("equivalent: kernel/prime mismatch");
  const Group& g2 = e2.total;
  std::vector<Elem> gens = minimal_generating_set(e1.kernel);

  // An equivalence is determined by the image of the canonical lift t1 of e1,
  // which must be an element of e2 projecting to 1 that conjugates the kernel
  // by alpha1 and has p-th power z1.
  Elem z1_in_2 = e2.embedding[e1.z];
  for (Elem cand = 0; cand < g2.order; ++cand) {
    if (e2.projection[cand] != 1) continue;
    if (g2.power(cand, e1.p) != z1_in_2) continue;
    bool ok = true;
    for (Elem g : gens)
      if (g2.conj(cand, e2.embedding[g]) != e2.embedding[e1.alpha(g)]) { ok = false; break; }
    if (ok) return true;
  }
  return false;
}

}  // namespace groupext
