#include "groupext/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "groupext/numeric.hpp"

namespace groupext {

AbelianModule make_module(Group a, Automorphism action) {
  if (!a.is_abelian()) throw std::invalid_argument("make_module: coefficients must be abelian");
  if (!is_automorphism(a, action))
    throw std::invalid_argument("make_module: action is not an automorphism");
  return AbelianModule{std::move(a), std::move(action)};
}

AbelianModule trivial_module(Group a) {
  Automorphism id = identity_automorphism(a.order);
  return make_module(std::move(a), std::move(id));
}

AbelianInvariants abelian_invariants(const Group& abelian) {
  if (!abelian.is_abelian())
    throw std::invalid_argument("abelian_invariants: group is not abelian");
  AbelianInvariants out;
  Group g = abelian;
  while (g.order > 1) {
    int e = g.exponent();
    Elem x = 0;
    while (g.order_of(x) != e) ++x;
    out.push_back(e);
    g = quotient_group(g, generated_subgroup(g, {x}));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

int invariants_order(const AbelianInvariants& inv) {
  int r = 1;
  for (int d : inv) r *= d;
  return r;
}

AbelianInvariants h2_cyclic(int m, const AbelianModule& mod) {
  if (m < 1) throw std::invalid_argument("h2_cyclic: m must be >= 1");
  const Group& a = mod.a;
  if (!(automorphism_power(mod.action, m) == identity_automorphism(a.order)))
    throw std::invalid_argument("h2_cyclic: action order does not divide m");

  Subgroup fixed;
  for (Elem x = 0; x < a.order; ++x)
    if (mod.action(x) == x) fixed.members.push_back(x);

  // norm(x) = x phi(x) ... phi^(m-1)(x); its image lies inside the fixed subgroup
  std::set<Elem> image;
  for (Elem x = 0; x < a.order; ++x) {
    Elem acc = 0, y = x;
    for (int i = 0; i < m; ++i) {
      acc = a.mul(acc, y);
      y = mod.action(y);
    }
    image.insert(acc);
  }

  Group fg = subgroup_as_group(a, fixed);
  std::map<Elem, Elem> to_fixed;
  for (int i = 0; i < fixed.order(); ++i) to_fixed[fixed.members[i]] = i;
  Subgroup norm_sub;
  for (Elem v : image) {
    auto it = to_fixed.find(v);
    if (it == to_fixed.end()) throw std::logic_error("h2_cyclic: norm image not fixed");
    norm_sub.members.push_back(it->second);
  }
  std::sort(norm_sub.members.begin(), norm_sub.members.end());
  return abelian_invariants(quotient_group(fg, norm_sub));
}

bool is_cocycle(const AbelianModule& mod, const FactorSet& fs) {
  const Group& a = mod.a;
  int m = fs.m;
  if (fs.f.size() != static_cast<size_t>(m) * m) return false;
  for (int i = 0; i < m; ++i)
    if (fs.at(0, i) != 0 || fs.at(i, 0) != 0) return false;
  std::vector<Automorphism> pow(m, identity_automorphism(a.order));
  for (int k = 1; k < m; ++k) pow[k] = compose(mod.action, pow[k - 1]);
  for (int q1 = 0; q1 < m; ++q1)
    for (int q2 = 0; q2 < m; ++q2)
      for (int q3 = 0; q3 < m; ++q3) {
        // phi^q1(f(q2,q3)) + f(q1, q2+q3) = f(q1+q2, q3) + f(q1,q2)
        Elem lhs = a.mul(pow[q1](fs.at(q2, q3)), fs.at(q1, (q2 + q3) % m));
        Elem rhs = a.mul(fs.at((q1 + q2) % m, q3), fs.at(q1, q2));
        if (lhs != rhs) return false;
      }
  return true;
}

std::vector<FactorSet> cocycle_classes(int p, const AbelianModule& mod,
                                       const CocycleBudget& budget) {
  if (!is_prime(p)) throw std::invalid_argument("cocycle_classes: p must be prime");
  const Group& a = mod.a;
  if (p > budget.max_prime || a.order > budget.max_coeff_order)
    throw std::invalid_argument("cocycle_classes: enumeration budget exceeded");
  if (!(automorphism_power(mod.action, p) == identity_automorphism(a.order)))
    throw std::invalid_argument("cocycle_classes: action order does not divide p");

  std::vector<Automorphism> pow(p, identity_automorphism(a.order));
  for (int k = 1; k < p; ++k) pow[k] = compose(mod.action, pow[k - 1]);

  // A normalized cocycle is determined by its first row f(1, .): the identity
  // at q1 = 1 gives f(i+1, j) = phi(f(i,j)) + f(1, i+j) - f(1, i). Enumerate
  // candidate rows, complete the table, and keep those satisfying the full
  // identity.
  int free_count = p - 1;  // f(1,1) .. f(1,p-1)
  std::vector<FactorSet> cocycles;
  std::vector<Elem> row(p, 0);
  auto complete_and_check = [&]() {
    FactorSet fs;
    fs.m = p;
    fs.f.assign(static_cast<size_t>(p) * p, 0);
    for (int j = 0; j < p; ++j) fs.f[static_cast<size_t>(1) * p + j] = row[j];
    for (int i = 1; i + 1 < p; ++i)
      for (int j = 0; j < p; ++j) {
        Elem v = a.mul(mod.action(fs.at(i, j)),
                       a.mul(fs.at(1, (i + j) % p), a.inv(fs.at(1, i))));
        fs.f[static_cast<size_t>(i + 1) * p + j] = v;
      }
    if (is_cocycle(mod, fs)) cocycles.push_back(std::move(fs));
  };
  if (p == 1) throw std::logic_error("unreachable");
  std::vector<int> counter(free_count, 0);
  while (true) {
    for (int k = 0; k < free_count; ++k) row[1 + k] = counter[k];
    complete_and_check();
    int k = free_count - 1;
    while (k >= 0 && counter[k] == a.order - 1) counter[k--] = 0;
    if (k < 0) break;
    ++counter[k];
  }

  // Coboundaries of normalized 1-cochains c (c(0) = 0):
  // (dc)(i,j) = phi^i(c(j)) - c(i+j) + c(i).
  std::set<std::vector<Elem>> boundaries;
  std::vector<Elem> c(p, 0);
  std::vector<int> cc(free_count, 0);
  while (true) {
    for (int k = 0; k < free_count; ++k) c[1 + k] = cc[k];
    std::vector<Elem> d(static_cast<size_t>(p) * p, 0);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        d[static_cast<size_t>(i) * p + j] =
            a.mul(pow[i](c[j]), a.mul(a.inv(c[(i + j) % p]), c[i]));
    boundaries.insert(std::move(d));
    int k = free_count - 1;
    while (k >= 0 && cc[k] == a.order - 1) cc[k--] = 0;
    if (k < 0) break;
    ++cc[k];
  }

  // Partition cocycles into classes; cocycles are generated in lexicographic
  // order of their defining row, and we take the least table per class.
  std::sort(cocycles.begin(), cocycles.end(),
            [](const FactorSet& x, const FactorSet& y) { return x.f < y.f; });
  std::set<std::vector<Elem>> assigned;
  std::vector<FactorSet> reps;
  for (const FactorSet& fs : cocycles) {
    if (assigned.count(fs.f)) continue;
    reps.push_back(fs);
    for (const auto& b : boundaries) {
      std::vector<Elem> shifted(fs.f.size());
      for (size_t i = 0; i < fs.f.size(); ++i) shifted[i] = a.mul(fs.f[i], b[i]);
      assigned.insert(std::move(shifted));
    }
  }
  return reps;
}

Group group_from_factor_set(const AbelianModule& mod, const FactorSet& fs, int cap) {
  if (!is_cocycle(mod, fs))
    throw std::invalid_argument("group_from_factor_set: not a normalized cocycle");
  const Group& a = mod.a;
  int m = fs.m;
  long long order = static_cast<long long>(a.order) * m;
  if (order > cap) throw std::invalid_argument("group_from_factor_set: order exceeds cap");
  int n = static_cast<int>(order);
  std::vector<Automorphism> pow(m, identity_automorphism(a.order));
  for (int k = 1; k < m; ++k) pow[k] = compose(mod.action, pow[k - 1]);
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < a.order; ++x)
    for (int q = 0; q < m; ++q)
      labels[x * m + q] = "(" + a.labels[x] + "," + std::to_string(q) + ")";
  for (Elem x1 = 0; x1 < a.order; ++x1)
    for (int q1 = 0; q1 < m; ++q1)
      for (Elem x2 = 0; x2 < a.order; ++x2)
        for (int q2 = 0; q2 < m; ++q2) {
          Elem x = a.mul(x1, a.mul(pow[q1](x2), fs.at(q1, q2)));
          int i = x1 * m + q1, j = x2 * m + q2;
          table[static_cast<size_t>(i) * n + j] = x * m + (q1 + q2) % m;
        }
  return make_group(n, std::move(table), std::move(labels), Family::Extension);
}

}  // namespace groupext
