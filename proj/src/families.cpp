#include "groupext/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "groupext/numeric.hpp"

namespace groupext {

namespace {

void check_cap(long long order, int cap, const char* what) {
  if (order > cap)
    throw std::invalid_argument(std::string(what) + ": order exceeds cap");
}

std::string power_label(const std::string& base, int i) {
  if (i == 0) return "e";
  if (i == 1) return base;
  return base + "^" + std::to_string(i);
}

}  // namespace

Group cyclic_group(int n, int cap) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be >= 1");
  check_cap(n, cap, "cyclic_group");
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<size_t>(i) * n + j] = (i + j) % n;
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return make_group(n, std::move(table), std::move(labels), Family::Cyclic, n);
}

Group dihedral_group(int order, int cap) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("dihedral_group: order must be even and >= 2");
  check_cap(order, cap, "dihedral_group");
  int n = order / 2;
  // index i: a^i; index n+i: a^i b
  auto rot = [&](int i) { return mod_norm(i, n); };
  std::vector<Elem> table(static_cast<size_t>(order) * order);
  auto set = [&](int i, int j, int v) { table[static_cast<size_t>(i) * order + j] = v; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      set(i, j, rot(i + j));              // a^i a^j
      set(i, n + j, n + rot(i + j));      // a^i (a^j b)
      set(n + i, j, n + rot(i - j));      // (a^i b) a^j
      set(n + i, n + j, rot(i - j));      // (a^i b)(a^j b)
    }
  }
  std::vector<std::string> labels(order);
  for (int i = 0; i < n; ++i) {
    labels[i] = power_label("a", i);
    labels[n + i] = i == 0 ? "b" : power_label("a", i) + " b";
  }
  return make_group(order, std::move(table), std::move(labels), Family::Dihedral, n);
}

Group quaternion_group(int order, int cap) {
  if (order < 8 || order % 4 != 0)
    throw std::invalid_argument("quaternion_group: order must be a multiple of 4, >= 8");
  check_cap(order, cap, "quaternion_group");
  int m = order / 4;
  int nn = 2 * m;
  // index i: x^i; index 2m+i: x^i y
  auto rot = [&](int i) { return mod_norm(i, nn); };
  std::vector<Elem> table(static_cast<size_t>(order) * order);
  auto set = [&](int i, int j, int v) { table[static_cast<size_t>(i) * order + j] = v; };
  for (int i = 0; i < nn; ++i) {
    for (int j = 0; j < nn; ++j) {
      set(i, j, rot(i + j));                 // x^i x^j
      set(i, nn + j, nn + rot(i + j));       // x^i (x^j y)
      set(nn + i, j, nn + rot(i - j));       // (x^i y) x^j
      set(nn + i, nn + j, rot(i - j + m));   // (x^i y)(x^j y); y^2 = x^m
    }
  }
  std::vector<std::string> labels(order);
  for (int i = 0; i < nn; ++i) {
    labels[i] = power_label("x", i);
    labels[nn + i] = i == 0 ? "y" : power_label("x", i) + " y";
  }
  return make_group(order, std::move(table), std::move(labels), Family::Quaternion, m);
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool permutation_is_even(std::span<const int> one_line) {
  int n = static_cast<int>(one_line.size());
  std::vector<char> seen(n, 0);
  int parity = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) { seen[j] = 1; j = one_line[j]; ++len; }
    parity ^= (len - 1) & 1;
  }
  return parity == 0;
}

std::string cycle_notation(std::span<const int> one_line) {
  int n = static_cast<int>(one_line.size());
  std::vector<char> seen(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || one_line[i] == i) { seen[i] = 1; continue; }
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = one_line[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

namespace {

Group permutation_group(int n, bool even_only, int cap, Family family) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("permutation group degree must be between 1 and 6");
  std::vector<std::vector<int>> perms;
  for (auto& p : all_permutations(n))
    if (!even_only || permutation_is_even(p)) perms.push_back(p);
  int m = static_cast<int>(perms.size());
  check_cap(m, cap, "permutation_group");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  std::vector<int> prod(n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // (p*q)(x) = p(q(x))
      for (int x = 0; x < n; ++x) prod[x] = perms[i][perms[j][x]];
      table[static_cast<size_t>(i) * m + j] = index.at(prod);
    }
  }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = cycle_notation(perms[i]);
  return make_group(m, std::move(table), std::move(labels), family, n);
}

}  // namespace

Group symmetric_group(int n, int cap) {
  return permutation_group(n, false, cap, Family::Symmetric);
}

Group alternating_group(int n, int cap) {
  return permutation_group(n, true, cap, Family::Alternating);
}

std::optional<Elem> symmetric_index(int n, std::span<const int> one_line) {
  if (static_cast<int>(one_line.size()) != n) return std::nullopt;
  auto perms = all_permutations(n);
  for (size_t i = 0; i < perms.size(); ++i)
    if (std::equal(perms[i].begin(), perms[i].end(), one_line.begin())) return static_cast<Elem>(i);
  return std::nullopt;
}

std::optional<Elem> alternating_index(int n, std::span<const int> one_line) {
  if (static_cast<int>(one_line.size()) != n) return std::nullopt;
  if (!permutation_is_even(one_line)) return std::nullopt;
  Elem idx = 0;
  for (auto& p : all_permutations(n)) {
    if (!permutation_is_even(p)) continue;
    if (std::equal(p.begin(), p.end(), one_line.begin())) return idx;
    ++idx;
  }
  return std::nullopt;
}

Group psl2_group(int p, int cap) {
  if (!is_prime(p) || p > 13)
    throw std::invalid_argument("psl2_group: p must be a prime <= 13");
  // Matrices (a,b,c,d) with ad - bc = 1 over F_p, modulo {I, -I}.
  auto key = [&](int a, int b, int c, int d) {
    return ((a * p + b) * p + c) * p + d;
  };
  auto canonical = [&](int a, int b, int c, int d) {
    if (p == 2) return std::array<int, 4>{a, b, c, d};
    std::array<int, 4> m{a, b, c, d};
    std::array<int, 4> neg{(p - a) % p, (p - b) % p, (p - c) % p, (p - d) % p};
    return std::min(m, neg);
  };
  std::vector<std::array<int, 4>> reps;
  std::map<int, int> index;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (mod_norm(a * d - b * c, p) != 1) continue;
          auto m = canonical(a, b, c, d);
          int k = key(m[0], m[1], m[2], m[3]);
          if (!index.count(k)) {
            index[k] = static_cast<int>(reps.size());
            reps.push_back(m);
          }
        }
  // Move the identity class to index 0.
  auto id = canonical(1, 0, 0, 1);
  int id_pos = index.at(key(id[0], id[1], id[2], id[3]));
  std::swap(reps[0], reps[id_pos]);
  index[key(reps[id_pos][0], reps[id_pos][1], reps[id_pos][2], reps[id_pos][3])] = id_pos;
  index[key(reps[0][0], reps[0][1], reps[0][2], reps[0][3])] = 0;
  int m = static_cast<int>(reps.size());
  check_cap(m, cap, "psl2_group");
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    auto [a, b, c, d] = reps[i];
    for (int j = 0; j < m; ++j) {
      auto [e, f, g, h] = reps[j];
      auto prod = canonical(mod_norm(a * e + b * g, p), mod_norm(a * f + b * h, p),
                            mod_norm(c * e + d * g, p), mod_norm(c * f + d * h, p));
      table[static_cast<size_t>(i) * m + j] = index.at(key(prod[0], prod[1], prod[2], prod[3]));
    }
  }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    auto [a, b, c, d] = reps[i];
    labels[i] = "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
                std::to_string(c) + "," + std::to_string(d) + "]]";
  }
  return make_group(m, std::move(table), std::move(labels), Family::Psl2, p);
}

Group build_family(Family family, int param, int cap) {
  switch (family) {
    case Family::Cyclic: return cyclic_group(param, cap);
    case Family::Dihedral: return dihedral_group(param, cap);
    case Family::Quaternion: return quaternion_group(param, cap);
    case Family::Symmetric: return symmetric_group(param, cap);
    case Family::Alternating: return alternating_group(param, cap);
    case Family::Psl2: return psl2_group(param, cap);
    default: throw std::invalid_argument("build_family: not a constructible family tag");
  }
}

Group direct_product(const Group& g, const Group& h, int cap) {
  long long order = static_cast<long long>(g.order) * h.order;
  check_cap(order, cap, "direct_product");
  int m = static_cast<int>(order);
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < h.order; ++b)
      labels[a * h.order + b] = "(" + g.labels[a] + "," + h.labels[b] + ")";
  for (int a1 = 0; a1 < g.order; ++a1)
    for (int b1 = 0; b1 < h.order; ++b1)
      for (int a2 = 0; a2 < g.order; ++a2)
        for (int b2 = 0; b2 < h.order; ++b2) {
          int i = a1 * h.order + b1, j = a2 * h.order + b2;
          table[static_cast<size_t>(i) * m + j] = g.mul(a1, a2) * h.order + h.mul(b1, b2);
        }
  return make_group(m, std::move(table), std::move(labels), Family::Product);
}

namespace {

bool is_canonical_cyclic(const Group& q) {
  for (int i = 0; i < q.order; ++i)
    for (int j = 0; j < q.order; ++j)
      if (q.mul(i, j) != (i + j) % q.order) return false;
  return true;
}

}  // namespace

Group semidirect_product(const Group& n, const Group& q, const ActionSpec& act, int cap) {
  if (!is_canonical_cyclic(q))
    throw std::invalid_argument("semidirect_product: quotient must be a canonical cyclic group");
  if (!is_automorphism(n, act.generator_image))
    throw std::invalid_argument("semidirect_product: action is not an automorphism of the kernel");
  if (q.order % automorphism_order(act.generator_image) != 0)
    throw std::invalid_argument("semidirect_product: action order does not divide quotient order");
  long long order = static_cast<long long>(n.order) * q.order;
  check_cap(order, cap, "semidirect_product");
  int m = static_cast<int>(order);
  int qo = q.order;
  // phi^k for k < |Q|
  std::vector<Automorphism> pow(qo, identity_automorphism(n.order));
  for (int k = 1; k < qo; ++k) pow[k] = compose(act.generator_image, pow[k - 1]);
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < n.order; ++a)
    for (int i = 0; i < qo; ++i)
      labels[a * qo + i] = "(" + n.labels[a] + "," + std::to_string(i) + ")";
  for (int a1 = 0; a1 < n.order; ++a1)
    for (int i1 = 0; i1 < qo; ++i1)
      for (int a2 = 0; a2 < n.order; ++a2)
        for (int i2 = 0; i2 < qo; ++i2) {
          int i = a1 * qo + i1, j = a2 * qo + i2;
          table[static_cast<size_t>(i) * m + j] =
              n.mul(a1, pow[i1](a2)) * qo + (i1 + i2) % qo;
        }
  Family fam = automorphism_order(act.generator_image) == 1 ? Family::Product : Family::Extension;
  return make_group(m, std::move(table), std::move(labels), fam);
}

Automorphism multiplication_automorphism(const std::vector<int>& factor_orders,
                                         const std::vector<int>& units) {
  if (factor_orders.size() != units.size())
    throw std::invalid_argument("multiplication_automorphism: one unit per factor required");
  long long total = 1;
  for (size_t i = 0; i < factor_orders.size(); ++i) {
    if (factor_orders[i] < 1) throw std::invalid_argument("multiplication_automorphism: bad factor");
    if (std::gcd(mod_norm(units[i], factor_orders[i]), factor_orders[i]) != 1)
      throw std::invalid_argument("multiplication_automorphism: unit not coprime to factor order");
    total *= factor_orders[i];
  }
  int m = static_cast<int>(total);
  Automorphism f;
  f.map.resize(m);
  int k = static_cast<int>(factor_orders.size());
  std::vector<int> digits(k);
  for (int x = 0; x < m; ++x) {
    int rest = x;
    for (int i = k - 1; i >= 0; --i) {
      digits[i] = rest % factor_orders[i];
      rest /= factor_orders[i];
    }
    int y = 0;
    for (int i = 0; i < k; ++i)
      y = y * factor_orders[i] + mod_norm(static_cast<long long>(digits[i]) * units[i], factor_orders[i]);
    f.map[x] = y;
  }
  return f;
}

}  // namespace groupext
