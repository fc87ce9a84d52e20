#include "groupext/group.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

#include "groupext/numeric.hpp"

namespace groupext {

namespace {

std::atomic<unsigned> g_validation_seed{12345};

void check_square(int order, const std::vector<Elem>& table) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  if (table.size() != static_cast<size_t>(order) * order)
    throw std::invalid_argument("multiplication table has wrong size");
  for (Elem x : table)
    if (x < 0 || x >= order) throw std::invalid_argument("table entry out of range");
}

void check_identity(int n, const std::vector<Elem>& t) {
  for (Elem j = 0; j < n; ++j)
    if (t[j] != j || t[static_cast<size_t>(j) * n] != j)
      throw std::invalid_argument("element 0 is not a two-sided identity");
}

void check_latin(int n, const std::vector<Elem>& t) {
  std::vector<char> seen(n);
  for (Elem i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem j = 0; j < n; ++j) {
      Elem v = t[static_cast<size_t>(i) * n + j];
      if (seen[v]) throw std::invalid_argument("row is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem j = 0; j < n; ++j) {
      Elem v = t[static_cast<size_t>(j) * n + i];
      if (seen[v]) throw std::invalid_argument("column is not a permutation");
      seen[v] = 1;
    }
  }
}

void check_associativity(int n, const std::vector<Elem>& t) {
  auto mul = [&](Elem a, Elem b) { return t[static_cast<size_t>(a) * n + b]; };
  if (n <= 64) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("table is not associative");
    return;
  }
  std::mt19937 rng(g_validation_seed.load());
  std::uniform_int_distribution<Elem> pick(0, n - 1);
  for (int i = 0; i < 100000; ++i) {
    Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw std::invalid_argument("table is not associative (sampled)");
  }
}

}  // namespace

void set_validation_seed(unsigned seed) { g_validation_seed.store(seed); }
unsigned validation_seed() { return g_validation_seed.load(); }

Elem Group::power(Elem a, long long k) const {
  if (k < 0) return power(inv(a), -k);
  Elem r = 0, base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int Group::exponent() const {
  long long e = 1;
  for (int o : orders) e = std::lcm(e, static_cast<long long>(o));
  return static_cast<int>(e);
}

bool Group::is_abelian() const {
  for (Elem a = 0; a < order; ++a)
    for (Elem b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Group::is_cyclic() const {
  for (int o : orders)
    if (o == order) return true;
  return false;
}

Group make_group(int order, std::vector<Elem> table, std::vector<std::string> labels,
                 Family family, int family_param) {
  check_square(order, table);
  check_identity(order, table);
  check_latin(order, table);
  check_associativity(order, table);

  Group g;
  g.order = order;
  g.table = std::move(table);
  g.family = family;
  g.family_param = family_param;

  g.inverses.assign(order, -1);
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) {
      if (g.mul(a, b) == 0) {
        if (g.mul(b, a) != 0) throw std::invalid_argument("inverse is not two-sided");
        g.inverses[a] = b;
        break;
      }
    }
    if (g.inverses[a] < 0) throw std::invalid_argument("element has no inverse");
  }

  g.orders.assign(order, 0);
  for (Elem a = 0; a < order; ++a) {
    Elem x = a;
    int k = 1;
    while (x != 0) { x = g.mul(x, a); ++k; }
    g.orders[a] = k;
  }

  if (labels.empty()) {
    labels.reserve(order);
    for (Elem a = 0; a < order; ++a) labels.push_back(std::to_string(a));
  }
  if (labels.size() != static_cast<size_t>(order))
    throw std::invalid_argument("label count does not match order");
  g.labels = std::move(labels);
  return g;
}

std::vector<std::pair<int, int>> order_census(const Group& g) {
  std::vector<std::pair<int, int>> out;
  std::vector<int> sorted = g.orders;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size();) {
    size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out.emplace_back(sorted[i], static_cast<int>(j - i));
    i = j;
  }
  return out;
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup full_subgroup(const Group& g) {
  Subgroup h;
  h.members.resize(g.order);
  std::iota(h.members.begin(), h.members.end(), 0);
  return h;
}

Subgroup generated_subgroup(const Group& g, std::span<const Elem> gens) {
  for (Elem x : gens)
    if (x < 0 || x >= g.order) throw std::invalid_argument("generator index out of range");
  std::vector<char> in(g.order, 0);
  in[0] = 1;
  std::vector<Elem> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    Elem u = queue[head];
    for (Elem x : gens) {
      Elem v = g.mul(u, x);
      if (!in[v]) { in[v] = 1; queue.push_back(v); }
    }
  }
  Subgroup h;
  for (Elem a = 0; a < g.order; ++a)
    if (in[a]) h.members.push_back(a);
  return h;
}

Subgroup generated_subgroup(const Group& g, std::initializer_list<Elem> gens) {
  return generated_subgroup(g, std::span<const Elem>(gens.begin(), gens.size()));
}

bool is_subgroup(const Group& g, const Subgroup& h) {
  if (h.members.empty() || h.members.front() != 0) return false;
  if (!std::is_sorted(h.members.begin(), h.members.end())) return false;
  for (Elem a : h.members) {
    if (a < 0 || a >= g.order) return false;
    if (!h.contains(g.inv(a))) return false;
    for (Elem b : h.members)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const Group& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw std::invalid_argument("is_normal: not a subgroup");
  for (Elem x = 0; x < g.order; ++x)
    for (Elem a : h.members)
      if (!h.contains(g.conj(x, a))) return false;
  return true;
}

Subgroup center(const Group& g) {
  Subgroup z;
  for (Elem a = 0; a < g.order; ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central) z.members.push_back(a);
  }
  return z;
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw std::invalid_argument("normalizer: not a subgroup");
  Subgroup n;
  for (Elem x = 0; x < g.order; ++x) {
    bool keeps = true;
    for (Elem a : h.members)
      if (!h.contains(g.conj(x, a))) { keeps = false; break; }
    if (keeps) n.members.push_back(x);
  }
  return n;
}

Group subgroup_as_group(const Group& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw std::invalid_argument("subgroup_as_group: not a subgroup");
  int m = h.order();
  std::vector<int> index_of(g.order, -1);
  for (int i = 0; i < m; ++i) index_of[h.members[i]] = i;
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = g.labels[h.members[i]];
    for (int j = 0; j < m; ++j)
      table[static_cast<size_t>(i) * m + j] = index_of[g.mul(h.members[i], h.members[j])];
  }
  return make_group(m, std::move(table), std::move(labels));
}

Group quotient_group(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("quotient_group: subgroup is not normal");
  int m = g.order / n.order();
  std::vector<int> coset_of(g.order, -1);
  std::vector<Elem> reps;
  for (Elem a = 0; a < g.order; ++a) {
    if (coset_of[a] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (Elem h : n.members) coset_of[g.mul(a, h)] = c;
  }
  if (static_cast<int>(reps.size()) != m) throw std::logic_error("quotient_group: bad coset count");
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = "[" + g.labels[reps[i]] + "]";
    for (int j = 0; j < m; ++j)
      table[static_cast<size_t>(i) * m + j] = coset_of[g.mul(reps[i], reps[j])];
  }
  return make_group(m, std::move(table), std::move(labels));
}

Subgroup sylow_subgroup(const Group& g, int p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup: p must be prime");
  int target = p_part(g.order, p);
  Subgroup h = trivial_subgroup();
  while (h.order() < target) {
    Subgroup n = normalizer(g, h);
    bool grown = false;
    for (Elem y : n.members) {
      if (h.contains(y)) continue;
      int d = g.order_of(y);
      int m = d;
      while (m % p == 0) m /= p;  // strip p-part: y^m has p-power order
      Elem x = g.power(y, m);
      if (x == 0 || h.contains(x) || !h.contains(g.power(x, p))) continue;
      std::vector<Elem> gens = h.members;
      gens.push_back(x);
      h = generated_subgroup(g, gens);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow_subgroup: failed to grow p-subgroup");
  }
  // Canonical choice: lexicographically least member set among conjugates.
  std::vector<Elem> best = h.members;
  std::vector<Elem> conj(h.order());
  for (Elem x = 0; x < g.order; ++x) {
    for (int i = 0; i < h.order(); ++i) conj[i] = g.conj(x, h.members[i]);
    std::sort(conj.begin(), conj.end());
    if (conj < best) best = conj;
  }
  return Subgroup{std::move(best)};
}

std::vector<Elem> minimal_generating_set(const Group& g) {
  std::vector<Elem> gens;
  Subgroup cur = trivial_subgroup();
  while (cur.order() < g.order) {
    int best_size = cur.order();
    Elem best = -1;
    Subgroup best_sub;
    std::vector<Elem> trial = gens;
    trial.push_back(0);
    for (Elem x = 0; x < g.order; ++x) {
      if (cur.contains(x)) continue;
      trial.back() = x;
      Subgroup s = generated_subgroup(g, trial);
      if (s.order() > best_size) {
        best_size = s.order();
        best = x;
        best_sub = std::move(s);
      }
    }
    gens.push_back(best);
    cur = std::move(best_sub);
  }
  return gens;
}

}  // namespace groupext
