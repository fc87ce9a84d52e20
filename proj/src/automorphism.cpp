#include "groupext/automorphism.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "groupext/numeric.hpp"

namespace groupext {

Automorphism identity_automorphism(int order) {
  Automorphism f;
  f.map.resize(order);
  for (int i = 0; i < order; ++i) f.map[i] = i;
  return f;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("compose: degree mismatch");
  Automorphism r;
  r.map.resize(f.degree());
  for (int i = 0; i < f.degree(); ++i) r.map[i] = f.map[g.map[i]];
  return r;
}

Automorphism inverse(const Automorphism& f) {
  Automorphism r;
  r.map.resize(f.degree());
  for (int i = 0; i < f.degree(); ++i) r.map[f.map[i]] = i;
  return r;
}

Automorphism automorphism_power(const Automorphism& f, int k) {
  Automorphism r = identity_automorphism(f.degree());
  for (int i = 0; i < k; ++i) r = compose(f, r);
  return r;
}

int automorphism_order(const Automorphism& f) {
  Automorphism x = f;
  Automorphism id = identity_automorphism(f.degree());
  int k = 1;
  while (!(x == id)) {
    x = compose(f, x);
    ++k;
    if (k > f.degree() * f.degree())
      throw std::logic_error("automorphism_order: runaway (not a permutation?)");
  }
  return k;
}

bool is_automorphism(const Group& g, const Automorphism& f) {
  if (f.degree() != g.order) return false;
  std::vector<char> seen(g.order, 0);
  for (Elem x : f.map) {
    if (x < 0 || x >= g.order || seen[x]) return false;
    seen[x] = 1;
  }
  if (f.map[0] != 0) return false;
  for (Elem a = 0; a < g.order; ++a)
    for (Elem b = 0; b < g.order; ++b)
      if (f.map[g.mul(a, b)] != g.mul(f.map[a], f.map[b])) return false;
  return true;
}

Automorphism conjugation_by(const Group& g, Elem x) {
  Automorphism f;
  f.map.resize(g.order);
  for (Elem a = 0; a < g.order; ++a) f.map[a] = g.conj(x, a);
  return f;
}

namespace {

// Spanning expressions: every element as parent*gen, built breadth-first from
// the identity. Used to extend a generator assignment to a full map.
struct SpanningWords {
  std::vector<Elem> bfs_order;  // all elements, identity first
  std::vector<Elem> parent;
  std::vector<int> gen_index;   // -1 for the identity
};

SpanningWords spanning_words(const Group& g, std::span<const Elem> gens) {
  SpanningWords w;
  w.parent.assign(g.order, -1);
  w.gen_index.assign(g.order, -1);
  std::vector<char> seen(g.order, 0);
  seen[0] = 1;
  w.bfs_order.push_back(0);
  for (size_t head = 0; head < w.bfs_order.size(); ++head) {
    Elem u = w.bfs_order[head];
    for (size_t k = 0; k < gens.size(); ++k) {
      Elem v = g.mul(u, gens[k]);
      if (!seen[v]) {
        seen[v] = 1;
        w.parent[v] = u;
        w.gen_index[v] = static_cast<int>(k);
        w.bfs_order.push_back(v);
      }
    }
  }
  return w;
}

// Builds the map determined by generator images along the spanning words;
// returns false if it is not a bijective homomorphism.
bool complete_map(const Group& g, const SpanningWords& w, std::span<const Elem> images,
                  std::vector<Elem>& map) {
  map.assign(g.order, -1);
  map[0] = 0;
  for (Elem e : w.bfs_order) {
    if (e == 0) continue;
    map[e] = g.mul(map[w.parent[e]], images[w.gen_index[e]]);
  }
  std::vector<char> seen(g.order, 0);
  for (Elem x : map) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  for (Elem a = 0; a < g.order; ++a)
    for (Elem b = 0; b < g.order; ++b)
      if (map[g.mul(a, b)] != g.mul(map[a], map[b])) return false;
  return true;
}

}  // namespace

std::vector<Automorphism> automorphism_group(const Group& g, int cap) {
  if (g.order > cap)
    throw std::invalid_argument("automorphism_group: order exceeds brute-force cap");
  std::vector<Elem> gens = minimal_generating_set(g);
  if (gens.empty()) return {identity_automorphism(1)};
  SpanningWords words = spanning_words(g, gens);

  // Candidate images per generator: same element order.
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k)
    for (Elem x = 0; x < g.order; ++x)
      if (g.order_of(x) == g.order_of(gens[k])) candidates[k].push_back(x);

  std::vector<Automorphism> out;
  std::vector<Elem> images(gens.size());
  std::vector<Elem> map;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == gens.size()) {
      if (complete_map(g, words, images, map)) out.push_back(Automorphism{map});
      return;
    }
    for (Elem c : candidates[k]) {
      images[k] = c;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

InnOut inn_out_from(const Group& g, const std::vector<Automorphism>& auts) {
  std::set<std::vector<Elem>> inn_set;
  for (Elem x = 0; x < g.order; ++x) inn_set.insert(conjugation_by(g, x).map);
  InnOut r;
  for (const auto& m : inn_set) r.inn.push_back(Automorphism{m});

  std::set<std::vector<Elem>> assigned;
  for (const Automorphism& a : auts) {  // sorted, so the first of a coset is its least
    if (assigned.count(a.map)) continue;
    r.out_reps.push_back(a);
    for (const Automorphism& i : r.inn) assigned.insert(compose(a, i).map);
  }
  return r;
}

InnOut inn_out(const Group& g, int cap) {
  return inn_out_from(g, automorphism_group(g, cap));
}

DihedralAut dihedral_compose(const DihedralAut& f, const DihedralAut& g) {
  if (f.n != g.n) throw std::invalid_argument("dihedral_compose: degree mismatch");
  return DihedralAut{f.n, mod_norm(f.t + static_cast<long long>(f.s) * g.t, f.n),
                     mod_norm(static_cast<long long>(f.s) * g.s, f.n)};
}

Automorphism to_automorphism(const DihedralAut& f) {
  int n = f.n;
  if (n < 1 || std::gcd(mod_norm(f.s, n), n) != 1)
    throw std::invalid_argument("to_automorphism: s must be a unit mod n");
  Automorphism a;
  a.map.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    a.map[i] = mod_norm(static_cast<long long>(f.s) * i, n);
    a.map[n + i] = n + mod_norm(static_cast<long long>(f.s) * i + f.t, n);
  }
  return a;
}

std::optional<DihedralAut> dihedral_aut_from_map(int n, const Automorphism& f) {
  if (f.degree() != 2 * n || n < 1) return std::nullopt;
  int s = f.map[n == 1 ? 0 : 1];  // image of a
  int t = f.map[n] - n;           // image of b is a^t b
  if (t < 0) return std::nullopt;
  if (std::gcd(mod_norm(s, n), n) != 1) return std::nullopt;
  DihedralAut d{n, mod_norm(t, n), mod_norm(s, n)};
  if (to_automorphism(d) == f) return d;
  return std::nullopt;
}

std::vector<DihedralAut> dihedral_aut_group(int n) {
  if (n < 3)
    throw std::invalid_argument("dihedral_aut_group: model requires n >= 3");
  std::vector<DihedralAut> out;
  for (int t = 0; t < n; ++t)
    for (int s = 1; s < n; ++s)
      if (std::gcd(s, n) == 1) out.push_back(DihedralAut{n, t, s});
  return out;
}

}  // namespace groupext
