#include "groupext/isomorphism.hpp"

#include <algorithm>

namespace groupext {

namespace {

std::vector<int> sorted_orders(const Group& g) {
  std::vector<int> v = g.orders;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const Group& g, const Group& h) {
  if (g.order != h.order) return std::nullopt;
  if (sorted_orders(g) != sorted_orders(h)) return std::nullopt;
  if (center(g).order() != center(h).order()) return std::nullopt;

  std::vector<Elem> gens = minimal_generating_set(g);
  if (gens.empty()) return std::vector<Elem>{0};

  // Spanning expressions for g: every element as parent * gen.
  std::vector<Elem> bfs{0};
  std::vector<Elem> parent(g.order, -1);
  std::vector<int> gen_index(g.order, -1);
  {
    std::vector<char> seen(g.order, 0);
    seen[0] = 1;
    for (size_t head = 0; head < bfs.size(); ++head) {
      Elem u = bfs[head];
      for (size_t k = 0; k < gens.size(); ++k) {
        Elem v = g.mul(u, gens[k]);
        if (!seen[v]) {
          seen[v] = 1;
          parent[v] = u;
          gen_index[v] = static_cast<int>(k);
          bfs.push_back(v);
        }
      }
    }
  }

  std::vector<std::vector<Elem>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k)
    for (Elem x = 0; x < h.order; ++x)
      if (h.order_of(x) == g.order_of(gens[k])) candidates[k].push_back(x);

  std::vector<Elem> images(gens.size());
  std::vector<Elem> map(g.order);
  std::vector<char> seen(h.order);
  std::optional<std::vector<Elem>> found;

  auto try_leaf = [&]() -> bool {
    std::fill(map.begin(), map.end(), -1);
    map[0] = 0;
    for (Elem e : bfs) {
      if (e == 0) continue;
      map[e] = h.mul(map[parent[e]], images[gen_index[e]]);
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem x : map) {
      if (seen[x]) return false;
      seen[x] = 1;
    }
    for (Elem a = 0; a < g.order; ++a)
      for (Elem b = 0; b < g.order; ++b)
        if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
    return true;
  };

  auto rec = [&](auto&& self, size_t k) -> bool {
    if (k == gens.size()) {
      if (try_leaf()) {
        found = map;
        return true;
      }
      return false;
    }
    for (Elem c : candidates[k]) {
      images[k] = c;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

bool is_isomorphic(const Group& g, const Group& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace groupext
