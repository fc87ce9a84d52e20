#pragma once

// Automorphism groups: brute-force search for any small group, the affine
// (t, s) model for dihedral groups, and the Inn/Out decomposition.

#include <optional>

#include "groupext/group.hpp"

namespace groupext {

// An automorphism is stored as the image permutation: map[x] is the image
// of element x. Composition is (f*g)(x) = f(g(x)).
struct Automorphism {
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  int degree() const { return static_cast<int>(map.size()); }
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism& a, const Automorphism& b) {
    return a.map <=> b.map;
  }
};

Automorphism identity_automorphism(int order);
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism inverse(const Automorphism& f);
Automorphism automorphism_power(const Automorphism& f, int k);
int automorphism_order(const Automorphism& f);

bool is_automorphism(const Group& g, const Automorphism& f);

// x -> g x g^-1
Automorphism conjugation_by(const Group& g, Elem x);

inline constexpr int kDefaultAutCap = 120;

// The complete automorphism group, sorted lexicographically by image map.
// Backtracks over images of a small generating set; refuses |G| > cap.
std::vector<Automorphism> automorphism_group(const Group& g, int cap = kDefaultAutCap);

struct InnOut {
  std::vector<Automorphism> inn;       // inner automorphisms, sorted
  std::vector<Automorphism> out_reps;  // lexicographically least map per Inn-coset
};

InnOut inn_out(const Group& g, int cap = kDefaultAutCap);
InnOut inn_out_from(const Group& g, const std::vector<Automorphism>& auts);

// Affine model of Aut D_2n for n >= 3: the pair (t, s), gcd(s, n) = 1, acts on
// the canonical dihedral layout by a^i -> a^(s i), a^i b -> a^(s i + t) b.
// Composition is (t1, s1)(t2, s2) = (t1 + s1 t2, s1 s2).
struct DihedralAut {
  int n = 0;
  int t = 0;
  int s = 1;

  friend bool operator==(const DihedralAut&, const DihedralAut&) = default;
};

DihedralAut dihedral_compose(const DihedralAut& f, const DihedralAut& g);
Automorphism to_automorphism(const DihedralAut& f);
// Matches an automorphism of the canonical D_2n table against the model.
std::optional<DihedralAut> dihedral_aut_from_map(int n, const Automorphism& f);
// All n*phi(n) model elements for n >= 3, ordered by (t, s).
std::vector<DihedralAut> dihedral_aut_group(int n);

}  // namespace groupext
