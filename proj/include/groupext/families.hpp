#pragma once

// Constructors for the group families the engine knows about, plus direct and
// semidirect products. Dihedral and quaternion constructors take the group
// ORDER (dihedral_group(2n) is the symmetry group of the n-gon; the Klein
// four-group is dihedral_group(4)).
//
// Conventions fixed here and used everywhere:
//   dihedral:   a^n = b^2 = 1, b a b^-1 = a^-1; element a^i is index i,
//               a^i b is index n + i.
//   quaternion: x^(2m) = 1, y^2 = x^m, y x y^-1 = x^-1; x^i is index i,
//               x^i y is index 2m + i.
//   symmetric/alternating: permutations of {0..n-1} in lexicographic order
//               of their one-line form, identity first.
//   psl2:       classes {M, -M} of det-1 matrices over F_p, identity first.

#include <span>

#include "groupext/automorphism.hpp"
#include "groupext/group.hpp"

namespace groupext {

Group cyclic_group(int n, int cap = kDefaultOrderCap);
Group dihedral_group(int order, int cap = kDefaultOrderCap);    // order = 2n, n >= 1
Group quaternion_group(int order, int cap = kDefaultOrderCap);  // order = 4m, m >= 2
Group symmetric_group(int n, int cap = kDefaultOrderCap);       // n <= 6
Group alternating_group(int n, int cap = kDefaultOrderCap);     // n <= 6
Group psl2_group(int p, int cap = kDefaultOrderCap);            // p prime, p <= 13

// Dispatcher keyed on the family tag; params are family-specific
// (cyclic n, dihedral order, quaternion order, symmetric/alternating n, psl2 p).
Group build_family(Family family, int param, int cap = kDefaultOrderCap);

// Componentwise product; element (a, b) has index a*|H| + b.
Group direct_product(const Group& g, const Group& h, int cap = kDefaultOrderCap);

// The action of a cyclic quotient on a kernel, given by the generator's image.
struct ActionSpec {
  Automorphism generator_image;
};

// N x| Q for cyclic Q in canonical form; (n1,q1)(n2,q2) = (n1 phi^q1(n2), q1+q2).
// Element (n, q) has index n*|Q| + q. The action's order must divide |Q|.
Group semidirect_product(const Group& n, const Group& q, const ActionSpec& act,
                         int cap = kDefaultOrderCap);

// Multiplication action on a mixed-radix product of cyclic factors (most
// significant factor first, matching iterated direct_product nesting):
// digit i is multiplied by units[i]. Each unit must be coprime to its factor.
Automorphism multiplication_automorphism(const std::vector<int>& factor_orders,
                                         const std::vector<int>& units);

// Lookup helpers for the canonical permutation groups.
std::vector<std::vector<int>> all_permutations(int n);
bool permutation_is_even(std::span<const int> one_line);
std::string cycle_notation(std::span<const int> one_line);  // 1-based, "e" for identity
std::optional<Elem> symmetric_index(int n, std::span<const int> one_line);
std::optional<Elem> alternating_index(int n, std::span<const int> one_line);

}  // namespace groupext
