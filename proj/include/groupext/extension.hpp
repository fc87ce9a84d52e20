#pragma once

// Enumeration and classification of extensions 0 -> N -> G -> Z_p -> 0 up to
// equivalence, for arbitrary finite kernels N and prime p.
//
// Every such extension is determined by a compatible pair (alpha, z): pick a
// lift t of the quotient generator, let alpha = conjugation by t on N and
// z = t^p. Then alpha^p = conj_z, alpha(z) = z, and the total group lives on
// N x Z_p with (n1,i)(n2,j) = (n1 alpha^i(n2) z^[(i+j)/p], (i+j) mod p); the
// z-exponent is 0 or 1 since i, j < p. Changing the lift to n0 t replaces the
// pair by (conj_n0 alpha, n0 alpha(n0)...alpha^(p-1)(n0) z); enumeration
// walks one automorphism per Inn-coset and dedups z by that rule, yielding
// exactly one representative per equivalence class.

#include <optional>

#include "groupext/automorphism.hpp"
#include "groupext/cohomology.hpp"
#include "groupext/group.hpp"

namespace groupext {

struct Classification {
  enum class Kind { Cyclic, Dihedral, A4, S4, A5, Other };
  Kind kind = Kind::Other;
  int n = 0;  // Cyclic(n) / Dihedral(n) parameter

  friend bool operator==(const Classification&, const Classification&) = default;
};

std::string to_string(const Classification& c);

// Cyclic(n) iff an element of full order exists; Dihedral(n) iff |G| = 2n with
// a cyclic subgroup of order n and an inverting involution outside it (the
// Klein group is Dihedral(2); Z_2 classifies as Cyclic(2)); A4/S4/A5 by order
// filter plus isomorphism test; Other otherwise.
Classification classify(const Group& g);

struct Extension {
  Group total;
  Group kernel;
  int p = 2;
  std::vector<Elem> embedding;   // kernel element -> total element
  std::vector<int> projection;   // total element -> Z_p
  Automorphism alpha;            // conjugation by the canonical lift
  Elem z = 0;                    // lift^p, inside the kernel
};

struct ExtensionProblem {
  Group kernel;
  int p = 2;
  // Optional abstract kernel: only classes whose lift conjugation lies in this
  // automorphism's Inn-coset are enumerated.
  std::optional<Automorphism> outer_class;
  int cap = kDefaultOrderCap;
  int aut_cap = kDefaultAutCap;
};

// Builds the total group for a compatible pair; throws if the pair is not
// compatible (alpha^p != conj_z or alpha(z) != z).
Extension build_extension(const Group& kernel, int p, const Automorphism& alpha, Elem z,
                          int cap = kDefaultOrderCap);

// One representative per equivalence class, deterministic order: outer
// representatives sorted by map, then the least z per norm-twist coset.
std::vector<Extension> enumerate_extensions(const ExtensionProblem& prob);

// Wraps a factor-set group (abelian kernel) as an Extension record.
Extension extension_from_factor_set(const AbelianModule& mod, const FactorSet& fs,
                                    int cap = kDefaultOrderCap);

// True iff a complement exists: some element of order p outside the kernel.
bool is_split(const Extension& e);

// Extension equivalence: an isomorphism of totals restricting to the identity
// on the embedded kernel and inducing the identity on Z_p. Both extensions
// must have the same kernel table and the same p.
bool equivalent(const Extension& e1, const Extension& e2);

}  // namespace groupext
