#pragma once

// Finite groups as complete multiplication tables over element indices.
// Index 0 is always the identity. Construction goes through make_group(),
// which checks the group axioms: identity, Latin-square rows/columns,
// two-sided inverses, and associativity (exhaustive up to order 64, sampled
// on at least 1e5 random triples above).

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace groupext {

using Elem = int;

inline constexpr int kDefaultOrderCap = 2000;

enum class Family {
  None,
  Cyclic,
  Dihedral,
  Quaternion,
  Symmetric,
  Alternating,
  Psl2,
  Product,
  Extension,
};

struct Group {
  int order = 1;
  std::vector<Elem> table;     // row-major: table[a*order + b] = a*b
  std::vector<Elem> inverses;  // two-sided inverse per element
  std::vector<int> orders;     // element orders
  std::vector<std::string> labels;
  Family family = Family::None;
  int family_param = 0;

  Elem mul(Elem a, Elem b) const { return table[static_cast<size_t>(a) * order + b]; }
  Elem inv(Elem a) const { return inverses[a]; }
  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  Elem power(Elem a, long long k) const;
  int order_of(Elem a) const { return orders[a]; }
  int exponent() const;
  bool is_abelian() const;
  bool is_cyclic() const;  // has an element of full order
};

// Seed for the sampled associativity check on groups of order > 64.
void set_validation_seed(unsigned seed);
unsigned validation_seed();

// Validates the table and fills in inverses, orders and default labels.
Group make_group(int order, std::vector<Elem> table,
                 std::vector<std::string> labels = {},
                 Family family = Family::None, int family_param = 0);

// Multiset of element orders as (order, count), ascending.
std::vector<std::pair<int, int>> order_census(const Group& g);

// A subgroup is a sorted member list; the parent group is passed explicitly.
struct Subgroup {
  std::vector<Elem> members;  // sorted, contains 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Elem x) const;
};

Subgroup trivial_subgroup();
Subgroup full_subgroup(const Group& g);

// Smallest subgroup containing gens (identity and inverses included).
Subgroup generated_subgroup(const Group& g, std::span<const Elem> gens);
Subgroup generated_subgroup(const Group& g, std::initializer_list<Elem> gens);

bool is_subgroup(const Group& g, const Subgroup& h);
bool is_normal(const Group& g, const Subgroup& h);

Subgroup center(const Group& g);
Subgroup normalizer(const Group& g, const Subgroup& h);

// The subgroup as a group in its own right (member i of h becomes element i).
Group subgroup_as_group(const Group& g, const Subgroup& h);

// Quotient by a normal subgroup; cosets are indexed by least representative,
// ascending, so the identity coset is element 0.
Group quotient_group(const Group& g, const Subgroup& n);

// A Sylow p-subgroup, canonicalized to the lexicographically least member set
// among its conjugates. Returns the trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const Group& g, int p);

// Small generating set found greedily (largest subgroup growth per step,
// ties to the smallest element index). Empty for the trivial group.
std::vector<Elem> minimal_generating_set(const Group& g);

}  // namespace groupext
