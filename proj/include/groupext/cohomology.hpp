#pragma once

// Second cohomology of cyclic groups with finite abelian coefficients.
//
// The production route is the classical closed form for a cyclic group Z_m
// acting on an abelian group A through phi: H^2(Z_m, A) = A^phi / N(A) where
// A^phi is the fixed subgroup and N(a) = a phi(a) ... phi^(m-1)(a) is the
// norm. The factor-set enumeration below is an independent oracle used to
// cross-check it and to hand explicit extension representatives to other
// modules.

#include "groupext/automorphism.hpp"
#include "groupext/group.hpp"

namespace groupext {

// An abelian group together with the generator action of a cyclic quotient.
struct AbelianModule {
  Group a;
  Automorphism action;
};

// Validates that a is abelian and action is one of its automorphisms.
AbelianModule make_module(Group a, Automorphism action);
AbelianModule trivial_module(Group a);

// Invariant factors d1 | d2 | ... (each >= 2); empty means the trivial group.
using AbelianInvariants = std::vector<int>;

AbelianInvariants abelian_invariants(const Group& abelian);
int invariants_order(const AbelianInvariants& inv);

// Closed form H^2(Z_m, A) as invariant factors. Requires action^m = id.
AbelianInvariants h2_cyclic(int m, const AbelianModule& mod);

// A normalized factor set on Z_m x Z_m with values in A: f(0,.) = f(.,0) = 0
// and the 2-cocycle identity phi^q1(f(q2,q3)) - f(q1+q2,q3) + f(q1,q2+q3)
// - f(q1,q2) = 0 for all triples.
struct FactorSet {
  int m = 1;
  std::vector<Elem> f;  // row-major m x m

  Elem at(int i, int j) const { return f[static_cast<size_t>(i) * m + j]; }
};

bool is_cocycle(const AbelianModule& mod, const FactorSet& fs);

struct CocycleBudget {
  int max_prime = 3;
  int max_coeff_order = 24;
};

// One lexicographically-least representative per cohomology class, found by
// exhaustive enumeration of normalized cocycles modulo coboundaries of
// 1-cochains. Enumeration budget: p and |A| must stay within the budget.
std::vector<FactorSet> cocycle_classes(int p, const AbelianModule& mod,
                                       const CocycleBudget& budget = {});

// The extension group on A x Z_m built from a factor set:
// (a1,q1)(a2,q2) = (a1 + phi^q1(a2) + f(q1,q2), q1+q2). Element (a,q) has
// index a*m + q.
Group group_from_factor_set(const AbelianModule& mod, const FactorSet& fs,
                            int cap = kDefaultOrderCap);

}  // namespace groupext
