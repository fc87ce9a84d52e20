#pragma once

// Isomorphism testing via order-profile prefilters and backtracking over
// images of a small generating set.

#include "groupext/group.hpp"

namespace groupext {

// Returns a product-preserving bijection g -> h (as image vector) when the
// groups are isomorphic, nullopt otherwise.
std::optional<std::vector<Elem>> find_isomorphism(const Group& g, const Group& h);

bool is_isomorphic(const Group& g, const Group& h);

}  // namespace groupext
