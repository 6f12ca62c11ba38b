#pragma once

#include <vector>

#include "endograph/group.hpp"

namespace endograph {

// Named constructors for the non-abelian families used by the catalog and
// the CLI selectors.
Group make_dihedral(int n, int order_cap = kDefaultOrderCap);  // order 2n, n >= 3
Group make_symmetric(int n, int order_cap = kDefaultOrderCap);
Group make_alternating4();
Group make_dicyclic3();  // order 12

// Every isomorphism class of order <= max_order (max_order <= 15), ordered by
// (order, class). 28 classes at max_order = 15; the counts per order are
// 1,1,1,2,1,2,1,5,2,2,1,5,1,2,1.
std::vector<Group> catalog_groups_up_to(int max_order);

// All abelian shapes with 1 <= order <= max_order, sorted by (order, shape).
std::vector<AbelianShape> abelian_shapes_up_to(long max_order);

}  // namespace endograph
