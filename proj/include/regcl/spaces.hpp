#pragma once

#include <string>
#include <vector>

#include "regcl/closure_space.hpp"

namespace regcl::spaces {

// {a,b,c,1}: the only nontrivial closure is {a,b,c} -> everything.
ClosureSpace m3_minus();
Order m3_minus_order();
// Six points a,b,c,d,e,u; an atomistic convex geometry whose Reg fails RSD(1).
ClosureSpace rsd1_failure();
// Seven points a,p0,p1,p,q,b0,b1; Reg has a join-irreducible that is not open.
ClosureSpace nonopen_ji();
// {a0,a1,a,top}; poset type, Clop not a sublattice of Reg.
ClosureSpace poset_clop_gap();
Order poset_clop_gap_order();
// {p0,p1,q0,q1}; poset type but never semilattice type.
ClosureSpace poset_not_semilattice();
Order poset_not_semilattice_order();

// Throws UnknownName.
ClosureSpace by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace regcl::spaces
