#pragma once

#include <vector>

#include "homaff/permutation.hpp"
#include "homaff/quandle.hpp"

namespace homaff {

/// LMlt(Q) = <L_a : a in Q>, generators in element order.
PermGroup multiplication_group(const Quandle& q);

/// Dis(Q) = <L_a L_e^-1 : a in Q> with e = 0.
PermGroup displacement_group(const Quandle& q);

/// The set {L_x L_e^-1 : x in Q} without duplicates, in order of first
/// occurrence over x = 0, 1, ... (so the identity comes first).
std::vector<Permutation> displacement_set(const Quandle& q, Element e = 0);

/// Orbit decomposition of Q under Dis(Q). Throws std::logic_error if it
/// disagrees with the LMlt(Q) orbits.
Partition orbits(const Quandle& q);

/// Cayley kernel: a ~ b iff L_a = L_b.
Partition cayley_kernel(const Quandle& q);

/// Dis(Q) equals the set {L_x L_e^-1 : x in Q}.
bool is_tiny(const Quandle& q, Element e = 0);

/// (x*y)*(u*v) = (x*u)*(y*v) for all quadruples.
bool is_medial(const Quandle& q);

}  // namespace homaff
