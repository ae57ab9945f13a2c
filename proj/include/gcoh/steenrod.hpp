// Steenrod squares on the Grassmannian cohomology ring.
#pragma once

#include <vector>

#include "gcoh/grassmann.hpp"

namespace gcoh {

// Sq^i(w_j) in GF(2)[w1, w2, w3] via Wu's formula (unreduced; w_s = 0 for s > 3).
Polynomial wu_square(unsigned i, unsigned j);

// Closed formulas for the first two squares on monomials.
Polynomial sq1(const GrassmannRing& ring, const Polynomial& p);
Polynomial sq2(const GrassmannRing& ring, const Polynomial& p);

// General Sq^i via Wu's formula and the Cartan formula, then reduced.
Polynomial sq(const GrassmannRing& ring, unsigned i, const Polynomial& p);

// Pieces Sq^0 p, ..., Sq^max_i p, each reduced.
std::vector<Polynomial> total_square(const GrassmannRing& ring, const Polynomial& p, unsigned max_i);
// Sum of all Sq^i p.
Polynomial sq_total(const GrassmannRing& ring, const Polynomial& p);

// Sq^m(u^(2^k)) against (Sq^(m / 2^k) u)^(2^k), or 0 when 2^k does not divide m.
bool sq_power_rule_check(const GrassmannRing& ring, const Polynomial& u, unsigned m, unsigned k);

}  // namespace gcoh
