#ifndef KOSZULKIT_PLANTED_HPP
#define KOSZULKIT_PLANTED_HPP

#include "koszulkit/genetic.hpp"
#include "koszulkit/lincat.hpp"

namespace koszulkit {

// Deliberately broken inputs. Each one is meant to be caught by a specific
// check; the tests and the acceptance run use them as regression guards.

// hom(x,y) emptied; composites landing there become zero.
LinCatPtr drop_hom(const LinCat& l, int x, int y);

// The first structure constant of block (x,x+1,x+2) doubled.
LinCatPtr perturb_constant(const LinCat& l, int x);

// Basis element i of hom(x,y) given another degree.
LinCatPtr plant_degree(const LinCat& l, int x, int y, int i, int degree);

// Quotient by the two-sided ideal generated by basis element e of hom(x,y).
// Monomial categories only; for y - x = 3 this adds a cubic relation.
LinCatPtr kill_ideal(const LinCat& l, int x, int y, int e);

// Same hom-sets as base, but every composite 1 -> 2 -> 3 is sent to the
// first morphism of hom(1,3).
CombCategoryPtr corrupt_composition(CombCategoryPtr base);

// The first γ representative repeated.
DecompositionWitness duplicate_gamma(DecompositionWitness w);

}  // namespace koszulkit

#endif
