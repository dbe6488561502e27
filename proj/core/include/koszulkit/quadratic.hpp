#ifndef KOSZULKIT_QUADRATIC_HPP
#define KOSZULKIT_QUADRATIC_HPP

#include "koszulkit/lincat.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace koszulkit {

// Ĉ = tensor category of C_1 over C_0. Its basis in degree d >= 2 is the set
// of classes of length-d paths of degree-one basis elements modulo moving
// group elements across the tensor products; a path whose class is forced to be
// minus itself vanishes and is dropped. Degrees 0 and 1 coincide with C.
struct FreeCover {
    LinCatPtr base;
    LinCatPtr free;
    // (x,y) -> matrix of Ĉ(x,y) -> C(x,y)
    std::map<std::pair<int, int>, Matrix> pi;

    // (x,y) -> per class (top arrow, class of the rest), for y >= x + 2
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> split;

    // Degree-one basis indices of a class, bottom arrow first.
    std::vector<int> path(int x, int y, int k) const;
};

// Needs C_0 to be group algebras acting monomially on C_1.
FreeCover free_cover(LinCatPtr l);

// ker(pi) on Ĉ(x,x+2).
Subspace relations_deg2(const FreeCover& f, int x);

struct QuadraticCheck {
    bool quadratic = true;
    int x = 0;
    int d = 0;
    std::string witness;
};

// pi surjective in every degree, and K_d = Ĉ_1 K_{d-1} + K_{d-1} Ĉ_1 for
// 3 <= d <= width, fiber by fiber.
QuadraticCheck is_quadratic(const LinCat& l);
QuadraticCheck is_quadratic(const FreeCover& f);

struct QuadraticDual {
    // E = Ĉ / (annihilator of the degree-2 relations), same object order as C
    LinCatPtr e;
    // C^! = E^op
    LinCatPtr dual;
    bool quadratic = true;
    // (x,y) -> the ideal inside Ĉ(x,y)
    std::map<std::pair<int, int>, Subspace> ideal;
};

// The pairing on Ĉ(x,x+2) is the dot product in the class basis, which pairs
// the dual class α* ⊗ β* with β ⊗ α. Basis of E(x,y): pivot-free classes of
// the reduced echelon form of the ideal.
QuadraticDual quadratic_dual(LinCatPtr l);
QuadraticDual quadratic_dual(const FreeCover& f);

// Two-sided ideal of Ĉ generated by the given degree-2 subspaces (keyed by
// source object), degree by degree.
std::map<std::pair<int, int>, Subspace> generated_ideal(const FreeCover& f, const std::map<int, Subspace>& deg2);

}  // namespace koszulkit

#endif
