#ifndef KOSZULKIT_RESOLUTION_HPP
#define KOSZULKIT_RESOLUTION_HPP

#include "koszulkit/module.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace koszulkit {

// One summand C(x,-)<shift> ⊗_{kG_x} U of a projective cover, U the top of
// the covered module at (x, shift).
struct CoverSummand {
    int x = 0;
    int shift = 0;
    int top_dim = 0;
    // U inside M(x, shift)
    Matrix top_basis;
    // The fiber at y is the sum over orbits of hom(x,y) under G_x of
    // rep ⊗ (subspace of U given in U-coordinates).
    struct Piece {
        int y = 0;
        int rep = 0;
        Matrix basis;
        int offset = 0;
    };
    std::vector<Piece> pieces;
};

struct Cover {
    std::vector<CoverSummand> summands;
    GradedModule projective;
    // pi at each fiber of the projective: P(f) -> M(f)
    std::map<FiberKey, Matrix> pi;
    // ker pi inside each fiber of the projective
    SubspaceFamily kernel_basis;
    GradedModule kernel;
};

// Minimal projective cover. The tensor product over kG_x is realized on
// orbit representatives of the right G_x-action on hom(x,y): the fiber for
// an orbit with stabilizer S and sign character χ is the χ-eigenspace of S
// in U, which is canonically isomorphic to the coinvariant quotient because
// the Gram form makes the action unitary. Needs monomial composition with
// group elements (every LinCat built from a combinatorial category).
Cover projective_cover(const GradedModule& m);

// The module map P -> target sending rep ⊗ u to rep · phi[s](u) on summand s;
// each phi[s] is a G_x-equivariant map from U-coordinates to target(x, shift).
std::map<FiberKey, Matrix> induced_map(const Cover& c, const GradedModule& target, const std::vector<Matrix>& phi);

struct Resolution {
    // steps[n] covers Ω^n of the base; the last kernel is Ω^{steps.size()}
    std::vector<Cover> steps;
};

// Stops early once a kernel vanishes.
Resolution minimal_resolution(const GradedModule& m, int depth);

// betti[n][(y,j)] = dim top(Ω^n)(y)_j
using BettiTable = std::vector<std::map<FiberKey, int>>;
BettiTable betti_table(const Resolution& r);

struct StepReport {
    int n = 0;
    bool generated_in_degree = true;
    bool generated_in_position = true;
    std::map<FiberKey, int> top;
    std::string witness;
    bool passed() const { return generated_in_degree && generated_in_position; }
};

// Ω^n of the regular simple at x for n = 0..depth. Requires x + depth <= hi:
// past that point the truncation cuts off generators of the syzygies.
std::vector<StepReport> koszul_certificate(LinCatPtr l, int x, int depth);

// (x, y, n) -> dim Ext^n(kG_x, kG_y<n>), read off as the top of Ω^n(kG_x) at
// (y, n), for every x and n <= min(depth, hi - x). Throws std::domain_error
// when a certificate in the window fails.
std::map<std::tuple<int, int, int>, int> yoneda_dims(LinCatPtr l, int depth);

}  // namespace koszulkit

#endif
