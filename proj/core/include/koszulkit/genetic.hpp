#ifndef KOSZULKIT_GENETIC_HPP
#define KOSZULKIT_GENETIC_HPP

#include "koszulkit/module.hpp"

#include <map>
#include <string>
#include <vector>

namespace koszulkit {

// C(x,-) restricted along ι = I ⊙ - splits as C(x,-)^m ⊕ C(x-1,-)^n.
struct DecompositionWitness {
    int x = 0;
    int m = 0;
    int n = 0;
    // orbit representatives of C(x,1+x)' under g.β = (I ⊙ g) ∘ β, g in G_x
    std::vector<Morphism> beta_reps;
    // orbit representatives of C(x,x) under g.γ = (I ⊙ g) ∘ γ, g in G_{x-1}
    std::vector<Morphism> gamma_reps;
    // y -> for each source basis element (β summands first, each over
    // hom(x,y), then γ summands over hom(x-1,y)) its image index in
    // hom(x,1+y). Θ maps basis elements to basis elements, so this is its
    // matrix.
    std::map<int, std::vector<int>> theta;
};

// C(x,1+x)' = morphisms whose minimal factorization has z = x. n = 0 when
// x - 1 is below the first object.
DecompositionWitness decomposition_numbers(const CombCategory& c, int x);

struct ThetaReport {
    bool bijective = true;
    std::vector<ConditionCheck> fibers;
    std::string witness;
};

// Θ on every fiber y in iv with y >= x - 1 and 1 + y within the family's
// range; fills w.theta.
ThetaReport verify_theta(const CombCategory& c, DecompositionWitness& w, Interval iv);
ThetaReport verify_theta(const CombCategory& c, int x, Interval iv);

// Dense 0/1 matrix of Θ at y, rows = hom(x,1+y).
Matrix theta_matrix(const CombCategory& c, const DecompositionWitness& w, int y);

// (F1) ι is a functor, (F2) faithful, (F3) Θ bijective at every x, on iv.
ConditionReport check_genetic_axioms(const CombCategory& c, Interval iv);

struct CrucialLemmaReport {
    bool holds = true;
    std::string witness;
    // A = (ΩM)↾, B = Ω(M↾), Q = kernel of the comparison P↾ -> cover(M↾)
    std::map<FiberKey, int> restricted_syzygy;
    std::map<FiberKey, int> syzygy_of_restriction;
    std::map<FiberKey, int> complement;
    std::map<FiberKey, int> complement_top;
};

// (ΩM)↾ ≅ Ω(M↾) ⊕ Q with Q projective generated in position x. The
// comparison t: P↾ -> P' lifts π↾ through the cover P' of M↾ on the top of
// P↾ (Gram-orthogonal preimages, hence equivariant) and is checked to be a
// surjective module map with π' t = π↾; Q = ker t must have an isomorphic
// projective cover and its top at x. Requires m generated in position
// x >= lo + 1 and a category with ι.
CrucialLemmaReport verify_crucial_lemma(const LinCat& l, const GradedModule& m, int x);

}  // namespace koszulkit

#endif
