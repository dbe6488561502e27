#ifndef KOSZULKIT_TWIST_HPP
#define KOSZULKIT_TWIST_HPP

#include "koszulkit/module.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace koszulkit {

// α together with the increasing wedge of Δ = [y] \ Im ρ(α).
struct TwistBasisElt {
    Morphism alpha;
    std::vector<int> wedge;
};

// Throws std::invalid_argument for families without ρ.
std::vector<TwistBasisElt> twist_basis(const CombCategory& c, int x, int y);

// Sign of the permutation sorting (ρ(β)(Δ_α), Δ_β), both increasing.
int twist_sign(const CombCategory& c, const Morphism& beta, const Morphism& alpha);

// Sign of the permutation (ρ(α)(1), ..., ρ(α)(x), Δ_α) of [y]; the factor τ
// puts on the action of α.
int wedge_sign(const CombCategory& c, const Morphism& alpha);

LinCatPtr twist_category(const CombCategory& c, Interval iv);

// τ: modules over linearize(c) -> modules over twist_category(c), and μ
// back. Each action of α is multiplied by wedge_sign(α); the determinant
// lines are trivialized by their increasing wedges.
GradedModule tau_module(const CombCategory& c, const GradedModule& m, LinCatPtr twisted);
GradedModule mu_module(const CombCategory& c, const GradedModule& n, LinCatPtr plain);

// v -> (v ⊗ t) ⊗ t in the wedge bases: the identity on every fiber.
std::map<FiberKey, Matrix> twist_unit(const GradedModule& m);

struct TwistDualReport {
    bool iso = true;
    std::vector<ConditionCheck> fibers;
    std::string witness;
};

// Compares, for each x, the degree-2 relations of C^! (the annihilator of the
// relations of C, carried to the free cover by α* -> α) with the degree-2
// relations of the twist. `signs = false` replaces the twist by the plain
// linearization, which must fail from width 2 on.
TwistDualReport check_twist_dual_iso(const CombCategory& c, Interval iv, bool signs = true);

}  // namespace koszulkit

#endif
