#ifndef KOSZULKIT_MODULE_HPP
#define KOSZULKIT_MODULE_HPP

#include "koszulkit/lincat.hpp"

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace koszulkit {

// (object, degree)
using FiberKey = std::pair<int, int>;

// A finite-dimensional graded module over a LinCat whose degree-0 parts are
// group algebras. Stored data per fiber (x,i):
//   - a G_x-invariant positive definite Gram matrix,
//   - the action of each generator of G_x,
//   - the action of each arrow orbit representative of hom(x,x+1), mapping
//     into the fiber (x+1,i+1).
// Everything else (other group elements, other arrows, higher morphisms) is
// derived: g through the Cayley tree, arrows through g o rep o h, higher
// morphisms through the factor table of the category.
class GradedModule {
public:
    struct Fiber {
        int dim = 0;
        Matrix gram;
        std::vector<Matrix> group_gens;
        std::vector<Matrix> arrows;
    };

    explicit GradedModule(LinCatPtr l);

    const LinCat& cat() const { return *cat_; }
    const LinCatPtr& cat_ptr() const { return cat_; }

    // Gram defaults to the identity. Zero-dimensional fibers are not stored.
    void add_fiber(int x, int i, int dim, Matrix gram = {});
    void set_group_action(int x, int i, std::vector<Matrix> gens);
    void set_arrow_action(int x, int i, int rep, Matrix m);

    const std::map<FiberKey, Fiber>& fibers() const { return fibers_; }
    bool has_fiber(int x, int i) const { return fibers_.count({x, i}) > 0; }
    int dim(int x, int i) const;
    std::map<FiberKey, int> dims() const;
    std::size_t total_dim() const;
    bool is_zero() const { return fibers_.empty(); }
    const Fiber& fiber(int x, int i) const;

    // Each returns (action) * v for v with dim(x,i) rows. Missing target
    // fibers give zero-row results.
    Matrix apply_group(int x, int i, int g, Matrix v) const;
    Matrix apply_arrow(int x, int i, int a, const Matrix& v) const;
    Matrix apply(int x, int y, int e, int i, const Matrix& v) const;
    Matrix action(int x, int y, int e, int i) const;

private:
    LinCatPtr cat_;
    std::map<FiberKey, Fiber> fibers_;
};

using SubspaceFamily = std::map<FiberKey, Subspace>;

struct ModuleGenerator {
    int x = 0;
    int i = 0;
    Vector v;
};

GradedModule zero_module(LinCatPtr l);
// C(x,-)<shift>: fiber at y is hom(x,y) in degree y - x + shift.
GradedModule representable(LinCatPtr l, int x, int shift = 0);
// kG_x placed at (x,0), arrows acting by zero.
GradedModule regular_simple(LinCatPtr l, int x);
GradedModule direct_sum(const std::vector<GradedModule>& parts);
GradedModule shifted(const GradedModule& m, int j);

// Images of all degree-one arrows, fiberwise.
SubspaceFamily radical(const GradedModule& m);

struct Top {
    // Gram-orthogonal complement of the radical; G-stable, so it carries the
    // induced action of the top.
    SubspaceFamily complement;
    SubspaceFamily radical;
    std::map<FiberKey, int> dims() const;
    bool empty() const;
};
Top top(const GradedModule& m);

SubspaceFamily submodule_generated(const GradedModule& m, const std::vector<ModuleGenerator>& gens);
// Witness "(x,i)" of the first fiber whose subspace is not stable, if any.
std::optional<std::string> closure_defect(const GradedModule& m, const SubspaceFamily& s);
// The family as a module; basis = the canonical basis of each subspace.
GradedModule submodule(const GradedModule& m, const SubspaceFamily& s);
// Quotient realized on the Gram-orthogonal complement; throws on a
// non-closed family.
GradedModule quotient(const GradedModule& m, const SubspaceFamily& s);
SubspaceFamily full_family(const GradedModule& m);
bool family_equal(const SubspaceFamily& a, const SubspaceFamily& b);
bool family_contains(const SubspaceFamily& big, const SubspaceFamily& small);

// M∘ι on the interval [lo, hi-1]. `target` is that truncation of the
// category; built on the fly when omitted.
GradedModule restrict_genetic(const GradedModule& m, LinCatPtr target = nullptr);

constexpr int kInfinity = INT_MAX;
int ini(const GradedModule& m);

struct GenerationReport {
    // (i, generated by degrees <= i)
    std::vector<std::pair<int, bool>> degrees;
    // (x, generated by objects <= x)
    std::vector<std::pair<int, bool>> positions;
    bool generated_in_degree(int i) const;
    bool generated_in_positions_upto(int x) const;
};
GenerationReport generation_report(const GradedModule& m);

// Group relations, Gram invariance, compatibility of arrows with the group
// actions on both sides, and the degree-2 relations of the category.
// Checks use the full identity basis when fibers are small and a few fixed
// pseudo-random test vectors otherwise.
ConditionReport validate_module(const GradedModule& m);

// phi[(x,i)]: a(x,i) -> b(x,i). Witness of the first fiber where phi does
// not commute with a group generator or an arrow; iso_defect also demands
// invertibility.
std::optional<std::string> hom_defect(const GradedModule& a, const GradedModule& b,
                                      const std::map<FiberKey, Matrix>& phi);
std::optional<std::string> iso_defect(const GradedModule& a, const GradedModule& b,
                                      const std::map<FiberKey, Matrix>& phi);


}  // namespace koszulkit

#endif
