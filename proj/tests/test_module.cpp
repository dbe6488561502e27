#include "koszulkit/module.hpp"
#include "koszulkit/zoo.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace koszulkit;

namespace {

struct Fixture {
    CombCategoryPtr c = make_category({"FI_gamma", FiniteGroup::cyclic(2), {}, {}});
    LinCatPtr l = linearize(*c, {0, 3});
};

Vector unit(int n, int i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

}  // namespace

TEST(Module, RepresentableFibersAreHomSets) {
    Fixture f;
    const GradedModule p = representable(f.l, 1, 2);
    for (int y = 1; y <= 3; ++y) EXPECT_EQ(p.dim(y, y - 1 + 2), f.l->dim(1, y));
    EXPECT_EQ(p.dim(0, 1), 0);
    EXPECT_EQ(ini(p), 1);
}

TEST(Module, RepresentableActsByComposition) {
    Fixture f;
    const GradedModule p = representable(f.l, 1);
    for (int y = 1; y <= 3; ++y)
        for (int z = y; z <= 3; ++z)
            for (int e = 0; e < f.l->dim(y, z); ++e)
                for (int a = 0; a < f.l->dim(1, y); ++a) {
                    const Matrix img = p.apply(y, z, e, y - 1, Matrix::from_columns({unit(f.l->dim(1, y), a)}, f.l->dim(1, y)));
                    const int k = f.c->index_of(f.c->compose(f.c->hom(y, z)[e], f.c->hom(1, y)[a]));
                    EXPECT_EQ(img.column(0), unit(f.l->dim(1, z), k));
                }
}

TEST(Module, RepresentablesAndSimplesValidate) {
    Fixture f;
    for (int x = 0; x <= 3; ++x) {
        EXPECT_TRUE(validate_module(representable(f.l, x)).passed());
        EXPECT_TRUE(validate_module(regular_simple(f.l, x)).passed());
    }
}

TEST(Module, TopOfRepresentableIsTheGroupAlgebra) {
    Fixture f;
    for (int x = 0; x <= 3; ++x) {
        const Top t = top(representable(f.l, x));
        EXPECT_EQ(t.dims(), (std::map<FiberKey, int>{{{x, 0}, f.l->dim(x, x)}}));
    }
}

TEST(Module, RegularSimpleHasNoRadical) {
    Fixture f;
    const GradedModule s = regular_simple(f.l, 2);
    EXPECT_EQ(s.total_dim(), 8u);
    EXPECT_EQ(top(s).dims(), (std::map<FiberKey, int>{{{2, 0}, 8}}));
}

TEST(Module, DirectSumAndShiftBookkeeping) {
    Fixture f;
    const GradedModule a = representable(f.l, 1);
    const GradedModule b = shifted(representable(f.l, 2), 1);
    const GradedModule s = direct_sum({a, b});
    EXPECT_EQ(s.total_dim(), a.total_dim() + b.total_dim());
    EXPECT_EQ(s.dim(2, 1), a.dim(2, 1) + b.dim(2, 1));
    EXPECT_EQ(b.dim(2, 1), f.l->dim(2, 2));
    EXPECT_TRUE(validate_module(s).passed());
}

TEST(Module, IdentityGeneratesRepresentable) {
    Fixture f;
    const GradedModule p = representable(f.l, 1);
    const auto s = submodule_generated(p, {{1, 0, unit(p.dim(1, 0), 0)}});
    EXPECT_TRUE(family_equal(s, full_family(p)));
}

TEST(Module, SubmoduleAndQuotientDimensionsAdd) {
    Fixture f;
    const GradedModule p = representable(f.l, 0);
    const auto s = submodule_generated(p, {{1, 1, unit(p.dim(1, 1), 0)}});
    EXPECT_FALSE(closure_defect(p, s).has_value());
    const GradedModule sub = submodule(p, s);
    const GradedModule q = quotient(p, s);
    EXPECT_EQ(sub.total_dim() + q.total_dim(), p.total_dim());
    EXPECT_EQ(q.dims(), (std::map<FiberKey, int>{{{0, 0}, 1}}));
    EXPECT_TRUE(validate_module(sub).passed());
    EXPECT_TRUE(validate_module(q).passed());
}

TEST(Module, RadicalIsWhatArrowsReach) {
    Fixture f;
    const GradedModule p = representable(f.l, 1);
    const auto rad = radical(p);
    EXPECT_EQ(rad.count({1, 0}) ? rad.at({1, 0}).dim() : 0u, 0u);
    for (int y = 2; y <= 3; ++y) EXPECT_EQ(rad.at({y, y - 1}).dim(), static_cast<std::size_t>(p.dim(y, y - 1)));
}

TEST(Module, NonClosedFamilyIsRejected) {
    Fixture f;
    const GradedModule p = representable(f.l, 0);
    SubspaceFamily s;
    s[{0, 0}] = full_subspace(1);
    EXPECT_TRUE(closure_defect(p, s).has_value());
    EXPECT_THROW(quotient(p, s), std::invalid_argument);
}

TEST(Module, RestrictionShiftsObjects) {
    Fixture f;
    const GradedModule p = representable(f.l, 1);
    const GradedModule r = restrict_genetic(p);
    for (const auto& [k, fib] : p.fibers())
        if (k.first >= 1) EXPECT_EQ(r.dim(k.first - 1, k.second), fib.dim);
    EXPECT_TRUE(validate_module(r).passed());
}

TEST(Module, GenerationOfRepresentable) {
    Fixture f;
    const GenerationReport g = generation_report(representable(f.l, 1));
    EXPECT_TRUE(g.generated_in_degree(0));
    EXPECT_TRUE(g.generated_in_positions_upto(1));
}

TEST(Module, IdentityIsAHomomorphismAndScalingOneFiberIsNot) {
    Fixture f;
    const GradedModule p = representable(f.l, 1);
    std::map<FiberKey, Matrix> id, bad;
    for (const auto& [k, fib] : p.fibers()) {
        id[k] = Matrix::identity(fib.dim);
        bad[k] = k == FiberKey{2, 1} ? Matrix::identity(fib.dim).scaled(2) : Matrix::identity(fib.dim);
    }
    EXPECT_FALSE(hom_defect(p, p, id).has_value());
    EXPECT_FALSE(iso_defect(p, p, id).has_value());
    const auto w = hom_defect(p, p, bad);
    ASSERT_TRUE(w.has_value());
}

TEST(Module, RandomModulesValidate) {
    Fixture f;
    std::mt19937 rng(21);
    for (int k = 0; k < 15; ++k) {
        const GradedModule m = oracle::random_module(rng, f.l);
        const auto r = validate_module(m);
        for (const auto& ch : r.checks) EXPECT_TRUE(ch.passed) << ch.name << ": " << ch.witness;
    }
}
