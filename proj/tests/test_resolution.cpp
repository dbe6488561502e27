#include "koszulkit/resolution.hpp"
#include "koszulkit/zoo.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace koszulkit;

namespace {

LinCatPtr lin(const CategorySpec& s, Interval iv) { return linearize(*make_category(s), iv); }

// One-dimensional module at (x, 0) on which G_x acts by ±1 through `sign`
// on each generator.
GradedModule character(LinCatPtr l, int x, const std::function<int(int)>& sign) {
    GradedModule m(l);
    m.add_fiber(x, 0, 1);
    std::vector<Matrix> gens;
    for (int g : l->group(x)->generators()) gens.push_back(Matrix{{sign(g)}});
    m.set_group_action(x, 0, gens);
    return m;
}

void expect_exact(const Cover& c, const GradedModule& m) {
    EXPECT_FALSE(hom_defect(c.projective, m, c.pi).has_value());
    for (const auto& [k, f] : c.projective.fibers()) {
        const Matrix& p = c.pi.at(k);
        EXPECT_EQ(rank(p), static_cast<std::size_t>(m.dim(k.first, k.second)));
        EXPECT_EQ(f.dim, m.dim(k.first, k.second) + c.kernel.dim(k.first, k.second));
    }
    for (const auto& [k, f] : m.fibers()) EXPECT_TRUE(c.projective.has_fiber(k.first, k.second));
}

}  // namespace

TEST(Cover, RepresentableCoversItself) {
    const auto l = lin({"FI", {}, {}, {}}, {0, 3});
    const GradedModule p = representable(l, 1);
    const Cover c = projective_cover(p);
    EXPECT_TRUE(c.kernel.is_zero());
    EXPECT_EQ(c.projective.dims(), p.dims());
    ASSERT_EQ(c.summands.size(), 1u);
    EXPECT_EQ(c.summands[0].x, 1);
    expect_exact(c, p);
}

TEST(Cover, ZeroModule) {
    const auto l = lin({"FI", {}, {}, {}}, {0, 2});
    const Cover c = projective_cover(zero_module(l));
    EXPECT_TRUE(c.projective.is_zero());
    EXPECT_TRUE(c.kernel.is_zero());
}

TEST(Cover, TrivialAndSignCharactersOfS2) {
    // C(2,-) ⊗ (1-dim character of S_2) has fibers hom(2,y)/2 = binom(y,2).
    const auto l = lin({"FI", {}, {}, {}}, {0, 4});
    for (int s : {1, -1}) {
        const GradedModule m = character(l, 2, [s](int) { return s; });
        ASSERT_TRUE(validate_module(m).passed());
        const Cover c = projective_cover(m);
        for (int y = 2; y <= 4; ++y) EXPECT_EQ(c.projective.dim(y, y - 2), oracle::binomial(y, 2)) << "sign " << s;
        expect_exact(c, m);
        EXPECT_TRUE(validate_module(c.projective).passed());
    }
}

TEST(Cover, RegularSimpleOfFI) {
    const auto l = lin({"FI", {}, {}, {}}, {0, 4});
    const GradedModule s = regular_simple(l, 1);
    const Cover c = projective_cover(s);
    expect_exact(c, s);
    for (int y = 2; y <= 4; ++y) EXPECT_EQ(c.kernel.dim(y, y - 1), l->dim(1, y));
}

TEST(Cover, InducedMapOfIdentityIsPi) {
    const auto l = lin({"FI_gamma", FiniteGroup::cyclic(2), {}, {}}, {0, 3});
    const GradedModule p = representable(l, 1);
    const Cover c = projective_cover(p);
    std::vector<Matrix> phi;
    for (const auto& sm : c.summands) phi.push_back(sm.top_basis);
    const auto t = induced_map(c, p, phi);
    for (const auto& [k, m] : t) EXPECT_EQ(m, c.pi.at(k));
}

TEST(Resolution, BettiNumbersOfFI) {
    // top of Ω^n(kS_x) sits at (x+n, n) with dimension (x+n)!/n!
    const auto l = lin({"FI", {}, {}, {}}, {0, 4});
    for (int x = 0; x <= 4; ++x) {
        const BettiTable b = betti_table(minimal_resolution(regular_simple(l, x), 4 - x));
        ASSERT_EQ(b.size(), static_cast<std::size_t>(4 - x + 1));
        for (int n = 0; n <= 4 - x; ++n)
            EXPECT_EQ(b[n], (std::map<FiberKey, int>{{{x + n, n}, static_cast<int>(oracle::factorial(x + n) / oracle::factorial(n))}}))
                << "x=" << x << " n=" << n;
    }
}

TEST(Resolution, BettiOfCharactersAddUpToRegular) {
    const auto l = lin({"FI", {}, {}, {}}, {0, 4});
    const auto triv = betti_table(minimal_resolution(character(l, 2, [](int) { return 1; }), 2));
    const auto sgn = betti_table(minimal_resolution(character(l, 2, [](int) { return -1; }), 2));
    const auto reg = betti_table(minimal_resolution(regular_simple(l, 2), 2));
    ASSERT_EQ(reg.size(), 3u);
    for (std::size_t n = 0; n < reg.size(); ++n)
        for (const auto& [k, d] : reg[n]) {
            const int a = n < triv.size() && triv[n].count(k) ? triv[n].at(k) : 0;
            const int b = n < sgn.size() && sgn[n].count(k) ? sgn[n].at(k) : 0;
            EXPECT_EQ(a + b, d);
        }
}

TEST(Resolution, StepsAreExact) {
    const auto l = lin({"OI_d", {}, 2, {}}, {0, 3});
    GradedModule m = regular_simple(l, 0);
    const Resolution r = minimal_resolution(m, 3);
    for (const auto& step : r.steps) {
        expect_exact(step, m);
        m = step.kernel;
    }
}

TEST(Resolution, BettiMatchesHomCountsForTwistableFamilies) {
    // Koszul with dual of the same size: Betti_n(kG_x) = |C(x, x+n)|.
    const std::vector<std::pair<CategorySpec, Interval>> cases = {
        {{"FI_gamma", FiniteGroup::cyclic(2), {}, {}}, {0, 3}},
        {{"OI_gamma", FiniteGroup::cyclic(3), {}, {}}, {0, 4}},
        {{"FI_d", {}, 2, {}}, {0, 3}},
    };
    for (const auto& [spec, iv] : cases) {
        const auto c = make_category(spec);
        const auto l = linearize(*c, iv);
        for (int x = iv.lo; x <= iv.hi; ++x) {
            const BettiTable b = betti_table(minimal_resolution(regular_simple(l, x), iv.hi - x));
            for (int n = 0; n <= iv.hi - x; ++n)
                EXPECT_EQ(b[n], (std::map<FiberKey, int>{{{x + n, n}, static_cast<int>(c->hom(x, x + n).size())}}))
                    << spec.family << " x=" << x << " n=" << n;
        }
    }
}

TEST(Certificate, PassesOnSmallWindows) {
    const std::vector<std::pair<CategorySpec, Interval>> cases = {
        {{"FI", {}, {}, {}}, {0, 3}},
        {{"FS_gamma_op", FiniteGroup::trivial(), {}, {}}, {1, 3}},
        {{"OS_gamma_op", FiniteGroup::trivial(), {}, {}}, {1, 4}},
        {{"VI", {}, {}, 2}, {0, 2}},
    };
    for (const auto& [spec, iv] : cases) {
        const auto l = lin(spec, iv);
        for (int x = iv.lo; x <= iv.hi; ++x) {
            const auto steps = koszul_certificate(l, x, iv.hi - x);
            ASSERT_EQ(steps.size(), static_cast<std::size_t>(iv.hi - x + 1));
            for (const auto& s : steps) {
                EXPECT_TRUE(s.passed()) << spec.family << " x=" << x << " n=" << s.n << " " << s.witness;
                for (const auto& [k, d] : s.top) EXPECT_EQ(k, (FiberKey{x + s.n, s.n}));
            }
        }
    }
}

TEST(Certificate, RejectsDepthPastTheWindow) {
    const auto l = lin({"FI", {}, {}, {}}, {0, 3});
    EXPECT_THROW(koszul_certificate(l, 2, 2), std::invalid_argument);
}

TEST(Yoneda, DimensionsForFI) {
    const auto l = lin({"FI", {}, {}, {}}, {0, 4});
    const auto dims = yoneda_dims(l, 4);
    for (int x = 0; x <= 4; ++x)
        for (int n = 0; x + n <= 4; ++n)
            EXPECT_EQ(dims.at({x, x + n, n}), oracle::factorial(x + n) / oracle::factorial(n));
}
