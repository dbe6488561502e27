#include "koszulkit/genetic.hpp"
#include "koszulkit/resolution.hpp"
#include "koszulkit/zoo.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace koszulkit;

namespace {

struct Case {
    CategorySpec spec;
    Interval iv;
};

std::vector<Case> all_families() {
    return {
        {{"FI", {}, {}, {}}, {0, 4}},
        {{"FI_gamma", FiniteGroup::cyclic(2), {}, {}}, {0, 4}},
        {{"OI_gamma", FiniteGroup::trivial(), {}, {}}, {0, 4}},
        {{"FI_d", {}, 2, {}}, {0, 4}},
        {{"OI_d", {}, 2, {}}, {0, 4}},
        {{"FS_gamma_op", FiniteGroup::trivial(), {}, {}}, {1, 4}},
        {{"OS_gamma_op", FiniteGroup::trivial(), {}, {}}, {1, 4}},
        {{"VI", {}, {}, 2}, {0, 3}},
    };
}

long long count(const CombCategory& c, int x, int y) {
    if (x < c.min_object() || y < x) return 0;
    return static_cast<long long>(c.hom(x, y).size());
}

}  // namespace

TEST(Decomposition, FIHasMOneAndNx) {
    const auto c = make_category({"FI", {}, {}, {}});
    for (int x = 1; x <= 4; ++x) {
        const auto w = decomposition_numbers(*c, x);
        EXPECT_EQ(w.m, 1);
        // S_{x-1} acts freely on the x! bijections of [x]
        EXPECT_EQ(w.n, oracle::factorial(x) / oracle::factorial(x - 1));
        EXPECT_EQ(static_cast<int>(w.beta_reps.size()), w.m);
        EXPECT_EQ(static_cast<int>(w.gamma_reps.size()), w.n);
    }
}

TEST(Decomposition, FreeActionCountsForFIGamma) {
    const auto c = make_category({"FI_gamma", FiniteGroup::cyclic(2), {}, {}});
    for (int x = 1; x <= 3; ++x) {
        const auto w = decomposition_numbers(*c, x);
        EXPECT_EQ(w.m, 1);
        EXPECT_EQ(w.n, static_cast<int>(c->hom(x, x).size() / c->hom(x - 1, x - 1).size()));
    }
}

TEST(Decomposition, ColouredFamilies) {
    const auto fid = make_category({"FI_d", {}, 3, {}});
    const auto oid = make_category({"OI_d", {}, 2, {}});
    for (int x = 1; x <= 3; ++x) {
        const auto a = decomposition_numbers(*fid, x);
        EXPECT_EQ(a.m, 3);
        EXPECT_EQ(a.n, x);
        const auto b = decomposition_numbers(*oid, x);
        EXPECT_EQ(b.m, 2);
        EXPECT_EQ(b.n, 1);
    }
}

TEST(Decomposition, BottomObjectHasNoGammaPart) {
    const auto c = make_category({"FI", {}, {}, {}});
    const auto w = decomposition_numbers(*c, 0);
    EXPECT_EQ(w.n, 0);
    EXPECT_THROW(decomposition_numbers(*c, -1), std::out_of_range);
}

TEST(Decomposition, DimensionIdentityHolds) {
    for (const auto& [spec, iv] : all_families()) {
        const auto c = make_category(spec);
        for (int x = iv.lo; x + 1 <= iv.hi; ++x) {
            const auto w = decomposition_numbers(*c, x);
            for (int y = std::max(iv.lo, x - 1); y + 1 <= iv.hi; ++y)
                EXPECT_EQ(count(*c, x, y + 1), w.m * count(*c, x, y) + w.n * count(*c, x - 1, y))
                    << spec.family << " x=" << x << " y=" << y;
        }
    }
}

TEST(Theta, BijectiveOnEveryFiber) {
    for (const auto& [spec, iv] : all_families()) {
        const auto c = make_category(spec);
        for (int x = iv.lo; x + 1 <= iv.hi; ++x) {
            auto w = decomposition_numbers(*c, x);
            const ThetaReport t = verify_theta(*c, w, iv);
            EXPECT_TRUE(t.bijective) << spec.family << " x=" << x << " " << t.witness;
            for (const auto& [y, img] : w.theta) {
                const Matrix m = theta_matrix(*c, w, y);
                ASSERT_EQ(m.rows(), m.cols());
                EXPECT_EQ(oracle::bareiss_rank(m), m.rows());
            }
        }
    }
}

TEST(Theta, QuotedExamples) {
    EXPECT_TRUE(verify_theta(*make_category({"FI", {}, {}, {}}), 2, {0, 4}).bijective);
    EXPECT_TRUE(verify_theta(*make_category({"OI_d", {}, 2, {}}), 1, {0, 3}).bijective);
}

TEST(GeneticAxioms, HoldForTheZoo) {
    for (const auto& [spec, iv] : all_families()) {
        const auto r = check_genetic_axioms(*make_category(spec), iv);
        for (const auto& ch : r.checks) EXPECT_TRUE(ch.passed) << spec.family << " " << ch.name << ": " << ch.witness;
    }
}

TEST(CrucialLemma, SyzygyOfSimpleInFI) {
    const auto l = linearize(*make_category({"FI", {}, {}, {}}), {0, 4});
    const GradedModule m = projective_cover(regular_simple(l, 1)).kernel;
    const auto r = verify_crucial_lemma(*l, m, 2);
    EXPECT_TRUE(r.holds) << r.witness;
    for (const auto& [k, d] : r.complement_top) EXPECT_EQ(k.first, 2);
}

TEST(CrucialLemma, SyzygyOfSimpleInFIGamma) {
    const auto l = linearize(*make_category({"FI_gamma", FiniteGroup::cyclic(2), {}, {}}), {0, 4});
    const GradedModule m = projective_cover(regular_simple(l, 2)).kernel;
    const auto r = verify_crucial_lemma(*l, m, 3);
    EXPECT_TRUE(r.holds) << r.witness;
}

TEST(CrucialLemma, ProjectiveModule) {
    const auto l = linearize(*make_category({"FI", {}, {}, {}}), {0, 4});
    const auto r = verify_crucial_lemma(*l, representable(l, 2), 2);
    EXPECT_TRUE(r.holds) << r.witness;
    for (const auto& [k, d] : r.restricted_syzygy) EXPECT_EQ(d, 0);
    for (const auto& [k, d] : r.syzygy_of_restriction) EXPECT_EQ(d, 0);
}

TEST(CrucialLemma, PreconditionsAreEnforced) {
    const auto l = linearize(*make_category({"FI", {}, {}, {}}), {0, 4});
    EXPECT_THROW(verify_crucial_lemma(*l, representable(l, 0), 0), std::invalid_argument);
    EXPECT_THROW(verify_crucial_lemma(*l, representable(l, 1), 2), std::invalid_argument);
}
