#include "koszulkit/lincat.hpp"
#include "koszulkit/zoo.hpp"

#include <gtest/gtest.h>

using namespace koszulkit;

namespace {

CombCategoryPtr fi() { return make_category({"FI", {}, {}, {}}); }
CombCategoryPtr fi_z2() { return make_category({"FI_gamma", FiniteGroup::cyclic(2), {}, {}}); }

}  // namespace

TEST(LinCat, LinearizationHasHomSetBases) {
    const auto c = fi_z2();
    const auto l = linearize(*c, {0, 3});
    for (int x = 0; x <= 3; ++x)
        for (int y = x; y <= 3; ++y) EXPECT_EQ(l->dim(x, y), static_cast<int>(c->hom(x, y).size()));
}

TEST(LinCat, StructureConstantsAreComposition) {
    const auto c = fi_z2();
    const auto l = linearize(*c, {0, 3});
    for (int x = 0; x <= 3; ++x)
        for (int y = x; y <= 3; ++y)
            for (int z = y; z <= 3; ++z)
                for (int b = 0; b < l->dim(y, z); ++b)
                    for (int a = 0; a < l->dim(x, y); ++a) {
                        const auto terms = l->compose(x, y, z, b, a);
                        ASSERT_EQ(terms.size(), 1u);
                        EXPECT_EQ(terms[0].coeff, Rational(1));
                        EXPECT_EQ(terms[0].index, c->index_of(c->compose(c->hom(y, z)[b], c->hom(x, y)[a])));
                    }
}

TEST(LinCat, ZooLinearizationsValidate) {
    const std::vector<std::pair<CategorySpec, Interval>> cases = {
        {{"FI", {}, {}, {}}, {0, 4}},
        {{"FI_gamma", FiniteGroup::cyclic(3), {}, {}}, {0, 3}},
        {{"OI_gamma", FiniteGroup::cyclic(2), {}, {}}, {0, 4}},
        {{"FI_d", {}, 2, {}}, {0, 3}},
        {{"OI_d", {}, 2, {}}, {0, 4}},
        {{"FS_gamma_op", FiniteGroup::trivial(), {}, {}}, {1, 4}},
        {{"OS_gamma_op", FiniteGroup::trivial(), {}, {}}, {1, 4}},
        {{"VI", {}, {}, 2}, {0, 3}},
        {{"FI_prime_gamma", FiniteGroup::cyclic(2), {}, {}}, {0, 3}},
    };
    for (const auto& [spec, iv] : cases) {
        const auto l = linearize(*make_category(spec), iv);
        const auto r = validate(*l);
        for (const auto& ch : r.checks) EXPECT_TRUE(ch.passed) << spec.family << " " << ch.name << ": " << ch.witness;
    }
}

TEST(LinCat, OppositeIsAnInvolution) {
    const auto l = linearize(*fi_z2(), {0, 3});
    const auto op = opposite(*l);
    for (int x = 0; x <= 3; ++x)
        for (int y = x; y <= 3; ++y) EXPECT_EQ(op->dim(x, y), l->dim(3 - y, 3 - x));
    EXPECT_TRUE(validate(*op).passed());
    EXPECT_EQ(*opposite(*op), *l);
}

TEST(LinCat, OppositeReversesComposition) {
    const auto l = linearize(*fi(), {0, 3});
    const auto op = opposite(*l);
    // β ∘op α in op(0,1,2) is α ∘ β in l(1,2,3)
    for (int b = 0; b < op->dim(1, 2); ++b)
        for (int a = 0; a < op->dim(0, 1); ++a) {
            const auto lhs = op->compose(0, 1, 2, b, a);
            const auto rhs = l->compose(1, 2, 3, a, b);
            ASSERT_EQ(lhs.size(), rhs.size());
            for (std::size_t k = 0; k < lhs.size(); ++k) EXPECT_EQ(lhs[k], rhs[k]);
        }
}

TEST(LinCat, TruncationKeepsBlocks) {
    const auto l = linearize(*fi(), {0, 4});
    const auto t = truncate(*l, {1, 3});
    EXPECT_EQ(t->lo(), 1);
    EXPECT_EQ(t->hi(), 3);
    for (int x = 1; x <= 3; ++x)
        for (int y = x; y <= 3; ++y)
            for (int z = y; z <= 3; ++z) EXPECT_EQ(t->block(x, y, z), l->block(x, y, z));
    EXPECT_EQ(*t, *linearize(*fi(), {1, 3}));
}

TEST(LinCat, EssentialSubcategoryKeepsOnlyIdentities) {
    const auto l = linearize(*fi_z2(), {0, 3});
    const auto e = essential_subcategory(*l);
    for (int x = 0; x <= 3; ++x) {
        EXPECT_EQ(e->dim(x, x), 1);
        for (int y = x + 1; y <= 3; ++y) EXPECT_EQ(e->dim(x, y), l->dim(x, y));
    }
}

TEST(LinCat, EssentialPartsOfFIPrimeAndFIAgree) {
    const auto a = essential_subcategory(*linearize(*make_category({"FI_prime_gamma", FiniteGroup::cyclic(2), {}, {}}), {0, 3}));
    const auto b = essential_subcategory(*linearize(*fi_z2(), {0, 3}));
    EXPECT_EQ(*a, *b);
}

TEST(LinCat, ComposeLeftAndRightAgreeWithBlocks) {
    const auto l = linearize(*fi(), {0, 3});
    Vector v(l->dim(1, 2));
    v[0] = Rational(1, 2);
    v[1] = -3;
    for (int b = 0; b < l->dim(2, 3); ++b) {
        const Vector out = compose_left(*l, 1, 2, 3, b, v);
        Vector expect(l->dim(1, 3));
        for (int a = 0; a < l->dim(1, 2); ++a)
            for (const Term& t : l->compose(1, 2, 3, b, a)) expect[t.index] += v[a] * t.coeff;
        EXPECT_EQ(out, expect);
    }
    Vector w(l->dim(2, 3));
    w[1] = 2;
    w[4] = Rational(-1, 3);
    for (int a = 0; a < l->dim(1, 2); ++a) {
        const Vector out = compose_right(*l, 1, 2, 3, w, a);
        Vector expect(l->dim(1, 3));
        for (int b = 0; b < l->dim(2, 3); ++b)
            for (const Term& t : l->compose(1, 2, 3, b, a)) expect[t.index] += w[b] * t.coeff;
        EXPECT_EQ(out, expect);
    }
}

TEST(LinCat, GroupsAreDetected) {
    const auto l = linearize(*fi_z2(), {0, 3});
    for (int x = 0; x <= 3; ++x) {
        ASSERT_NE(l->group(x), nullptr);
        EXPECT_EQ(l->group(x)->order(), l->dim(x, x));
    }
}
