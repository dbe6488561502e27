#include "koszulkit/zoo.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace koszulkit;

namespace {

struct Family {
    std::string name;
    CategorySpec spec;
    int lo, hi;
    std::function<long long(int, int)> count;
};

std::vector<Family> families() {
    using namespace oracle;
    const auto fi = [](int x, int y) { return factorial(y) / factorial(y - x); };
    return {
        {"FI", {"FI", {}, {}, {}}, 0, 4, fi},
        {"FI_Z2", {"FI_gamma", FiniteGroup::cyclic(2), {}, {}}, 0, 4,
         [=](int x, int y) { return fi(x, y) * power(2, x); }},
        {"FI_Z3", {"FI_gamma", FiniteGroup::cyclic(3), {}, {}}, 0, 3,
         [=](int x, int y) { return fi(x, y) * power(3, x); }},
        {"OI", {"OI_gamma", FiniteGroup::trivial(), {}, {}}, 0, 5, [](int x, int y) { return binomial(y, x); }},
        {"OI_Z2", {"OI_gamma", FiniteGroup::cyclic(2), {}, {}}, 0, 4,
         [](int x, int y) { return binomial(y, x) * power(2, x); }},
        {"FI_2", {"FI_d", {}, 2, {}}, 0, 4, [=](int x, int y) { return fi(x, y) * power(2, y - x); }},
        {"OI_3", {"OI_d", {}, 3, {}}, 0, 4, [](int x, int y) { return binomial(y, x) * power(3, y - x); }},
        {"FS", {"FS_gamma_op", FiniteGroup::trivial(), {}, {}}, 1, 4, [](int x, int y) { return surjections(y, x); }},
        {"FS_Z2", {"FS_gamma_op", FiniteGroup::cyclic(2), {}, {}}, 1, 3,
         [](int x, int y) { return surjections(y, x) * power(2, y); }},
        {"OS", {"OS_gamma_op", FiniteGroup::trivial(), {}, {}}, 1, 5,
         [](int x, int y) { return surjections(y, x) / factorial(x); }},
        {"VI_2", {"VI", {}, {}, 2}, 0, 3, [](int x, int y) { return injective_linear(x, y, 2); }},
        {"VI_3", {"VI", {}, {}, 3}, 0, 2, [](int x, int y) { return injective_linear(x, y, 3); }},
    };
}

}  // namespace

TEST(Zoo, HomCountsMatchClosedForms) {
    for (const auto& f : families()) {
        const auto c = make_category(f.spec);
        for (int x = f.lo; x <= f.hi; ++x)
            for (int y = x; y <= f.hi; ++y)
                EXPECT_EQ(static_cast<long long>(c->hom(x, y).size()), f.count(x, y)) << f.name << " (" << x << "," << y << ")";
    }
}

TEST(Zoo, EndomorphismsFormGroups) {
    for (const auto& f : families()) {
        const auto c = make_category(f.spec);
        for (int x = f.lo; x <= f.hi; ++x) {
            const FiniteGroup& g = c->group(x);
            EXPECT_EQ(g.order(), f.count(x, x)) << f.name;
            EXPECT_FALSE(g.check_axioms().has_value()) << f.name;
            EXPECT_EQ(c->hom(x, x).front(), c->identity(x));
        }
    }
}

TEST(Zoo, NoBackwardMorphisms) {
    for (const auto& f : families()) {
        const auto c = make_category(f.spec);
        for (int x = f.lo + 1; x <= f.hi; ++x) EXPECT_TRUE(c->hom(x, x - 1).empty()) << f.name;
    }
}

TEST(Zoo, CombinatorialConditionsHold) {
    for (const auto& f : families()) {
        const auto c = make_category(f.spec);
        const ConditionReport r = verify_c_conditions(*c, std::min(f.hi, 4));
        for (const auto& ch : r.checks) EXPECT_TRUE(ch.passed) << f.name << " " << ch.name << ": " << ch.witness;
    }
}

TEST(Zoo, CompositionIsAssociativeAndUnital) {
    for (const auto& f : families()) {
        const auto c = make_category(f.spec);
        const int hi = std::min(f.hi, f.lo + 3);
        for (int x = f.lo; x <= hi; ++x)
            for (int y = x; y <= hi; ++y)
                for (const auto& a : c->hom(x, y)) {
                    EXPECT_EQ(c->compose(c->identity(y), a), a);
                    EXPECT_EQ(c->compose(a, c->identity(x)), a);
                    for (int z = y; z <= hi; ++z)
                        for (const auto& b : c->hom(y, z))
                            EXPECT_GE(c->index_of(c->compose(b, a)), 0) << f.name;
                }
    }
}

TEST(Zoo, MinimalFactorizationAgreesWithBruteForce) {
    for (const auto& f : families()) {
        const auto c = make_category(f.spec);
        for (int x = f.lo; x + 1 <= std::min(f.hi, 3); ++x)
            for (int y = x; y + 1 <= std::min(f.hi, 3); ++y)
                for (const auto& m : c->hom(x, y + 1)) {
                    const auto a = c->factorize_min(m);
                    const auto b = c->factorize_brute(m);
                    ASSERT_EQ(a.has_value(), b.has_value()) << f.name << " " << c->label(m);
                    if (!a) continue;
                    EXPECT_EQ(a->z, b->z) << f.name << " " << c->label(m);
                    EXPECT_EQ(c->compose(c->genetic_embed(a->f2), a->f1), m);
                }
    }
}

TEST(Zoo, FIUnderlyingInjectionIsIdentityOnFI) {
    const auto c = make_category({"FI", {}, {}, {}});
    ASSERT_TRUE(c->has_rho());
    for (const auto& m : c->hom(2, 4)) EXPECT_EQ(c->rho(m).size(), 2u);
}

TEST(Zoo, SpecErrorsNameTheField) {
    try {
        make_category({"FI_gamma", {}, {}, {}});
        FAIL() << "missing gamma accepted";
    } catch (const SpecError& e) {
        EXPECT_EQ(e.field(), "gamma");
    }
    try {
        make_category({"FI_d", {}, {}, {}});
        FAIL() << "missing d accepted";
    } catch (const SpecError& e) {
        EXPECT_EQ(e.field(), "d");
    }
    EXPECT_THROW(make_category({"nope", {}, {}, {}}), SpecError);
    EXPECT_THROW(make_category({"VI", {}, {}, 4}), SpecError);
}

TEST(Zoo, KnownFamiliesListed) {
    const auto& names = known_families();
    for (const char* n : {"FI", "FI_gamma", "FI_prime_gamma", "OI_gamma", "FI_d", "OI_d", "FS_gamma_op", "OS_gamma_op", "VI"})
        EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
    EXPECT_TRUE(family_needs_gamma("OS_gamma_op"));
    EXPECT_FALSE(family_needs_gamma("FI"));
}

TEST(Zoo, FIPrimeGammaFailsC3Uniqueness) {
    const auto c = make_category({"FI_prime_gamma", FiniteGroup::cyclic(2), {}, {}});
    const ConditionReport r = verify_c_conditions(*c, 3);
    bool c3_failed = false;
    for (const auto& ch : r.checks)
        if (ch.name.rfind("C3", 0) == 0 && !ch.passed) c3_failed = true;
    EXPECT_TRUE(c3_failed);
}
