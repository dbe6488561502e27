#include "koszulkit/twist.hpp"
#include "koszulkit/zoo.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace koszulkit;

namespace {

int perm_sign(const std::vector<int>& v) {
    int inv = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j];
    return inv % 2 ? -1 : 1;
}

std::vector<int> complement(const CombCategory& c, const Morphism& a) {
    const auto r = c.rho(a);
    std::vector<int> d;
    for (int i = 1; i <= a.tgt; ++i)
        if (std::find(r.begin(), r.end(), i) == r.end()) d.push_back(i);
    return d;
}

int sign_oracle(const CombCategory& c, const Morphism& beta, const Morphism& alpha) {
    const auto rb = c.rho(beta);
    std::vector<int> seq;
    for (int i : complement(c, alpha)) seq.push_back(rb[i - 1]);
    for (int i : complement(c, beta)) seq.push_back(i);
    return perm_sign(seq);
}

int wedge_oracle(const CombCategory& c, const Morphism& a) {
    auto seq = c.rho(a);
    for (int i : complement(c, a)) seq.push_back(i);
    return perm_sign(seq);
}

const Morphism& pick(std::mt19937& rng, const std::vector<Morphism>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::vector<CategorySpec> specs() {
    return {{"FI", {}, {}, {}},
            {"FI_gamma", FiniteGroup::cyclic(2), {}, {}},
            {"OI_gamma", FiniteGroup::cyclic(2), {}, {}},
            {"FI_d", {}, 2, {}},
            {"OI_d", {}, 2, {}}};
}

}  // namespace

TEST(Twist, BasisCarriesTheComplement) {
    const auto c = make_category({"FI_d", {}, 2, {}});
    const auto b = twist_basis(*c, 1, 3);
    ASSERT_EQ(b.size(), c->hom(1, 3).size());
    for (const auto& e : b) EXPECT_EQ(e.wedge, complement(*c, e.alpha));
}

TEST(Twist, SignsMatchInversionCounts) {
    std::mt19937 rng(31);
    for (const auto& spec : specs()) {
        const auto c = make_category(spec);
        for (int k = 0; k < 300; ++k) {
            const int x = rng() % 3, y = x + rng() % 2, z = y + rng() % 2;
            const Morphism& a = pick(rng, c->hom(x, y));
            const Morphism& b = pick(rng, c->hom(y, z));
            EXPECT_EQ(twist_sign(*c, b, a), sign_oracle(*c, b, a)) << spec.family;
            EXPECT_EQ(wedge_sign(*c, a), wedge_oracle(*c, a)) << spec.family;
        }
    }
}

TEST(Twist, SignIsACoboundary) {
    // tw(β,α) = s(β) s(α) s(βα), hence also a 2-cocycle.
    std::mt19937 rng(32);
    for (const auto& spec : specs()) {
        const auto c = make_category(spec);
        for (int k = 0; k < 300; ++k) {
            const int x = rng() % 2, y = x + rng() % 2, z = y + rng() % 2, w = z + rng() % 2;
            const Morphism& a = pick(rng, c->hom(x, y));
            const Morphism& b = pick(rng, c->hom(y, z));
            const Morphism& g = pick(rng, c->hom(z, w));
            const Morphism ba = c->compose(b, a);
            EXPECT_EQ(twist_sign(*c, b, a), wedge_sign(*c, b) * wedge_sign(*c, a) * wedge_sign(*c, ba));
            EXPECT_EQ(twist_sign(*c, g, b) * twist_sign(*c, c->compose(g, b), a),
                      twist_sign(*c, g, ba) * twist_sign(*c, b, a));
        }
    }
}

TEST(Twist, TwistedCategoryValidates) {
    for (const auto& spec : specs()) {
        const auto c = make_category(spec);
        const auto t = twist_category(*c, {0, 3});
        const auto r = validate(*t);
        for (const auto& ch : r.checks) EXPECT_TRUE(ch.passed) << spec.family << " " << ch.name << ": " << ch.witness;
    }
}

TEST(Twist, TwistedCompositionCarriesTheSign) {
    const auto c = make_category({"FI", {}, {}, {}});
    const auto t = twist_category(*c, {0, 3});
    for (int b = 0; b < t->dim(1, 3); ++b)
        for (int a = 0; a < t->dim(0, 1); ++a) {
            const auto terms = t->compose(0, 1, 3, b, a);
            ASSERT_EQ(terms.size(), 1u);
            EXPECT_EQ(terms[0].coeff, Rational(twist_sign(*c, c->hom(1, 3)[b], c->hom(0, 1)[a])));
        }
}

TEST(Twist, TauRescalesEveryAction) {
    std::mt19937 rng(33);
    const auto c = make_category({"FI_gamma", FiniteGroup::cyclic(2), {}, {}});
    const Interval iv{0, 3};
    const auto plain = linearize(*c, iv);
    const auto tw = twist_category(*c, iv);
    for (int k = 0; k < 5; ++k) {
        const GradedModule m = oracle::random_module(rng, plain);
        const GradedModule t = tau_module(*c, m, tw);
        EXPECT_TRUE(validate_module(t).passed());
        for (const auto& [key, f] : m.fibers()) {
            const auto [x, i] = key;
            for (int y = x; y <= iv.hi; ++y)
                for (int e = 0; e < plain->dim(x, y); ++e)
                    EXPECT_EQ(t.action(x, y, e, i), m.action(x, y, e, i).scaled(wedge_sign(*c, c->hom(x, y)[e])));
        }
    }
}

TEST(Twist, MuTauIsTheIdentityOnRepresentables) {
    for (const auto& spec : specs()) {
        const auto c = make_category(spec);
        const Interval iv{0, 3};
        const auto plain = linearize(*c, iv);
        const auto tw = twist_category(*c, iv);
        for (int x = 0; x <= 3; ++x) {
            const GradedModule m = representable(plain, x);
            const GradedModule back = mu_module(*c, tau_module(*c, m, tw), plain);
            EXPECT_FALSE(iso_defect(m, back, twist_unit(m)).has_value()) << spec.family;
            const GradedModule n = representable(tw, x);
            const GradedModule fwd = tau_module(*c, mu_module(*c, n, plain), tw);
            EXPECT_FALSE(iso_defect(n, fwd, twist_unit(n)).has_value()) << spec.family;
        }
    }
}

TEST(Twist, UnitIsIdentityMatrices) {
    const auto c = make_category({"FI", {}, {}, {}});
    const GradedModule m = representable(linearize(*c, {0, 2}), 0);
    for (const auto& [k, mat] : twist_unit(m)) EXPECT_EQ(mat, Matrix::identity(m.dim(k.first, k.second)));
}

TEST(TwistDual, HoldsForTwistableFamilies) {
    const std::vector<CategorySpec> more = {{"FI_gamma", FiniteGroup::cyclic(3), {}, {}}, {"OI_gamma", FiniteGroup::trivial(), {}, {}}};
    for (const auto& cs : {specs(), more})
        for (const auto& spec : cs) {
            const auto r = check_twist_dual_iso(*make_category(spec), {0, 3});
            EXPECT_TRUE(r.iso) << spec.family << " " << r.witness;
            EXPECT_EQ(r.fibers.size(), 2u);
        }
}

TEST(TwistDual, FailsWithoutSigns) {
    const auto r = check_twist_dual_iso(*make_category({"FI", {}, {}, {}}), {0, 3}, false);
    EXPECT_FALSE(r.iso);
    EXPECT_NE(r.witness.find("(0,2)"), std::string::npos);
}

TEST(TwistDual, UnsupportedFamiliesAreRejected) {
    EXPECT_THROW(check_twist_dual_iso(*make_category({"VI", {}, {}, 2}), {0, 2}), std::invalid_argument);
    EXPECT_THROW(twist_basis(*make_category({"FS_gamma_op", FiniteGroup::trivial(), {}, {}}), 1, 2), std::invalid_argument);
}
