#include "koszulkit/genetic.hpp"
#include "koszulkit/planted.hpp"
#include "koszulkit/quadratic.hpp"
#include "koszulkit/resolution.hpp"
#include "koszulkit/zoo.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace koszulkit;

namespace {

bool failed(const ConditionReport& r, const std::string& name) {
    const ConditionCheck* c = r.find(name);
    return c && !c->passed;
}

LinCatPtr fi(Interval iv = {0, 4}) { return linearize(*make_category({"FI", {}, {}, {}}), iv); }

}  // namespace

TEST(Planted, DroppedHomIsCaught) {
    const auto r = validate(*drop_hom(*fi(), 1, 2));
    EXPECT_TRUE(failed(r, "E3"));
    EXPECT_TRUE(failed(r, "P6"));
}

TEST(Planted, PerturbedConstantBreaksAssociativity) {
    const auto r = validate(*perturb_constant(*fi(), 0));
    EXPECT_TRUE(failed(r, "associativity"));
    EXPECT_FALSE(failed(r, "P6"));
}

TEST(Planted, WrongDegreeBreaksTheGrading) {
    const auto r = validate(*plant_degree(*fi(), 0, 2, 0, 3));
    EXPECT_TRUE(failed(r, "type-A"));
}

TEST(Planted, CubicRelationIsNotQuadratic) {
    const auto l = linearize(*make_category({"FI_d", {}, 2, {}}), {0, 4});
    const auto k = kill_ideal(*l, 0, 3, 0);
    EXPECT_TRUE(validate(*k).passed());
    EXPECT_EQ(k->dim(0, 3), l->dim(0, 3) - 1);
    const QuadraticCheck q = is_quadratic(*k);
    EXPECT_FALSE(q.quadratic);
    EXPECT_EQ(q.x, 0);
    EXPECT_EQ(q.d, 3);
    EXPECT_NE(q.witness.find("1/1"), std::string::npos);
}

TEST(Planted, CubicRelationFailsTheCertificate) {
    const auto k = kill_ideal(*fi(), 0, 3, 0);
    const auto steps = koszul_certificate(k, 0, 3);
    EXPECT_FALSE(std::all_of(steps.begin(), steps.end(), [](const StepReport& s) { return s.passed(); }));
}

TEST(Planted, CorruptedCompositionBreaksC4) {
    const auto r = verify_c_conditions(*corrupt_composition(make_category({"FI", {}, {}, {}})), 4);
    EXPECT_TRUE(failed(r, "C4"));
}

TEST(Planted, DuplicatedGammaBreaksTheta) {
    const auto c = make_category({"FI", {}, {}, {}});
    auto w = duplicate_gamma(decomposition_numbers(*c, 2));
    const ThetaReport t = verify_theta(*c, w, {0, 4});
    EXPECT_FALSE(t.bijective);
    EXPECT_FALSE(t.witness.empty());
}
