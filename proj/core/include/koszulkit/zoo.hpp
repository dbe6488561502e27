#ifndef KOSZULKIT_ZOO_HPP
#define KOSZULKIT_ZOO_HPP

#include "koszulkit/comb_category.hpp"
#include "koszulkit/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace koszulkit {

// Payload encodings (all values 1-based, colours are group element indices):
//   FI, FI_gamma, FI_prime_gamma, OI_gamma : [f(1..x), c(1..x)]
//   FI_d, OI_d                             : [f(1..x), delta(1..y)], delta = 0 on Im f
//   FS_gamma_op, OS_gamma_op (x -> y)      : [f(1..y), c(1..y)], f: [y] -> [x] onto
//   VI                                     : y-by-x matrix over F_q, row-major
struct CategorySpec {
    std::string family;
    std::optional<FiniteGroup> gamma;
    std::optional<int> d;
    std::optional<int> q;
    // VI is capped at q in {2,3} and objects <= 3 unless this is set.
    bool allow_large = false;
};

class SpecError : public std::invalid_argument {
public:
    SpecError(const std::string& field, const std::string& msg)
        : std::invalid_argument(field + ": " + msg), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

const std::vector<std::string>& known_families();
bool family_needs_gamma(const std::string& family);

CombCategoryPtr make_category(const CategorySpec& spec);

// Brute-force (C1)-(C4) on every hom-set with objects <= bound.
ConditionReport verify_c_conditions(const CombCategory& c, int bound);

}  // namespace koszulkit

#endif
