#ifndef KOSZULKIT_LINCAT_HPP
#define KOSZULKIT_LINCAT_HPP

#include "koszulkit/comb_category.hpp"
#include "koszulkit/linalg.hpp"
#include "koszulkit/report.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace koszulkit {

struct Term {
    int index = 0;
    Rational coeff;

    bool operator==(const Term& o) const { return index == o.index && coeff == o.coeff; }
};

// Structure constants of hom(y,z) x hom(x,y) -> hom(x,z), entry (b, a) for
// beta = b-th basis element of hom(y,z), alpha = a-th of hom(x,y).
class CompBlock {
public:
    CompBlock() = default;
    CompBlock(int nb, int na, const std::function<std::vector<Term>(int, int)>& entry);

    int nb() const { return nb_; }
    int na() const { return na_; }
    std::span<const Term> at(int b, int a) const {
        const std::size_t k = static_cast<std::size_t>(b) * na_ + a;
        return {terms_.data() + offsets_[k], terms_.data() + offsets_[k + 1]};
    }
    // Every entry is zero or a single basis element with coefficient +-1.
    bool monomial() const { return monomial_; }
    // Monomial blocks only: target index (-1 for zero) and sign.
    int mono_index(int b, int a) const { return mono_index_[static_cast<std::size_t>(b) * na_ + a]; }
    int mono_sign(int b, int a) const { return mono_sign_[static_cast<std::size_t>(b) * na_ + a]; }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const CompBlock& o) const {
        return nb_ == o.nb_ && na_ == o.na_ && offsets_ == o.offsets_ && terms_ == o.terms_;
    }

private:
    int nb_ = 0;
    int na_ = 0;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<Term> terms_;
    bool monomial_ = true;
    std::vector<int> mono_index_;
    std::vector<signed char> mono_sign_;
};

// A graded k-linear category on a finite interval of objects with hom(x,y)
// nonzero only for x <= y. Degrees default to y - x. Built once, then
// finalize() derives the auxiliary tables and the value is treated as
// immutable; share it through LinCatPtr.
class LinCat {
public:
    LinCat(std::string name, Interval iv);

    void set_basis(int x, int y, std::vector<std::string> labels);
    void set_degree(int x, int y, int i, int degree);
    void set_block(int x, int y, int z, CompBlock block);
    // Genetic embedding hom(x,y) -> hom(x+1,y+1) as (index, sign) pairs.
    void set_iota(int x, int y, std::vector<std::pair<int, int>> map);
    void finalize();

    const std::string& name() const { return name_; }
    void rename(std::string n) { name_ = std::move(n); }
    Interval interval() const { return iv_; }
    int lo() const { return iv_.lo; }
    int hi() const { return iv_.hi; }
    bool contains(int x) const { return iv_.contains(x); }

    int dim(int x, int y) const;
    const std::vector<std::string>& labels(int x, int y) const;
    int degree(int x, int y, int i) const;
    const std::map<std::tuple<int, int, int>, int>& degree_overrides() const { return degrees_; }

    const CompBlock& block(int x, int y, int z) const;
    std::span<const Term> compose(int x, int y, int z, int b, int a) const { return block(x, y, z).at(b, a); }

    // hom(x,x) as a group under composition (element 0 = identity), or null
    // when the degree-0 part is not spanned by a group.
    const FiniteGroup* group(int x) const;

    bool has_iota() const { return has_iota_; }
    const std::vector<std::pair<int, int>>& iota(int x, int y) const;

    // Degree-one basis of hom(x,x+1) split into orbits under G_{x+1} x G_x:
    // arrow = sign * g o reps[rep] o h.
    struct ArrowOrbit {
        int g = 0;
        int rep = 0;
        int h = 0;
        int sign = 1;
    };
    const std::vector<int>& arrow_reps(int x) const;
    const ArrowOrbit& arrow_orbit(int x, int a) const;

    // e = sum coeff * beta o alpha, beta in hom(y-1,y), alpha in hom(x,y-1),
    // for every basis element e of hom(x,y) with y >= x + 2. Empty when e is
    // not a combination of such products.
    struct Factor {
        int beta = 0;
        int alpha = 0;
        Rational coeff;
    };
    const std::vector<Factor>& factors(int x, int y, int i) const;

    // Structural equality: bases, degrees and composition. The name and ι
    // are ignored.
    bool operator==(const LinCat& o) const;
    bool operator!=(const LinCat& o) const { return !(*this == o); }

private:
    std::size_t pair_slot(int x, int y) const;
    std::size_t triple_slot(int x, int y, int z) const;
    void derive_groups();
    void derive_arrow_orbits();
    void derive_factors();

    std::string name_;
    Interval iv_;
    int n_;
    std::vector<std::vector<std::string>> labels_;
    std::map<std::tuple<int, int, int>, int> degrees_;
    std::vector<CompBlock> blocks_;
    bool has_iota_ = false;
    std::vector<std::vector<std::pair<int, int>>> iota_;
    std::vector<std::optional<FiniteGroup>> groups_;
    std::vector<std::vector<int>> arrow_reps_;
    std::vector<std::vector<ArrowOrbit>> arrow_orbits_;
    std::vector<std::vector<std::vector<Factor>>> factors_;
};

using LinCatPtr = std::shared_ptr<const LinCat>;

// Sign of the structure constant for beta o alpha; +1 gives the plain
// linearization.
using CompositionSign = std::function<int(const Morphism& beta, const Morphism& alpha)>;

// k-linearization of c on iv: basis = hom-sets, constants 0/1 (times sign).
LinCatPtr linearize(const CombCategory& c, Interval iv, const CompositionSign& sign = {}, std::string name = "");

// Objects relabelled by x -> lo + hi - x; hom^op(x,y) = hom(y',x').
LinCatPtr opposite(const LinCat& l);

// Full subcategory on a sub-interval.
LinCatPtr truncate(const LinCat& l, Interval iv);

// Off-diagonal homs kept; hom(x,x) cut down to the identity.
LinCatPtr essential_subcategory(const LinCat& l);

struct ValidateOptions {
    // Cap on basis triples examined for associativity; 0 means all.
    std::size_t max_triples = 0;
};

// (P1)-(P8), type A∞ grading, associativity, identities and (E1)-(E4).
ConditionReport validate(const LinCat& l, const ValidateOptions& opts = {});

// Vector of an element of hom(x,z) given by beta o v, v a combination in hom(x,y).
Vector compose_left(const LinCat& l, int x, int y, int z, int b, const Vector& v);
// v o alpha for v a combination in hom(y,z) and alpha = a-th basis element of hom(x,y).
Vector compose_right(const LinCat& l, int x, int y, int z, const Vector& v, int a);

}  // namespace koszulkit

#endif
