#ifndef KOSZULKIT_GROUP_HPP
#define KOSZULKIT_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

namespace koszulkit {

// Finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
public:
    FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}
    // Throws std::invalid_argument when the table is not a group with identity 0.
    explicit FiniteGroup(std::vector<std::vector<int>> table, bool check = true);

    static FiniteGroup cyclic(int n);
    static FiniteGroup trivial() { return cyclic(1); }

    int order() const { return static_cast<int>(mult_.size()); }
    int mul(int a, int b) const { return mult_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    const std::vector<std::vector<int>>& table() const { return mult_; }
    bool is_abelian() const;

    // Deterministic generating set: greedily add the least element outside
    // the subgroup generated so far.
    const std::vector<int>& generators() const { return gens_; }
    // Breadth-first spanning tree of the Cayley graph:
    // g = parent(g) * generators()[parent_gen(g)] for g != 0.
    int parent(int g) const { return parent_[g]; }
    int parent_gen(int g) const { return parent_gen_[g]; }

    // The same set with multiplication reversed; g -> g is then an
    // anti-isomorphism, as needed for opposite categories.
    FiniteGroup opposite() const;

    // Full associativity check; returns a witness "(a,b,c)" on failure.
    std::optional<std::string> check_axioms() const;

    bool operator==(const FiniteGroup& o) const { return mult_ == o.mult_; }

private:
    void build_derived();

    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
    std::vector<int> gens_;
    std::vector<int> parent_;
    std::vector<int> parent_gen_;
};

}  // namespace koszulkit

#endif
