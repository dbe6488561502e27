#ifndef KOSZULKIT_COMB_CATEGORY_HPP
#define KOSZULKIT_COMB_CATEGORY_HPP

#include "koszulkit/group.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace koszulkit {

// A morphism of a combinatorial category. `data` is the family-specific
// payload (see zoo.hpp); equal payloads with equal endpoints are equal
// morphisms, and the payload order is the canonical basis order.
struct Morphism {
    int src = 0;
    int tgt = 0;
    std::vector<int> data;

    bool operator==(const Morphism& o) const { return src == o.src && tgt == o.tgt && data == o.data; }
    bool operator!=(const Morphism& o) const { return !(*this == o); }
    bool operator<(const Morphism& o) const {
        if (src != o.src) return src < o.src;
        if (tgt != o.tgt) return tgt < o.tgt;
        return data < o.data;
    }
};

struct MorphismHash {
    std::size_t operator()(const Morphism& m) const;
};

struct Interval {
    int lo = 0;
    int hi = 0;
    int width() const { return hi - lo; }
    bool contains(int x) const { return lo <= x && x <= hi; }
};

// f = (I ⊙ f2) ∘ f1 with f1: x -> 1+z and f2: z -> y.
struct Factorization {
    int z = 0;
    Morphism f1;
    Morphism f2;
};

// A skeletal EI category of type A-infinity with finite, enumerable hom-sets,
// a strict monoidal product ⊙ adding objects, and the unit morphism I = id_1.
class CombCategory {
public:
    virtual ~CombCategory() = default;

    virtual std::string family() const = 0;
    virtual int min_object() const { return 0; }
    // Largest object this instance is willing to enumerate.
    virtual int max_object() const { return 8; }

    // Hom-set, identity first when x == y and otherwise sorted by payload.
    // Cached; the returned reference stays valid for the lifetime of *this.
    const std::vector<Morphism>& hom(int x, int y) const;
    // Position of m in hom(m.src, m.tgt); -1 if m is not a morphism.
    int index_of(const Morphism& m) const;

    Morphism compose(const Morphism& beta, const Morphism& alpha) const;
    Morphism tensor(const Morphism& a, const Morphism& b) const { return tensor_impl(a, b); }
    virtual Morphism identity(int x) const = 0;
    Morphism unit() const { return identity(1); }
    Morphism genetic_embed(const Morphism& a) const { return tensor(unit(), a); }

    // Endomorphism group G_x with elements indexed as in hom(x, x).
    const FiniteGroup& group(int x) const;

    // Functor to FI: the underlying injection [x] -> [y], values 1-based.
    virtual bool has_rho() const { return false; }
    virtual std::vector<int> rho(const Morphism& m) const;

    std::string label(const Morphism& m) const;

    // Minimal (C3) factorization of f: x -> 1+y. Families supply a canonical
    // f1; f2 is then recovered by search over hom(z, y).
    std::optional<Factorization> factorize_min(const Morphism& f) const;
    // Exhaustive search over all z <= x; used as an oracle and as the
    // fallback for families without a canonical construction.
    std::optional<Factorization> factorize_brute(const Morphism& f) const;

protected:
    virtual std::vector<Morphism> enumerate(int x, int y) const = 0;
    virtual Morphism compose_impl(const Morphism& beta, const Morphism& alpha) const = 0;
    virtual Morphism tensor_impl(const Morphism& a, const Morphism& b) const = 0;
    // Canonical first factor (z, f1) of a minimal factorization, if known.
    virtual std::optional<std::pair<int, Morphism>> canonical_f1(const Morphism&) const { return std::nullopt; }

    void check_object(int x) const;

private:
    std::optional<Morphism> find_f2(const Morphism& f, const Morphism& f1, int z) const;

    struct HomEntry {
        std::vector<Morphism> list;
        std::unordered_map<Morphism, int, MorphismHash> index;
    };
    const HomEntry& entry(int x, int y) const;

    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<HomEntry>> homs_;
    mutable std::map<int, std::unique_ptr<FiniteGroup>> groups_;
};

using CombCategoryPtr = std::shared_ptr<const CombCategory>;

// Deterministic orbit representatives (least element index) of a group
// acting on {0, ..., n-1}; act(g, e) must be a left action.
std::vector<int> orbit_reps(int n, const FiniteGroup& g, const std::function<int(int, int)>& act,
                            std::vector<int>* orbit_of = nullptr);
// Spot-checks act(gh, e) == act(g, act(h, e)) on every generator pair.
bool spot_check_action(int n, const FiniteGroup& g, const std::function<int(int, int)>& act);

}  // namespace koszulkit

#endif
