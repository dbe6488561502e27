#include "koszulkit/planted.hpp"

#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace koszulkit {

namespace {

using Keep = std::function<bool(int, int, int)>;
using Edit = std::function<std::vector<Term>(int, int, int, int, int, std::vector<Term>)>;

// Copy of l restricted to the kept basis elements; composites landing on a
// dropped element vanish. `edit` may rewrite an entry (old indices).
LinCatPtr rebuild(const LinCat& l, const std::string& name, const Keep& keep, const Edit& edit = {}) {
    auto out = std::make_shared<LinCat>(name, l.interval());
    std::map<std::pair<int, int>, std::vector<int>> kept, pos;
    for (int x = l.lo(); x <= l.hi(); ++x)
        for (int y = x; y <= l.hi(); ++y) {
            auto& k = kept[{x, y}];
            auto& p = pos[{x, y}];
            p.assign(l.dim(x, y), -1);
            std::vector<std::string> labels;
            for (int i = 0; i < l.dim(x, y); ++i)
                if (keep(x, y, i)) {
                    p[i] = static_cast<int>(k.size());
                    k.push_back(i);
                    labels.push_back(l.labels(x, y)[i]);
                }
            out->set_basis(x, y, std::move(labels));
        }
    for (const auto& [key, deg] : l.degree_overrides()) {
        const auto [x, y, i] = key;
        const int p = pos[{x, y}][i];
        if (p >= 0) out->set_degree(x, y, p, deg);
    }
    for (int x = l.lo(); x <= l.hi(); ++x)
        for (int y = x; y <= l.hi(); ++y)
            for (int z = y; z <= l.hi(); ++z) {
                const auto& kb = kept[{y, z}];
                const auto& ka = kept[{x, y}];
                const auto& pz = pos[{x, z}];
                const CompBlock& blk = l.block(x, y, z);
                out->set_block(x, y, z, CompBlock(static_cast<int>(kb.size()), static_cast<int>(ka.size()), [&](int b, int a) {
                                   std::vector<Term> terms(blk.at(kb[b], ka[a]).begin(), blk.at(kb[b], ka[a]).end());
                                   if (edit) terms = edit(x, y, z, kb[b], ka[a], std::move(terms));
                                   std::vector<Term> res;
                                   for (const auto& t : terms)
                                       if (pz[t.index] >= 0) res.push_back(Term{pz[t.index], t.coeff});
                                   return res;
                               }));
            }
    out->finalize();
    return out;
}

class CorruptedCategory final : public CombCategory {
public:
    explicit CorruptedCategory(CombCategoryPtr base) : base_(std::move(base)) {}

    std::string family() const override { return base_->family(); }
    int min_object() const override { return base_->min_object(); }
    int max_object() const override { return base_->max_object(); }
    Morphism identity(int x) const override { return base_->identity(x); }
    bool has_rho() const override { return base_->has_rho(); }
    std::vector<int> rho(const Morphism& m) const override { return base_->rho(m); }

protected:
    std::vector<Morphism> enumerate(int x, int y) const override { return base_->hom(x, y); }
    Morphism compose_impl(const Morphism& beta, const Morphism& alpha) const override {
        if (alpha.src == 1 && alpha.tgt == 2 && beta.tgt == 3) return base_->hom(1, 3).front();
        return base_->compose(beta, alpha);
    }
    Morphism tensor_impl(const Morphism& a, const Morphism& b) const override { return base_->tensor(a, b); }

private:
    CombCategoryPtr base_;
};

}  // namespace

LinCatPtr drop_hom(const LinCat& l, int x, int y) {
    if (!l.contains(x) || !l.contains(y) || y <= x) throw std::invalid_argument("drop_hom: need lo <= x < y <= hi");
    return rebuild(l, "dropped(" + l.name() + ")", [&](int a, int b, int) { return !(a == x && b == y); });
}

LinCatPtr perturb_constant(const LinCat& l, int x) {
    if (!l.contains(x + 2)) throw std::invalid_argument("perturb_constant: x + 2 outside the interval");
    bool done = false;
    return rebuild(
        l, "perturbed(" + l.name() + ")", [](int, int, int) { return true; },
        [&](int a, int b, int c, int, int, std::vector<Term> t) {
            if (!done && a == x && b == x + 1 && c == x + 2 && !t.empty()) {
                t[0].coeff *= 2;
                done = true;
            }
            return t;
        });
}

LinCatPtr plant_degree(const LinCat& l, int x, int y, int i, int degree) {
    if (i < 0 || i >= l.dim(x, y)) throw std::invalid_argument("plant_degree: no such basis element");
    auto out = rebuild(l, "regraded(" + l.name() + ")", [](int, int, int) { return true; });
    auto copy = std::make_shared<LinCat>(*out);
    copy->set_degree(x, y, i, degree);
    copy->finalize();
    return copy;
}

LinCatPtr kill_ideal(const LinCat& l, int x, int y, int e) {
    if (e < 0 || e >= l.dim(x, y)) throw std::invalid_argument("kill_ideal: no such basis element");
    std::set<std::tuple<int, int, int>> dead{{x, y, e}};
    std::deque<std::tuple<int, int, int>> queue{{x, y, e}};
    while (!queue.empty()) {
        const auto [a, b, i] = queue.front();
        queue.pop_front();
        auto mark = [&](int s, int t, std::span<const Term> terms) {
            if (terms.size() > 1) throw std::invalid_argument("kill_ideal: composite is not a basis element");
            for (const auto& term : terms)
                if (dead.insert({s, t, term.index}).second) queue.push_back({s, t, term.index});
        };
        for (int c = b; c <= l.hi(); ++c)
            for (int k = 0; k < l.dim(b, c); ++k) mark(a, c, l.compose(a, b, c, k, i));
        for (int w = l.lo(); w <= a; ++w)
            for (int k = 0; k < l.dim(w, a); ++k) mark(w, b, l.compose(w, a, b, i, k));
    }
    return rebuild(l, "quotient(" + l.name() + ")", [&](int a, int b, int i) { return dead.count({a, b, i}) == 0; });
}

CombCategoryPtr corrupt_composition(CombCategoryPtr base) { return std::make_shared<CorruptedCategory>(std::move(base)); }

DecompositionWitness duplicate_gamma(DecompositionWitness w) {
    if (w.gamma_reps.empty()) throw std::invalid_argument("duplicate_gamma: no γ representative to repeat");
    w.gamma_reps.push_back(w.gamma_reps.front());
    ++w.n;
    return w;
}

}  // namespace koszulkit
