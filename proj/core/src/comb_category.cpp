#include "koszulkit/comb_category.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace koszulkit {

std::size_t MorphismHash::operator()(const Morphism& m) const {
    std::size_t h = static_cast<std::size_t>(m.src) * 1000003u ^ static_cast<std::size_t>(m.tgt);
    for (int v : m.data) h = h * 131u + static_cast<std::size_t>(v + 7);
    return h;
}

void CombCategory::check_object(int x) const {
    if (x < min_object() || x > max_object())
        throw std::out_of_range(family() + ": object " + std::to_string(x) + " outside supported range [" +
                                std::to_string(min_object()) + "," + std::to_string(max_object()) + "]");
}

const CombCategory::HomEntry& CombCategory::entry(int x, int y) const {
    check_object(x);
    check_object(y);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = homs_.find({x, y});
    if (it != homs_.end()) return *it->second;
    auto e = std::make_unique<HomEntry>();
    if (x <= y) {
        e->list = enumerate(x, y);
        std::sort(e->list.begin(), e->list.end());
        if (x == y) {
            Morphism id = identity(x);
            auto pos = std::find(e->list.begin(), e->list.end(), id);
            if (pos == e->list.end()) throw std::logic_error(family() + ": identity missing from enumeration");
            std::rotate(e->list.begin(), pos, pos + 1);
        }
        for (int i = 0; i < static_cast<int>(e->list.size()); ++i) {
            if (!e->index.emplace(e->list[i], i).second)
                throw std::logic_error(family() + ": duplicate morphism in enumeration");
        }
    }
    auto& ref = *e;
    homs_.emplace(std::make_pair(x, y), std::move(e));
    return ref;
}

const std::vector<Morphism>& CombCategory::hom(int x, int y) const {
    return entry(x, y).list;
}

int CombCategory::index_of(const Morphism& m) const {
    const auto& e = entry(m.src, m.tgt);
    auto it = e.index.find(m);
    return it == e.index.end() ? -1 : it->second;
}

Morphism CombCategory::compose(const Morphism& beta, const Morphism& alpha) const {
    if (alpha.tgt != beta.src)
        throw std::invalid_argument(family() + ": cannot compose " + label(beta) + " after " + label(alpha));
    return compose_impl(beta, alpha);
}

const FiniteGroup& CombCategory::group(int x) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = groups_.find(x);
        if (it != groups_.end()) return *it->second;
    }
    const auto& g = hom(x, x);
    const int n = static_cast<int>(g.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = index_of(compose(g[a], g[b]));
            if (c < 0) throw std::logic_error(family() + ": endomorphisms not closed under composition");
            table[a][b] = c;
        }
    auto grp = std::make_unique<FiniteGroup>(std::move(table), n <= 64);
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = groups_.emplace(x, std::move(grp));
    return *it->second;
}

std::vector<int> CombCategory::rho(const Morphism&) const {
    throw std::logic_error(family() + " has no functor to FI");
}

std::string CombCategory::label(const Morphism& m) const {
    std::string s = std::to_string(m.src) + ">" + std::to_string(m.tgt) + ":";
    for (std::size_t i = 0; i < m.data.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m.data[i]);
    }
    return s;
}

std::optional<Morphism> CombCategory::find_f2(const Morphism& f, const Morphism& f1, int z) const {
    if (z < min_object()) return std::nullopt;
    const int y = f.tgt - 1;
    for (const auto& f2 : hom(z, y))
        if (compose(genetic_embed(f2), f1) == f) return f2;
    return std::nullopt;
}

std::optional<Factorization> CombCategory::factorize_min(const Morphism& f) const {
    if (auto c = canonical_f1(f)) {
        auto f2 = find_f2(f, c->second, c->first);
        if (!f2) throw std::logic_error(family() + ": canonical factor does not extend for " + label(f));
        return Factorization{c->first, c->second, *f2};
    }
    return factorize_brute(f);
}

std::optional<Factorization> CombCategory::factorize_brute(const Morphism& f) const {
    const int x = f.src;
    const int y = f.tgt - 1;
    for (int z = min_object(); z <= x && z <= y; ++z) {
        if (1 + z < x) continue;
        for (const auto& f1 : hom(x, 1 + z))
            if (auto f2 = find_f2(f, f1, z)) return Factorization{z, f1, *f2};
    }
    return std::nullopt;
}

std::vector<int> orbit_reps(int n, const FiniteGroup& g, const std::function<int(int, int)>& act,
                            std::vector<int>* orbit_of) {
    std::vector<int> owner(n, -1);
    std::vector<int> reps;
    for (int e = 0; e < n; ++e) {
        if (owner[e] >= 0) continue;
        const int id = static_cast<int>(reps.size());
        reps.push_back(e);
        owner[e] = id;
        std::deque<int> queue{e};
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int s : g.generators()) {
                int nxt = act(s, cur);
                if (nxt < 0 || nxt >= n) throw std::invalid_argument("orbit_reps: action leaves the set");
                if (owner[nxt] < 0) {
                    owner[nxt] = id;
                    queue.push_back(nxt);
                }
            }
        }
    }
    if (orbit_of) *orbit_of = owner;
    return reps;
}

bool spot_check_action(int n, const FiniteGroup& g, const std::function<int(int, int)>& act) {
    for (int e = 0; e < n; ++e) {
        if (act(0, e) != e) return false;
        for (int a : g.generators())
            for (int b : g.generators())
                if (act(g.mul(a, b), e) != act(a, act(b, e))) return false;
    }
    return true;
}

}  // namespace koszulkit
