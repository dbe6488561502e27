#include "koszulkit/zoo.hpp"

#include "koszulkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace koszulkit {

namespace {

void injections(int x, int y, bool increasing, std::vector<int>& cur, std::vector<char>& used,
                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == x) {
        out.push_back(cur);
        return;
    }
    const int start = (increasing && !cur.empty()) ? cur.back() + 1 : 1;
    for (int v = start; v <= y; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        cur.push_back(v);
        injections(x, y, increasing, cur, used, out);
        cur.pop_back();
        used[v] = 0;
    }
}

std::vector<std::vector<int>> all_injections(int x, int y, bool increasing) {
    std::vector<std::vector<int>> out;
    if (x > y) return out;
    std::vector<int> cur;
    std::vector<char> used(y + 1, 0);
    injections(x, y, increasing, cur, used, out);
    return out;
}

// All words of length n over {lo, ..., hi}, lexicographic.
std::vector<std::vector<int>> all_words(int n, int lo, int hi) {
    std::vector<std::vector<int>> out;
    if (hi < lo && n > 0) return out;
    std::vector<int> cur(n, lo);
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == hi) cur[i--] = lo;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

bool ordered_surjection(const std::vector<int>& f, int x) {
    std::vector<int> first(x + 1, -1);
    for (int r = 0; r < static_cast<int>(f.size()); ++r)
        if (first[f[r]] < 0) first[f[r]] = r;
    for (int s = 1; s <= x; ++s)
        if (first[s] < 0) return false;
    for (int s = 1; s < x; ++s)
        if (first[s] > first[s + 1]) return false;
    return true;
}

bool surjection(const std::vector<int>& f, int x) {
    std::vector<char> hit(x + 1, 0);
    for (int v : f) hit[v] = 1;
    for (int s = 1; s <= x; ++s)
        if (!hit[s]) return false;
    return true;
}

// FI_Γ and its relatives: payload [f(1..x), c(1..x)].
class FIGammaCategory final : public CombCategory {
public:
    FIGammaCategory(std::string name, FiniteGroup gamma, bool ordered, bool prime)
        : name_(std::move(name)), gamma_(std::move(gamma)), ordered_(ordered), prime_(prime) {}

    std::string family() const override { return name_; }
    Morphism identity(int x) const override {
        Morphism m{x, x, std::vector<int>(2 * x, 0)};
        for (int r = 0; r < x; ++r) m.data[r] = r + 1;
        return m;
    }
    bool has_rho() const override { return !prime_; }
    std::vector<int> rho(const Morphism& m) const override {
        if (prime_) return CombCategory::rho(m);
        return {m.data.begin(), m.data.begin() + m.src};
    }

protected:
    std::vector<Morphism> enumerate(int x, int y) const override {
        std::vector<Morphism> out;
        auto colours = all_words(x, 0, gamma_.order() - 1);
        for (const auto& f : all_injections(x, y, ordered_)) {
            for (const auto& c : colours) {
                if (prime_ && x == y) {
                    int prod = 0;
                    for (int v : c) prod = gamma_.mul(prod, v);
                    if (prod != 0) continue;
                }
                Morphism m{x, y, f};
                m.data.insert(m.data.end(), c.begin(), c.end());
                out.push_back(std::move(m));
            }
        }
        return out;
    }

    Morphism compose_impl(const Morphism& beta, const Morphism& alpha) const override {
        const int x = alpha.src, y = alpha.tgt;
        Morphism m{x, beta.tgt, std::vector<int>(2 * x)};
        for (int r = 0; r < x; ++r) {
            const int s = alpha.data[r] - 1;
            m.data[r] = beta.data[s];
            m.data[x + r] = gamma_.mul(beta.data[y + s], alpha.data[x + r]);
        }
        return m;
    }

    Morphism tensor_impl(const Morphism& a, const Morphism& b) const override {
        const int x1 = a.src, x2 = b.src;
        Morphism m{x1 + x2, a.tgt + b.tgt, {}};
        m.data.reserve(2 * (x1 + x2));
        for (int r = 0; r < x1; ++r) m.data.push_back(a.data[r]);
        for (int r = 0; r < x2; ++r) m.data.push_back(b.data[r] + a.tgt);
        for (int r = 0; r < x1; ++r) m.data.push_back(a.data[x1 + r]);
        for (int r = 0; r < x2; ++r) m.data.push_back(b.data[x2 + r]);
        return m;
    }

    std::optional<std::pair<int, Morphism>> canonical_f1(const Morphism& f) const override {
        if (prime_) return std::nullopt;
        const int x = f.src;
        int m = -1;
        for (int r = 0; r < x; ++r)
            if (f.data[r] == 1) m = r;
        if (m >= 0) {
            Morphism f1{x, x, std::vector<int>(2 * x, 0)};
            int next = 2;
            for (int r = 0; r < x; ++r) f1.data[r] = (r == m) ? 1 : next++;
            f1.data[x + m] = f.data[x + m];
            return std::make_pair(x - 1, f1);
        }
        Morphism f1{x, x + 1, std::vector<int>(2 * x, 0)};
        for (int r = 0; r < x; ++r) f1.data[r] = r + 2;
        return std::make_pair(x, f1);
    }

private:
    std::string name_;
    FiniteGroup gamma_;
    bool ordered_;
    bool prime_;
};

// FI_d and OI_d: payload [f(1..x), delta(1..y)].
class FIdCategory final : public CombCategory {
public:
    FIdCategory(std::string name, int d, bool ordered) : name_(std::move(name)), d_(d), ordered_(ordered) {}

    std::string family() const override { return name_; }
    Morphism identity(int x) const override {
        Morphism m{x, x, std::vector<int>(2 * x, 0)};
        for (int r = 0; r < x; ++r) m.data[r] = r + 1;
        return m;
    }
    bool has_rho() const override { return true; }
    std::vector<int> rho(const Morphism& m) const override { return {m.data.begin(), m.data.begin() + m.src}; }

protected:
    std::vector<Morphism> enumerate(int x, int y) const override {
        std::vector<Morphism> out;
        for (const auto& f : all_injections(x, y, ordered_)) {
            std::vector<char> in_image(y + 1, 0);
            for (int v : f) in_image[v] = 1;
            std::vector<int> free;
            for (int s = 1; s <= y; ++s)
                if (!in_image[s]) free.push_back(s);
            for (const auto& w : all_words(static_cast<int>(free.size()), 1, d_)) {
                Morphism m{x, y, f};
                std::vector<int> delta(y, 0);
                for (std::size_t i = 0; i < free.size(); ++i) delta[free[i] - 1] = w[i];
                m.data.insert(m.data.end(), delta.begin(), delta.end());
                out.push_back(std::move(m));
            }
        }
        return out;
    }

    Morphism compose_impl(const Morphism& beta, const Morphism& alpha) const override {
        const int x = alpha.src, y = alpha.tgt, z = beta.tgt;
        Morphism m{x, z, std::vector<int>(x + z, 0)};
        for (int r = 0; r < x; ++r) m.data[r] = beta.data[alpha.data[r] - 1];
        // positions of [z] hit by beta carry alpha's labels, the rest keep beta's
        for (int t = 0; t < z; ++t) m.data[x + t] = beta.data[y + t];
        for (int s = 0; s < y; ++s) m.data[x + beta.data[s] - 1] = alpha.data[x + s];
        return m;
    }

    Morphism tensor_impl(const Morphism& a, const Morphism& b) const override {
        const int x1 = a.src, x2 = b.src, y1 = a.tgt, y2 = b.tgt;
        Morphism m{x1 + x2, y1 + y2, {}};
        for (int r = 0; r < x1; ++r) m.data.push_back(a.data[r]);
        for (int r = 0; r < x2; ++r) m.data.push_back(b.data[r] + y1);
        for (int t = 0; t < y1; ++t) m.data.push_back(a.data[x1 + t]);
        for (int t = 0; t < y2; ++t) m.data.push_back(b.data[x2 + t]);
        return m;
    }

    std::optional<std::pair<int, Morphism>> canonical_f1(const Morphism& f) const override {
        const int x = f.src;
        int m = -1;
        for (int r = 0; r < x; ++r)
            if (f.data[r] == 1) m = r;
        if (m >= 0) {
            Morphism f1{x, x, std::vector<int>(2 * x, 0)};
            int next = 2;
            for (int r = 0; r < x; ++r) f1.data[r] = (r == m) ? 1 : next++;
            return std::make_pair(x - 1, f1);
        }
        Morphism f1{x, x + 1, std::vector<int>(2 * x + 1, 0)};
        for (int r = 0; r < x; ++r) f1.data[r] = r + 2;
        f1.data[x] = f.data[x];
        return std::make_pair(x, f1);
    }

private:
    std::string name_;
    int d_;
    bool ordered_;
};

// Opposites of FS_Γ and OS_Γ. A morphism x -> y is a coloured surjection
// [y] -> [x]; payload [f(1..y), c(1..y)].
class FSOpCategory final : public CombCategory {
public:
    FSOpCategory(std::string name, FiniteGroup gamma, bool ordered)
        : name_(std::move(name)), gamma_(std::move(gamma)), ordered_(ordered) {}

    std::string family() const override { return name_; }
    int min_object() const override { return 1; }
    Morphism identity(int x) const override {
        Morphism m{x, x, std::vector<int>(2 * x, 0)};
        for (int r = 0; r < x; ++r) m.data[r] = r + 1;
        return m;
    }

protected:
    std::vector<Morphism> enumerate(int x, int y) const override {
        std::vector<Morphism> out;
        auto colours = all_words(y, 0, gamma_.order() - 1);
        for (const auto& f : all_words(y, 1, x)) {
            if (ordered_ ? !ordered_surjection(f, x) : !surjection(f, x)) continue;
            for (const auto& c : colours) {
                Morphism m{x, y, f};
                m.data.insert(m.data.end(), c.begin(), c.end());
                out.push_back(std::move(m));
            }
        }
        return out;
    }

    // beta: y -> z is (fb: [z] -> [y], cb); alpha: x -> y is (fa: [y] -> [x], ca).
    Morphism compose_impl(const Morphism& beta, const Morphism& alpha) const override {
        const int y = alpha.tgt, z = beta.tgt;
        Morphism m{alpha.src, z, std::vector<int>(2 * z)};
        for (int r = 0; r < z; ++r) {
            const int s = beta.data[r] - 1;
            m.data[r] = alpha.data[s];
            m.data[z + r] = gamma_.mul(alpha.data[y + s], beta.data[z + r]);
        }
        return m;
    }

    Morphism tensor_impl(const Morphism& a, const Morphism& b) const override {
        const int y1 = a.tgt, y2 = b.tgt;
        Morphism m{a.src + b.src, y1 + y2, {}};
        for (int r = 0; r < y1; ++r) m.data.push_back(a.data[r]);
        for (int r = 0; r < y2; ++r) m.data.push_back(b.data[r] + a.src);
        for (int r = 0; r < y1; ++r) m.data.push_back(a.data[y1 + r]);
        for (int r = 0; r < y2; ++r) m.data.push_back(b.data[y2 + r]);
        return m;
    }

    std::optional<std::pair<int, Morphism>> canonical_f1(const Morphism& f) const override {
        // ordered surjections: the unique ordered f1 is found by search
        if (ordered_) return std::nullopt;
        const int x = f.src, n = f.tgt;
        const int m = f.data[0];
        int preimage = 0;
        for (int r = 0; r < n; ++r)
            if (f.data[r] == m) ++preimage;
        if (preimage == 1) {
            Morphism f1{x, x, std::vector<int>(2 * x, 0)};
            f1.data[0] = m;
            int next = 1;
            for (int r = 1; r < x; ++r) {
                if (next == m) ++next;
                f1.data[r] = next++;
            }
            f1.data[x] = f.data[n];
            return std::make_pair(x - 1, f1);
        }
        Morphism f1{x, x + 1, std::vector<int>(2 * (x + 1), 0)};
        f1.data[0] = m;
        for (int r = 1; r <= x; ++r) f1.data[r] = r;
        f1.data[x + 1] = f.data[n];
        return std::make_pair(x, f1);
    }

private:
    std::string name_;
    FiniteGroup gamma_;
    bool ordered_;
};

// Nonzero rows of the reduced row-echelon form of a matrix over F_q.
std::vector<std::vector<int>> gf_row_basis(std::vector<std::vector<int>> a, int q) {
    int inv[8] = {0};
    for (int u = 1; u < q; ++u)
        for (int v = 1; v < q; ++v)
            if ((u * v) % q == 1) inv[u] = v;
    const std::size_t R = a.size();
    const std::size_t C = R ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        const int s = inv[a[r][c]];
        for (auto& v : a[r]) v = (v * s) % q;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const int f = a[i][c];
            for (std::size_t j = 0; j < C; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % q + q) % q;
        }
        ++r;
    }
    a.resize(r);
    return a;
}

// VI over F_q: injective y-by-x matrices, row-major.
class VICategory final : public CombCategory {
public:
    VICategory(int q, int max_obj) : q_(q), max_obj_(max_obj) {}

    std::string family() const override { return "VI"; }
    int max_object() const override { return max_obj_; }
    Morphism identity(int x) const override {
        Morphism m{x, x, std::vector<int>(x * x, 0)};
        for (int r = 0; r < x; ++r) m.data[r * x + r] = 1;
        return m;
    }

protected:
    std::vector<Morphism> enumerate(int x, int y) const override {
        std::vector<Morphism> out;
        for (const auto& w : all_words(x * y, 0, q_ - 1)) {
            std::vector<std::vector<int>> rows(y, std::vector<int>(x));
            for (int i = 0; i < y; ++i)
                for (int j = 0; j < x; ++j) rows[i][j] = w[i * x + j];
            if (x > 0 && static_cast<int>(gf_rank(rows, q_)) != x) continue;
            out.push_back(Morphism{x, y, w});
        }
        return out;
    }

    Morphism compose_impl(const Morphism& beta, const Morphism& alpha) const override {
        const int x = alpha.src, y = alpha.tgt, z = beta.tgt;
        Morphism m{x, z, std::vector<int>(z * x, 0)};
        for (int i = 0; i < z; ++i)
            for (int j = 0; j < x; ++j) {
                int s = 0;
                for (int k = 0; k < y; ++k) s += beta.data[i * y + k] * alpha.data[k * x + j];
                m.data[i * x + j] = s % q_;
            }
        return m;
    }

    Morphism tensor_impl(const Morphism& a, const Morphism& b) const override {
        const int x1 = a.src, y1 = a.tgt, x2 = b.src, y2 = b.tgt;
        const int x = x1 + x2, y = y1 + y2;
        Morphism m{x, y, std::vector<int>(x * y, 0)};
        for (int i = 0; i < y1; ++i)
            for (int j = 0; j < x1; ++j) m.data[i * x + j] = a.data[i * x1 + j];
        for (int i = 0; i < y2; ++i)
            for (int j = 0; j < x2; ++j) m.data[(y1 + i) * x + x1 + j] = b.data[i * x2 + j];
        return m;
    }

    // First row u is kept; the lower block h is replaced by a row basis p of
    // itself, so z = rank h.
    std::optional<std::pair<int, Morphism>> canonical_f1(const Morphism& f) const override {
        const int x = f.src, n = f.tgt;
        std::vector<std::vector<int>> h(n - 1, std::vector<int>(x));
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < x; ++j) h[i - 1][j] = f.data[i * x + j];
        auto p = gf_row_basis(h, q_);
        const int z = static_cast<int>(p.size());
        Morphism f1{x, 1 + z, std::vector<int>((1 + z) * x)};
        for (int j = 0; j < x; ++j) f1.data[j] = f.data[j];
        for (int i = 0; i < z; ++i)
            for (int j = 0; j < x; ++j) f1.data[(1 + i) * x + j] = p[i][j];
        return std::make_pair(z, f1);
    }

private:
    int q_;
    int max_obj_;
};

}  // namespace

const std::vector<std::string>& known_families() {
    static const std::vector<std::string> names = {"FI",   "FI_gamma", "FI_prime_gamma", "OI_gamma",   "FI_d",
                                                   "OI_d", "FS_gamma_op", "OS_gamma_op", "VI"};
    return names;
}

bool family_needs_gamma(const std::string& family) {
    return family == "FI_gamma" || family == "FI_prime_gamma" || family == "OI_gamma" || family == "FS_gamma_op" ||
           family == "OS_gamma_op";
}

CombCategoryPtr make_category(const CategorySpec& spec) {
    const auto& names = known_families();
    if (std::find(names.begin(), names.end(), spec.family) == names.end())
        throw SpecError("family", "unknown family '" + spec.family + "'");
    const bool needs_gamma = family_needs_gamma(spec.family);
    const bool needs_d = spec.family == "FI_d" || spec.family == "OI_d";
    const bool needs_q = spec.family == "VI";
    if (needs_gamma != spec.gamma.has_value())
        throw SpecError("gamma", needs_gamma ? "required by " + spec.family : "not allowed for " + spec.family);
    if (needs_d != spec.d.has_value())
        throw SpecError("d", needs_d ? "required by " + spec.family : "not allowed for " + spec.family);
    if (needs_q != spec.q.has_value())
        throw SpecError("q", needs_q ? "required by " + spec.family : "not allowed for " + spec.family);
    if (needs_d && *spec.d < 1) throw SpecError("d", "must be >= 1");

    const std::string& f = spec.family;
    if (f == "FI") return std::make_shared<FIGammaCategory>("FI", FiniteGroup::trivial(), false, false);
    if (f == "FI_gamma") return std::make_shared<FIGammaCategory>(f, *spec.gamma, false, false);
    if (f == "OI_gamma") return std::make_shared<FIGammaCategory>(f, *spec.gamma, true, false);
    if (f == "FI_prime_gamma") {
        if (!spec.gamma->is_abelian()) throw SpecError("gamma", "FI_prime_gamma needs an abelian group");
        return std::make_shared<FIGammaCategory>(f, *spec.gamma, false, true);
    }
    if (f == "FI_d") return std::make_shared<FIdCategory>(f, *spec.d, false);
    if (f == "OI_d") return std::make_shared<FIdCategory>(f, *spec.d, true);
    if (f == "FS_gamma_op") return std::make_shared<FSOpCategory>(f, *spec.gamma, false);
    if (f == "OS_gamma_op") return std::make_shared<FSOpCategory>(f, *spec.gamma, true);
    // VI
    const int q = *spec.q;
    if (!is_supported_prime(q)) throw SpecError("q", "must be a prime <= 7");
    if (!spec.allow_large && q > 3) throw SpecError("q", "q > 3 needs allow_large");
    return std::make_shared<VICategory>(q, spec.allow_large ? 4 : 3);
}

ConditionReport verify_c_conditions(const CombCategory& c, int bound) {
    const int lo = c.min_object();
    ConditionCheck c1{"C1", true, ""}, c2{"C2", true, ""}, c3e{"C3-existence", true, ""},
        c3u{"C3-f2-unique", true, ""}, c3o{"C3-f1-orbit", true, ""}, c3m{"C3-procedure", true, ""},
        c4{"C4", true, ""};

    // (C2) the genetic embedding is injective and lands in the shifted hom-set.
    for (int x = lo; x <= bound - 1; ++x)
        for (int y = x; y <= bound - 1; ++y) {
            std::set<int> images;
            for (const auto& a : c.hom(x, y)) {
                Morphism e = c.genetic_embed(a);
                int idx = (e.src == x + 1 && e.tgt == y + 1) ? c.index_of(e) : -1;
                if (idx < 0 || !images.insert(idx).second) c2.fail(c.label(a));
            }
        }

    // (C1) unit and interchange laws on a deterministic sample.
    auto sample = [&](int x, int y) {
        const auto& h = c.hom(x, y);
        std::vector<Morphism> s;
        const std::size_t step = std::max<std::size_t>(1, h.size() / 4);
        for (std::size_t i = 0; i < h.size(); i += step) s.push_back(h[i]);
        return s;
    };
    if (lo == 0) {
        for (int x = 0; x <= bound; ++x)
            for (int y = x; y <= bound; ++y)
                for (const auto& a : sample(x, y))
                    if (c.tensor(c.identity(0), a) != a || c.tensor(a, c.identity(0)) != a) c1.fail(c.label(a));
    }
    for (int x1 = lo; x1 <= bound; ++x1)
        for (int x2 = lo; x1 + x2 <= bound; ++x2)
            if (c.tensor(c.identity(x1), c.identity(x2)) != c.identity(x1 + x2))
                c1.fail("id_" + std::to_string(x1) + " ⊙ id_" + std::to_string(x2));
    for (int x1 = lo; x1 <= bound; ++x1)
        for (int y1 = x1; y1 <= bound; ++y1)
            for (int z1 = y1; z1 <= bound; ++z1)
                for (int x2 = lo; x2 <= bound; ++x2)
                    for (int y2 = x2; y2 <= bound; ++y2)
                        for (int z2 = y2; z1 + z2 <= bound; ++z2)
                            for (const auto& b2 : sample(x1, y1))
                                for (const auto& b1 : sample(y1, z1))
                                    for (const auto& b4 : sample(x2, y2))
                                        for (const auto& b3 : sample(y2, z2)) {
                                            Morphism lhs = c.tensor(c.compose(b1, b2), c.compose(b3, b4));
                                            Morphism rhs = c.compose(c.tensor(b1, b3), c.tensor(b2, b4));
                                            if (lhs != rhs) c1.fail(c.label(lhs) + " vs " + c.label(rhs));
                                        }

    // Exhaustive factorization table: for f in hom(x, 1+y), all (z, f1, f2)
    // with (I ⊙ f2) ∘ f1 = f.
    struct Entry {
        int minz = 1 << 30;
        std::map<int, int> f1_count;  // f1 index at minimal z -> number of f2
    };
    std::map<std::pair<int, int>, std::vector<Entry>> table;
    for (int x = lo; x <= bound; ++x)
        for (int y = std::max(lo, x - 1); 1 + y <= bound; ++y) {
            auto& entries = table[{x, y}];
            entries.assign(c.hom(x, 1 + y).size(), Entry{});
            for (int z = std::max(lo, x - 1); z <= std::min(x, y); ++z)
                for (std::size_t i1 = 0; i1 < c.hom(x, 1 + z).size(); ++i1) {
                    const auto& f1 = c.hom(x, 1 + z)[i1];
                    for (const auto& f2 : c.hom(z, y)) {
                        int idx = c.index_of(c.compose(c.genetic_embed(f2), f1));
                        if (idx < 0) {
                            c3e.fail("composite outside hom-set for " + c.label(f1));
                            continue;
                        }
                        Entry& e = entries[idx];
                        if (z < e.minz) {
                            e.minz = z;
                            e.f1_count.clear();
                        }
                        if (z == e.minz) ++e.f1_count[static_cast<int>(i1)];
                    }
                }
            // a factorization with z < x-1 would need hom(x, 1+z) nonempty, impossible
        }

    for (auto& [key, entries] : table) {
        const int x = key.first, y = key.second;
        const auto& homf = c.hom(x, 1 + y);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const Entry& e = entries[i];
            const Morphism& f = homf[i];
            if (e.minz > x) {
                c3e.fail(c.label(f));
                continue;
            }
            for (auto [i1, n] : e.f1_count)
                if (n != 1) c3u.fail(c.label(f) + " via " + c.label(c.hom(x, 1 + e.minz)[i1]));
            // valid f1 form one orbit under g . f1 = (I ⊙ g) ∘ f1, g in G_z
            const int z = e.minz;
            const int first = e.f1_count.begin()->first;
            std::set<int> orbit;
            for (const auto& g : c.hom(z, z))
                orbit.insert(c.index_of(c.compose(c.genetic_embed(g), c.hom(x, 1 + z)[first])));
            std::set<int> valid;
            for (auto [i1, n] : e.f1_count) valid.insert(i1);
            if (orbit != valid) c3o.fail(c.label(f));
            auto fm = c.factorize_min(f);
            if (!fm || fm->z != z || c.compose(c.genetic_embed(fm->f2), fm->f1) != f) c3m.fail(c.label(f));
        }
    }

    // (C4) non-factorizability with z < x survives postcomposition by I ⊙ f3.
    for (auto& [key, entries] : table) {
        const int x = key.first, y = key.second;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].minz != x) continue;
            const Morphism& f = c.hom(x, 1 + y)[i];
            for (int yp = y; 1 + yp <= bound; ++yp)
                for (const auto& f3 : c.hom(y, yp)) {
                    Morphism g = c.compose(c.genetic_embed(f3), f);
                    int idx = c.index_of(g);
                    auto it = table.find({x, yp});
                    if (idx < 0 || it == table.end() || it->second[idx].minz != x)
                        c4.fail(c.label(f) + " then I⊙" + c.label(f3));
                }
        }
    }

    ConditionReport r;
    r.checks = {c1, c2, c3e, c3u, c3o, c3m, c4};
    return r;
}

}  // namespace koszulkit
