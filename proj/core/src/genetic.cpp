#include "koszulkit/genetic.hpp"

#include "koszulkit/resolution.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace koszulkit {

namespace {

std::string at(const FiberKey& k) { return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")"; }

// (I ⊙ g) ∘ e for g in G_{x} acting on hom(x', 1+x)
int act_unit(const CombCategory& c, const Morphism& g, const Morphism& e) {
    return c.index_of(c.compose(c.genetic_embed(g), e));
}

}  // namespace

DecompositionWitness decomposition_numbers(const CombCategory& c, int x) {
    if (x < c.min_object() || x + 1 > c.max_object())
        throw std::out_of_range("decomposition_numbers: x + 1 must lie in the family's range");
    DecompositionWitness w;
    w.x = x;

    const auto& hb = c.hom(x, x + 1);
    const auto& gx = c.hom(x, x);
    std::vector<int> orbit_of;
    const auto reps = orbit_reps(
        static_cast<int>(hb.size()), c.group(x), [&](int g, int e) { return act_unit(c, gx[g], hb[e]); }, &orbit_of);
    for (int r : reps) {
        const auto f = c.factorize_min(hb[r]);
        if (!f) throw std::logic_error("decomposition_numbers: no factorization of " + c.label(hb[r]));
        if (f->z == x) w.beta_reps.push_back(hb[r]);
    }
    w.m = static_cast<int>(w.beta_reps.size());

    if (x - 1 >= c.min_object()) {
        const auto& gprev = c.hom(x - 1, x - 1);
        const auto greps = orbit_reps(static_cast<int>(gx.size()), c.group(x - 1),
                                      [&](int g, int e) { return act_unit(c, gprev[g], gx[e]); });
        for (int r : greps) w.gamma_reps.push_back(gx[r]);
    }
    w.n = static_cast<int>(w.gamma_reps.size());
    return w;
}

ThetaReport verify_theta(const CombCategory& c, DecompositionWitness& w, Interval iv) {
    ThetaReport r;
    w.theta.clear();
    const int x = w.x;
    for (int y = std::max(iv.lo, x - 1); y <= iv.hi && y + 1 <= c.max_object(); ++y) {
        ConditionCheck chk("y=" + std::to_string(y));
        const auto& target = c.hom(x, y + 1);
        std::vector<int> image;
        std::vector<std::string> source;
        auto push = [&](const Morphism& base, int x0, const std::string& tag) {
            if (y < x0) return;
            for (const auto& a : c.hom(x0, y)) {
                image.push_back(c.index_of(c.compose(c.genetic_embed(a), base)));
                source.push_back(tag + ":" + c.label(a));
            }
        };
        for (std::size_t k = 0; k < w.beta_reps.size(); ++k) push(w.beta_reps[k], x, "beta" + std::to_string(k));
        for (std::size_t k = 0; k < w.gamma_reps.size(); ++k) push(w.gamma_reps[k], x - 1, "gamma" + std::to_string(k));
        if (image.size() != target.size()) {
            chk.fail("source dim " + std::to_string(image.size()) + " vs target dim " + std::to_string(target.size()));
        } else {
            std::vector<int> first(target.size(), -1);
            for (std::size_t s = 0; s < image.size() && chk.passed; ++s) {
                if (image[s] < 0) {
                    chk.fail(source[s] + " leaves the hom-set");
                } else if (first[image[s]] >= 0) {
                    chk.fail(source[first[image[s]]] + " and " + source[s] + " both map to " + c.label(target[image[s]]));
                } else {
                    first[image[s]] = static_cast<int>(s);
                }
            }
        }
        w.theta[y] = std::move(image);
        if (!chk.passed && r.bijective) {
            r.bijective = false;
            r.witness = chk.name + ": " + chk.witness;
        }
        r.fibers.push_back(std::move(chk));
    }
    return r;
}

ThetaReport verify_theta(const CombCategory& c, int x, Interval iv) {
    DecompositionWitness w = decomposition_numbers(c, x);
    return verify_theta(c, w, iv);
}

Matrix theta_matrix(const CombCategory& c, const DecompositionWitness& w, int y) {
    const auto& img = w.theta.at(y);
    Matrix m(c.hom(w.x, y + 1).size(), img.size());
    for (std::size_t s = 0; s < img.size(); ++s)
        if (img[s] >= 0) m(img[s], s) = 1;
    return m;
}

ConditionReport check_genetic_axioms(const CombCategory& c, Interval iv) {
    ConditionCheck f1("F1"), f2("F2"), f3("F3");
    for (int x = iv.lo; x <= iv.hi && x + 1 <= c.max_object(); ++x) {
        if (c.genetic_embed(c.identity(x)) != c.identity(x + 1)) f1.fail("identity at " + std::to_string(x));
        for (int y = x; y <= iv.hi && y + 1 <= c.max_object(); ++y) {
            std::set<int> seen;
            for (const auto& a : c.hom(x, y)) {
                const int idx = c.index_of(c.genetic_embed(a));
                if (idx < 0 || !seen.insert(idx).second) f2.fail("hom(" + std::to_string(x) + "," + std::to_string(y) + ") at " + c.label(a));
            }
            for (int z = y; z <= iv.hi && z + 1 <= c.max_object(); ++z)
                for (const auto& b : c.hom(y, z))
                    for (const auto& a : c.hom(x, y)) {
                        if (!f1.passed) break;
                        if (c.genetic_embed(c.compose(b, a)) != c.compose(c.genetic_embed(b), c.genetic_embed(a)))
                            f1.fail(c.label(b) + " o " + c.label(a));
                    }
        }
    }
    for (int x = iv.lo; x <= iv.hi && x + 1 <= c.max_object() && f3.passed; ++x) {
        const ThetaReport t = verify_theta(c, x, iv);
        if (!t.bijective) f3.fail("x=" + std::to_string(x) + " " + t.witness);
    }
    return ConditionReport{{f1, f2, f3}};
}

CrucialLemmaReport verify_crucial_lemma(const LinCat& l, const GradedModule& m, int x) {
    if (!l.has_iota()) throw std::invalid_argument("crucial lemma: category has no genetic embedding");
    if (x < l.lo() + 1 || x > l.hi()) throw std::invalid_argument("crucial lemma: position must lie in [lo+1, hi]");
    const Top tm = top(m);
    for (const auto& [k, u] : tm.complement)
        if (u.dim() > 0 && k.first != x)
            throw std::invalid_argument("crucial lemma: module not generated in position " + std::to_string(x));

    CrucialLemmaReport r;
    auto fail = [&](const std::string& w) {
        if (r.holds) r.witness = w;
        r.holds = false;
    };
    LinCatPtr d = truncate(l, Interval{l.lo(), l.hi() - 1});
    const Cover cov = projective_cover(m);
    const GradedModule a = restrict_genetic(cov.kernel, d);
    const GradedModule pr = restrict_genetic(cov.projective, d);
    const GradedModule mr = restrict_genetic(m, d);
    const Cover cov2 = projective_cover(mr);
    const GradedModule& b = cov2.kernel;
    r.restricted_syzygy = a.dims();
    r.syzygy_of_restriction = b.dims();

    // π↾ on the fibers of P↾
    std::map<FiberKey, Matrix> pi_r;
    for (const auto& [k, f] : pr.fibers()) pi_r[k] = cov.pi.at({k.first + 1, k.second});

    const Cover cov0 = projective_cover(pr);
    if (!cov0.kernel.is_zero()) {
        fail("restriction of the cover is not projective");
        return r;
    }

    // equivariant lift of π↾ on the top of P↾ through π'
    std::vector<Matrix> phi;
    for (const auto& s : cov0.summands) {
        const FiberKey k{s.x, s.shift};
        const int pd = cov2.projective.dim(k.first, k.second);
        const Matrix v = pi_r.at(k) * s.top_basis;
        if (v.rows() == 0 || pd == 0) {
            phi.emplace_back(pd, s.top_dim);
            continue;
        }
        const auto& f2 = cov2.projective.fiber(k.first, k.second);
        const Subspace ker = cov2.kernel_basis.at(k);
        const Subspace comp = orthogonal_complement(ker, full_subspace(f2.dim), f2.gram);
        const Matrix& pi2 = cov2.pi.at(k);
        phi.push_back(comp.basis * (inverse(pi2 * comp.basis) * v));
    }
    const auto t0 = induced_map(cov0, cov2.projective, phi);
    std::map<FiberKey, Matrix> t;
    for (const auto& [k, f] : pr.fibers()) t[k] = t0.at(k) * inverse(cov0.pi.at(k));

    if (auto w = hom_defect(pr, cov2.projective, t)) fail("comparison map: " + *w);
    SubspaceFamily ker_t;
    for (const auto& [k, f] : pr.fibers()) {
        const Matrix& tk = t.at(k);
        const Matrix& p2 = cov2.pi.count(k) ? cov2.pi.at(k) : Matrix(0, tk.rows());
        if (p2.rows() > 0 && p2 * tk != pi_r.at(k)) fail("π' t differs from π↾ at " + at(k));
        if (rank(tk) != static_cast<std::size_t>(cov2.projective.dim(k.first, k.second)))
            fail("comparison map not onto at " + at(k));
        ker_t[k] = tk.rows() == 0 ? full_subspace(f.dim) : kernel_basis(tk);
    }
    for (const auto& [k, f] : cov2.projective.fibers())
        if (!pr.has_fiber(k.first, k.second)) fail("comparison map not onto at " + at(k));
    if (!r.holds) return r;

    const GradedModule q = submodule(pr, ker_t);
    r.complement = q.dims();
    const Cover covq = projective_cover(q);
    if (!covq.kernel.is_zero()) fail("complement is not projective");
    for (const auto& s : covq.summands) {
        r.complement_top[{s.x, s.shift}] += s.top_dim;
        if (s.x != x) fail("complement has a generator at " + at({s.x, s.shift}));
    }

    std::set<FiberKey> keys;
    for (const auto& [k, n] : r.restricted_syzygy) keys.insert(k);
    for (const auto& [k, n] : r.syzygy_of_restriction) keys.insert(k);
    for (const auto& [k, n] : r.complement) keys.insert(k);
    auto get = [](const std::map<FiberKey, int>& mp, const FiberKey& k) {
        auto it = mp.find(k);
        return it == mp.end() ? 0 : it->second;
    };
    for (const auto& k : keys)
        if (get(r.restricted_syzygy, k) != get(r.syzygy_of_restriction, k) + get(r.complement, k))
            fail("dimensions do not add up at " + at(k));

    const auto ta = top(a).dims();
    const auto tb = top(b).dims();
    std::set<FiberKey> tkeys;
    for (const auto& [k, n] : ta) tkeys.insert(k);
    for (const auto& [k, n] : tb) tkeys.insert(k);
    for (const auto& [k, n] : r.complement_top) tkeys.insert(k);
    for (const auto& k : tkeys)
        if (get(ta, k) != get(tb, k) + get(r.complement_top, k)) fail("tops do not add up at " + at(k));
    return r;
}

}  // namespace koszulkit
