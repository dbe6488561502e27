#include "koszulkit/resolution.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace koszulkit {

namespace {

// Action of G_x on the top piece U, in U-coordinates, cached per element.
class TopRep {
public:
    TopRep(const GradedModule& m, int x, int i, const Subspace& u) : G_(*m.cat().group(x)), cache_(G_.order()) {
        const auto& f = m.fiber(x, i);
        for (const auto& g : f.group_gens) gens_.push_back(u.coordinates(g * u.basis));
        cache_[0] = Matrix::identity(u.dim());
    }

    const Matrix& operator()(int g) {
        if (!cache_[g]) cache_[g] = (*this)(G_.parent(g)) * gens_[G_.parent_gen(g)];
        return *cache_[g];
    }

private:
    const FiniteGroup& G_;
    std::vector<Matrix> gens_;
    std::vector<std::optional<Matrix>> cache_;
};

// Orbits of the right G_x-action on hom(x,y): beta = sign * reps[orbit] o g.
struct OrbitData {
    std::vector<int> reps;
    std::vector<int> orbit;
    std::vector<int> g;
    std::vector<int> sign;
    // Stabilizer generators of each representative with their sign character.
    std::vector<std::vector<std::pair<int, int>>> stab;
};

OrbitData right_orbits(const LinCat& c, int x, int y) {
    const FiniteGroup& G = *c.group(x);
    const CompBlock& blk = c.block(x, x, y);
    if (!blk.monomial()) throw std::invalid_argument("projective cover needs monomial composition with G_" + std::to_string(x));
    const int n = c.dim(x, y);
    OrbitData d;
    d.orbit.assign(n, -1);
    d.g.assign(n, 0);
    d.sign.assign(n, 1);
    for (int start = 0; start < n; ++start) {
        if (d.orbit[start] >= 0) continue;
        const int o = static_cast<int>(d.reps.size());
        d.reps.push_back(start);
        d.stab.emplace_back();
        d.orbit[start] = o;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int b = queue.front();
            queue.pop_front();
            for (int u : G.generators()) {
                const int t = blk.mono_index(b, u);
                if (t < 0) throw std::invalid_argument("group element composes to zero");
                const int s = blk.mono_sign(b, u) * d.sign[b];
                const int gu = G.mul(d.g[b], u);
                if (d.orbit[t] < 0) {
                    d.orbit[t] = o;
                    d.g[t] = gu;
                    d.sign[t] = s;
                    queue.push_back(t);
                    continue;
                }
                const int h = G.mul(gu, G.inv(d.g[t]));
                const int chi = s * d.sign[t];
                if (h == 0 && chi == 1) continue;
                if (h == 0) {
                    d.stab[o].push_back({0, -1});
                    continue;
                }
                bool seen = false;
                for (const auto& p : d.stab[o]) seen = seen || (p.first == h && p.second == chi);
                if (!seen) d.stab[o].push_back({h, chi});
            }
        }
    }
    return d;
}

struct OrbitPiece {
    Matrix basis;  // in U-coordinates
    Matrix proj;   // U-coordinates -> piece coordinates
    int offset = 0;
};

struct SummandFiber {
    OrbitData orbits;
    std::vector<OrbitPiece> pieces;
    int dim = 0;
    Matrix gram;
};

GradedModule build_summand(const GradedModule& m, int x, int i, const Subspace& u, CoverSummand& layout) {
    const LinCat& c = m.cat();
    TopRep rho(m, x, i, u);
    const Matrix gu = u.basis.transpose() * m.fiber(x, i).gram * u.basis;
    const int ud = static_cast<int>(u.dim());

    std::map<int, SummandFiber> fib;
    for (int y = x; y <= c.hi(); ++y) {
        if (c.dim(x, y) == 0) continue;
        SummandFiber sf;
        sf.orbits = right_orbits(c, x, y);
        for (std::size_t o = 0; o < sf.orbits.reps.size(); ++o) {
            Matrix b = Matrix::identity(ud);
            for (const auto& [h, chi] : sf.orbits.stab[o]) {
                if (b.cols() == 0) break;
                Matrix d = rho(h) * b - b.scaled(chi);
                Subspace k = kernel_basis(d);
                b = b * k.basis;
            }
            OrbitPiece p;
            p.offset = sf.dim;
            if (b.cols() > 0) {
                Matrix bg = b.transpose() * gu;
                Matrix gram = bg * b;
                p.proj = inverse(gram) * bg;
                sf.dim += static_cast<int>(b.cols());
                layout.pieces.push_back({y, sf.orbits.reps[o], b, p.offset});
            } else {
                p.proj = Matrix(0, ud);
            }
            p.basis = std::move(b);
            sf.pieces.push_back(std::move(p));
        }
        if (sf.dim == 0) continue;
        std::vector<Matrix> grams;
        for (const auto& p : sf.pieces)
            if (p.basis.cols() > 0) grams.push_back(p.basis.transpose() * gu * p.basis);
        sf.gram = block_diagonal(grams);
        fib.emplace(y, std::move(sf));
    }

    // block of e o (reps[o] (x) B_o) expressed in the pieces at the target
    auto image = [&](const SummandFiber& tgt, int beta, int sign, const Matrix& bo) {
        const int o = tgt.orbits.orbit[beta];
        const OrbitPiece& p = tgt.pieces[o];
        Matrix out = p.proj * (rho(tgt.orbits.g[beta]) * bo);
        const int s = sign * tgt.orbits.sign[beta];
        return std::make_pair(p.offset, s < 0 ? out.scaled(-1) : out);
    };

    GradedModule out(m.cat_ptr());
    for (const auto& [y, sf] : fib) out.add_fiber(y, y - x + i, sf.dim, sf.gram);
    for (const auto& [y, sf] : fib) {
        const int j = y - x + i;
        const CompBlock& gb = c.block(x, y, y);
        std::vector<Matrix> gens;
        for (int t : c.group(y)->generators()) {
            Matrix a(sf.dim, sf.dim);
            for (std::size_t o = 0; o < sf.pieces.size(); ++o) {
                const auto& p = sf.pieces[o];
                if (p.basis.cols() == 0) continue;
                const int alpha = sf.orbits.reps[o];
                const int beta = gb.mono_index(t, alpha);
                auto [off, blk] = image(sf, beta, gb.mono_sign(t, alpha), p.basis);
                a.set_block(off, p.offset, blk);
            }
            gens.push_back(std::move(a));
        }
        out.set_group_action(y, j, std::move(gens));

        auto nxt = fib.find(y + 1);
        if (nxt == fib.end()) continue;
        const SummandFiber& tf = nxt->second;
        const CompBlock& ab = c.block(x, y, y + 1);
        if (!ab.monomial()) throw std::invalid_argument("projective cover needs monomial composition");
        const auto& reps = c.arrow_reps(y);
        for (std::size_t r = 0; r < reps.size(); ++r) {
            Matrix a(tf.dim, sf.dim);
            for (std::size_t o = 0; o < sf.pieces.size(); ++o) {
                const auto& p = sf.pieces[o];
                if (p.basis.cols() == 0) continue;
                const int alpha = sf.orbits.reps[o];
                const int beta = ab.mono_index(reps[r], alpha);
                if (beta < 0) continue;
                auto [off, blk] = image(tf, beta, ab.mono_sign(reps[r], alpha), p.basis);
                a.set_block(off, p.offset, blk);
            }
            out.set_arrow_action(y, j, static_cast<int>(r), std::move(a));
        }
    }
    return out;
}

}  // namespace

Cover projective_cover(const GradedModule& m) {
    Cover cov{{}, zero_module(m.cat_ptr()), {}, {}, zero_module(m.cat_ptr())};
    const Top t = top(m);
    std::vector<GradedModule> parts;
    std::vector<Matrix> incl;
    for (const auto& [k, u] : t.complement) {
        if (u.dim() == 0) continue;
        CoverSummand s;
        s.x = k.first;
        s.shift = k.second;
        s.top_dim = static_cast<int>(u.dim());
        s.top_basis = u.basis;
        parts.push_back(build_summand(m, k.first, k.second, u, s));
        cov.summands.push_back(std::move(s));
        incl.push_back(u.basis);
    }
    if (!parts.empty()) cov.projective = direct_sum(parts);
    cov.pi = induced_map(cov, m, incl);

    for (const auto& [k, f] : cov.projective.fibers()) {
        const Matrix& whole = cov.pi.at(k);
        Subspace ker = whole.rows() == 0 ? full_subspace(f.dim) : kernel_basis(whole);
        if (static_cast<int>(f.dim - ker.dim()) != m.dim(k.first, k.second)) {
            std::ostringstream w;
            w << "projective cover not surjective at (" << k.first << "," << k.second << ")";
            throw std::logic_error(w.str());
        }
        cov.kernel_basis[k] = std::move(ker);
    }
    for (const auto& [k, f] : m.fibers())
        if (!cov.projective.has_fiber(k.first, k.second)) {
            std::ostringstream w;
            w << "projective cover misses fiber (" << k.first << "," << k.second << ")";
            throw std::logic_error(w.str());
        }
    cov.kernel = submodule(cov.projective, cov.kernel_basis);
    return cov;
}

std::map<FiberKey, Matrix> induced_map(const Cover& c, const GradedModule& target, const std::vector<Matrix>& phi) {
    if (phi.size() != c.summands.size()) throw std::invalid_argument("induced_map: one map per summand expected");
    std::map<FiberKey, Matrix> out;
    for (const auto& [k, f] : c.projective.fibers()) out[k] = Matrix(target.dim(k.first, k.second), f.dim);
    // column offset of each summand inside the fibers of the direct sum
    std::map<FiberKey, int> running;
    for (std::size_t s = 0; s < c.summands.size(); ++s) {
        const CoverSummand& cs = c.summands[s];
        std::map<FiberKey, int> width;
        for (const auto& p : cs.pieces) {
            const FiberKey k{p.y, p.y - cs.x + cs.shift};
            const int base = running[k];
            Matrix& dst = out.at(k);
            if (dst.rows() > 0)
                dst.set_block(0, base + p.offset, target.apply(cs.x, p.y, p.rep, cs.shift, phi[s] * p.basis));
            width[k] = std::max(width[k], p.offset + static_cast<int>(p.basis.cols()));
        }
        for (const auto& [k, w] : width) running[k] += w;
    }
    return out;
}

Resolution minimal_resolution(const GradedModule& m, int depth) {
    Resolution r;
    const GradedModule* cur = &m;
    for (int n = 0; n <= depth; ++n) {
        if (cur->is_zero()) break;
        r.steps.push_back(projective_cover(*cur));
        cur = &r.steps.back().kernel;
    }
    return r;
}

BettiTable betti_table(const Resolution& r) {
    BettiTable out;
    for (const auto& s : r.steps) {
        std::map<FiberKey, int> row;
        for (const auto& c : s.summands) row[{c.x, c.shift}] += c.top_dim;
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<StepReport> koszul_certificate(LinCatPtr l, int x, int depth) {
    if (!l->contains(x)) throw std::out_of_range("certificate: object outside the interval");
    if (depth < 0 || x + depth > l->hi())
        throw std::invalid_argument("certificate depth " + std::to_string(depth) + " exceeds the window hi - x = " +
                                    std::to_string(l->hi() - x));
    std::vector<StepReport> out;
    GradedModule cur = regular_simple(l, x);
    for (int n = 0; n <= depth; ++n) {
        StepReport rep;
        rep.n = n;
        const bool last = n == depth;
        Top t = top(cur);
        for (const auto& [k, u] : t.complement) {
            if (u.dim() == 0) continue;
            rep.top[k] = static_cast<int>(u.dim());
            const bool deg_ok = k.second == n;
            const bool pos_ok = k.first == x + n;
            if ((!deg_ok || !pos_ok) && rep.witness.empty()) {
                std::ostringstream w;
                w << "top at (" << k.first << "," << k.second << ") vector " << vector_witness(u.basis.column(0));
                rep.witness = w.str();
            }
            rep.generated_in_degree = rep.generated_in_degree && deg_ok;
            rep.generated_in_position = rep.generated_in_position && pos_ok;
        }
        out.push_back(std::move(rep));
        if (last || cur.is_zero()) {
            for (int k = n + 1; k <= depth; ++k) out.push_back(StepReport{k, true, true, {}, {}});
            break;
        }
        cur = projective_cover(cur).kernel;
    }
    return out;
}

std::map<std::tuple<int, int, int>, int> yoneda_dims(LinCatPtr l, int depth) {
    std::map<std::tuple<int, int, int>, int> out;
    for (int x = l->lo(); x <= l->hi(); ++x) {
        const int d = std::min(depth, l->hi() - x);
        if (d < 0) continue;
        const auto steps = koszul_certificate(l, x, d);
        for (const auto& s : steps) {
            if (!s.passed())
                throw std::domain_error("certificate fails for x=" + std::to_string(x) + " n=" + std::to_string(s.n) +
                                        ": " + s.witness);
            for (int y = x; y <= l->hi(); ++y) {
                auto it = s.top.find({y, s.n});
                out[{x, y, s.n}] = it == s.top.end() ? 0 : it->second;
            }
        }
    }
    return out;
}

}  // namespace koszulkit
