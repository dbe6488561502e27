#include "koszulkit/quadratic.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace koszulkit {

namespace {

struct Signed {
    int idx = -1;
    int sign = 1;
};

Signed mono(const CompBlock& blk, int b, int a) {
    if (!blk.monomial()) throw std::invalid_argument("free cover needs monomial composition in degrees 0 and 1");
    return {blk.mono_index(b, a), blk.mono_sign(b, a)};
}

class PathBuilder {
public:
    explicit PathBuilder(const LinCat& c) : c_(c) {
        for (int d = 2; d <= c.hi() - c.lo(); ++d)
            for (int x = c.lo(); x + d <= c.hi(); ++x) build(x, x + d);
    }

    int count(int x, int y) const {
        if (y <= x + 1) return c_.dim(x, y);
        return levels_.at({x, y}).n;
    }

    // g in G_y acting on a class of Ĉ(x,y), y > x
    Signed left(int x, int y, int g, int k) const {
        if (y == x + 1) return mono(c_.block(x, y, y), g, k);
        const Level& L = levels_.at({x, y});
        const Signed a = mono(c_.block(y - 1, y, y), g, L.top[k]);
        if (a.idx < 0) return {};
        Signed p = pair(x, y, a.idx, L.lower[k]);
        p.sign *= a.sign;
        return p;
    }

    // h in G_x acting on the right of a class of Ĉ(x,y), y > x
    Signed right(int x, int y, int k, int h) const {
        if (y == x + 1) return mono(c_.block(x, x, y), k, h);
        const Level& L = levels_.at({x, y});
        const Signed low = right(x, y - 1, L.lower[k], h);
        if (low.idx < 0) return {};
        Signed p = pair(x, y, L.top[k], low.idx);
        p.sign *= low.sign;
        return p;
    }

    // class of a ⊗ (class cl of Ĉ(x,y-1)), y >= x + 2
    Signed pair(int x, int y, int a, int cl) const {
        const Level& L = levels_.at({x, y});
        const std::size_t i = static_cast<std::size_t>(a) * L.n_lower + cl;
        return {L.pair_cls[i], L.pair_sign[i]};
    }

    std::vector<int> path(int x, int y, int k) const {
        if (y == x + 1) return {k};
        const Level& L = levels_.at({x, y});
        std::vector<int> p = path(x, y - 1, L.lower[k]);
        p.push_back(L.top[k]);
        return p;
    }

    Signed compose(int x, int y, int z, int b, int a) const {
        if (y == z) {
            if (x == y) return mono(c_.block(x, x, x), b, a);
            return left(x, y, b, a);
        }
        if (x == y) return right(x, z, b, a);
        Signed cur{a, 1};
        int level = y;
        for (int arrow : path(y, z, b)) {
            Signed p = pair(x, level + 1, arrow, cur.idx);
            if (p.idx < 0) return {};
            cur = {p.idx, p.sign * cur.sign};
            ++level;
        }
        return cur;
    }

    std::vector<std::pair<int, int>> split(int x, int y) const {
        const Level& L = levels_.at({x, y});
        std::vector<std::pair<int, int>> out;
        for (int k = 0; k < L.n; ++k) out.emplace_back(L.top[k], L.lower[k]);
        return out;
    }

private:
    struct Level {
        int n = 0;
        int n_lower = 0;
        std::vector<int> top;
        std::vector<int> lower;
        std::vector<int> pair_cls;
        std::vector<signed char> pair_sign;
    };

    // Orbits of G_{y-1} on pairs (a, c) under (a, c) ~ (a u, u^{-1} c).
    void build(int x, int y) {
        Level L;
        L.n_lower = count(x, y - 1);
        const int na = c_.dim(y - 1, y);
        const std::size_t n = static_cast<std::size_t>(na) * L.n_lower;
        const FiniteGroup* G = c_.group(y - 1);
        if (!G) throw std::invalid_argument("free cover needs a group in degree 0 at " + std::to_string(y - 1));
        const CompBlock& rb = c_.block(y - 1, y - 1, y);
        std::vector<signed char> val(n, 0);
        std::vector<int> orbit(n, -1);
        std::vector<bool> bad;
        std::vector<std::size_t> roots;
        for (std::size_t start = 0; start < n; ++start) {
            if (val[start] != 0) continue;
            const int o = static_cast<int>(roots.size());
            roots.push_back(start);
            bad.push_back(false);
            val[start] = 1;
            orbit[start] = o;
            std::deque<std::size_t> queue{start};
            while (!queue.empty()) {
                const std::size_t node = queue.front();
                queue.pop_front();
                const int a = static_cast<int>(node / L.n_lower);
                const int cl = static_cast<int>(node % L.n_lower);
                for (int u : G->generators()) {
                    const Signed a2 = mono(rb, a, u);
                    const Signed c2 = left(x, y - 1, G->inv(u), cl);
                    if (a2.idx < 0 || c2.idx < 0) throw std::invalid_argument("group element acts by zero");
                    const std::size_t nb = static_cast<std::size_t>(a2.idx) * L.n_lower + c2.idx;
                    const int s = a2.sign * c2.sign * val[node];
                    if (val[nb] == 0) {
                        val[nb] = static_cast<signed char>(s);
                        orbit[nb] = o;
                        queue.push_back(nb);
                    } else if (val[nb] != s) {
                        bad[o] = true;
                    }
                }
            }
        }
        std::vector<int> cls(roots.size(), -1);
        for (std::size_t o = 0; o < roots.size(); ++o) {
            if (bad[o]) continue;
            cls[o] = L.n++;
            L.top.push_back(static_cast<int>(roots[o] / L.n_lower));
            L.lower.push_back(static_cast<int>(roots[o] % L.n_lower));
        }
        L.pair_cls.resize(n);
        L.pair_sign.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            L.pair_cls[i] = cls[orbit[i]];
            L.pair_sign[i] = val[i];
        }
        levels_[{x, y}] = std::move(L);
    }

    const LinCat& c_;
    std::map<std::pair<int, int>, Level> levels_;
};

// Subspaces of Ĉ(x,y) that split along the fibers of pi: classes grouped by
// the basis element of C(x,y) they map to (and one group for classes mapping
// to zero). Everything built here from monomial data is such a direct sum,
// so each fiber is reduced on its own.
class FiberedSpan {
public:
    FiberedSpan(const Matrix& pi, bool fibered) : n_(pi.cols()), fiber_of_(n_), local_of_(n_) {
        std::map<long, int> key_to_fiber;
        for (std::size_t k = 0; k < n_; ++k) {
            long key = -1;
            if (fibered)
                for (std::size_t r = 0; r < pi.rows(); ++r)
                    if (sgn(pi(r, k)) != 0) key = static_cast<long>(r);
            auto [it, fresh] = key_to_fiber.emplace(key, static_cast<int>(members_.size()));
            if (fresh) members_.emplace_back();
            fiber_of_[k] = it->second;
            local_of_[k] = static_cast<int>(members_[it->second].size());
            members_[it->second].push_back(static_cast<int>(k));
        }
        for (const auto& m : members_) spans_.emplace_back(m.size());
    }

    // Returns the fiber components of v that enlarged the span.
    std::vector<Vector> add(const Vector& v) {
        std::vector<Vector> fresh;
        std::map<int, Vector> parts;
        for (std::size_t k = 0; k < n_; ++k) {
            if (sgn(v[k]) == 0) continue;
            const int f = fiber_of_[k];
            auto it = parts.find(f);
            if (it == parts.end()) it = parts.emplace(f, Vector(members_[f].size())).first;
            it->second[local_of_[k]] = v[k];
        }
        for (auto& [f, local] : parts) {
            if (!spans_[f].add(local)) continue;
            Vector g(n_);
            for (std::size_t j = 0; j < local.size(); ++j) g[members_[f][j]] = local[j];
            fresh.push_back(std::move(g));
        }
        return fresh;
    }

    std::size_t dim() const {
        std::size_t d = 0;
        for (const auto& s : spans_) d += s.dim();
        return d;
    }

    // Canonical form: the union of the per-fiber reduced bases is already
    // the reduced echelon basis of the whole space.
    Subspace subspace() const {
        std::vector<std::pair<std::size_t, Vector>> cols;
        for (std::size_t f = 0; f < spans_.size(); ++f) {
            const Subspace s = spans_[f].subspace();
            for (std::size_t j = 0; j < s.dim(); ++j) {
                Vector g(n_);
                for (std::size_t i = 0; i < members_[f].size(); ++i) g[members_[f][i]] = s.basis(i, j);
                cols.emplace_back(members_[f][s.pivots[j]], std::move(g));
            }
        }
        std::sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Matrix b(n_, cols.size());
        std::vector<std::size_t> piv;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            for (std::size_t i = 0; i < n_; ++i) b(i, j) = cols[j].second[i];
            piv.push_back(cols[j].first);
        }
        return Subspace{n_, std::move(b), std::move(piv)};
    }

private:
    std::size_t n_;
    std::vector<int> fiber_of_;
    std::vector<int> local_of_;
    std::vector<std::vector<int>> members_;
    std::vector<SpanBuilder> spans_;
};

bool all_monomial(const FreeCover& f) {
    for (const auto& [k, m] : f.pi)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            int nz = 0;
            for (std::size_t r = 0; r < m.rows(); ++r) nz += sgn(m(r, c)) != 0;
            if (nz > 1) return false;
        }
    return true;
}

std::string key(int x, int d) { return "(" + std::to_string(x) + "," + std::to_string(d) + ")"; }

}  // namespace

std::vector<int> FreeCover::path(int x, int y, int k) const {
    if (y == x + 1) return {k};
    const auto& s = split.at({x, y})[k];
    std::vector<int> p = path(x, y - 1, s.second);
    p.push_back(s.first);
    return p;
}

FreeCover free_cover(LinCatPtr l) {
    const LinCat& c = *l;
    PathBuilder pb(c);
    FreeCover f;
    f.base = l;
    auto fr = std::make_shared<LinCat>("free(" + c.name() + ")", c.interval());
    for (int x = c.lo(); x <= c.hi(); ++x)
        for (int y = x; y <= c.hi(); ++y) {
            if (y <= x + 1) {
                fr->set_basis(x, y, c.labels(x, y));
                continue;
            }
            f.split[{x, y}] = pb.split(x, y);
            std::vector<std::string> labels;
            for (const auto& [a, low] : f.split[{x, y}])
                labels.push_back(c.labels(y - 1, y)[a] + "*" + fr->labels(x, y - 1)[low]);
            fr->set_basis(x, y, std::move(labels));
        }
    for (int x = c.lo(); x <= c.hi(); ++x)
        for (int y = x; y <= c.hi(); ++y)
            for (int z = y; z <= c.hi(); ++z)
                fr->set_block(x, y, z, CompBlock(pb.count(y, z), pb.count(x, y), [&](int b, int a) {
                                  const Signed s = pb.compose(x, y, z, b, a);
                                  if (s.idx < 0) return std::vector<Term>{};
                                  return std::vector<Term>{Term{s.idx, Rational(s.sign)}};
                              }));
    fr->finalize();
    f.free = fr;

    for (int x = c.lo(); x <= c.hi(); ++x)
        for (int y = x; y <= c.hi(); ++y) {
            if (y <= x + 1) {
                f.pi[{x, y}] = Matrix::identity(c.dim(x, y));
                continue;
            }
            const Matrix& low = f.pi.at({x, y - 1});
            const auto& sp = f.split.at({x, y});
            Matrix m(c.dim(x, y), sp.size());
            for (std::size_t k = 0; k < sp.size(); ++k) {
                const Vector v = compose_left(c, x, y - 1, y, sp[k].first, low.column(sp[k].second));
                for (std::size_t r = 0; r < v.size(); ++r) m(r, k) = v[r];
            }
            f.pi[{x, y}] = std::move(m);
        }
    return f;
}

Subspace relations_deg2(const FreeCover& f, int x) {
    if (!f.base->contains(x) || !f.base->contains(x + 2)) throw std::out_of_range("relations_deg2: x + 2 outside the interval");
    const Matrix& pi = f.pi.at({x, x + 2});
    if (pi.rows() == 0) return full_subspace(pi.cols());
    return kernel_basis(pi);
}

std::map<std::pair<int, int>, Subspace> generated_ideal(const FreeCover& f, const std::map<int, Subspace>& deg2) {
    const LinCat& fc = *f.free;
    const bool fibered = all_monomial(f);
    std::map<std::pair<int, int>, Subspace> out;
    for (const auto& [x, s] : deg2) out[{x, x + 2}] = s;
    for (int d = 3; d <= fc.hi() - fc.lo(); ++d)
        for (int x = fc.lo(); x + d <= fc.hi(); ++x) {
            const int y = x + d;
            FiberedSpan span(f.pi.at({x, y}), fibered);
            std::deque<Vector> queue;
            auto offer = [&](const Vector& v) {
                for (auto& g : span.add(v)) queue.push_back(std::move(g));
            };
            // Both neighbours are G-stable, so orbit representatives of the
            // arrows suffice before saturating under G_y and G_x.
            const Subspace& below = out.at({x, y - 1});
            for (int rep : fc.arrow_reps(y - 1))
                for (std::size_t j = 0; j < below.dim(); ++j) offer(compose_left(fc, x, y - 1, y, rep, below.basis.column(j)));
            const Subspace& above = out.at({x + 1, y});
            for (int rep : fc.arrow_reps(x))
                for (std::size_t j = 0; j < above.dim(); ++j) offer(compose_right(fc, x, x + 1, y, above.basis.column(j), rep));
            const FiniteGroup& gy = *fc.group(y);
            const FiniteGroup& gx = *fc.group(x);
            while (!queue.empty()) {
                const Vector v = std::move(queue.front());
                queue.pop_front();
                for (int g : gy.generators()) offer(compose_left(fc, x, y, y, g, v));
                for (int h : gx.generators()) offer(compose_right(fc, x, x, y, v, h));
            }
            out[{x, y}] = span.subspace();
        }
    return out;
}

QuadraticCheck is_quadratic(const LinCat& l) {
    return is_quadratic(free_cover(std::make_shared<LinCat>(l)));
}

QuadraticCheck is_quadratic(const FreeCover& f) {
    const LinCat& c = *f.base;
    QuadraticCheck q;
    for (int d = 0; d <= c.hi() - c.lo() && q.quadratic; ++d)
        for (int x = c.lo(); x + d <= c.hi(); ++x) {
            if (rank(f.pi.at({x, x + d})) == static_cast<std::size_t>(c.dim(x, x + d))) continue;
            q = {false, x, d, "pi not onto C" + key(x, x + d)};
            break;
        }
    if (!q.quadratic) return q;
    std::map<int, Subspace> rel;
    for (int x = c.lo(); x + 2 <= c.hi(); ++x) rel[x] = relations_deg2(f, x);
    const auto gen = generated_ideal(f, rel);
    for (int d = 3; d <= c.hi() - c.lo(); ++d)
        for (int x = c.lo(); x + d <= c.hi(); ++x) {
            const Matrix& pi = f.pi.at({x, x + d});
            const Subspace k = pi.rows() == 0 ? full_subspace(pi.cols()) : kernel_basis(pi);
            const Subspace& g = gen.at({x, x + d});
            if (g == k) continue;
            std::ostringstream w;
            w << "kernel at " << key(x, d) << " has dim " << k.dim() << ", generated part " << g.dim();
            for (std::size_t j = 0; j < k.dim(); ++j) {
                const Vector v = k.basis.column(j);
                SpanBuilder sb(v.size());
                for (std::size_t i = 0; i < g.dim(); ++i) sb.add(g.basis.column(i));
                if (sb.add(v)) {
                    w << "; missing " << vector_witness(v);
                    break;
                }
            }
            return {false, x, d, w.str()};
        }
    return q;
}

QuadraticDual quadratic_dual(LinCatPtr l) { return quadratic_dual(free_cover(std::move(l))); }

QuadraticDual quadratic_dual(const FreeCover& f) {
    const LinCat& c = *f.base;
    const LinCat& fc = *f.free;
    QuadraticDual q;
    q.quadratic = is_quadratic(f).quadratic;
    std::map<int, Subspace> perp;
    for (int x = c.lo(); x + 2 <= c.hi(); ++x) perp[x] = annihilator(relations_deg2(f, x));
    q.ideal = generated_ideal(f, perp);

    // normal form of each class of Ĉ(x,y) in the pivot-free classes
    struct Normal {
        std::vector<int> basis;
        std::vector<std::vector<Term>> of_class;
    };
    std::map<std::pair<int, int>, Normal> nf;
    for (int x = c.lo(); x <= c.hi(); ++x)
        for (int y = x; y <= c.hi(); ++y) {
            Normal n;
            const int total = fc.dim(x, y);
            n.of_class.resize(total);
            auto it = q.ideal.find({x, y});
            std::vector<int> pivot_col(total, -1);
            if (it != q.ideal.end())
                for (std::size_t j = 0; j < it->second.pivots.size(); ++j) pivot_col[it->second.pivots[j]] = static_cast<int>(j);
            std::vector<int> pos(total, -1);
            for (int k = 0; k < total; ++k)
                if (pivot_col[k] < 0) {
                    pos[k] = static_cast<int>(n.basis.size());
                    n.basis.push_back(k);
                }
            for (int k = 0; k < total; ++k) {
                if (pivot_col[k] < 0) {
                    n.of_class[k] = {Term{pos[k], Rational(1)}};
                    continue;
                }
                const Matrix& b = it->second.basis;
                for (int j = 0; j < total; ++j)
                    if (pivot_col[j] < 0 && sgn(b(j, pivot_col[k])) != 0)
                        n.of_class[k].push_back(Term{pos[j], -b(j, pivot_col[k])});
            }
            nf[{x, y}] = std::move(n);
        }

    auto e = std::make_shared<LinCat>("E(" + c.name() + ")", c.interval());
    for (int x = c.lo(); x <= c.hi(); ++x)
        for (int y = x; y <= c.hi(); ++y) {
            std::vector<std::string> labels;
            for (int k : nf[{x, y}].basis) labels.push_back(fc.labels(x, y)[k]);
            e->set_basis(x, y, std::move(labels));
        }
    for (int x = c.lo(); x <= c.hi(); ++x)
        for (int y = x; y <= c.hi(); ++y)
            for (int z = y; z <= c.hi(); ++z) {
                const Normal& nb = nf[{y, z}];
                const Normal& na = nf[{x, y}];
                const Normal& nz = nf[{x, z}];
                const CompBlock& blk = fc.block(x, y, z);
                e->set_block(x, y, z, CompBlock(static_cast<int>(nb.basis.size()), static_cast<int>(na.basis.size()),
                                                [&](int b, int a) {
                                                    std::map<int, Rational> acc;
                                                    for (const Term& t : blk.at(nb.basis[b], na.basis[a]))
                                                        for (const Term& u : nz.of_class[t.index])
                                                            acc[u.index] += u.coeff * t.coeff;
                                                    std::vector<Term> out;
                                                    for (auto& [i, v] : acc) out.push_back(Term{i, v});
                                                    return out;
                                                }));
            }
    e->finalize();
    q.e = e;
    q.dual = opposite(*e);
    return q;
}

}  // namespace koszulkit
