#include "koszulkit/module.hpp"

#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace koszulkit {

namespace {

std::string key_str(int x, int i) { return "(" + std::to_string(x) + "," + std::to_string(i) + ")"; }

Matrix block_matrix(const CompBlock& blk, int b, int rows) {
    Matrix m(rows, blk.na());
    for (int a = 0; a < blk.na(); ++a)
        for (const Term& t : blk.at(b, a)) m(t.index, a) += t.coeff;
    return m;
}

}  // namespace

GradedModule::GradedModule(LinCatPtr l) : cat_(std::move(l)) {
    if (!cat_) throw std::invalid_argument("module over a null category");
}

void GradedModule::add_fiber(int x, int i, int dim, Matrix gram) {
    if (!cat_->contains(x)) throw std::out_of_range("fiber object outside the interval");
    if (dim <= 0) return;
    if (!cat_->group(x)) throw std::invalid_argument("degree-0 part at " + std::to_string(x) + " is not a group");
    Fiber f;
    f.dim = dim;
    f.gram = gram.rows() == 0 ? Matrix::identity(dim) : std::move(gram);
    if (f.gram.rows() != static_cast<std::size_t>(dim) || f.gram.cols() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("gram shape");
    fibers_[{x, i}] = std::move(f);
}

void GradedModule::set_group_action(int x, int i, std::vector<Matrix> gens) {
    Fiber& f = fibers_.at({x, i});
    if (gens.size() != cat_->group(x)->generators().size()) throw std::invalid_argument("generator count");
    for (const auto& g : gens)
        if (g.rows() != static_cast<std::size_t>(f.dim) || g.cols() != static_cast<std::size_t>(f.dim))
            throw std::invalid_argument("group action shape");
    f.group_gens = std::move(gens);
}

void GradedModule::set_arrow_action(int x, int i, int rep, Matrix m) {
    Fiber& f = fibers_.at({x, i});
    const int target = dim(x + 1, i + 1);
    if (m.rows() != static_cast<std::size_t>(target) || m.cols() != static_cast<std::size_t>(f.dim))
        throw std::invalid_argument("arrow action shape at " + key_str(x, i));
    const std::size_t nreps = cat_->arrow_reps(x).size();
    if (f.arrows.size() < nreps) f.arrows.resize(nreps);
    f.arrows.at(rep) = std::move(m);
}

int GradedModule::dim(int x, int i) const {
    auto it = fibers_.find({x, i});
    return it == fibers_.end() ? 0 : it->second.dim;
}

std::map<FiberKey, int> GradedModule::dims() const {
    std::map<FiberKey, int> d;
    for (const auto& [k, f] : fibers_) d[k] = f.dim;
    return d;
}

std::size_t GradedModule::total_dim() const {
    std::size_t n = 0;
    for (const auto& [k, f] : fibers_) n += f.dim;
    return n;
}

const GradedModule::Fiber& GradedModule::fiber(int x, int i) const {
    auto it = fibers_.find({x, i});
    if (it == fibers_.end()) throw std::out_of_range("no fiber at " + key_str(x, i));
    return it->second;
}

Matrix GradedModule::apply_group(int x, int i, int g, Matrix v) const {
    auto it = fibers_.find({x, i});
    if (it == fibers_.end()) return v;
    const Fiber& f = it->second;
    const FiniteGroup& G = *cat_->group(x);
    for (int cur = g; cur != 0; cur = G.parent(cur)) v = f.group_gens[G.parent_gen(cur)] * v;
    return v;
}

Matrix GradedModule::apply_arrow(int x, int i, int a, const Matrix& v) const {
    const int target = dim(x + 1, i + 1);
    if (target == 0 || dim(x, i) == 0) return Matrix(target, v.cols());
    const auto& o = cat_->arrow_orbit(x, a);
    const Fiber& f = fiber(x, i);
    if (o.rep >= static_cast<int>(f.arrows.size()) || f.arrows[o.rep].rows() == 0)
        return Matrix(target, v.cols());
    Matrix w = f.arrows[o.rep] * apply_group(x, i, o.h, v);
    w = apply_group(x + 1, i + 1, o.g, std::move(w));
    return o.sign < 0 ? w.scaled(-1) : w;
}

Matrix GradedModule::apply(int x, int y, int e, int i, const Matrix& v) const {
    if (y == x) return apply_group(x, i, e, v);
    if (y == x + 1) return apply_arrow(x, i, e, v);
    const int d = y - x;
    Matrix out(dim(y, i + d), v.cols());
    if (out.rows() == 0 || dim(x, i) == 0) return out;
    const auto& fac = cat_->factors(x, y, e);
    if (fac.empty()) throw std::logic_error("basis element without a degree-one factorization");
    for (const auto& f : fac) {
        Matrix w = apply_arrow(y - 1, i + d - 1, f.beta, apply(x, y - 1, f.alpha, i, v));
        out = out + (f.coeff == 1 ? w : w.scaled(f.coeff));
    }
    return out;
}

Matrix GradedModule::action(int x, int y, int e, int i) const {
    return apply(x, y, e, i, Matrix::identity(dim(x, i)));
}

GradedModule zero_module(LinCatPtr l) { return GradedModule(std::move(l)); }

GradedModule representable(LinCatPtr l, int x, int shift) {
    const LinCat& c = *l;
    if (!c.contains(x)) throw std::out_of_range("representable: object outside the interval");
    GradedModule m(l);
    for (int y = x; y <= c.hi(); ++y) m.add_fiber(y, y - x + shift, c.dim(x, y));
    for (int y = x; y <= c.hi(); ++y) {
        const int n = c.dim(x, y);
        if (n == 0) continue;
        std::vector<Matrix> gens;
        for (int t : c.group(y)->generators()) gens.push_back(block_matrix(c.block(x, y, y), t, n));
        m.set_group_action(y, y - x + shift, std::move(gens));
        if (y == c.hi() || c.dim(x, y + 1) == 0) continue;
        const auto& reps = c.arrow_reps(y);
        for (std::size_t r = 0; r < reps.size(); ++r)
            m.set_arrow_action(y, y - x + shift, static_cast<int>(r),
                               block_matrix(c.block(x, y, y + 1), reps[r], c.dim(x, y + 1)));
    }
    return m;
}

GradedModule regular_simple(LinCatPtr l, int x) {
    const LinCat& c = *l;
    if (!c.contains(x)) throw std::out_of_range("regular_simple: object outside the interval");
    GradedModule m(l);
    const int n = c.dim(x, x);
    m.add_fiber(x, 0, n);
    std::vector<Matrix> gens;
    for (int t : c.group(x)->generators()) gens.push_back(block_matrix(c.block(x, x, x), t, n));
    m.set_group_action(x, 0, std::move(gens));
    return m;
}

GradedModule direct_sum(const std::vector<GradedModule>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
    const LinCatPtr& l = parts.front().cat_ptr();
    for (const auto& p : parts)
        if (p.cat_ptr() != l && p.cat() != *l) throw std::invalid_argument("direct_sum over different categories");
    std::set<FiberKey> keys;
    for (const auto& p : parts)
        for (const auto& [k, f] : p.fibers()) keys.insert(k);
    // offsets[key][p] = first row of part p in the summed fiber
    std::map<FiberKey, std::vector<int>> offsets;
    GradedModule m(l);
    for (const auto& k : keys) {
        std::vector<int> off;
        std::vector<Matrix> grams;
        int total = 0;
        for (const auto& p : parts) {
            off.push_back(total);
            total += p.dim(k.first, k.second);
            if (p.has_fiber(k.first, k.second)) grams.push_back(p.fiber(k.first, k.second).gram);
        }
        offsets[k] = off;
        m.add_fiber(k.first, k.second, total, block_diagonal(grams));
    }
    for (const auto& k : keys) {
        const auto [x, i] = k;
        const int n = m.dim(x, i);
        const std::size_t ngens = l->group(x)->generators().size();
        std::vector<Matrix> gens(ngens, Matrix(n, n));
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (!parts[p].has_fiber(x, i)) continue;
            const auto& f = parts[p].fiber(x, i);
            for (std::size_t g = 0; g < ngens; ++g) gens[g].set_block(offsets[k][p], offsets[k][p], f.group_gens[g]);
        }
        m.set_group_action(x, i, std::move(gens));
        if (!m.has_fiber(x + 1, i + 1)) continue;
        const FiberKey tk{x + 1, i + 1};
        const int nt = m.dim(x + 1, i + 1);
        const auto nreps = l->arrow_reps(x).size();
        for (std::size_t r = 0; r < nreps; ++r) {
            Matrix a(nt, n);
            for (std::size_t p = 0; p < parts.size(); ++p) {
                if (!parts[p].has_fiber(x, i) || !parts[p].has_fiber(x + 1, i + 1)) continue;
                const auto& f = parts[p].fiber(x, i);
                if (r < f.arrows.size() && f.arrows[r].rows() > 0)
                    a.set_block(offsets[tk][p], offsets[k][p], f.arrows[r]);
            }
            m.set_arrow_action(x, i, static_cast<int>(r), std::move(a));
        }
    }
    return m;
}

GradedModule shifted(const GradedModule& m, int j) {
    GradedModule s(m.cat_ptr());
    for (const auto& [k, f] : m.fibers()) s.add_fiber(k.first, k.second + j, f.dim, f.gram);
    for (const auto& [k, f] : m.fibers()) {
        s.set_group_action(k.first, k.second + j, f.group_gens);
        for (std::size_t r = 0; r < f.arrows.size(); ++r)
            if (f.arrows[r].rows() > 0) s.set_arrow_action(k.first, k.second + j, static_cast<int>(r), f.arrows[r]);
    }
    return s;
}

namespace {

// Smallest G_x-stable subspace containing the seeds.
Subspace saturate(const GradedModule::Fiber& f, const std::vector<Vector>& seeds) {
    SpanBuilder span(f.dim);
    std::deque<Vector> queue;
    for (const auto& v : seeds) {
        if (span.full()) break;
        if (span.add(v)) queue.push_back(v);
    }
    while (!queue.empty() && !span.full()) {
        Vector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : f.group_gens) {
            Vector w = g.apply(v);
            if (span.add(w)) queue.push_back(std::move(w));
            if (span.full()) break;
        }
    }
    return span.subspace();
}

void append_columns(std::vector<Vector>& out, const Matrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
}

}  // namespace

SubspaceFamily radical(const GradedModule& m) {
    SubspaceFamily r;
    for (const auto& [k, f] : m.fibers()) {
        const auto [y, j] = k;
        std::vector<Vector> seeds;
        if (m.cat().contains(y - 1) && m.has_fiber(y - 1, j - 1)) {
            const auto& src = m.fiber(y - 1, j - 1);
            for (const auto& a : src.arrows)
                if (a.rows() > 0) append_columns(seeds, a);
        }
        r[k] = saturate(f, seeds);
    }
    return r;
}

std::map<FiberKey, int> Top::dims() const {
    std::map<FiberKey, int> d;
    for (const auto& [k, s] : complement)
        if (s.dim() > 0) d[k] = static_cast<int>(s.dim());
    return d;
}

bool Top::empty() const { return dims().empty(); }

Top top(const GradedModule& m) {
    Top t;
    t.radical = radical(m);
    for (const auto& [k, f] : m.fibers())
        t.complement[k] = orthogonal_complement(t.radical[k], full_subspace(f.dim), f.gram);
    return t;
}

SubspaceFamily submodule_generated(const GradedModule& m, const std::vector<ModuleGenerator>& gens) {
    std::map<FiberKey, std::vector<Vector>> seeds;
    for (const auto& g : gens) {
        if (static_cast<int>(g.v.size()) != m.dim(g.x, g.i))
            throw std::invalid_argument("generator does not live in fiber " + key_str(g.x, g.i));
        seeds[{g.x, g.i}].push_back(g.v);
    }
    SubspaceFamily s;
    // arrows raise the object, so increasing key order visits sources first
    for (const auto& [k, f] : m.fibers()) {
        Subspace sub = saturate(f, seeds[k]);
        if (sub.dim() > 0 && m.has_fiber(k.first + 1, k.second + 1))
            for (const auto& a : f.arrows)
                if (a.rows() > 0) append_columns(seeds[{k.first + 1, k.second + 1}], a * sub.basis);
        s[k] = std::move(sub);
    }
    return s;
}

SubspaceFamily full_family(const GradedModule& m) {
    SubspaceFamily s;
    for (const auto& [k, f] : m.fibers()) s[k] = full_subspace(f.dim);
    return s;
}

namespace {

const Subspace* lookup(const SubspaceFamily& s, const FiberKey& k) {
    auto it = s.find(k);
    return it == s.end() ? nullptr : &it->second;
}

bool columns_inside(const Matrix& cols, const Subspace* s) {
    for (std::size_t j = 0; j < cols.cols(); ++j) {
        Vector v = cols.column(j);
        bool zero = std::all_of(v.begin(), v.end(), [](const Rational& r) { return sgn(r) == 0; });
        if (zero) continue;
        if (!s || !s->contains(v)) return false;
    }
    return true;
}

}  // namespace

bool family_equal(const SubspaceFamily& a, const SubspaceFamily& b) {
    return family_contains(a, b) && family_contains(b, a);
}

bool family_contains(const SubspaceFamily& big, const SubspaceFamily& small) {
    for (const auto& [k, s] : small) {
        if (s.dim() == 0) continue;
        const Subspace* b = lookup(big, k);
        if (!b || !is_subspace_of(s, *b)) return false;
    }
    return true;
}

std::optional<std::string> closure_defect(const GradedModule& m, const SubspaceFamily& s) {
    for (const auto& [k, sub] : s) {
        if (sub.dim() == 0) continue;
        if (!m.has_fiber(k.first, k.second)) return key_str(k.first, k.second) + " not a fiber";
        const auto& f = m.fiber(k.first, k.second);
        for (const auto& g : f.group_gens)
            if (!columns_inside(g * sub.basis, &sub)) return key_str(k.first, k.second) + " group";
        const Subspace* t = lookup(s, {k.first + 1, k.second + 1});
        for (const auto& a : f.arrows)
            if (a.rows() > 0 && !columns_inside(a * sub.basis, t))
                return key_str(k.first, k.second) + " arrow";
    }
    return std::nullopt;
}

GradedModule submodule(const GradedModule& m, const SubspaceFamily& s) {
    if (auto w = closure_defect(m, s)) throw std::invalid_argument("submodule: family not closed at " + *w);
    GradedModule out(m.cat_ptr());
    for (const auto& [k, sub] : s) {
        if (sub.dim() == 0) continue;
        const auto& f = m.fiber(k.first, k.second);
        out.add_fiber(k.first, k.second, static_cast<int>(sub.dim()), sub.basis.transpose() * f.gram * sub.basis);
    }
    for (const auto& [k, sub] : s) {
        if (sub.dim() == 0) continue;
        const auto& f = m.fiber(k.first, k.second);
        std::vector<Matrix> gens;
        for (const auto& g : f.group_gens) gens.push_back(sub.coordinates(g * sub.basis));
        out.set_group_action(k.first, k.second, std::move(gens));
        const Subspace* t = lookup(s, {k.first + 1, k.second + 1});
        if (!t || t->dim() == 0) continue;
        for (std::size_t r = 0; r < f.arrows.size(); ++r)
            if (f.arrows[r].rows() > 0)
                out.set_arrow_action(k.first, k.second, static_cast<int>(r), t->coordinates(f.arrows[r] * sub.basis));
    }
    return out;
}

GradedModule quotient(const GradedModule& m, const SubspaceFamily& s) {
    if (auto w = closure_defect(m, s)) throw std::invalid_argument("quotient: family not closed at " + *w);
    struct Part {
        Matrix basis;
        Matrix proj;  // Gram-orthogonal projection coordinates
    };
    std::map<FiberKey, Part> parts;
    GradedModule out(m.cat_ptr());
    for (const auto& [k, f] : m.fibers()) {
        const Subspace* sub = lookup(s, k);
        Subspace q = sub ? orthogonal_complement(*sub, full_subspace(f.dim), f.gram) : full_subspace(f.dim);
        if (q.dim() == 0) continue;
        Matrix qg = q.basis.transpose() * f.gram;
        Matrix gq = qg * q.basis;
        parts[k] = Part{q.basis, inverse(gq) * qg};
        out.add_fiber(k.first, k.second, static_cast<int>(q.dim()), gq);
    }
    for (const auto& [k, p] : parts) {
        const auto& f = m.fiber(k.first, k.second);
        std::vector<Matrix> gens;
        for (const auto& g : f.group_gens) gens.push_back(p.proj * (g * p.basis));
        out.set_group_action(k.first, k.second, std::move(gens));
        auto t = parts.find({k.first + 1, k.second + 1});
        if (t == parts.end()) continue;
        for (std::size_t r = 0; r < f.arrows.size(); ++r)
            if (f.arrows[r].rows() > 0)
                out.set_arrow_action(k.first, k.second, static_cast<int>(r), t->second.proj * (f.arrows[r] * p.basis));
    }
    return out;
}

GradedModule restrict_genetic(const GradedModule& m, LinCatPtr target) {
    const LinCat& c = m.cat();
    if (!c.has_iota()) throw std::invalid_argument("restrict_genetic: category has no genetic embedding");
    if (c.hi() <= c.lo()) throw std::invalid_argument("restrict_genetic: interval too short");
    if (!target) target = truncate(c, Interval{c.lo(), c.hi() - 1});
    const LinCat& d = *target;
    if (d.lo() != c.lo() || d.hi() != c.hi() - 1) throw std::invalid_argument("restrict_genetic: target interval");
    GradedModule out(target);
    for (const auto& [k, f] : m.fibers()) {
        const int x = k.first - 1;
        if (x < d.lo()) continue;
        out.add_fiber(x, k.second, f.dim, f.gram);
    }
    for (const auto& [k, f] : out.fibers()) {
        const auto [x, i] = k;
        const Matrix id = Matrix::identity(f.dim);
        std::vector<Matrix> gens;
        for (int t : d.group(x)->generators()) {
            const auto [idx, sign] = c.iota(x, x)[t];
            Matrix g = m.apply_group(x + 1, i, idx, id);
            gens.push_back(sign < 0 ? g.scaled(-1) : g);
        }
        out.set_group_action(x, i, std::move(gens));
        if (!out.has_fiber(x + 1, i + 1)) continue;
        const auto& reps = d.arrow_reps(x);
        for (std::size_t r = 0; r < reps.size(); ++r) {
            const auto [idx, sign] = c.iota(x, x + 1)[reps[r]];
            Matrix a = m.apply_arrow(x + 1, i, idx, id);
            out.set_arrow_action(x, i, static_cast<int>(r), sign < 0 ? a.scaled(-1) : a);
        }
    }
    return out;
}

int ini(const GradedModule& m) {
    int best = kInfinity;
    for (const auto& [k, f] : m.fibers()) best = std::min(best, k.first);
    return best;
}

bool GenerationReport::generated_in_degree(int i) const {
    for (const auto& [d, ok] : degrees)
        if (d < i && ok) return false;
    for (const auto& [d, ok] : degrees)
        if (d >= i) return ok;
    return true;
}

bool GenerationReport::generated_in_positions_upto(int x) const {
    bool result = positions.empty();
    for (const auto& [p, ok] : positions)
        if (p <= x) result = ok;
    return result;
}

GenerationReport generation_report(const GradedModule& m) {
    GenerationReport r;
    std::set<int> degs, objs;
    for (const auto& [k, f] : m.fibers()) {
        objs.insert(k.first);
        degs.insert(k.second);
    }
    const std::size_t total = m.total_dim();
    auto generated_by = [&](auto keep) {
        std::vector<ModuleGenerator> gens;
        for (const auto& [k, f] : m.fibers()) {
            if (!keep(k)) continue;
            for (int j = 0; j < f.dim; ++j) {
                Vector v(f.dim);
                v[j] = 1;
                gens.push_back({k.first, k.second, std::move(v)});
            }
        }
        std::size_t n = 0;
        for (const auto& [k, s] : submodule_generated(m, gens)) n += s.dim();
        return n == total;
    };
    for (int i : degs) r.degrees.emplace_back(i, generated_by([i](const FiberKey& k) { return k.second <= i; }));
    for (int x : objs) r.positions.emplace_back(x, generated_by([x](const FiberKey& k) { return k.first <= x; }));
    return r;
}

namespace {

Matrix test_vectors(int n) {
    if (n <= 48) return Matrix::identity(n);
    std::mt19937 rng(12345u + n);
    std::uniform_int_distribution<int> dist(-3, 3);
    Matrix v(n, 3);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 3; ++j) v(i, j) = dist(rng);
    return v;
}

Matrix combine(const GradedModule& m, int x, int y, std::span<const Term> terms, int i, const Matrix& v) {
    const int d = y - x;
    Matrix out(m.dim(y, i + d), v.cols());
    for (const Term& t : terms) {
        Matrix w = m.apply(x, y, t.index, i, v);
        out = out + (t.coeff == 1 ? w : w.scaled(t.coeff));
    }
    return out;
}

}  // namespace

ConditionReport validate_module(const GradedModule& m) {
    const LinCat& c = m.cat();
    ConditionCheck shape("shapes"), grp("group-action"), gram("gram-invariance"), bimod("arrow-bimodule"),
        rel("degree-2-relations");
    for (const auto& [k, f] : m.fibers()) {
        const auto [x, i] = k;
        const std::string w = key_str(x, i);
        const FiniteGroup& G = *c.group(x);
        if (f.group_gens.size() != G.generators().size()) {
            shape.fail(w);
            continue;
        }
        const Matrix v = test_vectors(f.dim);
        for (std::size_t s = 0; s < G.generators().size(); ++s) {
            const int t = G.generators()[s];
            const Matrix& gm = f.group_gens[s];
            if (gm.transpose() * f.gram * gm != f.gram) gram.fail(w + " generator " + std::to_string(t));
            for (int g = 0; g < G.order() && grp.passed; ++g)
                if (gm * m.apply_group(x, i, g, v) != m.apply_group(x, i, G.mul(t, g), v))
                    grp.fail(w + " t=" + std::to_string(t) + " g=" + std::to_string(g));
        }
        if (!c.contains(x + 1)) continue;
        // every arrow, against the generators on both sides
        const FiniteGroup& H = *c.group(x + 1);
        for (int a = 0; a < c.dim(x, x + 1) && bimod.passed; ++a) {
            const Matrix av = m.apply_arrow(x, i, a, v);
            for (int t : H.generators())
                if (m.apply_group(x + 1, i + 1, t, av) != combine(m, x, x + 1, c.compose(x, x + 1, x + 1, t, a), i, v))
                    bimod.fail(w + " left " + std::to_string(t) + " arrow " + std::to_string(a));
            for (int u : G.generators())
                if (m.apply_arrow(x, i, a, m.apply_group(x, i, u, v)) !=
                    combine(m, x, x + 1, c.compose(x, x, x + 1, a, u), i, v))
                    bimod.fail(w + " right " + std::to_string(u) + " arrow " + std::to_string(a));
        }
        if (!c.contains(x + 2)) continue;
        // rep o alpha against the expansion of the composite
        const auto& reps = c.arrow_reps(x + 1);
        for (int r : reps)
            for (int a = 0; a < c.dim(x, x + 1) && rel.passed; ++a) {
                Matrix lhs = m.apply_arrow(x + 1, i + 1, r, m.apply_arrow(x, i, a, v));
                if (lhs != combine(m, x, x + 2, c.compose(x, x + 1, x + 2, r, a), i, v))
                    rel.fail(w + " rep " + std::to_string(r) + " arrow " + std::to_string(a));
            }
    }
    ConditionReport rep;
    rep.checks = {shape, grp, gram, bimod, rel};
    return rep;
}

namespace {

std::string fiber_name(const FiberKey& k) { return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")"; }

Matrix map_at(const GradedModule& a, const GradedModule& b, const std::map<FiberKey, Matrix>& phi, const FiberKey& k) {
    auto it = phi.find(k);
    if (it != phi.end()) return it->second;
    return Matrix(b.dim(k.first, k.second), a.dim(k.first, k.second));
}

}  // namespace

std::optional<std::string> hom_defect(const GradedModule& a, const GradedModule& b,
                                      const std::map<FiberKey, Matrix>& phi) {
    const LinCat& c = a.cat();
    std::set<FiberKey> keys;
    for (const auto& [k, f] : a.fibers()) keys.insert(k);
    for (const auto& [k, f] : b.fibers()) keys.insert(k);
    for (const auto& k : keys) {
        const auto [x, i] = k;
        const Matrix p = map_at(a, b, phi, k);
        if (p.rows() != static_cast<std::size_t>(b.dim(x, i)) || p.cols() != static_cast<std::size_t>(a.dim(x, i)))
            return "map has the wrong shape at " + fiber_name(k);
        const Matrix id = Matrix::identity(a.dim(x, i));
        for (int g : c.group(x)->generators())
            if (p * a.apply_group(x, i, g, id) != b.apply_group(x, i, g, p))
                return "group element " + std::to_string(g) + " at " + fiber_name(k);
        if (!c.contains(x + 1)) continue;
        const Matrix q = map_at(a, b, phi, {x + 1, i + 1});
        for (int e = 0; e < c.dim(x, x + 1); ++e)
            if (q * a.apply_arrow(x, i, e, id) != b.apply_arrow(x, i, e, p))
                return "arrow " + std::to_string(e) + " at " + fiber_name(k);
    }
    return std::nullopt;
}

std::optional<std::string> iso_defect(const GradedModule& a, const GradedModule& b,
                                      const std::map<FiberKey, Matrix>& phi) {
    if (a.dims() != b.dims()) return std::string("fiber dimensions differ");
    for (const auto& [k, f] : a.fibers())
        if (rank(map_at(a, b, phi, k)) != static_cast<std::size_t>(f.dim)) return "map not invertible at " + fiber_name(k);
    return hom_defect(a, b, phi);
}

}  // namespace koszulkit
