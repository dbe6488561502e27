#include "koszulkit/lincat.hpp"

#include <deque>
#include <stdexcept>

namespace koszulkit {

CompBlock::CompBlock(int nb, int na, const std::function<std::vector<Term>(int, int)>& entry) : nb_(nb), na_(na) {
    const std::size_t n = static_cast<std::size_t>(nb) * na;
    offsets_.reserve(n + 1);
    mono_index_.assign(n, -1);
    mono_sign_.assign(n, 0);
    for (int b = 0; b < nb; ++b)
        for (int a = 0; a < na; ++a) {
            const std::size_t k = static_cast<std::size_t>(b) * na + a;
            for (auto& t : entry(b, a))
                if (sgn(t.coeff) != 0) terms_.push_back(std::move(t));
            offsets_.push_back(static_cast<std::uint32_t>(terms_.size()));
            const std::size_t len = offsets_[k + 1] - offsets_[k];
            if (len == 1) {
                const Term& t = terms_[offsets_[k]];
                if (t.coeff == 1 || t.coeff == -1) {
                    mono_index_[k] = t.index;
                    mono_sign_[k] = static_cast<signed char>(sgn(t.coeff));
                } else {
                    monomial_ = false;
                }
            } else if (len > 1) {
                monomial_ = false;
            }
        }
    if (!monomial_) {
        mono_index_.clear();
        mono_sign_.clear();
    }
}

LinCat::LinCat(std::string name, Interval iv) : name_(std::move(name)), iv_(iv), n_(iv.hi - iv.lo + 1) {
    if (iv.lo < 0 || iv.hi < iv.lo) throw std::invalid_argument("invalid interval");
    const std::size_t n = static_cast<std::size_t>(n_);
    labels_.resize(n * n);
    blocks_.resize(n * n * n);
    iota_.resize(n * n);
    factors_.resize(n * n);
}

std::size_t LinCat::pair_slot(int x, int y) const {
    if (!contains(x) || !contains(y)) throw std::out_of_range("object outside interval");
    return static_cast<std::size_t>(x - lo()) * n_ + (y - lo());
}

std::size_t LinCat::triple_slot(int x, int y, int z) const {
    if (!contains(x) || !contains(y) || !contains(z)) throw std::out_of_range("object outside interval");
    return (static_cast<std::size_t>(x - lo()) * n_ + (y - lo())) * n_ + (z - lo());
}

void LinCat::set_basis(int x, int y, std::vector<std::string> labels) {
    if (x > y && !labels.empty()) throw std::invalid_argument("nonzero hom against the object order");
    labels_[pair_slot(x, y)] = std::move(labels);
}

void LinCat::set_degree(int x, int y, int i, int degree) {
    if (i < 0 || i >= dim(x, y)) throw std::out_of_range("basis index");
    if (degree == y - x)
        degrees_.erase({x, y, i});
    else
        degrees_[{x, y, i}] = degree;
}

void LinCat::set_block(int x, int y, int z, CompBlock block) {
    if (block.nb() != dim(y, z) || block.na() != dim(x, y))
        throw std::invalid_argument("composition block shape does not match the bases");
    blocks_[triple_slot(x, y, z)] = std::move(block);
}

void LinCat::set_iota(int x, int y, std::vector<std::pair<int, int>> map) {
    if (static_cast<int>(map.size()) != dim(x, y)) throw std::invalid_argument("iota size mismatch");
    iota_[pair_slot(x, y)] = std::move(map);
    has_iota_ = true;
}

int LinCat::dim(int x, int y) const {
    if (x > y) return 0;
    return static_cast<int>(labels_[pair_slot(x, y)].size());
}

const std::vector<std::string>& LinCat::labels(int x, int y) const {
    static const std::vector<std::string> none;
    if (x > y) return none;
    return labels_[pair_slot(x, y)];
}

int LinCat::degree(int x, int y, int i) const {
    auto it = degrees_.find({x, y, i});
    return it == degrees_.end() ? y - x : it->second;
}

const CompBlock& LinCat::block(int x, int y, int z) const {
    static const CompBlock empty;
    if (x > y || y > z) return empty;
    return blocks_[triple_slot(x, y, z)];
}

const FiniteGroup* LinCat::group(int x) const {
    const auto& g = groups_[x - lo()];
    return g ? &*g : nullptr;
}

const std::vector<std::pair<int, int>>& LinCat::iota(int x, int y) const {
    static const std::vector<std::pair<int, int>> none;
    if (x > y) return none;
    return iota_[pair_slot(x, y)];
}

const std::vector<int>& LinCat::arrow_reps(int x) const { return arrow_reps_[x - lo()]; }

const LinCat::ArrowOrbit& LinCat::arrow_orbit(int x, int a) const { return arrow_orbits_[x - lo()][a]; }

const std::vector<LinCat::Factor>& LinCat::factors(int x, int y, int i) const {
    return factors_[pair_slot(x, y)][i];
}

void LinCat::finalize() {
    for (int x = lo(); x <= hi(); ++x)
        for (int y = x; y <= hi(); ++y)
            for (int z = y; z <= hi(); ++z) {
                auto& b = blocks_[triple_slot(x, y, z)];
                if (b.nb() != dim(y, z) || b.na() != dim(x, y))
                    b = CompBlock(dim(y, z), dim(x, y), [](int, int) { return std::vector<Term>{}; });
            }
    derive_groups();
    derive_arrow_orbits();
    derive_factors();
}

void LinCat::derive_groups() {
    groups_.assign(n_, std::nullopt);
    for (int x = lo(); x <= hi(); ++x) {
        const int n = dim(x, x);
        const CompBlock& b = block(x, x, x);
        if (n == 0 || !b.monomial()) continue;
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        bool ok = true;
        for (int p = 0; p < n && ok; ++p)
            for (int q = 0; q < n && ok; ++q) {
                if (b.mono_index(p, q) < 0 || b.mono_sign(p, q) != 1) ok = false;
                table[p][q] = b.mono_index(p, q);
            }
        if (!ok) continue;
        try {
            groups_[x - lo()].emplace(std::move(table), n <= 64);
        } catch (const std::invalid_argument&) {
        }
    }
}

void LinCat::derive_arrow_orbits() {
    arrow_reps_.assign(n_, {});
    arrow_orbits_.assign(n_, {});
    for (int x = lo(); x < hi(); ++x) {
        const int na = dim(x, x + 1);
        auto& reps = arrow_reps_[x - lo()];
        auto& orb = arrow_orbits_[x - lo()];
        orb.assign(na, ArrowOrbit{});
        const FiniteGroup* gs = group(x);
        const FiniteGroup* gt = group(x + 1);
        const CompBlock& left = block(x, x + 1, x + 1);
        const CompBlock& right = block(x, x, x + 1);
        if (!gs || !gt || !left.monomial() || !right.monomial()) {
            for (int a = 0; a < na; ++a) {
                reps.push_back(a);
                orb[a] = ArrowOrbit{0, a, 0, 1};
            }
            continue;
        }
        std::vector<char> seen(na, 0);
        for (int a = 0; a < na; ++a) {
            if (seen[a]) continue;
            const int r = static_cast<int>(reps.size());
            reps.push_back(a);
            seen[a] = 1;
            orb[a] = ArrowOrbit{0, r, 0, 1};
            std::deque<int> queue{a};
            while (!queue.empty()) {
                const int cur = queue.front();
                queue.pop_front();
                const ArrowOrbit o = orb[cur];
                for (int t : gt->generators()) {
                    const int nxt = left.mono_index(t, cur);
                    if (nxt < 0 || seen[nxt]) continue;
                    seen[nxt] = 1;
                    orb[nxt] = ArrowOrbit{gt->mul(t, o.g), r, o.h, left.mono_sign(t, cur) * o.sign};
                    queue.push_back(nxt);
                }
                for (int u : gs->generators()) {
                    const int nxt = right.mono_index(cur, u);
                    if (nxt < 0 || seen[nxt]) continue;
                    seen[nxt] = 1;
                    orb[nxt] = ArrowOrbit{o.g, r, gs->mul(o.h, u), right.mono_sign(cur, u) * o.sign};
                    queue.push_back(nxt);
                }
            }
        }
    }
}

void LinCat::derive_factors() {
    for (int x = lo(); x <= hi(); ++x)
        for (int y = x + 2; y <= hi(); ++y) {
            const int n = dim(x, y);
            auto& fac = factors_[pair_slot(x, y)];
            fac.assign(n, {});
            const CompBlock& b = block(x, y - 1, y);
            int missing = n;
            if (b.monomial()) {
                for (int p = 0; p < b.nb() && missing > 0; ++p)
                    for (int q = 0; q < b.na() && missing > 0; ++q) {
                        const int e = b.mono_index(p, q);
                        if (e < 0 || !fac[e].empty()) continue;
                        fac[e].push_back(Factor{p, q, Rational(b.mono_sign(p, q))});
                        --missing;
                    }
            }
            if (missing == 0) continue;
            // general case: pick spanning products, then solve for each unit vector
            SpanBuilder span(n);
            std::vector<std::pair<int, int>> chosen;
            std::vector<Vector> cols;
            for (int p = 0; p < b.nb() && !span.full(); ++p)
                for (int q = 0; q < b.na() && !span.full(); ++q) {
                    Vector v(n);
                    for (const Term& t : b.at(p, q)) v[t.index] += t.coeff;
                    if (span.add(v)) {
                        chosen.emplace_back(p, q);
                        cols.push_back(std::move(v));
                    }
                }
            if (cols.empty()) continue;
            const Matrix a = Matrix::from_columns(cols, n);
            for (int e = 0; e < n; ++e) {
                if (!fac[e].empty()) continue;
                Vector unit(n);
                unit[e] = 1;
                auto sol = solve(a, unit);
                if (!sol) continue;
                for (std::size_t k = 0; k < chosen.size(); ++k)
                    if (sgn((*sol)[k]) != 0) fac[e].push_back(Factor{chosen[k].first, chosen[k].second, (*sol)[k]});
            }
        }
}

bool LinCat::operator==(const LinCat& o) const {
    return iv_.lo == o.iv_.lo && iv_.hi == o.iv_.hi && labels_ == o.labels_ && degrees_ == o.degrees_ &&
           blocks_ == o.blocks_;
}

Vector compose_left(const LinCat& l, int x, int y, int z, int b, const Vector& v) {
    Vector out(l.dim(x, z));
    const CompBlock& blk = l.block(x, y, z);
    for (int a = 0; a < static_cast<int>(v.size()); ++a) {
        if (sgn(v[a]) == 0) continue;
        for (const Term& t : blk.at(b, a)) out[t.index] += t.coeff * v[a];
    }
    return out;
}

Vector compose_right(const LinCat& l, int x, int y, int z, const Vector& v, int a) {
    Vector out(l.dim(x, z));
    const CompBlock& blk = l.block(x, y, z);
    for (int b = 0; b < static_cast<int>(v.size()); ++b) {
        if (sgn(v[b]) == 0) continue;
        for (const Term& t : blk.at(b, a)) out[t.index] += t.coeff * v[b];
    }
    return out;
}

LinCatPtr linearize(const CombCategory& c, Interval iv, const CompositionSign& sign, std::string name) {
    if (iv.lo < c.min_object()) throw std::out_of_range(c.family() + ": interval below the first object");
    if (iv.hi > c.max_object()) throw std::out_of_range(c.family() + ": interval beyond the supported range");
    if (name.empty()) name = c.family() + "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
    auto l = std::make_shared<LinCat>(name, iv);
    for (int x = iv.lo; x <= iv.hi; ++x)
        for (int y = x; y <= iv.hi; ++y) {
            std::vector<std::string> labels;
            for (const auto& m : c.hom(x, y)) labels.push_back(c.label(m));
            l->set_basis(x, y, std::move(labels));
        }
    for (int x = iv.lo; x <= iv.hi; ++x)
        for (int y = x; y <= iv.hi; ++y)
            for (int z = y; z <= iv.hi; ++z) {
                const auto& hb = c.hom(y, z);
                const auto& ha = c.hom(x, y);
                l->set_block(x, y, z, CompBlock(static_cast<int>(hb.size()), static_cast<int>(ha.size()),
                                                [&](int b, int a) {
                                                    const Morphism m = c.compose(hb[b], ha[a]);
                                                    const int idx = c.index_of(m);
                                                    if (idx < 0)
                                                        throw std::logic_error(c.family() +
                                                                               ": composite not enumerated: " +
                                                                               c.label(m));
                                                    const int s = sign ? sign(hb[b], ha[a]) : 1;
                                                    return std::vector<Term>{Term{idx, Rational(s)}};
                                                }));
            }
    for (int x = iv.lo; x < iv.hi; ++x)
        for (int y = x; y < iv.hi; ++y) {
            std::vector<std::pair<int, int>> map;
            for (const auto& m : c.hom(x, y)) {
                const int idx = c.index_of(c.genetic_embed(m));
                if (idx < 0) throw std::logic_error(c.family() + ": genetic embedding leaves hom-set");
                map.emplace_back(idx, 1);
            }
            l->set_iota(x, y, std::move(map));
        }
    l->finalize();
    return l;
}

LinCatPtr opposite(const LinCat& l) {
    const int lo = l.lo(), hi = l.hi();
    auto phi = [&](int x) { return lo + hi - x; };
    auto r = std::make_shared<LinCat>("op(" + l.name() + ")", l.interval());
    for (int x = lo; x <= hi; ++x)
        for (int y = x; y <= hi; ++y) r->set_basis(x, y, l.labels(phi(y), phi(x)));
    for (const auto& [key, deg] : l.degree_overrides()) {
        const auto [x, y, i] = key;
        r->set_degree(phi(y), phi(x), i, deg);
    }
    for (int x = lo; x <= hi; ++x)
        for (int y = x; y <= hi; ++y)
            for (int z = y; z <= hi; ++z) {
                // beta o^op alpha = alpha o beta in the original
                const CompBlock& src = l.block(phi(z), phi(y), phi(x));
                r->set_block(x, y, z, CompBlock(l.dim(phi(z), phi(y)), l.dim(phi(y), phi(x)), [&](int b, int a) {
                                 auto s = src.at(a, b);
                                 return std::vector<Term>(s.begin(), s.end());
                             }));
            }
    r->finalize();
    return r;
}

LinCatPtr truncate(const LinCat& l, Interval iv) {
    if (iv.lo < l.lo() || iv.hi > l.hi() || iv.hi < iv.lo) throw std::out_of_range("truncation outside the interval");
    auto r = std::make_shared<LinCat>(l.name() + "|" + std::to_string(iv.lo) + "," + std::to_string(iv.hi), iv);
    for (int x = iv.lo; x <= iv.hi; ++x)
        for (int y = x; y <= iv.hi; ++y) r->set_basis(x, y, l.labels(x, y));
    for (const auto& [key, deg] : l.degree_overrides()) {
        const auto [x, y, i] = key;
        if (iv.contains(x) && iv.contains(y)) r->set_degree(x, y, i, deg);
    }
    for (int x = iv.lo; x <= iv.hi; ++x)
        for (int y = x; y <= iv.hi; ++y)
            for (int z = y; z <= iv.hi; ++z) r->set_block(x, y, z, l.block(x, y, z));
    if (l.has_iota())
        for (int x = iv.lo; x < iv.hi; ++x)
            for (int y = x; y < iv.hi; ++y) r->set_iota(x, y, l.iota(x, y));
    r->finalize();
    return r;
}

LinCatPtr essential_subcategory(const LinCat& l) {
    const int lo = l.lo(), hi = l.hi();
    auto r = std::make_shared<LinCat>("ess(" + l.name() + ")", l.interval());
    auto kept = [&](int x, int y) { return x == y ? std::min(1, l.dim(x, x)) : l.dim(x, y); };
    for (int x = lo; x <= hi; ++x)
        for (int y = x; y <= hi; ++y) {
            auto labels = l.labels(x, y);
            labels.resize(kept(x, y));
            r->set_basis(x, y, std::move(labels));
        }
    for (const auto& [key, deg] : l.degree_overrides()) {
        const auto [x, y, i] = key;
        if (i < kept(x, y)) r->set_degree(x, y, i, deg);
    }
    for (int x = lo; x <= hi; ++x)
        for (int y = x; y <= hi; ++y)
            for (int z = y; z <= hi; ++z) {
                const CompBlock& src = l.block(x, y, z);
                const int keep_z = kept(x, z);
                r->set_block(x, y, z, CompBlock(kept(y, z), kept(x, y), [&](int b, int a) {
                                 std::vector<Term> out;
                                 for (const Term& t : src.at(b, a))
                                     if (t.index < keep_z) out.push_back(t);
                                 return out;
                             }));
            }
    if (l.has_iota())
        for (int x = lo; x < hi; ++x)
            for (int y = x; y < hi; ++y) {
                auto map = l.iota(x, y);
                map.resize(kept(x, y));
                r->set_iota(x, y, std::move(map));
            }
    r->finalize();
    return r;
}

namespace {

std::string triple(int x, int y, int z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

using Sparse = std::map<int, Rational>;

void accumulate(Sparse& s, std::span<const Term> terms, const Rational& c) {
    for (const Term& t : terms) {
        Rational& v = s[t.index];
        v += t.coeff * c;
        if (sgn(v) == 0) s.erase(t.index);
    }
}

}  // namespace

ConditionReport validate(const LinCat& l, const ValidateOptions& opts) {
    const int lo = l.lo(), hi = l.hi();
    ConditionCheck p1{"P1"}, p2{"P2"}, p3{"P3"}, p4{"P4"}, p5{"P5"}, p6{"P6"}, p7{"P7"}, p8{"P8"};
    ConditionCheck type_a{"type-A"}, graded{"graded"}, assoc{"associativity"}, ident{"identity"};
    ConditionCheck e1{"E1"}, e2{"E2"}, e3{"E3"}, e4{"E4"};

    // (P1), (P5), (P8) and (E2) hold by construction on a finite interval.
    if (lo < 0) e1.fail("interval starts below 0");

    for (int x = lo; x <= hi; ++x)
        for (int y = x; y <= hi; ++y) {
            if (l.dim(x, y) == 0) e3.fail("(" + std::to_string(x) + "," + std::to_string(y) + ")");
            for (int i = 0; i < l.dim(x, y); ++i) {
                const int d = l.degree(x, y, i);
                const std::string w = triple(x, y, i);
                if (d < 0) p2.fail(w);
                if (x != y && d == 0) p3.fail(w);
                if (x == y && d > 0) p7.fail(w);
                if (d != y - x) type_a.fail(w);
            }
        }

    for (int x = lo; x <= hi; ++x)
        if (!l.group(x)) p4.fail("degree-0 part at " + std::to_string(x) + " is not a group algebra");

    // (P6): hom(y-1,y) o hom(x,y-1) spans hom(x,y).
    for (int x = lo; x <= hi; ++x)
        for (int y = x + 2; y <= hi; ++y) {
            const int n = l.dim(x, y);
            if (n == 0) continue;
            const CompBlock& b = l.block(x, y - 1, y);
            SpanBuilder span(n);
            for (int p = 0; p < b.nb() && !span.full(); ++p) {
                bool deg1 = l.degree(y - 1, y, p) == 1;
                for (int q = 0; deg1 && q < b.na() && !span.full(); ++q) {
                    Vector v(n);
                    for (const Term& t : b.at(p, q)) v[t.index] += t.coeff;
                    span.add(std::move(v));
                }
            }
            if (!span.full()) p6.fail("(" + std::to_string(x) + "," + std::to_string(y) + ")");
        }

    // grading, identities, (E4)
    for (int x = lo; x <= hi; ++x)
        for (int y = x; y <= hi; ++y)
            for (int z = y; z <= hi; ++z) {
                const CompBlock& b = l.block(x, y, z);
                const int n = l.dim(x, z);
                std::vector<char> hit(n, 0);
                int hits = 0;
                SpanBuilder span(b.monomial() ? 0 : n);
                for (int p = 0; p < b.nb(); ++p)
                    for (int q = 0; q < b.na(); ++q) {
                        auto terms = b.at(p, q);
                        for (const Term& t : terms) {
                            if (!l.degree_overrides().empty() &&
                                l.degree(x, z, t.index) != l.degree(y, z, p) + l.degree(x, y, q))
                                graded.fail(triple(x, y, z) + " b=" + std::to_string(p) + " a=" + std::to_string(q));
                            if (b.monomial() && !hit[t.index]) {
                                hit[t.index] = 1;
                                ++hits;
                            }
                        }
                        if (!b.monomial() && !span.full()) {
                            Vector v(n);
                            for (const Term& t : terms) v[t.index] += t.coeff;
                            span.add(std::move(v));
                        }
                    }
                const bool surjective = b.monomial() ? hits == n : span.full();
                if (!surjective) e4.fail(triple(x, y, z));
            }
    for (int x = lo; x <= hi; ++x)
        for (int y = x; y <= hi; ++y) {
            if (l.dim(x, x) == 0 || l.dim(y, y) == 0) {
                ident.fail("missing identity at " + std::to_string(l.dim(x, x) == 0 ? x : y));
                continue;
            }
            for (int a = 0; a < l.dim(x, y); ++a) {
                auto left = l.compose(x, y, y, 0, a);
                auto right = l.compose(x, x, y, a, 0);
                const Term expect{a, Rational(1)};
                if (left.size() != 1 || !(left[0] == expect) || right.size() != 1 || !(right[0] == expect))
                    ident.fail(triple(x, y, a));
            }
        }

    // associativity on basis triples gamma in (z,w), beta in (y,z), alpha in (x,y)
    std::size_t examined = 0;
    bool truncated = false;
    for (int x = lo; x <= hi && !truncated; ++x)
        for (int y = x; y <= hi && !truncated; ++y)
            for (int z = y; z <= hi && !truncated; ++z)
                for (int w = z; w <= hi && !truncated; ++w) {
                    const CompBlock& gb = l.block(y, z, w);  // gamma o beta
                    const CompBlock& gba = l.block(x, y, w);  // (gamma beta) o alpha
                    const CompBlock& ba = l.block(x, y, z);  // beta o alpha
                    const CompBlock& gab = l.block(x, z, w);  // gamma o (beta alpha)
                    const bool mono = gb.monomial() && gba.monomial() && ba.monomial() && gab.monomial();
                    for (int g = 0; g < l.dim(z, w) && !truncated; ++g)
                        for (int b = 0; b < l.dim(y, z) && !truncated; ++b)
                            for (int a = 0; a < l.dim(x, y); ++a) {
                                if (opts.max_triples && examined >= opts.max_triples) {
                                    truncated = true;
                                    break;
                                }
                                ++examined;
                                bool equal;
                                if (mono) {
                                    int li = -1, ls = 0, ri = -1, rs = 0;
                                    if (int t = gb.mono_index(g, b); t >= 0) {
                                        li = gba.mono_index(t, a);
                                        ls = gb.mono_sign(g, b) * (li >= 0 ? gba.mono_sign(t, a) : 0);
                                    }
                                    if (int t = ba.mono_index(b, a); t >= 0) {
                                        ri = gab.mono_index(g, t);
                                        rs = ba.mono_sign(b, a) * (ri >= 0 ? gab.mono_sign(g, t) : 0);
                                    }
                                    equal = (li < 0 && ri < 0) || (li == ri && ls == rs);
                                } else {
                                    Sparse lhs, rhs;
                                    for (const Term& t : gb.at(g, b)) accumulate(lhs, gba.at(t.index, a), t.coeff);
                                    for (const Term& t : ba.at(b, a)) accumulate(rhs, gab.at(g, t.index), t.coeff);
                                    equal = lhs == rhs;
                                }
                                if (!equal)
                                    assoc.fail("objects " + triple(x, y, z) + "," + std::to_string(w) + " basis " +
                                               triple(g, b, a));
                            }
                }
    if (truncated && assoc.passed) assoc.witness = "partial: " + std::to_string(examined) + " triples";

    ConditionReport r;
    r.checks = {p1, p2, p3, p4, p5, p6, p7, p8, type_a, graded, assoc, ident, e1, e2, e3, e4};
    return r;
}

}  // namespace koszulkit
