#include "koszulkit/twist.hpp"

#include "koszulkit/quadratic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace koszulkit {

namespace {

void require_rho(const CombCategory& c) {
    if (!c.has_rho()) throw std::invalid_argument(c.family() + ": no functor to FI, twist undefined");
}

int permutation_sign(const std::vector<int>& seq) {
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) inversions += seq[i] > seq[j];
    return inversions % 2 ? -1 : 1;
}

std::vector<int> complement(const std::vector<int>& image, int y) {
    std::vector<bool> hit(y + 1, false);
    for (int v : image) hit[v] = true;
    std::vector<int> out;
    for (int v = 1; v <= y; ++v)
        if (!hit[v]) out.push_back(v);
    return out;
}

// Rescales every stored action of m by wedge_sign, over the category `target`.
GradedModule rescale(const CombCategory& c, const GradedModule& m, LinCatPtr target) {
    const LinCat& src = m.cat();
    const LinCat& tgt = *target;
    if (src.interval().lo != tgt.interval().lo || src.interval().hi != tgt.interval().hi)
        throw std::invalid_argument("twist: categories on different intervals");
    GradedModule out(target);
    for (const auto& [k, f] : m.fibers()) out.add_fiber(k.first, k.second, f.dim, f.gram);
    for (const auto& [k, f] : m.fibers()) {
        const int x = k.first;
        const auto& gs = src.group(x)->generators();
        if (gs != tgt.group(x)->generators()) throw std::invalid_argument("twist: degree-0 parts differ");
        std::vector<Matrix> gens;
        for (std::size_t g = 0; g < gs.size(); ++g) {
            const int s = wedge_sign(c, c.hom(x, x)[gs[g]]);
            gens.push_back(s < 0 ? f.group_gens[g].scaled(-1) : f.group_gens[g]);
        }
        out.set_group_action(x, k.second, std::move(gens));
        if (!src.contains(x + 1)) continue;
        const auto& reps = src.arrow_reps(x);
        if (reps != tgt.arrow_reps(x)) throw std::invalid_argument("twist: arrow orbits differ");
        for (std::size_t r = 0; r < f.arrows.size(); ++r) {
            if (f.arrows[r].rows() == 0) continue;
            const int s = wedge_sign(c, c.hom(x, x + 1)[reps[r]]);
            out.set_arrow_action(x, k.second, static_cast<int>(r), s < 0 ? f.arrows[r].scaled(-1) : f.arrows[r]);
        }
    }
    return out;
}

}  // namespace

std::vector<TwistBasisElt> twist_basis(const CombCategory& c, int x, int y) {
    require_rho(c);
    std::vector<TwistBasisElt> out;
    for (const auto& m : c.hom(x, y)) out.push_back({m, complement(c.rho(m), y)});
    return out;
}

int twist_sign(const CombCategory& c, const Morphism& beta, const Morphism& alpha) {
    require_rho(c);
    if (alpha.tgt != beta.src) throw std::invalid_argument("twist_sign: morphisms not composable");
    const std::vector<int> rb = c.rho(beta);
    std::vector<int> seq;
    for (int d : complement(c.rho(alpha), alpha.tgt)) seq.push_back(rb[d - 1]);
    for (int d : complement(rb, beta.tgt)) seq.push_back(d);
    return permutation_sign(seq);
}

int wedge_sign(const CombCategory& c, const Morphism& alpha) {
    require_rho(c);
    std::vector<int> seq = c.rho(alpha);
    for (int d : complement(seq, alpha.tgt)) seq.push_back(d);
    return permutation_sign(seq);
}

LinCatPtr twist_category(const CombCategory& c, Interval iv) {
    require_rho(c);
    return linearize(
        c, iv, [&c](const Morphism& b, const Morphism& a) { return twist_sign(c, b, a); },
        "tw(" + c.family() + "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "])");
}

GradedModule tau_module(const CombCategory& c, const GradedModule& m, LinCatPtr twisted) {
    require_rho(c);
    return rescale(c, m, std::move(twisted));
}

GradedModule mu_module(const CombCategory& c, const GradedModule& n, LinCatPtr plain) {
    require_rho(c);
    return rescale(c, n, std::move(plain));
}

std::map<FiberKey, Matrix> twist_unit(const GradedModule& m) {
    std::map<FiberKey, Matrix> out;
    for (const auto& [k, f] : m.fibers()) out[k] = Matrix::identity(f.dim);
    return out;
}

TwistDualReport check_twist_dual_iso(const CombCategory& c, Interval iv, bool signs) {
    static const std::vector<std::string> supported = {"FI", "FI_gamma", "OI_gamma", "FI_d", "OI_d"};
    if (std::find(supported.begin(), supported.end(), c.family()) == supported.end())
        throw std::invalid_argument(c.family() + ": twist duality is only asserted for FI_Γ, OI_Γ, FI_d, OI_d");
    LinCatPtr plain = linearize(c, iv);
    LinCatPtr tw = signs ? twist_category(c, iv) : linearize(c, iv, {}, "untwisted");
    const FreeCover f = free_cover(plain);
    const FreeCover ft = free_cover(tw);
    TwistDualReport r;
    for (int x = iv.lo; x + 2 <= iv.hi; ++x) {
        std::ostringstream name;
        name << "(" << x << "," << x + 2 << ")";
        ConditionCheck chk(name.str());
        if (f.split.at({x, x + 2}) != ft.split.at({x, x + 2})) {
            chk.fail("free covers have different path classes");
        } else {
            const Subspace dual_rel = annihilator(relations_deg2(f, x));
            const Subspace tw_rel = relations_deg2(ft, x);
            if (!(dual_rel == tw_rel)) {
                std::ostringstream w;
                w << "dims " << dual_rel.dim() << " vs " << tw_rel.dim();
                SpanBuilder sb(tw_rel.ambient_dim);
                for (std::size_t j = 0; j < tw_rel.dim(); ++j) sb.add(tw_rel.basis.column(j));
                for (std::size_t j = 0; j < dual_rel.dim(); ++j)
                    if (sb.add(dual_rel.basis.column(j))) {
                        w << ", dual relation outside the twisted kernel: " << vector_witness(dual_rel.basis.column(j));
                        break;
                    }
                chk.fail(w.str());
            }
        }
        if (!chk.passed && r.iso) {
            r.iso = false;
            r.witness = chk.name + ": " + chk.witness;
        }
        r.fibers.push_back(std::move(chk));
    }
    return r;
}

}  // namespace koszulkit
