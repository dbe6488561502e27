#include "commands.hpp"

#include "spec_io.hpp"

#include "koszulkit/genetic.hpp"
#include "koszulkit/quadratic.hpp"
#include "koszulkit/twist.hpp"

#include <algorithm>
#include <ostream>

namespace koszulkit::cli {

namespace {

Json hom_dims_json(const LinCat& l) {
    Json a = Json::array();
    for (int x = l.lo(); x <= l.hi(); ++x)
        for (int y = x; y <= l.hi(); ++y) a.push_back({{"x", x}, {"y", y}, {"dim", l.dim(x, y)}});
    return a;
}

std::vector<int> objects(const Context& ctx) {
    if (ctx.cfg->x) {
        if (!ctx.iv.contains(*ctx.cfg->x)) throw ConfigError("--x must lie in the interval");
        return {*ctx.cfg->x};
    }
    std::vector<int> xs;
    for (int x = ctx.iv.lo; x <= ctx.iv.hi; ++x) xs.push_back(x);
    return xs;
}

// Depth for the simple at x on [lo, hi]: an explicit --x must fit, otherwise
// the requested depth is clipped to the window.
int depth_for(const Context& ctx, int x, int hi) {
    const int room = hi - x;
    if (!ctx.cfg->depth) return room;
    if (ctx.cfg->x == x && *ctx.cfg->depth > room)
        throw ConfigError("--depth " + std::to_string(*ctx.cfg->depth) + " exceeds hi - x = " + std::to_string(room));
    return std::min(*ctx.cfg->depth, room);
}

Json certificates(const Context& ctx, LinCatPtr l, bool& all) {
    Json a = Json::array();
    for (int x = l->lo(); x <= l->hi(); ++x) {
        const int depth = depth_for(ctx, x, l->hi());
        ctx.note("certificate x=" + std::to_string(x) + " depth=" + std::to_string(depth));
        const auto steps = koszul_certificate(l, x, depth);
        const bool ok = std::all_of(steps.begin(), steps.end(), [](const StepReport& s) { return s.passed(); });
        all = all && ok;
        a.push_back({{"x", x}, {"depth", depth}, {"passed", ok}, {"steps", steps_json(steps)}});
    }
    return a;
}

int code(bool ok) { return ok ? kPass : kCheckFailed; }

}  // namespace

LinCatPtr Context::linear() const {
    if (!lin_) {
        note("linearizing");
        lin_ = linearize(*cat, iv);
    }
    return lin_;
}

void Context::note(const std::string& msg) const {
    if (cfg->verbosity > 0 && log) *log << "koszulkit: " << msg << '\n';
}

Context make_context(const RunConfig& cfg, std::ostream& log) {
    Context ctx;
    ctx.cfg = &cfg;
    ctx.log = &log;
    std::optional<Interval> iv;
    if (!cfg.spec_path.empty()) {
        auto loaded = spec_from_file(cfg.spec_path);
        ctx.spec = std::move(loaded.spec);
        iv = loaded.interval;
    } else {
        if (cfg.family.empty()) throw ConfigError("either --spec or --family is required");
        ctx.spec.family = cfg.family;
        if (!cfg.gamma.empty()) ctx.spec.gamma = parse_gamma(cfg.gamma);
        ctx.spec.d = cfg.d;
        ctx.spec.q = cfg.q;
    }
    if (!cfg.interval.empty()) iv = Interval{cfg.interval[0], cfg.interval[1]};
    try {
        ctx.cat = make_category(ctx.spec);
    } catch (const SpecError& e) {
        throw ConfigError(e.what());
    }
    const int lo = ctx.cat->min_object();
    ctx.iv = iv.value_or(Interval{lo, std::min(lo + 3, ctx.cat->max_object())});
    if (ctx.iv.width() < 1) throw ConfigError("interval width must be at least 1");
    if (ctx.iv.lo < lo || ctx.iv.hi > ctx.cat->max_object())
        throw ConfigError("interval must lie in [" + std::to_string(lo) + ", " + std::to_string(ctx.cat->max_object()) +
                          "] for " + ctx.spec.family);
    if (cfg.depth && *cfg.depth < 0) throw ConfigError("depth must be non-negative");

    const std::size_t cap = max_dim_from_env();
    for (int x = ctx.iv.lo; x <= ctx.iv.hi; ++x)
        for (int y = x; y <= ctx.iv.hi; ++y)
            if (ctx.cat->hom(x, y).size() > cap)
                throw ConfigError("hom(" + std::to_string(x) + "," + std::to_string(y) + ") has dimension " +
                                  std::to_string(ctx.cat->hom(x, y).size()) + ", above KOSZULKIT_MAX_DIM=" +
                                  std::to_string(cap));
    return ctx;
}

int cmd_validate(const Context& ctx, Json& report) {
    const auto c = verify_c_conditions(*ctx.cat, ctx.iv.hi);
    const auto g = check_genetic_axioms(*ctx.cat, ctx.iv);
    const auto l = validate(*ctx.linear());
    report["combinatorial"] = checks_json(c);
    report["genetic"] = checks_json(g);
    report["linear"] = checks_json(l);
    report["hom_dims"] = hom_dims_json(*ctx.linear());
    const bool ok = c.passed() && g.passed() && l.passed();
    report["passed"] = ok;
    return code(ok);
}

int cmd_koszul(const Context& ctx, Json& report) {
    const LinCatPtr l = ctx.linear();
    Json a = Json::array();
    bool all = true;
    for (int x : objects(ctx)) {
        const int depth = depth_for(ctx, x, ctx.iv.hi);
        ctx.note("certificate x=" + std::to_string(x) + " depth=" + std::to_string(depth));
        const auto steps = koszul_certificate(l, x, depth);
        const bool ok = std::all_of(steps.begin(), steps.end(), [](const StepReport& s) { return s.passed(); });
        all = all && ok;
        a.push_back({{"x", x}, {"depth", depth}, {"passed", ok}, {"steps", steps_json(steps)}});
    }
    report["certificates"] = a;
    report["passed"] = all;
    return code(all);
}

int cmd_betti(const Context& ctx, Json& report) {
    const LinCatPtr l = ctx.linear();
    Json a = Json::array();
    for (int x : objects(ctx)) {
        const int depth = depth_for(ctx, x, ctx.iv.hi);
        const BettiTable b = betti_table(minimal_resolution(regular_simple(l, x), depth));
        Json rows = Json::array();
        bool linear = true;
        for (std::size_t n = 0; n < b.size(); ++n) {
            rows.push_back({{"n", n}, {"entries", fiber_dims_json(b[n])}});
            for (const auto& [k, d] : b[n])
                if (d != 0 && k.second != static_cast<int>(n)) linear = false;
        }
        a.push_back({{"x", x}, {"depth", depth}, {"linear", linear}, {"table", rows}});
    }
    report["betti"] = a;
    return kPass;
}

int cmd_yoneda(const Context& ctx, Json& report) {
    const int depth = ctx.cfg->depth.value_or(ctx.iv.width());
    try {
        const auto dims = yoneda_dims(ctx.linear(), depth);
        Json a = Json::array();
        for (const auto& [key, d] : dims) {
            const auto [x, y, n] = key;
            if (d == 0 || (ctx.cfg->x && x != *ctx.cfg->x)) continue;
            a.push_back({{"x", x}, {"y", y}, {"n", n}, {"dim", d}});
        }
        report["depth"] = depth;
        report["ext_dims"] = a;
        report["passed"] = true;
        return kPass;
    } catch (const std::domain_error& e) {
        report["passed"] = false;
        report["witness"] = witness_json(e.what());
        return kCheckFailed;
    }
}

int cmd_quadratic(const Context& ctx, Json& report) {
    const QuadraticCheck q = is_quadratic(*ctx.linear());
    report["quadratic"] = q.quadratic;
    if (!q.quadratic) report["witness"] = witness_json(q.witness, {q.x, q.d});
    report["passed"] = q.quadratic;
    return code(q.quadratic);
}

int cmd_dual(const Context& ctx, Json& report) {
    const QuadraticDual d = quadratic_dual(ctx.linear());
    const auto v = validate(*d.dual);
    report["quadratic"] = d.quadratic;
    report["tensor_quotient"] = {{"name", d.e->name()}, {"hom_dims", hom_dims_json(*d.e)}};
    report["dual"] = {{"name", d.dual->name()}, {"hom_dims", hom_dims_json(*d.dual)}, {"checks", checks_json(v)}};
    const bool ok = d.quadratic && v.passed();
    report["passed"] = ok;
    return code(ok);
}

int cmd_twist_check(const Context& ctx, Json& report) {
    const TwistDualReport r = check_twist_dual_iso(*ctx.cat, ctx.iv, !ctx.cfg->no_signs);
    report["signs"] = !ctx.cfg->no_signs;
    Json fibers = Json::array();
    for (const auto& f : r.fibers) fibers.push_back(check_json(f));
    report["fibers"] = fibers;
    report["iso"] = r.iso;
    if (!r.iso) report["witness"] = witness_json(r.witness);
    report["passed"] = r.iso;
    return code(r.iso);
}

int cmd_decompose(const Context& ctx, Json& report) {
    const CombCategory& c = *ctx.cat;
    std::vector<int> xs;
    if (ctx.cfg->x) {
        xs.push_back(*ctx.cfg->x);
    } else {
        for (int x = ctx.iv.lo; x <= ctx.iv.hi && x + 1 <= c.max_object(); ++x) xs.push_back(x);
    }
    auto count = [&](int a, int b) -> long long {
        if (a < c.min_object() || b < a) return 0;
        return static_cast<long long>(c.hom(a, b).size());
    };
    Json a = Json::array();
    bool all = true;
    for (int x : xs) {
        DecompositionWitness w;
        try {
            w = decomposition_numbers(c, x);
        } catch (const std::out_of_range& e) {
            throw ConfigError(e.what());
        }
        const ThetaReport t = verify_theta(c, w, ctx.iv);
        Json j;
        j["x"] = x;
        j["m"] = w.m;
        j["n"] = w.n;
        Json betas = Json::array(), gammas = Json::array();
        for (const auto& b : w.beta_reps) betas.push_back(c.label(b));
        for (const auto& g : w.gamma_reps) gammas.push_back(c.label(g));
        j["beta_reps"] = betas;
        j["gamma_reps"] = gammas;
        Json theta = Json::array();
        bool identity = true;
        std::size_t k = 0;
        for (const auto& [y, image] : w.theta) {
            const long long lhs = count(x, y + 1);
            const long long rhs = w.m * count(x, y) + w.n * count(x - 1, y);
            identity = identity && lhs == rhs;
            Json f = check_json(t.fibers[k++]);
            f["y"] = y;
            f["image"] = image;
            f["dimension_identity"] = {{"lhs", lhs}, {"rhs", rhs}, {"holds", lhs == rhs}};
            theta.push_back(std::move(f));
        }
        j["theta"] = theta;
        j["bijective"] = t.bijective;
        if (!t.bijective) j["witness"] = witness_json(t.witness);
        all = all && t.bijective && identity;
        a.push_back(std::move(j));
    }
    report["decompositions"] = a;
    report["passed"] = all;
    return code(all);
}

int cmd_essential_check(const Context& ctx, Json& report) {
    const LinCatPtr e = essential_subcategory(*ctx.linear());
    bool all = true;
    report["essential"] = {{"name", e->name()}, {"hom_dims", hom_dims_json(*e)}};
    report["certificates"] = certificates(ctx, e, all);
    if (!ctx.cfg->against.empty()) {
        CategorySpec other = ctx.spec;
        other.family = ctx.cfg->against;
        CombCategoryPtr oc;
        try {
            oc = make_category(other);
        } catch (const SpecError& err) {
            throw ConfigError(std::string("--against: ") + err.what());
        }
        const LinCatPtr oe = essential_subcategory(*linearize(*oc, ctx.iv));
        const bool same = *e == *oe;
        report["against"] = {{"family", other.family}, {"name", oe->name()}, {"identical", same}};
        all = all && same;
    }
    report["passed"] = all;
    return code(all);
}

int cmd_opposite(const Context& ctx, Json& report) {
    const LinCatPtr op = opposite(*ctx.linear());
    const auto v = validate(*op);
    bool all = v.passed();
    report["opposite"] = {{"name", op->name()}, {"hom_dims", hom_dims_json(*op)}, {"checks", checks_json(v)}};
    report["certificates"] = certificates(ctx, op, all);
    report["passed"] = all;
    return code(all);
}

}  // namespace koszulkit::cli
