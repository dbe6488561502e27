#include "cli.hpp"

#include "commands.hpp"
#include "spec_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <ostream>

namespace koszulkit::cli {

namespace {

using Command = std::function<int(const Context&, Json&)>;

const std::map<std::string, std::pair<Command, std::string>>& commands() {
    static const std::map<std::string, std::pair<Command, std::string>> table = {
        {"validate", {cmd_validate, "Check (C1)-(C4), (F1)-(F3) and the linear axioms"}},
        {"koszul", {cmd_koszul, "Koszul certificates for the simples"}},
        {"betti", {cmd_betti, "Betti tables of the simples"}},
        {"yoneda", {cmd_yoneda, "Dimensions of Ext between simples"}},
        {"quadratic", {cmd_quadratic, "Check that the relations are generated in degree 2"}},
        {"dual", {cmd_dual, "Quadratic dual"}},
        {"twist-check", {cmd_twist_check, "Compare the quadratic dual with the opposite of the twist"}},
        {"decompose", {cmd_decompose, "Decomposition numbers m, n and the map Theta"}},
        {"essential-check", {cmd_essential_check, "Essential subcategory and its certificates"}},
        {"opposite", {cmd_opposite, "Opposite category and its certificates"}},
    };
    return table;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--spec", cfg.spec_path, "JSON category spec")->check(CLI::ExistingFile);
    sub->add_option("--family", cfg.family, "Family name");
    sub->add_option("--gamma", cfg.gamma, "cyclic:n or table:r0;r1;... (rows comma separated)");
    sub->add_option("--d", cfg.d, "Number of colours for FI_d / OI_d");
    sub->add_option("--q", cfg.q, "Field size for VI");
    sub->add_option("--interval", cfg.interval, "lo hi")->expected(2);
    sub->add_option("--depth", cfg.depth, "Resolution depth");
    sub->add_option("--x", cfg.x, "Single object");
    sub->add_option("--out", cfg.out, "Write the JSON report here instead of stdout");
    sub->add_flag("-v,--verbose", cfg.verbosity, "Progress on stderr");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Koszul theory for combinatorial categories", "koszulkit"};
    app.require_subcommand(1);
    for (const auto& [name, entry] : commands()) {
        CLI::App* sub = app.add_subcommand(name, entry.second);
        add_common(sub, cfg);
        if (name == "twist-check") sub->add_flag("--no-signs", cfg.no_signs, "Use the plain linearization instead");
        if (name == "essential-check")
            sub->add_option("--against", cfg.against, "Also compare with this family's essential subcategory");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "koszulkit: " << e.what() << "\n" << app.help();
        return kUsage;
    }
    for (const auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

    Json report;
    int rc = kPass;
    try {
        const Context ctx = make_context(cfg, err);
        report["command"] = cfg.subcommand;
        report["category"] = spec_to_json(ctx.spec, ctx.iv);
        rc = commands().at(cfg.subcommand).first(ctx, report);
    } catch (const ConfigError& e) {
        err << "koszulkit: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "koszulkit: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "koszulkit: " << e.what() << '\n';
        return kUsage;
    }

    const std::string text = report.dump(2) + "\n";
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            err << "koszulkit: cannot write " << cfg.out << '\n';
            return kUsage;
        }
        f << text;
    }
    return rc;
}

}  // namespace koszulkit::cli
