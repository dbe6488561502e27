#ifndef KOSZULKIT_TOOLS_COMMANDS_HPP
#define KOSZULKIT_TOOLS_COMMANDS_HPP

#include "cli.hpp"
#include "report_json.hpp"

#include "koszulkit/lincat.hpp"

#include <iosfwd>

namespace koszulkit::cli {

// Everything a subcommand needs, resolved from RunConfig.
struct Context {
    CategorySpec spec;
    CombCategoryPtr cat;
    Interval iv;
    const RunConfig* cfg = nullptr;
    std::ostream* log = nullptr;

    LinCatPtr linear() const;
    void note(const std::string& msg) const;

private:
    mutable LinCatPtr lin_;
};

Context make_context(const RunConfig& cfg, std::ostream& log);

// Each fills `report` and returns the exit code.
int cmd_validate(const Context& ctx, Json& report);
int cmd_koszul(const Context& ctx, Json& report);
int cmd_betti(const Context& ctx, Json& report);
int cmd_yoneda(const Context& ctx, Json& report);
int cmd_quadratic(const Context& ctx, Json& report);
int cmd_dual(const Context& ctx, Json& report);
int cmd_twist_check(const Context& ctx, Json& report);
int cmd_decompose(const Context& ctx, Json& report);
int cmd_essential_check(const Context& ctx, Json& report);
int cmd_opposite(const Context& ctx, Json& report);

}  // namespace koszulkit::cli

#endif
