#ifndef KOSZULKIT_TOOLS_SPEC_IO_HPP
#define KOSZULKIT_TOOLS_SPEC_IO_HPP

#include "koszulkit/zoo.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace koszulkit::cli {

// Bad flags, bad files, bad spec fields: anything that maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadedSpec {
    CategorySpec spec;
    std::optional<Interval> interval;
};

// {"family": s, "gamma": {"cyclic": n} | {"table": [[...]]}, "d": n, "q": n, "interval": [lo, hi]}
LoadedSpec spec_from_json(const nlohmann::json& j);
LoadedSpec spec_from_file(const std::string& path);

// "cyclic:3" or "table:0,1;1,0" (rows separated by ';').
FiniteGroup parse_gamma(const std::string& text);

nlohmann::ordered_json spec_to_json(const CategorySpec& spec, Interval iv);

// KOSZULKIT_MAX_DIM, default 5000.
std::size_t max_dim_from_env();

}  // namespace koszulkit::cli

#endif
