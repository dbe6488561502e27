#include "report_json.hpp"

#include <regex>

namespace koszulkit::cli {

Json witness_json(const std::string& text) {
    Json j;
    j["text"] = text;
    static const std::regex tuple(R"(\((-?\d+(?:,-?\d+)*)\))");
    std::smatch m;
    if (std::regex_search(text, m, tuple)) {
        Json fiber = Json::array();
        static const std::regex num(R"(-?\d+)");
        const std::string body = m[1];
        for (auto it = std::sregex_iterator(body.begin(), body.end(), num); it != std::sregex_iterator(); ++it)
            fiber.push_back(std::stoi(it->str()));
        j["fiber"] = fiber;
    }
    const auto close = text.rfind(']');
    const auto open = close == std::string::npos ? std::string::npos : text.rfind('[', close);
    if (open != std::string::npos) {
        static const std::regex entry(R"(-?\d+/\d+)");
        const std::string body = text.substr(open + 1, close - open - 1);
        Json v = Json::array();
        for (auto it = std::sregex_iterator(body.begin(), body.end(), entry); it != std::sregex_iterator(); ++it)
            v.push_back(it->str());
        if (!v.empty()) j["vector"] = v;
    }
    return j;
}

Json witness_json(const std::string& text, FiberKey fiber) {
    Json j = witness_json(text);
    j["fiber"] = {fiber.first, fiber.second};
    return j;
}

Json check_json(const ConditionCheck& c) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.passed) j["witness"] = witness_json(c.witness);
    return j;
}

Json checks_json(const ConditionReport& r) {
    Json a = Json::array();
    for (const auto& c : r.checks) a.push_back(check_json(c));
    return a;
}

Json fiber_dims_json(const std::map<FiberKey, int>& dims) {
    Json a = Json::array();
    for (const auto& [k, n] : dims)
        if (n != 0) a.push_back({{"object", k.first}, {"degree", k.second}, {"dim", n}});
    return a;
}

Json steps_json(const std::vector<StepReport>& steps) {
    Json a = Json::array();
    for (const auto& s : steps) {
        Json j;
        j["n"] = s.n;
        j["generated_in_degree"] = s.generated_in_degree;
        j["generated_in_position"] = s.generated_in_position;
        j["top"] = fiber_dims_json(s.top);
        if (!s.passed()) j["witness"] = witness_json(s.witness);
        a.push_back(std::move(j));
    }
    return a;
}

}  // namespace koszulkit::cli
