#include "aiimpact/config.hpp"

#include "aiimpact/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace aiimpact {

namespace {

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string &key, const std::string &value) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ValidationError("config key '" + key + "': not a number: '" + value + "'");
    return v;
}

int to_int(const std::string &key, const std::string &value) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ValidationError("config key '" + key + "': not an integer: '" + value + "'");
    return v;
}

std::filesystem::path resolve(const std::filesystem::path &base,
                              const std::string &value) {
    std::filesystem::path p(value);
    return p.is_absolute() ? p : base / p;
}

std::vector<Comparator> parse_comparators(const std::string &value) {
    std::vector<Comparator> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ValidationError("context.comparators entries must be name:twh, got '" +
                                  item + "'");
        out.push_back({trim(item.substr(0, colon)),
                       to_double("context.comparators", trim(item.substr(colon + 1)))});
    }
    return out;
}

} // namespace

YearRange parse_year_range(const std::string &text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ValidationError("year range must be FIRST:LAST, got '" + text + "'");
    YearRange r;
    r.first = to_int("year range", trim(text.substr(0, colon)));
    r.last = to_int("year range", trim(text.substr(colon + 1)));
    if (r.first > r.last)
        throw ValidationError("year range '" + text + "' is empty");
    return r;
}

void apply_override(RunConfig &c, const std::string &key, const std::string &value,
                    const std::filesystem::path &base_dir) {
    if (key == "tasks")
        c.tasks = resolve(base_dir, value);
    else if (key == "wagebills")
        c.wagebills = resolve(base_dir, value);
    else if (key == "deflator")
        c.deflator = resolve(base_dir, value);
    else if (key == "accounts")
        c.accounts = resolve(base_dir, value);
    else if (key == "accounts_history")
        c.accounts_history = resolve(base_dir, value);
    else if (key == "crosswalk")
        c.crosswalk = resolve(base_dir, value);
    else if (key == "grouping")
        c.grouping = resolve(base_dir, value);
    else if (key == "out")
        c.out_dir = value; // resolved against the caller's cwd, not the config
    else if (key == "reference_year")
        c.reference_year = to_int(key, value);
    else if (key == "deflator_base_year")
        c.deflator_base_year = to_int(key, value);
    else if (key == "wage_window")
        c.wage_window = parse_year_range(value);
    else if (key == "projection.window")
        c.projection_window = parse_year_range(value);
    else if (key == "projection.target_year")
        c.projection_target_year = to_int(key, value);
    else if (key == "cost_savings.task_fraction")
        c.cost_savings.task_fraction = to_double(key, value);
    else if (key == "cost_savings.labor_savings")
        c.cost_savings.labor_savings = to_double(key, value);
    else if (key == "cost_savings.annualization_divisor")
        c.cost_savings.annualization_divisor = to_double(key, value);
    else if (key == "context.national_capacity_gw")
        c.context.national_capacity_gw = to_double(key, value);
    else if (key == "context.national_emissions_gtco2")
        c.context.national_emissions_gtco2 = to_double(key, value);
    else if (key == "context.comparators")
        c.context.comparators = parse_comparators(value);
    else
        throw ValidationError("unknown config key '" + key + "'");
}

RunConfig load_run_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open config file: " + path.string());
    RunConfig c;
    auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                                  ": expected key = value");
        apply_override(c, trim(t.substr(0, eq)), trim(t.substr(eq + 1)), base);
    }
    return c;
}

void RunConfig::validate(bool need_history) const {
    auto check = [](const std::filesystem::path &p, const char *what) {
        if (p.empty())
            throw ValidationError(std::string("config is missing the '") + what +
                                  "' dataset path");
        if (!std::filesystem::exists(p))
            throw ValidationError(std::string(what) + " file does not exist: " + p.string());
    };
    check(tasks, "tasks");
    check(wagebills, "wagebills");
    check(deflator, "deflator");
    check(accounts, "accounts");
    check(crosswalk, "crosswalk");
    check(grouping, "grouping");
    if (need_history)
        check(accounts_history, "accounts_history");
    cost_savings.validate();
}

} // namespace aiimpact
