#include "fracsum/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fracsum {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

u64 parse_u64(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const unsigned long long r = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw domain_error("config: bad integer for " + key + ": '" + v + "'");
    }
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double r = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw domain_error("config: bad number for " + key + ": '" + v + "'");
    }
}

} // namespace

void RunConfig::validate() const {
    if (grid.min_x < 1) throw domain_error("config: grid.min_x must be >= 1");
    if (grid.ratio <= 1.0) throw domain_error("config: grid.ratio must be > 1");
    if (grid.max_x < grid.min_x) throw domain_error("config: grid.max_x < grid.min_x");
    if (epsilon_slack <= 0.0 || epsilon_slack >= 0.5)
        throw domain_error("config: epsilon_slack must lie in (0, 0.5)");
    if (sieve_limit < 2) throw domain_error("config: sieve_limit must be >= 2");
    if (budgets.naive_max_x == 0 || budgets.blocked_max_x == 0 || budgets.enumeration_max_n == 0)
        throw domain_error("config: budgets must be positive");
    if (precision_target <= 0) throw precision_error("config: precision_target must be positive");
    if (output_dir.empty()) throw domain_error("config: output_dir must be nonempty");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw resource_error("config: cannot open " + path);
    RunConfig cfg;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw domain_error("config: line " + std::to_string(lineno) + " is not key = value");
        const std::string key = section.empty() ? trim(line.substr(0, eq))
                                                : section + "." + trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "sieve_limit") cfg.sieve_limit = parse_u64(val, key);
        else if (key == "epsilon_slack") cfg.epsilon_slack = parse_double(val, key);
        else if (key == "precision_target") cfg.precision_target = Real(val);
        else if (key == "output_dir") cfg.output_dir = val;
        else if (key == "grid.min_x") cfg.grid.min_x = parse_u64(val, key);
        else if (key == "grid.max_x") cfg.grid.max_x = parse_u64(val, key);
        else if (key == "grid.ratio") cfg.grid.ratio = parse_double(val, key);
        else if (key == "budgets.naive_max_x") cfg.budgets.naive_max_x = parse_u64(val, key);
        else if (key == "budgets.blocked_max_x") cfg.budgets.blocked_max_x = parse_u64(val, key);
        else if (key == "budgets.enumeration_max_n") cfg.budgets.enumeration_max_n = parse_u64(val, key);
        else throw domain_error("config: unknown key '" + key + "' at line " + std::to_string(lineno));
    }
    cfg.validate();
    return cfg;
}

RunConfig config_from_env_or_default() {
    if (const char* p = std::getenv("FRACSUM_CONFIG")) return load_config(p);
    RunConfig cfg;
    cfg.validate();
    return cfg;
}

} // namespace fracsum
