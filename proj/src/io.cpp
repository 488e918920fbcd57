#include "infodecomp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace infodecomp {

namespace {

constexpr double kSumTolerance = 1e-6;

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

void assign_roles(std::vector<VariableSpec>& vars, const std::optional<std::string>& target) {
    if (target) {
        bool found = false;
        for (auto& v : vars) {
            v.role = v.name == *target ? VarRole::target : VarRole::input;
            found = found || v.role == VarRole::target;
        }
        if (!found) throw ParseError("unknown variable: " + *target);
    } else if (std::none_of(vars.begin(), vars.end(),
                            [](const VariableSpec& v) { return v.role == VarRole::target; })) {
        vars.back().role = VarRole::target;
    }
}

ParseResult finish(std::vector<VariableSpec> vars,
                   const std::vector<std::pair<std::vector<int>, double>>& states,
                   const ParseOptions& options) {
    double sum = 0.0;
    for (const auto& [state, p] : states) {
        (void)state;
        if (p < 0.0) throw ParseError("negative probability");
        if (!std::isfinite(p)) throw ParseError("non-finite probability");
        sum += p;
    }
    std::vector<std::string> warnings;
    if (std::abs(sum - 1.0) > kSumTolerance) {
        if (options.strict) {
            std::ostringstream msg;
            msg << "probabilities sum to " << sum << ", outside [1-1e-6, 1+1e-6]";
            throw ParseError(msg.str());
        }
        std::ostringstream w;
        w << "probabilities summed to " << sum << "; renormalized";
        warnings.push_back(w.str());
    }
    try {
        JointDistribution d =
            JointDistribution::from_states(std::move(vars), states, options.max_states);
        return {std::move(d), std::move(warnings)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ParseResult parse_tsv(std::istream& in, const ParseOptions& options) {
    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        header = split_ws(line);
        if (!header.empty()) break;
    }
    if (header.size() < 2 || header.back() != "p")
        throw ParseError("TSV header must list variable names followed by `p`");
    header.pop_back();

    std::vector<VariableSpec> vars;
    for (const auto& name : header) vars.push_back({name, 1, VarRole::input});

    std::vector<std::pair<std::vector<int>, double>> states;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() != vars.size() + 1)
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(vars.size()) + " state values and a probability");
        std::vector<int> state(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            try {
                std::size_t pos = 0;
                state[i] = std::stoi(tokens[i], &pos);
                if (pos != tokens[i].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad state value `" +
                                 tokens[i] + "`");
            }
            if (state[i] < 0)
                throw ParseError("line " + std::to_string(lineno) + ": negative state value");
            vars[i].cardinality = std::max(vars[i].cardinality, state[i] + 1);
        }
        double p = 0.0;
        try {
            std::size_t pos = 0;
            p = std::stod(tokens.back(), &pos);
            if (pos != tokens.back().size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad probability `" +
                             tokens.back() + "`");
        }
        states.emplace_back(std::move(state), p);
    }
    if (states.empty()) throw ParseError("no states listed");
    assign_roles(vars, options.target);
    return finish(std::move(vars), states, options);
}

ParseResult parse_json(std::istream& in, const ParseOptions& options) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("variables") || !j.contains("states"))
        throw ParseError("JSON input needs `variables` and `states`");

    std::vector<VariableSpec> vars;
    try {
        for (const auto& v : j.at("variables")) {
            VariableSpec spec;
            spec.name = v.at("name").get<std::string>();
            spec.cardinality = v.at("cardinality").get<int>();
            spec.role = VarRole::input;
            if (v.contains("role")) {
                std::string role = v.at("role").get<std::string>();
                if (role == "target")
                    spec.role = VarRole::target;
                else if (role != "input")
                    throw ParseError("unknown role: " + role);
            }
            vars.push_back(std::move(spec));
        }
        std::vector<std::pair<std::vector<int>, double>> states;
        for (const auto& s : j.at("states")) {
            states.emplace_back(s.at("state").get<std::vector<int>>(), s.at("p").get<double>());
        }
        if (vars.empty()) throw ParseError("no variables listed");
        assign_roles(vars, options.target);
        return finish(std::move(vars), states, options);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

ParseResult parse_distribution(std::istream& in, TableFormat format, const ParseOptions& options) {
    return format == TableFormat::tsv ? parse_tsv(in, options) : parse_json(in, options);
}

void write_tsv(std::ostream& out, const JointDistribution& d) {
    out << "# target: " << (d.target_index() >= 0 ? d.variable(d.target_index()).name : "(none)")
        << "\n";
    for (const auto& v : d.variables()) out << v.name << "\t";
    out << "p\n";
    char buf[32];
    for (std::size_t idx = 0; idx < d.state_count(); ++idx) {
        double p = d.probability(idx);
        if (p == 0.0) continue;
        for (int v = 0; v < d.variable_count(); ++v) out << d.digit(idx, v) << "\t";
        std::snprintf(buf, sizeof buf, "%.17g", p);
        out << buf << "\n";
    }
}

nlohmann::json distribution_to_json(const JointDistribution& d) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : d.variables()) {
        vars.push_back({{"name", v.name},
                        {"cardinality", v.cardinality},
                        {"role", v.role == VarRole::target ? "target" : "input"}});
    }
    nlohmann::json states = nlohmann::json::array();
    for (std::size_t idx = 0; idx < d.state_count(); ++idx) {
        double p = d.probability(idx);
        if (p == 0.0) continue;
        std::vector<int> state = d.unrank(idx);
        states.push_back({{"state", state}, {"p", p}});
    }
    return nlohmann::json{{"variables", vars}, {"states", states}};
}

}  // namespace infodecomp
