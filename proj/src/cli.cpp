#include "infodecomp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "infodecomp/decomposition.hpp"
#include "infodecomp/examples.hpp"
#include "infodecomp/shapley.hpp"

namespace infodecomp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fixed8(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", x == 0.0 ? 0.0 : x);  // avoid "-0.00000000"
    return buf;
}

std::string scientific(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::vector<std::string> face_name_list(Face f, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (f >> i & 1) out.push_back(names[i]);
    return out;
}

std::string face_label(Face f, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (const auto& name : face_name_list(f, names)) {
        if (!first) out += ",";
        out += name;
        first = false;
    }
    return out + "}";
}

// Display order: by predictor size, then lexicographically by member names.
std::vector<Face> display_order(const std::map<Face, double>& contributions,
                                const std::vector<std::string>& names) {
    std::vector<Face> faces;
    for (const auto& [f, v] : contributions) faces.push_back(f);
    std::sort(faces.begin(), faces.end(), [&](Face a, Face b) {
        int ca = face_size(a), cb = face_size(b);
        if (ca != cb) return ca < cb;
        return face_name_list(a, names) < face_name_list(b, names);
    });
    return faces;
}

std::string base_name(LogBase base) { return base == LogBase::two ? "bits" : "nats"; }

JointDistribution load_input(const RunConfig& config, std::ostream& err) {
    if (config.example.empty() == config.input_path.empty())
        throw std::invalid_argument("give exactly one input: a path or --example");
    if (!config.example.empty()) return example_distribution(config.example);

    std::ifstream in(config.input_path);
    if (!in) throw ParseError("cannot open " + config.input_path);
    ParseOptions options;
    options.strict = config.strict;
    options.target = config.target;
    ParseResult parsed = parse_distribution(in, config.format, options);
    for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
    return std::move(parsed.distribution);
}

IpfOptions ipf_options(const RunConfig& config) {
    return IpfOptions{config.tolerance, config.max_sweeps, config.base};
}

std::string input_label(const RunConfig& config) {
    return config.example.empty() ? config.input_path : config.example;
}

ordered_json diagnostics_json(const RunConfig& config, const DecompositionResult& r,
                              const std::vector<std::string>& names) {
    ordered_json node_div = ordered_json::object();
    ordered_json sweeps = ordered_json::object();
    InputLattice lat = InputLattice::enumerate(static_cast<int>(names.size()));
    for (std::size_t i = 0; i < lat.node_count(); ++i) {
        std::string label = complex_notation(lat.node(i), names);
        node_div[label] = r.node_divergences.at(lat.node(i).bits());
        sweeps[label] = r.ipf_sweeps.at(lat.node(i).bits());
    }
    return ordered_json{{"tolerance", config.tolerance},
                        {"max_sweeps", config.max_sweeps},
                        {"node_divergences", node_div},
                        {"ipf_sweeps", sweeps}};
}

int run_decompose(const RunConfig& config, std::ostream& out, std::ostream& err) {
    JointDistribution p = load_input(config, err);
    DecompositionResult r = information_contribution(p, ipf_options(config));
    const auto& names = r.input_names;
    auto order = display_order(r.contributions, names);

    if (config.output == OutputMode::json) {
        ordered_json contributions = ordered_json::array();
        for (Face f : order) {
            contributions.push_back({{"predictor", face_name_list(f, names)},
                                     {"value", r.contributions.at(f)},
                                     {"raw", r.raw_contributions.at(f)}});
        }
        ordered_json j{{"command", "decompose"},
                       {"input", input_label(config)},
                       {"base", base_name(config.base)},
                       {"inputs", names},
                       {"contributions", contributions},
                       {"total_mutual_information", r.total_mi},
                       {"residual", r.residual},
                       {"diagnostics", diagnostics_json(config, r, names)}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    std::size_t width = 9;  // "predictor"
    for (Face f : order) width = std::max(width, face_label(f, names).size());
    out << std::left << std::setw(static_cast<int>(width) + 2) << "predictor"
        << "contribution (" << base_name(config.base) << ")\n";
    for (Face f : order)
        out << std::left << std::setw(static_cast<int>(width) + 2) << face_label(f, names)
            << fixed8(r.contributions.at(f)) << "\n";
    out << std::left << std::setw(static_cast<int>(width) + 2) << "total" << fixed8(r.total_mi)
        << "\n";
    return kExitOk;
}

int run_constraint_info(const RunConfig& config, std::ostream& out, std::ostream& err) {
    JointDistribution p = load_input(config, err);
    if (config.node.empty()) throw std::invalid_argument("constraint-info needs --node");
    std::vector<std::string> names;
    for (const auto& v : p.variables()) names.push_back(v.name);
    ConstraintNode node = parse_facet_notation(config.node, names);

    SplitResult split = split_distribution(p, node, ipf_options(config));
    double info = kl_divergence(p, split.distribution, config.base);
    std::string label = facet_notation(node, names);

    if (config.output == OutputMode::json) {
        ordered_json j{{"command", "constraint-info"},
                       {"input", input_label(config)},
                       {"node", label},
                       {"base", base_name(config.base)},
                       {"constraint_information", info},
                       {"ipf_sweeps", split.sweeps_used},
                       {"final_gap", split.final_gap}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "node: " << label << "\n";
    out << "I_S: " << fixed8(info) << " " << base_name(config.base) << "\n";
    out << "ipf sweeps: " << split.sweeps_used << "\n";
    out << "final gap: " << scientific(split.final_gap) << "\n";
    return kExitOk;
}

int run_lattice(const RunConfig& config, std::ostream& out, std::ostream&) {
    InputLattice lat = InputLattice::enumerate(config.lattice_inputs);
    std::vector<std::string> names;
    for (int i = 0; i < lat.input_count(); ++i) names.push_back("X" + std::to_string(i + 1));

    if (config.output == OutputMode::json) {
        ordered_json nodes = ordered_json::array();
        for (std::size_t i = 0; i < lat.node_count(); ++i) {
            nodes.push_back({{"index", i},
                             {"notation", complex_notation(lat.node(i), names)},
                             {"chains_from_bottom", lat.chains_from_bottom(i).get_str()},
                             {"chains_to_top", lat.chains_to_top(i).get_str()}});
        }
        ordered_json edges = ordered_json::array();
        for (std::size_t e = 0; e < lat.edges().size(); ++e) {
            const HasseEdge& edge = lat.edges()[e];
            edges.push_back({{"lower", edge.lower},
                             {"upper", edge.upper},
                             {"added", face_name_list(edge.added, names)},
                             {"chains", lat.edge_chain_count(static_cast<int>(e)).get_str()}});
        }
        ordered_json j{{"command", "lattice"},
                       {"inputs", lat.input_count()},
                       {"nodes", nodes},
                       {"edges", edges},
                       {"maximal_chains", lat.total_chains().get_str()}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "input lattice over " << lat.input_count() << " inputs\n";
    out << "nodes (" << lat.node_count() << "):\n";
    for (std::size_t i = 0; i < lat.node_count(); ++i)
        out << "  " << i << "  " << complex_notation(lat.node(i), names) << "\n";
    out << "edges (" << lat.edges().size() << "):\n";
    for (std::size_t e = 0; e < lat.edges().size(); ++e) {
        const HasseEdge& edge = lat.edges()[e];
        out << "  " << complex_notation(lat.node(edge.lower), names) << " -> "
            << complex_notation(lat.node(edge.upper), names) << "  adds "
            << face_label(edge.added, names) << "  chains "
            << lat.edge_chain_count(static_cast<int>(e)).get_str() << "\n";
    }
    out << "maximal chains: " << lat.total_chains().get_str() << "\n";
    return kExitOk;
}

int run_oracle_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
    JointDistribution p = load_input(config, err);
    SplitCache cache(p, ipf_options(config));
    InputLattice lat = InputLattice::enumerate(cache.input_count());

    // Both pipelines consume the same cached coalition values.
    DecompositionResult chain = information_contribution(cache, lat);
    GameValueTable game = information_game(cache, lat);
    std::map<Face, double> shapley = faigle_kern_values(game, lat);

    double max_diff = 0.0;
    for (const auto& [f, v] : chain.raw_contributions)
        max_diff = std::max(max_diff, std::abs(v - shapley.at(f)));
    bool pass = max_diff <= config.oracle_tolerance;

    const auto& names = chain.input_names;
    auto order = display_order(chain.raw_contributions, names);
    if (config.output == OutputMode::json) {
        ordered_json rows = ordered_json::array();
        for (Face f : order) {
            rows.push_back({{"predictor", face_name_list(f, names)},
                            {"chain_sum", chain.raw_contributions.at(f)},
                            {"shapley", shapley.at(f)}});
        }
        ordered_json j{{"command", "oracle-check"},
                       {"input", input_label(config)},
                       {"values", rows},
                       {"max_discrepancy", max_diff},
                       {"tolerance", config.oracle_tolerance},
                       {"pass", pass}};
        out << j.dump(2) << "\n";
        return pass ? kExitOk : kExitOracleMismatch;
    }

    std::size_t width = 9;
    for (Face f : order) width = std::max(width, face_label(f, names).size());
    out << std::left << std::setw(static_cast<int>(width) + 2) << "predictor"
        << std::setw(14) << "chain sum" << "shapley\n";
    for (Face f : order)
        out << std::left << std::setw(static_cast<int>(width) + 2) << face_label(f, names)
            << std::setw(14) << fixed8(chain.raw_contributions.at(f)) << fixed8(shapley.at(f))
            << "\n";
    out << "max entrywise discrepancy: " << scientific(max_diff) << "\n";
    out << "oracle check: " << (pass ? "PASS" : "FAIL") << " (tolerance "
        << scientific(config.oracle_tolerance) << ")\n";
    return pass ? kExitOk : kExitOracleMismatch;
}

int run_examples(const RunConfig& config, std::ostream& out, std::ostream&) {
    if (config.output == OutputMode::json) {
        ordered_json rows = ordered_json::array();
        for (const auto& e : example_catalog()) {
            if (config.input_filter && e.input_count != *config.input_filter) continue;
            rows.push_back(
                {{"name", e.name}, {"inputs", e.input_count}, {"description", e.description}});
        }
        out << ordered_json{{"command", "examples"}, {"examples", rows}}.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& e : example_catalog()) {
        if (config.input_filter && e.input_count != *config.input_filter) continue;
        out << std::left << std::setw(14) << e.name << e.input_count << " inputs  "
            << e.description << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.subcommand) {
            case Subcommand::decompose: return run_decompose(config, out, err);
            case Subcommand::constraint_info: return run_constraint_info(config, out, err);
            case Subcommand::lattice: return run_lattice(config, out, err);
            case Subcommand::oracle_check: return run_oracle_check(config, out, err);
            case Subcommand::examples: return run_examples(config, out, err);
        }
        err << "error: unknown subcommand\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const AbsoluteContinuityError& e) {
        err << "convergence error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"information contribution decomposition of discrete joint distributions"};
    app.require_subcommand(0, 1);

    RunConfig config;
    std::string format = "tsv";
    std::string base = "2";
    bool json_output = false;
    bool lenient = false;

    auto add_input_options = [&](CLI::App* cmd) {
        cmd->add_option("input", config.input_path, "input distribution file");
        cmd->add_option("--example", config.example, "built-in example name");
        cmd->add_option("--format", format, "input format: tsv or json")
            ->check(CLI::IsMember({"tsv", "json"}));
        cmd->add_option("--target", config.target, "target variable name");
        cmd->add_option("--tolerance", config.tolerance, "IPF convergence tolerance");
        cmd->add_option("--max-sweeps", config.max_sweeps, "IPF sweep limit");
        cmd->add_option("--base", base, "logarithm base: 2 or e")
            ->check(CLI::IsMember({"2", "e"}));
        cmd->add_flag("--json", json_output, "emit JSON instead of a table");
        cmd->add_flag("--lenient", lenient, "renormalize out-of-tolerance inputs");
    };

    CLI::App* decompose = app.add_subcommand("decompose", "information contribution per predictor");
    add_input_options(decompose);

    CLI::App* cinfo = app.add_subcommand("constraint-info", "constraint information of one node");
    add_input_options(cinfo);
    cinfo->add_option("--node", config.node, "facet notation, e.g. \"(X1X2)(X1Y)\"")->required();

    CLI::App* lattice = app.add_subcommand("lattice", "input lattice report");
    lattice->add_option("-n,--inputs", config.lattice_inputs, "number of inputs")->required();
    lattice->add_flag("--json", json_output, "emit JSON instead of text");

    CLI::App* oracle = app.add_subcommand("oracle-check", "chain sum vs Shapley cross-check");
    add_input_options(oracle);

    CLI::App* examples = app.add_subcommand("examples", "list built-in distributions");
    examples->add_option("--inputs", config.input_filter, "only examples with this input count");
    examples->add_flag("--json", json_output, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (decompose->parsed())
        config.subcommand = Subcommand::decompose;
    else if (cinfo->parsed())
        config.subcommand = Subcommand::constraint_info;
    else if (lattice->parsed())
        config.subcommand = Subcommand::lattice;
    else if (oracle->parsed())
        config.subcommand = Subcommand::oracle_check;
    else if (examples->parsed())
        config.subcommand = Subcommand::examples;
    else {
        out << app.help();
        return kExitUsage;
    }

    config.format = format == "tsv" ? TableFormat::tsv : TableFormat::json;
    config.base = base == "2" ? LogBase::two : LogBase::natural;
    config.output = json_output ? OutputMode::json : OutputMode::table;
    config.strict = !lenient;
    return run(config, out, err);
}

}  // namespace infodecomp
