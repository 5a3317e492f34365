// Command-line front end: single optimizations, batch experiments, epidemic
// propagation traces, and rank statistics over summary tables.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eosa/baselines.hpp"
#include "eosa/eosa.hpp"
#include "eosa/harness.hpp"
#include "eosa/objectives.hpp"
#include "eosa/stats.hpp"

namespace fs = std::filesystem;

namespace {

// domain errors (bad ids, malformed files) exit with this code; CLI11 keeps
// its own codes for flag syntax problems
constexpr int kDomainError = 2;

std::string default_output_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("EOSA_OUTPUT_DIR"); env != nullptr && *env != '\0')
        return env;
    return "results";
}

void write_file_or_die(const fs::path& path, const std::string& body) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << body;
    if (!out) throw std::runtime_error("failed to write " + path.string());
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto a = item.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        const auto b = item.find_last_not_of(" \t");
        items.push_back(item.substr(a, b - a + 1));
    }
    return items;
}

// ---------------------------------------------------------------------------
// experiment config file: flat INI-style sections mirroring ExperimentConfig

struct ParsedConfig {
    eosa::ExperimentConfig experiment;
    eosa::EosaConfig eosa_proto;
    eosa::BaselineConfig baseline_proto;
    std::vector<std::string> algorithm_names;
};

[[noreturn]] void config_error(const std::string& path, int line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& path, int line, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        config_error(path, line, "expected a number, got '" + text + "'");
    }
}

long long parse_int(const std::string& path, int line, const std::string& text) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        config_error(path, line, "expected an integer, got '" + text + "'");
    }
}

bool parse_bool(const std::string& path, int line, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    config_error(path, line, "expected a boolean, got '" + text + "'");
}

bool set_rate(eosa::EpidemicRates& rates, const std::string& key, double value) {
    if (key == "pi") rates.pi_recruit = value;
    else if (key == "eta") rates.eta_decay = value;
    else if (key == "alpha") rates.alpha_hosp = value;
    else if (key == "gamma_cap") rates.gamma_cap_death = value;
    else if (key == "beta1") rates.beta1_contact_infectious = value;
    else if (key == "beta2") rates.beta2_contact_pathogen = value;
    else if (key == "beta3") rates.beta3_contact_deceased = value;
    else if (key == "beta4") rates.beta4_contact_recovered = value;
    else if (key == "gamma") rates.gamma_recover = value;
    else if (key == "tau") rates.tau_natural_death = value;
    else if (key == "delta") rates.delta_burial = value;
    else if (key == "vartheta") rates.vartheta_vaccinate = value;
    else if (key == "omega") rates.omega_hospital_response = value;
    else if (key == "mu") rates.mu_vaccine_response = value;
    else if (key == "xi") rates.xi_quarantine = value;
    else return false;
    return true;
}

ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);

    ParsedConfig parsed;
    std::string section;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find_first_of("#;"); hash != std::string::npos)
            line.erase(hash);
        const auto a = line.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        const auto b = line.find_last_not_of(" \t");
        line = line.substr(a, b - a + 1);

        if (line.front() == '[') {
            if (line.back() != ']') config_error(path, line_no, "unterminated section header");
            section = line.substr(1, line.size() - 2);
            if (section != "experiment" && section != "eosa" && section != "rates" &&
                section != "pso" && section != "de" && section != "ga")
                config_error(path, line_no, "unknown section '" + section + "'");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) config_error(path, line_no, "expected key = value");
        auto trim = [](std::string s) {
            const auto x = s.find_first_not_of(" \t");
            if (x == std::string::npos) return std::string();
            const auto y = s.find_last_not_of(" \t");
            return s.substr(x, y - x + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) config_error(path, line_no, "expected key = value");
        if (section.empty())
            config_error(path, line_no, "key '" + key + "' outside any section");

        auto& exp = parsed.experiment;
        if (section == "experiment") {
            if (key == "runs") exp.runs = static_cast<int>(parse_int(path, line_no, value));
            else if (key == "epochs") exp.epochs = static_cast<int>(parse_int(path, line_no, value));
            else if (key == "population_size")
                exp.population_size = static_cast<int>(parse_int(path, line_no, value));
            else if (key == "master_seed")
                exp.master_seed = static_cast<std::uint64_t>(parse_int(path, line_no, value));
            else if (key == "jobs") exp.jobs = static_cast<int>(parse_int(path, line_no, value));
            else if (key == "output_dir") exp.output_dir = value;
            else if (key == "functions") exp.functions = split_list(value);
            else if (key == "algorithms") parsed.algorithm_names = split_list(value);
            else if (key == "checkpoints") {
                exp.checkpoints.clear();
                for (const auto& item : split_list(value))
                    exp.checkpoints.push_back(static_cast<int>(parse_int(path, line_no, item)));
            } else config_error(path, line_no, "unknown key '" + key + "' in [experiment]");
        } else if (section == "eosa") {
            auto& proto = parsed.eosa_proto;
            if (key == "srate") proto.srate = parse_double(path, line_no, value);
            else if (key == "lrate") proto.lrate = parse_double(path, line_no, value);
            else if (key == "rho") proto.rho = parse_double(path, line_no, value);
            else if (key == "evdincub") proto.evdincub = parse_double(path, line_no, value);
            else if (key == "threshold")
                proto.neighborhood_threshold = parse_double(path, line_no, value);
            else if (key == "reinject")
                proto.reinject_index_case = parse_bool(path, line_no, value);
            else if (key == "movement") {
                if (value == "differential") proto.movement = eosa::MovementMode::differential;
                else if (value == "additive") proto.movement = eosa::MovementMode::additive;
                else config_error(path, line_no, "movement must be differential or additive");
            } else config_error(path, line_no, "unknown key '" + key + "' in [eosa]");
        } else if (section == "rates") {
            if (!set_rate(parsed.eosa_proto.rates, key, parse_double(path, line_no, value)))
                config_error(path, line_no, "unknown rate '" + key + "'");
        } else if (section == "pso") {
            auto& proto = parsed.baseline_proto;
            if (key == "inertia") proto.pso_inertia = parse_double(path, line_no, value);
            else if (key == "cognitive") proto.pso_cognitive = parse_double(path, line_no, value);
            else if (key == "social") proto.pso_social = parse_double(path, line_no, value);
            else config_error(path, line_no, "unknown key '" + key + "' in [pso]");
        } else if (section == "de") {
            auto& proto = parsed.baseline_proto;
            if (key == "scale") proto.de_scale = parse_double(path, line_no, value);
            else if (key == "crossover") proto.de_crossover = parse_double(path, line_no, value);
            else config_error(path, line_no, "unknown key '" + key + "' in [de]");
        } else if (section == "ga") {
            auto& proto = parsed.baseline_proto;
            if (key == "crossover") proto.ga_crossover = parse_double(path, line_no, value);
            else if (key == "mutation") proto.ga_mutation = parse_double(path, line_no, value);
            else if (key == "tournament")
                proto.ga_tournament = static_cast<int>(parse_int(path, line_no, value));
            else config_error(path, line_no, "unknown key '" + key + "' in [ga]");
        }
    }
    return parsed;
}

// ---------------------------------------------------------------------------
// subcommand argument bags

struct OptimizeArgs {
    std::string function;
    std::string algo = "eosa";
    int dim = 0;  // 0 keeps the registry default
    int epochs = 500;
    int psize = 100;
    std::uint64_t seed = 0;
    std::string out;
    std::string output_dir;
};

struct ExperimentArgs {
    std::string config_path;
    std::string algorithms;
    std::string functions;
    std::string checkpoints;
    int runs = -1;
    int epochs = -1;
    int psize = -1;
    long long master_seed = -1;
    int jobs = -1;
    std::string output_dir;
};

struct SimulateArgs {
    int psize = 100;
    int epochs = 50;
    std::uint64_t seed = 0;
    std::vector<std::string> rate_overrides;
    std::string out;
    std::string output_dir;
};

struct StatsArgs {
    std::string input;
    std::string metric = "mean";
    std::string friedman_out;
    std::string wilcoxon_out;
    std::string output_dir;
};

int cmd_optimize(const OptimizeArgs& args) {
    eosa::ObjectiveSpec spec =
        args.dim > 0 ? eosa::make_objective(args.function, args.dim)
                     : eosa::make_objective(args.function);

    eosa::OptimizationResult result;
    const auto dim = static_cast<std::size_t>(spec.dimension);
    if (args.algo == "eosa") {
        eosa::EosaConfig config;
        config.population_size = args.psize;
        config.epochs = args.epochs;
        config.bounds_lower.assign(dim, spec.lower);
        config.bounds_upper.assign(dim, spec.upper);
        config.seed = args.seed;
        result = eosa::optimize(spec, config);
    } else {
        eosa::BaselineConfig config;
        config.algorithm = args.algo;
        config.population_size = args.psize;
        config.epochs = args.epochs;
        config.bounds_lower.assign(dim, spec.lower);
        config.bounds_upper.assign(dim, spec.upper);
        config.seed = args.seed;
        result = eosa::baseline_optimize(spec, config);
    }

    fs::path out = args.out.empty()
                       ? fs::path(default_output_dir(args.output_dir)) /
                             (args.algo + "_" + args.function + ".csv")
                       : fs::path(args.out);
    write_file_or_die(out, eosa::detail::run_csv_text(result.history));
    std::printf("%.17g\n", result.gbest_fitness);
    return 0;
}

int cmd_experiment(const ExperimentArgs& args) {
    ParsedConfig parsed;
    if (!args.config_path.empty()) parsed = parse_config_file(args.config_path);

    auto& config = parsed.experiment;
    if (args.runs >= 0) config.runs = args.runs;
    if (args.epochs >= 0) config.epochs = args.epochs;
    if (args.psize >= 0) config.population_size = args.psize;
    if (args.master_seed >= 0) config.master_seed = static_cast<std::uint64_t>(args.master_seed);
    if (args.jobs >= 0) config.jobs = args.jobs;
    if (!args.output_dir.empty()) config.output_dir = args.output_dir;
    if (!args.functions.empty()) config.functions = split_list(args.functions);
    if (!args.checkpoints.empty()) {
        config.checkpoints.clear();
        for (const auto& item : split_list(args.checkpoints))
            config.checkpoints.push_back(std::stoi(item));
    }

    auto names = parsed.algorithm_names;
    if (!args.algorithms.empty()) names = split_list(args.algorithms);
    if (names.empty()) names = {"eosa"};
    config.algorithms.clear();
    for (const auto& name : names) {
        eosa::AlgorithmConfig algo;
        algo.name = name;
        algo.eosa = parsed.eosa_proto;
        algo.baseline = parsed.baseline_proto;
        config.algorithms.push_back(std::move(algo));
    }

    // clamp the default checkpoint list to short runs so flag-only invocations work
    std::erase_if(config.checkpoints, [&](int cp) { return cp > config.epochs; });
    config.output_dir = default_output_dir(config.output_dir);

    auto archive = eosa::run_experiment(config);

    std::string convergence = "algorithm,function,checkpoint,median_gbest\n";
    for (const auto& row : eosa::convergence_table(archive, config.checkpoints))
        convergence += row.algorithm + "," + row.function + "," + std::to_string(row.checkpoint) +
                       "," + eosa::detail::g17(row.median_gbest) + "\n";
    write_file_or_die(fs::path(config.output_dir) / "convergence.csv", convergence);

    std::string timing = "algorithm,mean_time_s\n";
    for (const auto& row : eosa::timing_report(archive))
        timing += row.algorithm + "," + eosa::detail::g17(row.mean_time_s) + "\n";
    write_file_or_die(fs::path(config.output_dir) / "timing.csv", timing);

    std::cout << "archive written to " << config.output_dir << " (" << archive.runs.size()
              << " runs)\n";
    return 0;
}

int cmd_simulate(const SimulateArgs& args) {
    eosa::EpidemicRates rates;
    for (const auto& text : args.rate_overrides) {
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("rate override '" + text + "' is not name=value");
        const std::string name = text.substr(0, eq);
        const double value = std::stod(text.substr(eq + 1));
        if (!set_rate(rates, name, value))
            throw std::runtime_error("unknown rate '" + name + "'");
    }

    auto trace = eosa::simulate_propagation(rates, args.psize, args.epochs, args.seed);
    const fs::path out = args.out.empty()
                             ? fs::path(default_output_dir(args.output_dir)) / "census.csv"
                             : fs::path(args.out);
    write_file_or_die(out, eosa::detail::census_csv_text(trace, 1));
    return 0;
}

// summary-CSV loader for the stats subcommand; row numbers are 1-based file lines
struct SummaryTable {
    std::vector<std::string> algorithms;  // first-seen order
    std::vector<std::string> functions;
    std::map<std::string, std::map<std::string, double>> cell;  // [algorithm][function]
};

SummaryTable load_summary(const std::string& path, const std::string& metric) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open summary file " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("malformed CSV at row 1: empty file");
    const auto header = split_list(line);
    std::size_t metric_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == metric) metric_col = i;
    if (header.size() < 3 || header[0] != "algorithm" || header[1] != "function")
        throw std::runtime_error("malformed CSV at row 1: expected algorithm,function,... header");
    if (metric_col == header.size())
        throw std::runtime_error("metric '" + metric + "' not present in header");

    SummaryTable table;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        const auto fields = split_list(line);
        if (fields.size() != header.size())
            throw std::runtime_error("malformed CSV at row " + std::to_string(row) +
                                     ": expected " + std::to_string(header.size()) + " fields");
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(fields[metric_col], &used);
            if (used != fields[metric_col].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::runtime_error("malformed CSV at row " + std::to_string(row) +
                                     ": bad number '" + fields[metric_col] + "'");
        }
        const auto& algo = fields[0];
        const auto& fn = fields[1];
        if (table.cell.find(algo) == table.cell.end()) table.algorithms.push_back(algo);
        if (std::find(table.functions.begin(), table.functions.end(), fn) ==
            table.functions.end())
            table.functions.push_back(fn);
        table.cell[algo][fn] = value;
    }
    return table;
}

int cmd_stats(const StatsArgs& args) {
    const auto table = load_summary(args.input, args.metric);

    eosa::RankMatrix matrix;
    for (const auto& fn : table.functions) {
        std::vector<double> row;
        for (const auto& algo : table.algorithms) {
            const auto& by_fn = table.cell.at(algo);
            const auto hit = by_fn.find(fn);
            if (hit == by_fn.end())
                throw std::runtime_error("missing value for algorithm " + algo + " on " + fn);
            row.push_back(hit->second);
        }
        matrix.values.push_back(std::move(row));
    }

    const auto result = eosa::friedman(matrix);

    std::vector<std::size_t> order(table.algorithms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return result.mean_ranks[a] < result.mean_ranks[b];
    });

    std::string friedman_csv = "algorithm,mean_rank\n";
    for (const auto idx : order)
        friedman_csv +=
            table.algorithms[idx] + "," + eosa::detail::g17(result.mean_ranks[idx]) + "\n";

    const fs::path outdir = default_output_dir(args.output_dir);
    const fs::path friedman_path =
        args.friedman_out.empty() ? outdir / "friedman.csv" : fs::path(args.friedman_out);
    write_file_or_die(friedman_path, friedman_csv);

    // post-hoc pairs: every algorithm against the rank-1 reference
    const auto& reference = table.algorithms[order.front()];
    std::string wilcoxon_csv = "algorithm,reference,z,p_value,pairs\n";
    for (const auto idx : order) {
        const auto& name = table.algorithms[idx];
        if (name == reference) continue;
        std::vector<double> a, b;
        for (const auto& fn : table.functions) {
            a.push_back(table.cell.at(name).at(fn));
            b.push_back(table.cell.at(reference).at(fn));
        }
        const auto w = eosa::wilcoxon_signed_rank(a, b);
        wilcoxon_csv += name + "," + reference + "," + eosa::detail::g17(w.z) + "," +
                        eosa::detail::g17(w.p_value) + "," + std::to_string(w.pairs) + "\n";
    }
    const fs::path wilcoxon_path =
        args.wilcoxon_out.empty() ? outdir / "wilcoxon.csv" : fs::path(args.wilcoxon_out);
    write_file_or_die(wilcoxon_path, wilcoxon_csv);

    std::printf("friedman chi_square=%.17g df=%d p_value=%.17g\n", result.chi_square, result.df,
                result.p_value);
    for (const auto idx : order)
        std::printf("%s mean_rank=%.17g\n", table.algorithms[idx].c_str(),
                    result.mean_ranks[idx]);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"epidemic-inspired optimization toolkit"};
    app.require_subcommand(1);

    OptimizeArgs opt;
    auto* optimize = app.add_subcommand("optimize", "run one optimization");
    optimize->add_option("--function", opt.function, "objective id, e.g. F34")->required();
    optimize->add_option("--algo", opt.algo, "eosa, pso, de, or ga");
    optimize->add_option("--dim", opt.dim, "dimension override");
    optimize->add_option("--epochs", opt.epochs, "epoch count");
    optimize->add_option("--psize", opt.psize, "population size");
    optimize->add_option("--seed", opt.seed, "random seed");
    optimize->add_option("--out", opt.out, "convergence CSV path");
    optimize->add_option("--output-dir", opt.output_dir, "default output directory");

    ExperimentArgs exp;
    auto* experiment = app.add_subcommand("experiment", "run a batch experiment");
    experiment->add_option("--config", exp.config_path, "experiment config file");
    experiment->add_option("--algorithms", exp.algorithms, "comma-separated algorithm list");
    experiment->add_option("--functions", exp.functions, "comma-separated objective ids");
    experiment->add_option("--checkpoints", exp.checkpoints, "comma-separated epoch list");
    experiment->add_option("--runs", exp.runs, "runs per pair");
    experiment->add_option("--epochs", exp.epochs, "epoch count");
    experiment->add_option("--psize", exp.psize, "population size");
    experiment->add_option("--seed", exp.master_seed, "master seed");
    experiment->add_option("--jobs", exp.jobs, "parallel workers");
    experiment->add_option("--output-dir", exp.output_dir, "archive directory");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "trace compartment counts");
    simulate->add_option("--psize", sim.psize, "population size");
    simulate->add_option("--epochs", sim.epochs, "epoch count");
    simulate->add_option("--seed", sim.seed, "random seed");
    simulate->add_option("--rate", sim.rate_overrides, "rate override name=value (repeatable)");
    simulate->add_option("--out", sim.out, "census CSV path");
    simulate->add_option("--output-dir", sim.output_dir, "default output directory");

    StatsArgs st;
    auto* stats = app.add_subcommand("stats", "Friedman and Wilcoxon tables");
    stats->add_option("--input", st.input, "summary CSV path")->required();
    stats->add_option("--metric", st.metric, "summary column to rank (default mean)");
    stats->add_option("--friedman-out", st.friedman_out, "Friedman CSV path");
    stats->add_option("--wilcoxon-out", st.wilcoxon_out, "Wilcoxon CSV path");
    stats->add_option("--output-dir", st.output_dir, "default output directory");

    auto* list = app.add_subcommand("list-functions", "dump the objective registry");

    CLI11_PARSE(app, argc, argv);

    try {
        if (optimize->parsed()) return cmd_optimize(opt);
        if (experiment->parsed()) return cmd_experiment(exp);
        if (simulate->parsed()) return cmd_simulate(sim);
        if (stats->parsed()) return cmd_stats(st);
        if (list->parsed()) {
            std::cout << eosa::registry_csv();
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return 0;
}
