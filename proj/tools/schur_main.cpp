#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "schur/render.hpp"

using namespace schur;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerifyFailed = 3;

std::map<std::string, std::string> parse_kv(const std::string& spec) {
    std::map<std::string, std::string> out;
    if (spec.empty()) return out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string item =
            comma == std::string::npos ? spec.substr(pos) : spec.substr(pos, comma - pos);
        if (!item.empty()) {
            std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw format_error("expected key=value, got " + item);
            out[item.substr(0, eq)] = item.substr(eq + 1);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Budget parse_budget(const std::string& spec) {
    Budget b;
    for (const auto& [key, value] : parse_kv(spec)) {
        if (key == "steps")
            b.max_steps = std::stol(value);
        else if (key == "degree")
            b.max_degree = std::stoi(value);
        else if (key == "digits")
            b.max_digits = std::stol(value);
        else
            throw format_error("unknown budget cap " + key + " (use steps, degree, digits)");
    }
    return b;
}

PivotStrategy parse_strategy(const std::string& s) {
    if (s == "default" || s.empty()) return PivotStrategy::smallest_unit;
    if (s == "first") return PivotStrategy::first_nonzero;
    throw format_error("unknown pivot strategy " + s + " (use default or first)");
}

struct AtSpec {
    long prime = 0;
    std::map<std::string, long> assignment;
};

AtSpec parse_at(const std::string& spec) {
    AtSpec at;
    for (const auto& [key, value] : parse_kv(spec)) {
        long v = std::stol(value);
        if (key == kPrimeVar)
            at.prime = v;
        else
            at.assignment[key] = v;
    }
    if (at.prime == 0) throw format_error("--at must include p=<prime>");
    return at;
}

std::vector<long> parse_primes(const std::string& spec) {
    std::vector<long> primes;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string item =
            comma == std::string::npos ? spec.substr(pos) : spec.substr(pos, comma - pos);
        if (!item.empty()) primes.push_back(std::stol(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (primes.empty()) throw format_error("--primes needs at least one prime");
    return primes;
}

int cmd_mult(const std::string& file, const std::string& at_spec, const Budget& budget,
             PivotStrategy strategy, bool json_out) {
    Presentation P = Presentation::parse_file(file);
    if (!at_spec.empty()) {
        AtSpec at = parse_at(at_spec);
        Presentation C = P.evaluate_concrete(at.prime, at.assignment);
        if (C.constraint_violated()) {
            std::cerr << "error: assignment violates a require constraint (outside the family)\n";
            return kExitInvalid;
        }
        SchurResult result = schur_multiplier_concrete(C);
        std::cout << (json_out ? render_schur_json(result) : render_schur_text(result)) << "\n";
        if (!result.valid) {
            std::cerr << "error: " << result.diagnostic << "\n";
            return kExitInvalid;
        }
        return kExitOk;
    }
    SchurResult result = snf_symbolic(build_matrix(P), budget, strategy);
    std::cout << (json_out ? render_schur_json(result) : render_schur_text(result)) << "\n";
    if (!result.valid) {
        std::cerr << "error: " << result.diagnostic << "\n";
        return kExitInvalid;
    }
    if (result.budget_exceeded) {
        std::cerr << "budget exceeded: " << result.exceeded_cap << " cap reached (steps="
                  << budget.max_steps << ", degree=" << budget.max_degree
                  << ", digits=" << budget.max_digits << ")\n";
        return kExitBudget;
    }
    return kExitOk;
}

int cmd_matrix(const std::string& file, const std::string& at_spec, bool json_out) {
    Presentation P = Presentation::parse_file(file);
    if (!at_spec.empty()) {
        AtSpec at = parse_at(at_spec);
        P = P.evaluate_concrete(at.prime, at.assignment);
    }
    RelationMatrix M = build_matrix(P);
    std::cout << (json_out ? render_matrix_json(M) + "\n" : render_matrix_text(M));
    return kExitOk;
}

int cmd_specialise(const std::string& file, const std::string& set_spec,
                   const std::string& output) {
    Presentation P = Presentation::parse_file(file);
    std::map<std::string, Polynomial> subs;
    for (const auto& [key, value] : parse_kv(set_spec)) subs[key] = Polynomial::parse(value);
    Presentation Q = P.specialise(subs);
    std::string text = Q.print();
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "error: cannot write " << output << "\n";
            return kExitInvalid;
        }
        out << text;
    }
    if (Q.infeasible()) {
        std::cerr << "warning: specialisation makes a require constraint identically zero; "
                     "the branch is infeasible\n";
        return kExitInvalid;
    }
    return kExitOk;
}

int cmd_split(const std::string& file, const Budget& budget, int max_depth,
              PivotStrategy strategy, bool json_out) {
    Presentation P = Presentation::parse_file(file);
    SplitOptions options;
    options.budget = budget;
    options.max_depth = max_depth;
    options.strategy = strategy;
    CaseNode tree = split(P, options);
    std::cout << (json_out ? render_tree_json(tree) + "\n" : render_tree_text(tree));
    if (tree.result.budget_exceeded) {
        std::cerr << "budget exceeded: " << tree.result.exceeded_cap << " cap reached\n";
        return kExitBudget;
    }
    return kExitOk;
}

int cmd_verify(const std::string& file, const Budget& budget, PivotStrategy strategy,
               const VerifyOptions& options, int max_depth, bool json_out) {
    Presentation P = Presentation::parse_file(file);
    SplitOptions split_options;
    split_options.budget = budget;
    split_options.max_depth = max_depth;
    split_options.strategy = strategy;
    CaseNode tree = split(P, split_options);
    VerifyReport report = differential_check(P, tree, options);
    std::cout << (json_out ? render_verify_json(report) + "\n" : render_verify_text(report));
    return report.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_check(const std::string& file, const std::string& at_spec, const std::string& primes_spec,
              int samples, unsigned long seed, bool json_out) {
    Presentation P = Presentation::parse_file(file);
    ConsistencyReport report;
    if (!at_spec.empty()) {
        AtSpec at = parse_at(at_spec);
        Presentation C = P.evaluate_concrete(at.prime, at.assignment);
        if (C.constraint_violated()) {
            std::cerr << "error: assignment violates a require constraint (outside the family)\n";
            return kExitInvalid;
        }
        report = C.check_consistency();
    } else if (P.is_concrete()) {
        report = P.check_consistency();
    } else {
        report = P.check_consistency_sampled(parse_primes(primes_spec), samples, seed);
    }
    std::cout << (json_out ? render_consistency_json(report) + "\n"
                           : render_consistency_text(report));
    return report.ok ? kExitOk : kExitInvalid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur multipliers of nilpotent Lie p-rings from triangular presentations"};
    app.require_subcommand(1);

    std::string file, at_spec, set_spec, output, budget_spec, strategy_spec = "default";
    std::string primes_spec = "5,7,11";
    std::string format = "text";
    int max_depth = 5;
    int samples = 1000;
    int threads = 0;
    unsigned long seed = 1;
    bool exhaustive = false, sampled = false, allow_small = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* mult = app.add_subcommand("mult", "Schur multiplier (symbolic, or concrete with --at)");
    mult->add_option("file", file, "presentation file")->required();
    mult->add_option("--at", at_spec, "concrete evaluation, e.g. p=5,x=2");
    mult->add_option("--budget", budget_spec, "caps, e.g. steps=50000,degree=32,digits=256");
    mult->add_option("--strategy", strategy_spec, "pivot strategy: default or first");
    add_format(mult);

    CLI::App* matrix = app.add_subcommand("matrix", "Dump the relation matrix");
    matrix->add_option("file", file)->required();
    matrix->add_option("--at", at_spec, "concrete evaluation, e.g. p=5,x=2");
    add_format(matrix);

    CLI::App* spec = app.add_subcommand("specialise", "Substitute parameters, print the result");
    spec->add_option("file", file)->required();
    spec->add_option("--set", set_spec, "substitutions, e.g. x=-1,z=x*y")->required();
    spec->add_option("-o,--output", output, "output file (default stdout)");

    CLI::App* split_cmd = app.add_subcommand("split", "Automated case analysis tree");
    split_cmd->add_option("file", file)->required();
    split_cmd->add_option("--budget", budget_spec);
    split_cmd->add_option("--max-depth", max_depth, "maximum substitution depth");
    split_cmd->add_option("--strategy", strategy_spec);
    add_format(split_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Differential check against concrete SNF");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--primes", primes_spec, "comma-separated primes");
    verify_cmd->add_flag("--exhaustive", exhaustive, "force exhaustive enumeration");
    verify_cmd->add_option("--samples", samples, "sample count when not exhaustive");
    verify_cmd->add_option("--seed", seed, "sampling seed");
    verify_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    verify_cmd->add_flag("--allow-small-primes", allow_small, "include p in {2,3}");
    verify_cmd->add_option("--budget", budget_spec);
    verify_cmd->add_option("--max-depth", max_depth);
    verify_cmd->add_option("--strategy", strategy_spec);
    add_format(verify_cmd);

    CLI::App* check = app.add_subcommand("check", "Consistency of the defining relations");
    check->add_option("file", file)->required();
    check->add_option("--at", at_spec, "concrete evaluation, e.g. p=5,x=2");
    check->add_option("--primes", primes_spec, "primes for probabilistic checking");
    check->add_option("--samples", samples, "samples per prime for probabilistic checking");
    check->add_option("--seed", seed);
    add_format(check);

    CLI11_PARSE(app, argc, argv);

    try {
        Budget budget = parse_budget(budget_spec);
        PivotStrategy strategy = parse_strategy(strategy_spec);
        bool json_out = format == "json";
        if (mult->parsed()) return cmd_mult(file, at_spec, budget, strategy, json_out);
        if (matrix->parsed()) return cmd_matrix(file, at_spec, json_out);
        if (spec->parsed()) return cmd_specialise(file, set_spec, output);
        if (split_cmd->parsed()) return cmd_split(file, budget, max_depth, strategy, json_out);
        if (verify_cmd->parsed()) {
            VerifyOptions options;
            options.primes = parse_primes(primes_spec);
            options.force_exhaustive = exhaustive;
            if (verify_cmd->count("--samples") > 0 && !exhaustive) options.force_sample = true;
            options.sample_count = samples;
            options.seed = seed;
            options.threads = threads;
            options.allow_small_primes = allow_small;
            return cmd_verify(file, budget, strategy, options, max_depth, json_out);
        }
        if (check->parsed()) return cmd_check(file, at_spec, primes_spec, samples, seed, json_out);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
