// Command-line front end: compute, closed-form, verify, sweep.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sizeramsey/cli.hpp"
#include "sizeramsey/errors.hpp"

namespace cli = sizeramsey::cli;
using sizeramsey::ParseError;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    return parts;
}

int to_int(const std::string& text) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size()) throw ParseError("not an integer: '" + text + "'");
        return value;
    } catch (const std::logic_error&) {
        throw ParseError("not an integer: '" + text + "'");
    }
}

// "" or "-" is the empty list; otherwise comma separated integers.
std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty() || text == "-") return out;
    for (const auto& part : split(text, ',')) out.push_back(to_int(part));
    return out;
}

std::pair<int, int> int_pair(const std::string& text) {
    auto parts = split(text, text.find(':') != std::string::npos ? ':' : ',');
    if (parts.size() != 2) throw ParseError("expected a pair 'S,T': '" + text + "'");
    return {to_int(parts[0]), to_int(parts[1])};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymptotic size Ramsey numbers of complete bipartite graphs, in exact arithmetic"};
    app.require_subcommand(1);

    std::string format = "text";
    bool verbose = false;
    unsigned jobs = 1;
    std::size_t max_columns = sizeramsey::ComputeOptions{}.max_columns;

    auto* compute = app.add_subcommand("compute", "Compute lim r^(F_n)/n by the LP scan");
    std::string spec_path;
    std::vector<std::string> dilating_args;
    std::vector<std::string> fixed_args;
    compute->add_option("--spec", spec_path, "Spec file ('-' for stdin)");
    compute->add_option("--dilating", dilating_args, "Dilating graph S:T (t may be p/q); repeatable");
    compute->add_option("--fixed", fixed_args, "Fixed graph M or S,T (reduced to min); repeatable");
    compute->add_option("--format", format, "text, json or csv");
    compute->add_flag("--verbose", verbose, "Print the per-s table");
    compute->add_option("--jobs", jobs, "LPs solved concurrently");
    compute->add_option("--max-columns", max_columns, "Column cap per LP");

    auto* closed = app.add_subcommand("closed-form", "Evaluate a closed-form limit");
    std::string kind;
    int closed_s = 1;
    std::string closed_fixed;
    closed->add_option("kind", kind, "q1, q1star or q2")->required();
    closed->add_option("--s", closed_s, "s_1 for q1, shared s for q2");
    closed->add_option("--fixed", closed_fixed, "Comma separated fixed parameters m_i");

    auto* verify = app.add_subcommand("verify", "Exhaustively decide an arrowing G -> (K_{s_i,t_i})");
    std::string graph_text;
    std::vector<std::string> forbid_args;
    int colours = 0;
    std::uint64_t budget = sizeramsey::ArrowingOptions{}.budget;
    verify->add_option("--graph", graph_text, "K<n> or K<s>,<t>")->required();
    verify->add_option("--forbid", forbid_args, "Forbidden K_{S,T} as S,T, one per colour; repeatable")->required();
    verify->add_option("--colours", colours, "Number of colours (defaults to the forbidden count)");
    verify->add_option("--budget", budget, "Search node budget");
    verify->add_option("--jobs", jobs, "Worker threads");

    auto* sweep = app.add_subcommand("sweep", "Evaluate a grid of specs into CSV");
    std::string q_list, s_list, t_list = "1", output_path;
    std::vector<std::string> sweep_fixed;
    sweep->add_option("--q", q_list, "Comma separated q values");
    sweep->add_option("--s", s_list, "Comma separated shared s values");
    sweep->add_option("--t", t_list, "Comma separated shared t values");
    sweep->add_option("--fixed", sweep_fixed, "Fixed list per grid value, e.g. '2,3' or '-'; repeatable");
    sweep->add_option("--output", output_path, "CSV path (stdout when omitted)");
    sweep->add_option("--jobs", jobs, "Cells evaluated concurrently");
    sweep->add_option("--max-columns", max_columns, "Column cap per LP");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::exit_parse_error;
    }

    try {
        sizeramsey::ComputeOptions options;
        options.max_columns = max_columns;
        options.jobs = jobs;

        if (*compute) {
            const auto out_format = cli::parse_format(format);
            std::optional<sizeramsey::ProblemSpec> spec;
            if (!spec_path.empty()) {
                if (!dilating_args.empty() || !fixed_args.empty()) {
                    throw ParseError("--spec cannot be combined with --dilating/--fixed");
                }
                spec = cli::parse_spec_file(read_input(spec_path));
            } else {
                std::vector<sizeramsey::DilatingGraph> dilating;
                for (const auto& arg : dilating_args) {
                    auto parts = split(arg, ':');
                    if (parts.size() != 2) throw ParseError("expected S:T for --dilating, got '" + arg + "'");
                    dilating.push_back({to_int(parts[0]), sizeramsey::Rational::parse(parts[1])});
                }
                std::vector<int> fixed;
                for (const auto& arg : fixed_args) {
                    if (arg.find(',') != std::string::npos) {
                        auto [s, t] = int_pair(arg);
                        fixed.push_back(sizeramsey::ProblemSpec::fixed_from_pair(s, t));
                    } else {
                        fixed.push_back(to_int(arg));
                    }
                }
                spec = sizeramsey::ProblemSpec(std::move(dilating), std::move(fixed));
            }
            return cli::cmd_compute(*spec, out_format, verbose, options, std::cout, std::cerr);
        }
        if (*closed) return cli::cmd_closed_form(kind, closed_s, int_list(closed_fixed), std::cout, std::cerr);
        if (*verify) {
            sizeramsey::Forbidden forbidden;
            for (const auto& arg : forbid_args) forbidden.push_back(int_pair(arg));
            if (colours != 0 && colours != static_cast<int>(forbidden.size())) {
                throw ParseError("--colours must equal the number of --forbid entries");
            }
            sizeramsey::ArrowingOptions arrow_options;
            arrow_options.budget = budget;
            arrow_options.jobs = jobs;
            return cli::cmd_verify(cli::parse_graph(graph_text), forbidden, arrow_options, std::cout, std::cerr);
        }
        if (*sweep) {
            cli::SweepGrid grid;
            grid.q_values = int_list(q_list);
            grid.s_values = int_list(s_list);
            grid.t_values.clear();
            if (!t_list.empty()) {
                for (const auto& part : split(t_list, ',')) grid.t_values.push_back(sizeramsey::Rational::parse(part));
            }
            if (!sweep_fixed.empty()) {
                grid.fixed_lists.clear();
                for (const auto& arg : sweep_fixed) grid.fixed_lists.push_back(int_list(arg));
            }
            if (output_path.empty()) return cli::cmd_sweep(grid, options, jobs, std::cout, std::cerr);
            std::ofstream file(output_path);
            if (!file) throw ParseError("cannot write '" + output_path + "'");
            return cli::cmd_sweep(grid, options, jobs, file, std::cerr);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return cli::exit_parse_error;
    } catch (const sizeramsey::InstanceTooLarge& e) {
        std::cerr << "instance too large: " << e.what() << '\n';
        return cli::exit_too_large;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return cli::exit_parse_error;
    }
    return cli::exit_failure;
}
