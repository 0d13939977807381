#include "sizeramsey/cli.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sizeramsey/closed_forms.hpp"
#include "sizeramsey/errors.hpp"

namespace sizeramsey::cli {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    bool in_comment = false;
    for (char ch : text) {
        if (in_comment) {
            if (ch == '\n') in_comment = false;
            continue;
        }
        if (ch == '#' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!current.empty()) tokens.push_back(std::move(current));
            current.clear();
            in_comment = ch == '#';
            continue;
        }
        current.push_back(ch);
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

int parse_int(const std::string& token, const char* what) {
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError(std::string("expected a nonnegative integer for ") + what + ", got '" + token + "'");
    }
    return std::stoi(token);
}

std::string join_ints(const std::vector<int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

ProblemSpec parse_spec_file(std::string_view text) {
    const auto tokens = tokenize(text);
    std::size_t pos = 0;
    auto next = [&](const char* what) -> const std::string& {
        if (pos >= tokens.size()) throw ParseError(std::string("unexpected end of spec, expected ") + what);
        return tokens[pos++];
    };
    const int q = parse_int(next("q"), "q");
    const int r = parse_int(next("r"), "r");
    if (q < 1) throw ParseError("q must be >= 1");
    if (r < q) throw ParseError("r must be >= q");

    std::vector<DilatingGraph> dilating;
    for (int i = 0; i < q; ++i) {
        DilatingGraph g;
        g.s = parse_int(next("s_i"), "s_i");
        g.t = Rational::parse(next("t_i"));
        if (g.s < 1) throw ParseError("s_i must be >= 1");
        if (g.t.sign() <= 0) throw ParseError("t_i must be positive");
        dilating.push_back(std::move(g));
    }
    std::vector<int> fixed;
    for (int i = q; i < r; ++i) {
        const int m = parse_int(next("m_i"), "m_i");
        if (m < 1) throw ParseError("m_i must be >= 1");
        fixed.push_back(m);
    }
    if (pos != tokens.size()) throw ParseError("trailing tokens after spec: '" + tokens[pos] + "'");
    return ProblemSpec(std::move(dilating), std::move(fixed));
}

std::string format_spec_file(const ProblemSpec& spec) {
    std::ostringstream out;
    out << spec.q() << ' ' << spec.r() << '\n';
    for (const auto& g : spec.dilating()) out << g.s << ' ' << g.t << '\n';
    for (int m : spec.fixed()) out << m << '\n';
    return out.str();
}

OutputFormat parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw ParseError("unknown format '" + std::string(name) + "'");
}

int cmd_compute(const ProblemSpec& spec, OutputFormat format, bool verbose, const ComputeOptions& options,
                std::ostream& out, std::ostream& err) {
    LimitResult result;
    try {
        result = compute_limit(spec, options);
    } catch (const InstanceTooLarge& e) {
        err << "instance too large: " << e.what() << '\n';
        return exit_too_large;
    }

    switch (format) {
    case OutputFormat::text:
        if (verbose) {
            for (const auto& row : result.table) {
                out << "s=" << row.s << " LP solution=" << row.t_prime << " s*t'=" << row.candidate << '\n';
            }
            out << "terminated at s=" << result.terminated_at << '\n';
            out << "witness s=" << result.argmin_s << " t'=" << result.t_prime_at_argmin << '\n';
        }
        out << result.value << '\n';
        break;
    case OutputFormat::json: {
        nlohmann::ordered_json doc;
        doc["value"] = result.value.to_string();
        doc["argmin_s"] = result.argmin_s;
        doc["t_prime"] = result.t_prime_at_argmin.to_string();
        auto table = nlohmann::ordered_json::array();
        for (const auto& row : result.table) {
            nlohmann::ordered_json entry;
            entry["s"] = row.s;
            entry["t_prime"] = row.t_prime.to_string();
            entry["value"] = row.candidate.to_string();
            table.push_back(std::move(entry));
        }
        doc["table"] = std::move(table);
        doc["terminated_at"] = result.terminated_at;
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        if (verbose) {
            out << "s,t_prime,value\n";
            for (const auto& row : result.table) out << row.s << ',' << row.t_prime << ',' << row.candidate << '\n';
        } else {
            out << "value,approx,argmin_s,t_prime,terminated_at\n";
            out << result.value << ',' << result.value.approx() << ',' << result.argmin_s << ','
                << result.t_prime_at_argmin << ',' << result.terminated_at << '\n';
        }
        break;
    }
    return exit_ok;
}

int cmd_closed_form(std::string_view kind, int s, const std::vector<int>& fixed, std::ostream& out,
                    std::ostream& err) {
    try {
        if (kind == "q1") {
            const auto result = limit_q1(s, fixed);
            out << result.value << " @ s=" << result.argmin << '\n';
        } else if (kind == "q2") {
            const auto result = limit_q2(s, fixed);
            out << result.value << " @ a=" << result.argmin << '\n';
        } else if (kind == "q1star") {
            out << limit_q1_star(fixed) << '\n';
        } else {
            err << "unknown closed form '" << kind << "' (expected q1, q1star or q2)\n";
            return exit_parse_error;
        }
    } catch (const std::invalid_argument& e) {
        err << "bad parameters: " << e.what() << '\n';
        return exit_parse_error;
    }
    return exit_ok;
}

SmallGraph parse_graph(std::string_view description) {
    std::string text;
    for (char ch : description) {
        if (ch != '_' && ch != '{' && ch != '}' && !std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
    }
    if (text.size() < 2 || (text[0] != 'K' && text[0] != 'k')) {
        throw ParseError("graph must look like K6 or K3,6: '" + std::string(description) + "'");
    }
    text.erase(0, 1);
    const auto sep = text.find_first_of(",x");
    if (sep == std::string::npos) return complete(parse_int(text, "n"));
    return complete_bipartite(parse_int(text.substr(0, sep), "s"), parse_int(text.substr(sep + 1), "t"));
}

int cmd_verify(const SmallGraph& graph, const Forbidden& forbidden, const ArrowingOptions& options,
               std::ostream& out, std::ostream& err) {
    try {
        const auto result = arrows(graph, forbidden, static_cast<int>(forbidden.size()), options);
        if (result.arrows) {
            out << "ARROWS\n";
        } else {
            out << "AVOIDED " << *result.certificate << '\n';
        }
    } catch (const BudgetExceeded& e) {
        err << e.what() << '\n';
        return exit_budget;
    } catch (const std::invalid_argument& e) {
        err << "bad parameters: " << e.what() << '\n';
        return exit_parse_error;
    }
    return exit_ok;
}

namespace {

struct SweepCell {
    int q;
    int s;
    Rational t;
    std::vector<int> fixed;
};

struct SweepRow {
    std::string value, approx, argmin, t_prime, closed_form, match, error;
    int code = exit_ok;
};

SweepRow evaluate_cell(const SweepCell& cell, const ComputeOptions& options) {
    SweepRow row;
    try {
        ProblemSpec spec(std::vector<DilatingGraph>(static_cast<std::size_t>(cell.q), DilatingGraph{cell.s, cell.t}),
                         cell.fixed);
        const auto result = compute_limit(spec, options);
        row.value = result.value.to_string();
        row.approx = result.value.approx();
        row.argmin = std::to_string(result.argmin_s);
        row.t_prime = result.t_prime_at_argmin.to_string();
        std::optional<Rational> closed;
        if (cell.q == 1) closed = cell.t * limit_q1(cell.s, cell.fixed).value;
        if (cell.q == 2) closed = cell.t * limit_q2(cell.s, cell.fixed).value;
        if (closed) {
            row.closed_form = closed->to_string();
            row.match = *closed == result.value ? "true" : "false";
        }
    } catch (const InstanceTooLarge& e) {
        row.error = e.what();
        row.code = exit_too_large;
    } catch (const std::exception& e) {
        row.error = e.what();
        row.code = exit_failure;
    }
    return row;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    return out + "\"";
}

}  // namespace

int cmd_sweep(const SweepGrid& grid, const ComputeOptions& options, unsigned jobs, std::ostream& out,
              std::ostream& err) {
    std::vector<SweepCell> cells;
    for (int q : grid.q_values) {
        for (int s : grid.s_values) {
            for (const auto& t : grid.t_values) {
                for (const auto& fixed : grid.fixed_lists) cells.push_back(SweepCell{q, s, t, fixed});
            }
        }
    }

    std::vector<SweepRow> rows(cells.size());
    const std::size_t chunk = std::max(1u, jobs);
    for (std::size_t start = 0; start < cells.size(); start += chunk) {
        const std::size_t stop = std::min(cells.size(), start + chunk);
        if (chunk == 1) {
            rows[start] = evaluate_cell(cells[start], options);
            continue;
        }
        std::vector<std::future<SweepRow>> pending;
        for (std::size_t i = start; i < stop; ++i) {
            pending.push_back(std::async(std::launch::async, [&, i] { return evaluate_cell(cells[i], options); }));
        }
        for (std::size_t i = start; i < stop; ++i) rows[i] = pending[i - start].get();
    }

    out << "q,r,dilating,fixed,value,approx,argmin_s,t_prime,closed_form,match,error\n";
    int code = exit_ok;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& cell = cells[i];
        const auto& row = rows[i];
        std::string dilating;
        for (int k = 0; k < cell.q; ++k) {
            if (k) dilating.push_back(';');
            dilating += std::to_string(cell.s) + ":" + cell.t.to_string();
        }
        out << cell.q << ',' << cell.q + static_cast<int>(cell.fixed.size()) << ',' << dilating << ','
            << join_ints(cell.fixed, ';') << ',' << row.value << ',' << row.approx << ',' << row.argmin << ','
            << row.t_prime << ',' << row.closed_form << ',' << row.match << ',' << csv_field(row.error) << '\n';
        if (row.code != exit_ok) {
            err << "row " << i + 1 << ": " << row.error << '\n';
            if (code == exit_ok) code = row.code;
        }
    }
    return code;
}

}  // namespace sizeramsey::cli
