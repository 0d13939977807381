#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sizeramsey/arrowing.hpp"
#include "sizeramsey/exactnum.hpp"
#include "sizeramsey/ramsey_core.hpp"

namespace sizeramsey::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_too_large = 3;
inline constexpr int exit_budget = 4;

/**
 * Spec file grammar, whitespace separated, '#' to end of line is a comment:
 *
 *     q r
 *     s_1 t_1        (q lines; t_i is "p" or "p/q")
 *     ...
 *     m_{q+1}        (r - q lines; m_i = min(s_i, t_i))
 *     ...
 *
 * Throws ParseError on any deviation or invariant violation.
 */
ProblemSpec parse_spec_file(std::string_view text);

/// Inverse of parse_spec_file, one item per line, no comments.
std::string format_spec_file(const ProblemSpec& spec);

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(std::string_view name);

int cmd_compute(const ProblemSpec& spec, OutputFormat format, bool verbose, const ComputeOptions& options,
                std::ostream& out, std::ostream& err);

/// kind is "q1", "q1star" or "q2"; s is s_1 (q1) or the shared s (q2), ignored by q1star.
int cmd_closed_form(std::string_view kind, int s, const std::vector<int>& fixed, std::ostream& out,
                    std::ostream& err);

/// "K6", "K_6", "K3,6", "K_{3,6}", "K3x6".
SmallGraph parse_graph(std::string_view description);

int cmd_verify(const SmallGraph& graph, const Forbidden& forbidden, const ArrowingOptions& options,
               std::ostream& out, std::ostream& err);

/// Cartesian grid: every dilating graph of a cell shares s and t.
struct SweepGrid {
    std::vector<int> q_values;
    std::vector<int> s_values;
    std::vector<Rational> t_values{Rational(1)};
    std::vector<std::vector<int>> fixed_lists{{}};
};

/// One CSV row per cell in q, s, t, fixed order. Exit 0 iff every row completed.
int cmd_sweep(const SweepGrid& grid, const ComputeOptions& options, unsigned jobs, std::ostream& out,
              std::ostream& err);

}  // namespace sizeramsey::cli
