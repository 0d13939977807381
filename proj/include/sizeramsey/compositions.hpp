#pragma once

#include <vector>

namespace sizeramsey {

class ProblemSpec;

/// One index of the LP: a split of s vertices into r colour classes.
struct Composition {
    /// a_1..a_r; entries past free_prefix_length are frozen at s_i - 1.
    std::vector<int> entries;
    int free_prefix_length = 0;

    friend bool operator==(const Composition&, const Composition&) = default;
};

/**
 * All vectors of `parts` nonnegative integers summing to `total`.
 *
 * Order: starts at (0,...,0,total); the successor finds the largest i with
 * a_i > 0, increments a_{i-1}, moves a_i - 1 into the last slot and clears
 * a_i. This is increasing lexicographic order, and the column order of the
 * LP built by build_lp.
 */
std::vector<std::vector<int>> enumerate_compositions(int total, int parts);

/// Index set of L_s: free compositions of s - s0 with the frozen tail appended.
/// Empty when s is below the frozen sum s0.
std::vector<Composition> pi_s(const ProblemSpec& spec, int s);

}  // namespace sizeramsey
