#include "sizeramsey/compositions.hpp"

#include <stdexcept>

#include "sizeramsey/ramsey_core.hpp"

namespace sizeramsey {

std::vector<std::vector<int>> enumerate_compositions(int total, int parts) {
    if (total < 0 || parts < 1) throw std::invalid_argument("enumerate_compositions: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> a(static_cast<std::size_t>(parts), 0);
    a.back() = total;
    for (;;) {
        out.push_back(a);
        int i = parts - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] == 0) --i;
        if (i <= 0) break;
        const int moved = a[static_cast<std::size_t>(i)] - 1;
        ++a[static_cast<std::size_t>(i - 1)];
        a[static_cast<std::size_t>(i)] = 0;
        a.back() = moved;  // i may be the last index; this overwrites the clear
    }
    return out;
}

std::vector<Composition> pi_s(const ProblemSpec& spec, int s) {
    const int frozen = spec.frozen_sum();
    if (s < frozen) return {};
    std::vector<Composition> out;
    for (auto& free : enumerate_compositions(s - frozen, spec.q())) {
        Composition c;
        c.free_prefix_length = spec.q();
        c.entries = std::move(free);
        for (int m : spec.fixed()) c.entries.push_back(m - 1);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace sizeramsey
