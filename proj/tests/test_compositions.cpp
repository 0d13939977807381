#include <doctest.h>

#include <algorithm>
#include <functional>

#include "sizeramsey/compositions.hpp"
#include "sizeramsey/exactnum.hpp"
#include "sizeramsey/ramsey_core.hpp"

using namespace sizeramsey;

namespace {

// Every vector in [0, total]^parts summing to total, sorted lexicographically.
std::vector<std::vector<int>> brute_compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int index, int left) {
        if (index == parts - 1) {
            current.push_back(left);
            out.push_back(current);
            current.pop_back();
            return;
        }
        for (int v = 0; v <= left; ++v) {
            current.push_back(v);
            rec(index + 1, left - v);
            current.pop_back();
        }
    };
    rec(0, total);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("enumerate_compositions examples") {
    const std::vector<std::vector<int>> expected{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
    CHECK(enumerate_compositions(3, 2) == expected);
    CHECK(enumerate_compositions(0, 1) == std::vector<std::vector<int>>{{0}});
    CHECK(enumerate_compositions(3, 2).size() == 4);
    const std::vector<std::vector<int>> three{{0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
    CHECK(enumerate_compositions(2, 3) == three);
}

TEST_CASE("enumeration matches brute force, count and order") {
    for (int total = 0; total <= 12; ++total) {
        for (int parts = 1; parts <= 5; ++parts) {
            const auto got = enumerate_compositions(total, parts);
            CHECK(BigInt(static_cast<unsigned long>(got.size())) == binom(total + parts - 1, parts - 1));
            CHECK(got == brute_compositions(total, parts));
            for (std::size_t i = 1; i < got.size(); ++i) {
                CHECK(std::lexicographical_compare(got[i - 1].begin(), got[i - 1].end() - 1, got[i].begin(),
                                                   got[i].end() - 1));
            }
            CHECK(got == enumerate_compositions(total, parts));
        }
    }
}

TEST_CASE("pi_s freezes the fixed coordinates") {
    const ProblemSpec k2n_pair({{2, 1}, {2, 1}});
    const auto cols = pi_s(k2n_pair, 3);
    REQUIRE(cols.size() == 4);
    CHECK(cols[0].entries == std::vector<int>{0, 3});
    CHECK(cols[3].entries == std::vector<int>{3, 0});

    const ProblemSpec star_c4({{1, 1}}, {2});
    const auto one = pi_s(star_c4, 2);
    REQUIRE(one.size() == 1);
    CHECK(one[0].entries == std::vector<int>{1, 1});
    CHECK(one[0].free_prefix_length == 1);

    const ProblemSpec single({{2, 1}});
    CHECK(pi_s(single, 2) == std::vector<Composition>{Composition{{2}, 1}});

    const ProblemSpec wide({{1, 1}, {2, 1}}, {3, 2});
    CHECK(pi_s(wide, 2).empty());
    for (int s = 3; s <= 9; ++s) {
        const auto got = pi_s(wide, s);
        CHECK(BigInt(static_cast<unsigned long>(got.size())) == binom(s - 3 + 1, 1));
        for (const auto& c : got) {
            CHECK(c.entries[2] == 2);
            CHECK(c.entries[3] == 1);
            int sum = 0;
            for (int a : c.entries) sum += a;
            CHECK(sum == s);
        }
    }
}
