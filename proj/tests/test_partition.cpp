#include <doctest.h>

#include "helpers.hpp"
#include "howe/errors.hpp"

using namespace howe;
using th::B;
using th::P;

TEST_SUITE("partition") {

TEST_CASE("weight") {
    CHECK(weight(P("")) == 0);
    CHECK(weight(P("3,1")) == 4);
    CHECK(weight(P("1,1,1")) == 3);
}

TEST_CASE("transpose by column counts") {
    CHECK(transpose(P("")) == P(""));
    CHECK(transpose(P("3,1")) == P("2,1,1"));
    CHECK(transpose(P("2,2")) == P("2,2"));
    // column-count oracle: transpose(p)_j = #{i : p_i >= j}
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) {
            const auto t = transpose(p);
            for (int j = 1; j <= n + 1; ++j) {
                int count = 0;
                for (int x : p.parts()) count += x >= j;
                CHECK(t.at(static_cast<std::size_t>(j)) == count);
            }
        }
}

TEST_CASE("precede") {
    CHECK(precede(P("2,1"), P("2,1")));
    CHECK(precede(P("1"), P("2,1")));
    CHECK_FALSE(precede(P("3"), P("2")));
}

TEST_CASE("precede_transposed") {
    CHECK(precede_transposed(P("1"), P("1")));
    CHECK(precede_transposed(P("1"), P("2")));
    CHECK_FALSE(precede_transposed(P("2"), P("1,1")));
}

TEST_CASE("horizontal_extensions") {
    CHECK(horizontal_extensions(P(""), 1) == std::vector<Partition>{P("1")});
    auto two = horizontal_extensions(P("1"), 1);
    std::sort(two.begin(), two.end());
    std::vector<Partition> want{P("2"), P("1,1")};
    std::sort(want.begin(), want.end());
    CHECK(two == want);
    CHECK(horizontal_extensions(P("2"), 0) == std::vector<Partition>{P("2")});
}

TEST_CASE("partition counts against the Euler recurrence") {
    // p(n) via pentagonal numbers, independent of the enumerator
    std::vector<long> p(13, 0);
    p[0] = 1;
    for (int n = 1; n <= 12; ++n)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long s = (k % 2) ? 1 : -1;
            p[n] += s * p[n - g1];
            if (g2 <= n) p[n] += s * p[n - g2];
        }
    for (int n = 0; n <= 12; ++n) CHECK(static_cast<long>(partitions_of(n).size()) == p[n]);
}

TEST_CASE("literals") {
    CHECK(to_string(P("3,1")) == "3,1");
    CHECK(to_string(B("2,1;1")) == "2,1;1");
    CHECK(parse_bipartition(";1").bottom == P("1"));
    CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(parse_partition("1,x"), ParseError);
}

}
