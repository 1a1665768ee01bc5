#include <doctest.h>

#include "helpers.hpp"
#include "howe/errors.hpp"

using namespace howe;
using th::B;
using th::S;

namespace {

// |P_2(n)| from the product of 1/(1-x^k)^2, computed by series multiplication
std::vector<long> bipartition_counts(int nmax) {
    std::vector<long> c(static_cast<std::size_t>(nmax) + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= nmax; ++k)
        for (int rep = 0; rep < 2; ++rep)
            for (int n = k; n <= nmax; ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - k)];
    return c;
}

}  // namespace

TEST_SUITE("symbol") {

TEST_CASE("rank") {
    CHECK(rank(S("[|]")) == 0);
    CHECK(rank(S("[1|0]")) == 1);
    CHECK(rank(S("[2,0|1]")) == 2);
}

TEST_CASE("defect") {
    CHECK(defect(S("[1|0]")) == 0);
    CHECK(defect(S("[1|]")) == 1);
    CHECK(defect(S("[|1,0]")) == -2);
}

TEST_CASE("transpose") {
    CHECK(transpose(S("[1|0]")) == S("[0|1]"));
    CHECK(transpose(S("[2,0|1]")) == S("[1|2,0]"));
    CHECK(transpose(S("[|]")) == S("[|]"));
}

TEST_CASE("reduce and inflate") {
    CHECK(reduce(RawSymbol{{3, 2, 0}, {2, 0}}) == S("[2,1|1]"));
    CHECK(reduce(RawSymbol{{1}, {0}}) == S("[1|0]"));
    CHECK(reduce(RawSymbol{{1, 0}, {2, 0}}) == S("[0|1]"));
    CHECK(inflate(S("[1|0]"), 1) == RawSymbol{{2, 0}, {1, 0}});
    CHECK(inflate(S("[|]"), 1) == RawSymbol{{0}, {0}});
    CHECK(inflate(S("[1|0]"), 0) == RawSymbol{{1}, {0}});
}

TEST_CASE("upsilon") {
    CHECK(upsilon(S("[1,0|1]")) == B(";1"));
    CHECK(upsilon(S("[2,0|1]")) == B("1;1"));
    CHECK(upsilon(S("[|]")) == B(";"));
    CHECK(upsilon_inverse(B("1;"), 1) == S("[1|]"));
    CHECK(upsilon_inverse(B(";1"), 1) == S("[1,0|1]"));
    CHECK(upsilon_inverse(B(";"), 0) == S("[|]"));
}

TEST_CASE("enumerate_symbols") {
    CHECK(enumerate_symbols(1, 1) == th::syms({"[1|]", "[1,0|1]"}));
    CHECK(enumerate_symbols(0, 1) == th::syms({"[0|]"}));
    CHECK(enumerate_symbols(1, 0) == th::syms({"[1|0]", "[0|1]"}));
}

TEST_CASE("|S_{n,1}| matches the bi-partition generating function") {
    const auto c = bipartition_counts(8);
    for (int n = 0; n <= 8; ++n) CHECK(static_cast<long>(enumerate_symbols(n, 1).size()) == c[static_cast<std::size_t>(n)]);
}

TEST_CASE("literals") {
    CHECK(to_string(S("[2,0|1]")) == "[2,0|1]");
    CHECK(to_string(S("[ 1 | ]")) == "[1|]");
    CHECK(to_string(Entry{2, Row::Top}) == "t:2");
    // both rows holding 0 are reduced on construction
    CHECK(S("[1,0|2,0]") == S("[0|1]"));
    CHECK_THROWS_AS(parse_symbol("[1|"), ParseError);
    CHECK_THROWS_AS(parse_symbol("[0,1|]"), ParseError);
    CHECK_THROWS_AS(Symbol({0, 1}, {}), DomainError);
}

}
