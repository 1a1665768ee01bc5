#include <doctest.h>

#include "helpers.hpp"
#include "howe/errors.hpp"
#include "howe/regular_maps.hpp"

using namespace howe;
using th::S;
using th::Z;

TEST_SUITE("regular_maps") {

TEST_CASE("model symbols") {
    CHECK(model_symbols(0).first == Z("[0|]"));
    CHECK(model_symbols(0).second == Z("[|]"));
    CHECK(model_symbols(1).first == Z("[2,0|1]"));
    CHECK(model_symbols(1).second == Z("[1|0]"));
    CHECK(model_symbols(2).first == Z("[4,2,0|3,1]"));
    CHECK(model_symbols(2).second == Z("[3,1|2,0]"));
}

TEST_CASE("theta_plus") {
    const auto z = Z("[2,0|1]");
    const auto zp = Z("[1|0]");
    CHECK(theta_plus(z, zp, zp.symbol()) == S("[2,0|1]"));
    CHECK(theta_plus(z, zp, S("[0|1]")) == S("[2,1|0]"));
    CHECK(theta_plus(Z("[0|]"), zp, S("[0|]")) == S("[1|0]"));
    CHECK_THROWS_AS(theta_plus(Z("[1,0|1]"), zp, S("[1,0|1]")), DomainError);
}

TEST_CASE("theta_minus") {
    const auto z = Z("[2,0|1]");
    const auto zp = Z("[1|0]");
    CHECK(theta_minus(Z("[0|]"), zp, S("[0|]")) == S("[|1,0]"));
    // [|1,0] is Lambda_{c_1}; theta(c_1) = b_1, plus a_1
    CHECK(theta_minus(z, zp, S("[|1,0]")) == S("[1,0|2]"));
    // [1,0|] is Lambda_{d_1}; theta(d_1) = a_2, plus a_1
    CHECK(theta_minus(z, zp, S("[1,0|]")) == S("[|2,1,0]"));
    CHECK(theta_minus(z, zp, zp.symbol()) == S("[0|2,1]"));
    // image lies in the domain relation: B- pairs
    CHECK(related_bar(theta_minus(z, zp, S("[|1,0]")), S("[|1,0]"), Sign::Minus));
    CHECK(related_bar(theta_minus(z, zp, S("[1,0|]")), S("[1,0|]"), Sign::Minus));
}

TEST_CASE("isomorphisms to the model") {
    const auto h = iso_h(Z("[3,0|1]"));
    CHECK(h(Entry{3, Row::Top}) == Entry{2, Row::Top});
    CHECK(h(Entry{0, Row::Top}) == Entry{0, Row::Top});
    CHECK(h(Entry{1, Row::Bottom}) == Entry{1, Row::Bottom});
    CHECK(h.injective());
    for (int m = 0; m <= 3; ++m) {
        const auto [mz, mzp] = model_symbols(m);
        for (const auto& [from, to] : iso_h(mz).pairs) CHECK(from == to);
        for (const auto& [from, to] : iso_h_prime(mzp).pairs) CHECK(from == to);
    }
    CHECK_THROWS_AS(iso_h(Z("[1,0|1]")), DomainError);
}

TEST_CASE("theta maps are injective and miss only the forced entry") {
    const auto t = theta_map(Z("[2,0|1]"), Z("[1|0]"));
    CHECK(t.injective());
    CHECK(t.pairs.size() == 2);
    for (const auto& [from, to] : t.pairs) CHECK(to != Entry{2, Row::Top});
}

}
