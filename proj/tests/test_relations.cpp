#include <doctest.h>

#include "helpers.hpp"
#include "howe/errors.hpp"
#include "howe/relations.hpp"

using namespace howe;
using th::S;
using th::Z;

namespace {

std::vector<SymbolPair> pairs(std::initializer_list<std::pair<const char*, const char*>> items) {
    std::vector<SymbolPair> out;
    for (const auto& [l, r] : items) out.emplace_back(S(l), S(r));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("relations") {

TEST_CASE("related_bar") {
    CHECK(related_bar(S("[1|]"), S("[1|0]"), Sign::Plus));
    CHECK_FALSE(related_bar(S("[1,0|1]"), S("[0|1]"), Sign::Plus));
    CHECK(related_bar(S("[0|]"), S("[|1,0]"), Sign::Minus));
}

TEST_CASE("related_ineq") {
    CHECK(related_ineq(S("[2,0|1]"), S("[1|0]"), Sign::Plus));
    CHECK(related_ineq(S("[0|]"), S("[|1,0]"), Sign::Minus));
    // Upsilon images (1;) and (;1), defects 1 and 0: related by definition.
    // Chains: c_1=0 > b_1 (continued as -1), b_1 >= c_2; a_1=1 >= d_1=1 > a_2 (-1).
    CHECK(related_bar(S("[1|]"), S("[0|1]"), Sign::Plus));
    CHECK(related_ineq(S("[1|]"), S("[0|1]"), Sign::Plus));
}

TEST_CASE("relation tables") {
    const auto z = Z("[1|]");
    const auto zp = Z("[1|0]");
    CHECK(relation(z, zp, RelationKind::D).pairs == pairs({{"[1|]", "[1|0]"}, {"[1|]", "[0|1]"}}));
    CHECK(relation(Z("[1,0|1]"), zp, RelationKind::D).pairs == pairs({{"[1,0|1]", "[1|0]"}}));
    CHECK(relation(z, zp, RelationKind::BMinus).empty());
    CHECK(relation(z, Z("[2,1|1,0]"), RelationKind::D).empty());
    CHECK_THROWS_AS(relation(zp, zp, RelationKind::D), DomainError);
}

TEST_CASE("fibers") {
    const auto zp = Z("[1|0]");
    CHECK(fiber(Z("[1|]"), zp, RelationKind::D, S("[1|]"), Side::Left) == th::syms({"[1|0]", "[0|1]"}));
    CHECK(fiber(Z("[1,0|1]"), zp, RelationKind::D, zp.symbol(), Side::Right) == th::syms({"[1,0|1]"}));
    CHECK(fiber(Z("[2,0|1]"), zp, RelationKind::BPlus, S("[2,0|1]"), Side::Left) == th::syms({"[1|0]"}));
    CHECK_THROWS_AS(fiber(Z("[1|]"), zp, RelationKind::BPlus, S("[|1]"), Side::Left), NotInFamilyError);
}

TEST_CASE("size compatibility") {
    CHECK(size_compatible(Z("[1|]"), Z("[1|0]")));
    CHECK(size_compatible(Z("[2,0|1]"), Z("[1|0]")));
    CHECK_FALSE(size_compatible(Z("[1|]"), Z("[2,1|1,0]")));
}

TEST_CASE("checked variants reject symbols outside the family") {
    CHECK_THROWS_AS(related_bar(Z("[1|]"), Z("[1|0]"), S("[2|]"), S("[1|0]"), Sign::Plus), NotInFamilyError);
    CHECK_NOTHROW(related_ineq(Z("[1|]"), Z("[1|0]"), S("[|1]"), S("[1,0|]"), Sign::Plus));
}

TEST_CASE("sign and kind literals") {
    CHECK(parse_sign("+") == Sign::Plus);
    CHECK(parse_sign("minus") == Sign::Minus);
    CHECK_THROWS_AS(parse_sign("x"), ParseError);
    for (auto k : {RelationKind::BarPlus, RelationKind::BarMinus, RelationKind::BPlus, RelationKind::BMinus,
                   RelationKind::D})
        CHECK(parse_kind(kind_text(k)) == k);
}

}
