#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "howe/partition.hpp"

namespace howe {

enum class Row { Top, Bottom };

inline Row opposite(Row r) { return r == Row::Top ? Row::Bottom : Row::Top; }

/// An entry of a symbol: a value together with the row it sits in.
struct Entry {
    int value = 0;
    Row row = Row::Top;

    friend bool operator==(const Entry&, const Entry&) = default;
    friend auto operator<=>(const Entry&, const Entry&) = default;
};

/// A symbol whose rows are strictly decreasing but which need not be reduced
/// (0 may occur in both rows).
struct RawSymbol {
    std::vector<int> top;
    std::vector<int> bottom;

    friend bool operator==(const RawSymbol&, const RawSymbol&) = default;
};

/// A reduced symbol [a_1 > ... > a_m1 | b_1 > ... > b_m2].
///
/// Construction validates strict decrease and non-negativity, then replaces
/// the input by the reduced representative of its equivalence class.
/// Ordering is lexicographic on (top, bottom).
class Symbol {
public:
    Symbol() = default;
    Symbol(std::vector<int> top, std::vector<int> bottom);
    Symbol(std::initializer_list<int> top, std::initializer_list<int> bottom)
        : Symbol(std::vector<int>(top), std::vector<int>(bottom)) {}

    const std::vector<int>& top() const { return top_; }
    const std::vector<int>& bottom() const { return bottom_; }
    const std::vector<int>& row(Row r) const { return r == Row::Top ? top_ : bottom_; }

    /// (m1, m2)
    std::pair<int, int> size() const {
        return {static_cast<int>(top_.size()), static_cast<int>(bottom_.size())};
    }
    int entry_count() const { return static_cast<int>(top_.size() + bottom_.size()); }
    bool contains(Entry e) const;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;

private:
    friend Symbol reduce(const RawSymbol& s);

    std::vector<int> top_;
    std::vector<int> bottom_;
};

int rank(const Symbol& s);
int rank(const RawSymbol& s);
/// |top| - |bottom|, signed.
int defect(const Symbol& s);
int defect(const RawSymbol& s);
Symbol transpose(const Symbol& s);

/// Unique reduced representative of the shift-equivalence class.
Symbol reduce(const RawSymbol& s);
/// k forward shifts: add 1 to every entry and append 0 to each row.
RawSymbol inflate(const Symbol& s, int k);

/// Staircase subtraction: row entry x_i -> x_i - (m - i).
BiPartition upsilon(const Symbol& s);
/// The unique reduced symbol of the given defect with upsilon(s) == b.
Symbol upsilon_inverse(const BiPartition& b, int target_defect);

/// floor(beta^2 / 4): the rank offset between S_{n,beta} and P_2(n - offset).
int defect_rank_offset(int beta);

/// S_{n,beta}, sorted lexicographically.
std::vector<Symbol> enumerate_symbols(int n, int beta);

/// Literal grammar: "[a1,a2,...|b1,b2,...]", rows possibly empty.
std::string to_string(const Symbol& s);
std::string to_string(const RawSymbol& s);
std::string to_string(Entry e);
Symbol parse_symbol(std::string_view text);

}  // namespace howe
