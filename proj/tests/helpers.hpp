#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "howe/special_symbol.hpp"

namespace th {

inline howe::Symbol S(const char* text) { return howe::parse_symbol(text); }
inline howe::SpecialSymbol Z(const char* text) { return howe::SpecialSymbol(howe::parse_symbol(text)); }
inline howe::Partition P(const char* text) { return howe::parse_partition(text); }
inline howe::BiPartition B(const char* text) { return howe::parse_bipartition(text); }

inline std::vector<howe::Symbol> syms(std::initializer_list<const char*> texts) {
    std::vector<howe::Symbol> out;
    for (const char* t : texts) out.push_back(S(t));
    std::sort(out.begin(), out.end());
    return out;
}

inline howe::SinglesSubset subset(const howe::SpecialSymbol& z, const char* text) {
    return howe::parse_subset(z, text);
}

}  // namespace th
