// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace isosum {

using int128 = __int128;
using uint128 = unsigned __int128;

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // careful with INT128_MIN: negate via unsigned
    uint128 u = neg ? uint128(0) - uint128(v) : uint128(v);
    char buf[48];
    char* end = buf + sizeof(buf);
    char* cur = end;
    while (u > 0) {
        *--cur = char('0' + int(u % 10));
        u /= 10;
    }
    if (neg) *--cur = '-';
    return std::string(cur, end);
}

inline int128 int128_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("int128_from_string: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = (s[0] == '-');
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("int128_from_string: no digits");
    uint128 u = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("int128_from_string: bad digit");
        u = u * 10 + uint128(c - '0');
    }
    return neg ? -int128(u) : int128(u);
}

} // namespace isosum
