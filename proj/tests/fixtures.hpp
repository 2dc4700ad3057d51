#pragma once

#include <cstdint>
#include <vector>

namespace fixture {

// Published list of the v-palindromes n <= 10^5 with n < r(n).
inline const std::vector<std::uint64_t> kCanonicalTable = {
    18,    198,   576,   819,   1131,  1304,  1818,  1998,  2262,  3393,  4154,  4636,
    8749,  12441, 14269, 14344, 15167, 15602, 16237, 18018, 18449, 18977, 19998, 23843,
    24882, 26677, 26892, 27225, 29925, 31229, 36679, 38967, 39169, 42788, 45694, 46215,
    46655, 47259, 48048, 52416, 56056, 60147, 62218, 66218, 79689, 97999};

}  // namespace fixture
