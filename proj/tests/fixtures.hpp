#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pnw::testing {

// Post-order listing of PN(11010000) as printed with the Gray code construction.
inline const std::vector<std::string> kGrayListing11010000 = {
    "11000001", "11000011", "11000010", "11000101", "11000110", "11000100", "11001001",
    "11001010", "11001100", "11001000", "11010001", "11010011", "11010010", "11010101",
    "11010110", "11010100", "11011001", "11011011", "11011010", "11011000", "11010000"};

// L_1 ... L_5.
inline const std::vector<std::vector<std::string>> kSmallLanguages = {
    {"0", "1"},
    {"00", "10", "11"},
    {"000", "100", "101", "110", "111"},
    {"0000", "1000", "1001", "1010", "1100", "1101", "1110", "1111"},
    {"00000", "10000", "10001", "10010", "10100", "10101", "11000", "11001", "11010", "11011",
     "11100", "11101", "11110", "11111"}};

// CritSet(s, t, 32) for s = 1..7, t = 1..32.
inline const std::uint64_t kCritSet32[7][32] = {
    {284663, 14295, 2226, 597, 220, 100, 53, 30, 16, 11, 9, 7, 5, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1,
     1, 1, 1, 1, 1, 1, 1, 1, 0},
    {9453217, 979458, 162336, 38404, 11679, 4317, 1788, 813, 451, 276, 161, 90, 47, 16, 15, 14,
     13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 1, 0, 0},
    {25025726, 4907605, 1103214, 293913, 91632, 32459, 12606, 5815, 2962, 1475, 723, 346, 121,
     106, 92, 79, 67, 56, 46, 37, 29, 22, 16, 11, 7, 4, 2, 1, 1, 0, 0, 0},
    {27244624, 7961078, 2338632, 732602, 248717, 91441, 37967, 16994, 7693, 3507, 1594, 576,
     470, 378, 299, 232, 176, 130, 93, 64, 42, 26, 15, 8, 4, 2, 1, 1, 0, 0, 0, 0},
    {20423789, 7521441, 2677376, 964483, 360542, 144460, 61139, 26459, 11658, 5169, 1941, 1471,
     1093, 794, 562, 386, 256, 163, 99, 57, 31, 16, 8, 4, 2, 1, 1, 0, 0, 0, 0, 0},
    {12789981, 5378726, 2178190, 874907, 358717, 151429, 65165, 28543, 12605, 4944, 3473, 2380,
     1586, 1024, 638, 382, 219, 120, 63, 32, 16, 8, 4, 2, 1, 1, 0, 0, 0, 0, 0, 0},
    {7270699, 3301575, 1454694, 633310, 276593, 121726, 54118, 24188, 9949, 6476, 4096, 2510,
     1486, 848, 466, 247, 127, 64, 32, 16, 8, 4, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0},
};

}  // namespace pnw::testing
