#pragma once
// Frozen reference data shared by the unit tests and the acceptance suite.
// Sequences are written exactly as published; matrices are transcribed
// entry-for-entry.

#include <qoco/sign_matrix.hpp>

#include <array>
#include <string>
#include <vector>

namespace fixtures {

// --- length-6 maps over Z_2 x Z_3 (index = 3*first digit + second digit) ----

inline const std::vector<std::string> example1_phi = {
    "+-++++",  // type (1,0)
    "++-+++",  // type (0,1)
    "++-+-+",  // type (1,1)
};

inline const std::vector<std::vector<int>> example1_z = {{1, 0}, {0, 1}, {1, 1}};

// The three displayed quasi-orthogonal products, rows as sign strings.
inline const std::vector<std::vector<std::string>> example1_product = {
    {
        "++++++",
        "++----",
        "+--+++",
        "+-+-+-",
        "+-++--",
        "+-+--+",
    },
    {
        "++++++",
        "+-+++-",
        "++--++",
        "++-++-",
        "++++--",
        "+-+---",
    },
    {
        "++++++",
        "+-+---",
        "++----",
        "+---++",
        "+--++-",
        "+--+-+",
    },
};

// The coboundary factors of the same displays.
inline const std::vector<std::vector<std::string>> example1_coboundary = {
    {
        "++++++",
        "++----",
        "+--+++",
        "+-++-+",
        "+-+-++",
        "+-+++-",
    },
    {
        "++++++",
        "+--+++",
        "+-+---",
        "++-++-",
        "++-+-+",
        "++--++",
    },
    {
        "++++++",
        "+----+",
        "+-+-++",
        "+--+--",
        "+-+---",
        "+++--+",
    },
};

// --- second worked map: s = (6,3), z = (1,0) ---------------------------------

inline const std::vector<int> example2_s = {6, 3};
inline const std::vector<int> example2_z = {1, 0};
// index = 3*first digit + second digit; negatives at 3, 7, 9, 12
inline const std::string example2_phi = "+++-+++-+-++-+++++";
inline const std::vector<int> example2_subset = {3, 7, 9, 12};

// --- published pair table (run-length form) ----------------------------------

struct PairRow {
    int k;
    const char* phi1;
    const char* phi2;
};

inline const std::array<PairRow, 6> pair_table = {{
    {3, "1^2,4", "2,1,3"},
    {5, "2,1^3,5", "3,1,2,1,3"},
    {7, "2,1,5,1^3,3", "2,1,4,2,1^2,3"},
    {9, "3,1,2,1^3,3,1,5", "2,1,2,3,2,1^3,5"},
    {13, "3,3,2,2,1,2,1,2,1^4,6", "3,3,1,3,1,2,1,2,1^4,6"},
    {15, "3,2,4,1^2,2,2,1,2,1^5,7", "3,2,3,2,1,2,2,1,2,1^5,7"},
}};

// decoded forms of the first row, pinned once by hand
inline const std::string pair3_phi1 = "+-++++";
inline const std::string pair3_phi2 = "++-+++";

// --- published enumeration table ----------------------------------------------

struct CountRow {
    int k;
    long long n, n_hat, d, d_hat;
};

inline const std::array<CountRow, 4> count_table = {{
    {3, 576, 576, 1, 1},
    {5, 11200, 4800, 3, 2},
    {7, 90944, 18816, 5, 1},
    {9, 1041984, 62208, 20, 2},
}};

}  // namespace fixtures
