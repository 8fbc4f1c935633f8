#pragma once

// Exact rational coefficient data for the fourth-order SBP operator family.
// Mirrors the plain-text tables in data/; see data/README for the format.

#include <array>
#include <cstdint>

namespace sbpwave::detail {

struct RationalEntry3 {
  std::int32_t row, col, mu;
  std::int64_t num, den;
};

struct RationalEntry2 {
  std::int32_t row, col;
  std::int64_t num, den;
};

// Diagonal norm boundary weights w_1..w_4 (interior weight 1).
inline constexpr std::array<std::array<std::int64_t, 2>, 4> kNormWeights{{
    {17, 48}, {59, 48}, {43, 48}, {49, 48}}};

// First-derivative SBP operator: 4 boundary rows over 6 columns (x 1/h).
inline constexpr std::array<std::array<std::array<std::int64_t, 2>, 6>, 4>
    kD1Boundary{{
        {{{-24, 17}, {59, 34}, {-4, 17}, {-3, 34}, {0, 1}, {0, 1}}},
        {{{-1, 2}, {0, 1}, {1, 2}, {0, 1}, {0, 1}, {0, 1}}},
        {{{4, 43}, {-59, 86}, {0, 1}, {59, 86}, {-4, 43}, {0, 1}}},
        {{{3, 98}, {0, 1}, {-59, 98}, {0, 1}, {32, 49}, {-4, 49}}},
    }};

// Central first-derivative interior stencil (x 1/h), offsets -2..2.
inline constexpr std::array<std::array<std::int64_t, 2>, 5> kD1Interior{{
    {1, 12}, {-2, 3}, {0, 1}, {2, 3}, {-1, 12}}};

// Boundary derivative with ghost point, b~_1 (x 1/h), indices ghost,1..4.
inline constexpr std::array<std::array<std::int64_t, 2>, 5> kGpBoundaryDeriv{{
    {-1, 4}, {-5, 6}, {3, 2}, {-1, 2}, {1, 12}}};

// Boundary derivative without ghost point, b_1 (x 1/h), indices 1..4.
inline constexpr std::array<std::array<std::int64_t, 2>, 4> kNgpBoundaryDeriv{{
    {-11, 6}, {3, 1}, {-3, 2}, {1, 3}}};

// Ghost-point coefficient of the first WithGhost closure row (x mu_1/h^2).
inline constexpr std::array<std::int64_t, 2> kGpGhostCoeff{12, 17};

// Borrowing constants for the fourth-order NoGhost family.
inline constexpr double kBorrowingAlpha = 0.2505765857;
inline constexpr int kBorrowingPoints = 4;

// WithGhost closure: row q (1..6), solution index k (1..8), material index
// m (1..8); value scaled by 1/h^2.  beta[q][k][m] of the closure
// G~_q(mu) v = h^-2 sum_{k,m} beta_{q,k,m} mu_m v_k (+ ghost term for q=1).
inline constexpr std::array<RationalEntry3, 129> kGpClosure{{
    {1, 1, 1, 104, 289},
    {1, 1, 2, -2476335, 2435692},
    {1, 1, 3, -16189, 84966},
    {1, 1, 4, -9, 3332},
    {1, 2, 1, -516, 289},
    {1, 2, 2, 544521, 1217846},
    {1, 2, 3, 2509879, 3653538},
    {1, 3, 1, 312, 289},
    {1, 3, 2, 1024279, 2435692},
    {1, 3, 3, -687797, 1217846},
    {1, 3, 4, 177, 3332},
    {1, 4, 1, -104, 289},
    {1, 4, 2, 181507, 1217846},
    {1, 4, 3, 241309, 3653538},
    {1, 5, 3, 5, 2193},
    {1, 5, 4, -48, 833},
    {1, 6, 4, 6, 833},
    {2, 1, 1, 12, 17},
    {2, 1, 2, 544521, 4226642},
    {2, 1, 3, 2509879, 12679926},
    {2, 2, 1, -59, 68},
    {2, 2, 2, -1633563, 4226642},
    {2, 2, 3, -21510077, 25359852},
    {2, 2, 4, -12655, 372939},
    {2, 3, 1, 2, 17},
    {2, 3, 2, 1633563, 4226642},
    {2, 3, 3, 2565299, 4226642},
    {2, 3, 4, 40072, 372939},
    {2, 4, 1, 3, 68},
    {2, 4, 2, -544521, 4226642},
    {2, 4, 3, 987685, 25359852},
    {2, 4, 4, -14762, 124313},
    {2, 5, 3, 1630, 372939},
    {2, 5, 4, 18976, 372939},
    {2, 6, 4, -1, 177},
    {3, 1, 1, -96, 731},
    {3, 1, 2, 1024279, 6160868},
    {3, 1, 3, -687797, 3080434},
    {3, 1, 4, 177, 8428},
    {3, 2, 1, 118, 731},
    {3, 2, 2, 1633563, 3080434},
    {3, 2, 3, 2565299, 3080434},
    {3, 2, 4, 40072, 271803},
    {3, 3, 1, -16, 731},
    {3, 3, 2, -5380447, 6160868},
    {3, 3, 3, -3569115, 3080434},
    {3, 3, 4, -331815, 362404},
    {3, 3, 5, -283, 6321},
    {3, 4, 1, -6, 731},
    {3, 4, 2, 544521, 3080434},
    {3, 4, 3, 2193521, 3080434},
    {3, 4, 4, 8065, 12943},
    {3, 4, 5, 381, 2107},
    {3, 5, 3, -14762, 90601},
    {3, 5, 4, 32555, 271803},
    {3, 5, 5, -283, 2107},
    {3, 6, 4, 9, 2107},
    {3, 6, 5, -11, 6321},
    {4, 1, 1, -36, 833},
    {4, 1, 2, 181507, 3510262},
    {4, 1, 3, 241309, 10530786},
    {4, 2, 1, 177, 3332},
    {4, 2, 2, -544521, 3510262},
    {4, 2, 3, 987685, 21061572},
    {4, 2, 4, -14762, 103243},
    {4, 3, 1, -6, 833},
    {4, 3, 2, 544521, 3510262},
    {4, 3, 3, 2193521, 3510262},
    {4, 3, 4, 8065, 14749},
    {4, 3, 5, 381, 2401},
    {4, 4, 1, -9, 3332},
    {4, 4, 2, -181507, 3510262},
    {4, 4, 3, -2647979, 3008796},
    {4, 4, 4, -80793, 103243},
    {4, 4, 5, -1927, 2401},
    {4, 4, 6, -2, 49},
    {4, 5, 3, 57418, 309729},
    {4, 5, 4, 51269, 103243},
    {4, 5, 5, 1143, 2401},
    {4, 5, 6, 8, 49},
    {4, 6, 4, -283, 2401},
    {4, 6, 5, 403, 2401},
    {4, 6, 6, -6, 49},
    {5, 1, 3, 5, 6192},
    {5, 1, 4, -1, 49},
    {5, 2, 3, 815, 151704},
    {5, 2, 4, 1186, 18963},
    {5, 3, 3, -7381, 50568},
    {5, 3, 4, 32555, 303408},
    {5, 3, 5, -283, 2352},
    {5, 4, 3, 28709, 151704},
    {5, 4, 4, 51269, 101136},
    {5, 4, 5, 381, 784},
    {5, 4, 6, 1, 6},
    {5, 5, 3, -349, 7056},
    {5, 5, 4, -247951, 303408},
    {5, 5, 5, -577, 784},
    {5, 5, 6, -5, 6},
    {5, 5, 7, -1, 24},
    {5, 6, 4, 1135, 7056},
    {5, 6, 5, 1165, 2352},
    {5, 6, 6, 1, 2},
    {5, 6, 7, 1, 6},
    {5, 7, 5, -1, 8},
    {5, 7, 6, 1, 6},
    {5, 7, 7, -1, 8},
    {6, 1, 4, 1, 392},
    {6, 2, 4, -1, 144},
    {6, 3, 4, 3, 784},
    {6, 3, 5, -11, 7056},
    {6, 4, 4, -283, 2352},
    {6, 4, 5, 403, 2352},
    {6, 4, 6, -1, 8},
    {6, 5, 4, 1135, 7056},
    {6, 5, 5, 1165, 2352},
    {6, 5, 6, 1, 2},
    {6, 5, 7, 1, 6},
    {6, 6, 4, -47, 1176},
    {6, 6, 5, -5869, 7056},
    {6, 6, 6, -3, 4},
    {6, 6, 7, -5, 6},
    {6, 6, 8, -1, 24},
    {6, 7, 5, 1, 6},
    {6, 7, 6, 1, 2},
    {6, 7, 7, 1, 2},
    {6, 7, 8, 1, 6},
    {6, 8, 6, -1, 8},
    {6, 8, 7, 1, 6},
    {6, 8, 8, -1, 8},
}};

// NoGhost bilinear-form boundary correction S_k: symmetric blocks added to
// D1^T H B D1 + canonical interior remainder (see operators.hpp).  Entry
// (mu index k, row i, col j) with i <= j, 0-based, value scaled by 1/h.
inline constexpr std::array<RationalEntry3, 280> kNgpCorrection{{
    {0, 0, 0, 59097, 4584832},
    {0, 0, 1, -10679, 280704},
    {0, 0, 2, 3889, 106624},
    {0, 0, 3, -941, 93568},
    {0, 0, 4, -10, 6321},
    {0, 0, 5, 1, 3136},
    {0, 1, 1, 34043, 280704},
    {0, 1, 2, -295, 2176},
    {0, 1, 3, 16697, 280704},
    {0, 1, 4, -59, 8256},
    {0, 2, 2, 95231, 479808},
    {0, 2, 3, -2891, 19584},
    {0, 2, 4, 95, 1568},
    {0, 2, 5, -373, 28224},
    {0, 2, 6, 1, 1152},
    {0, 3, 3, 83293, 421056},
    {0, 3, 4, -3779, 24768},
    {0, 3, 5, 19, 288},
    {0, 3, 6, -1, 72},
    {0, 3, 7, 1, 1152},
    {0, 4, 4, 487117, 2427264},
    {0, 4, 5, -1079, 7056},
    {0, 4, 6, 19, 288},
    {0, 4, 7, -1, 72},
    {0, 4, 8, 1, 1152},
    {0, 5, 5, 5611, 28224},
    {0, 5, 6, -43, 288},
    {0, 5, 7, 35, 576},
    {0, 5, 8, -1, 96},
    {0, 6, 6, 205, 1152},
    {0, 6, 7, -31, 288},
    {0, 6, 8, 5, 192},
    {0, 7, 7, 97, 1152},
    {0, 7, 8, -7, 288},
    {0, 8, 8, 1, 128},
    {1, 0, 0, 59097, 4584832},
    {1, 0, 1, -10679, 280704},
    {1, 0, 2, 3889, 106624},
    {1, 0, 3, -941, 93568},
    {1, 0, 4, -10, 6321},
    {1, 0, 5, 1, 3136},
    {1, 1, 1, 34043, 280704},
    {1, 1, 2, -295, 2176},
    {1, 1, 3, 16697, 280704},
    {1, 1, 4, -59, 8256},
    {1, 2, 2, 95231, 479808},
    {1, 2, 3, -2891, 19584},
    {1, 2, 4, 95, 1568},
    {1, 2, 5, -373, 28224},
    {1, 2, 6, 1, 1152},
    {1, 3, 3, 83293, 421056},
    {1, 3, 4, -3779, 24768},
    {1, 3, 5, 19, 288},
    {1, 3, 6, -1, 72},
    {1, 3, 7, 1, 1152},
    {1, 4, 4, 487117, 2427264},
    {1, 4, 5, -1079, 7056},
    {1, 4, 6, 19, 288},
    {1, 4, 7, -1, 72},
    {1, 4, 8, 1, 1152},
    {1, 5, 5, 5611, 28224},
    {1, 5, 6, -43, 288},
    {1, 5, 7, 35, 576},
    {1, 5, 8, -1, 96},
    {1, 6, 6, 205, 1152},
    {1, 6, 7, -31, 288},
    {1, 6, 8, 5, 192},
    {1, 7, 7, 97, 1152},
    {1, 7, 8, -7, 288},
    {1, 8, 8, 1, 128},
    {2, 0, 0, 59097, 4584832},
    {2, 0, 1, -10679, 280704},
    {2, 0, 2, 3889, 106624},
    {2, 0, 3, -941, 93568},
    {2, 0, 4, -10, 6321},
    {2, 0, 5, 1, 3136},
    {2, 1, 1, 34043, 280704},
    {2, 1, 2, -295, 2176},
    {2, 1, 3, 16697, 280704},
    {2, 1, 4, -59, 8256},
    {2, 2, 2, 95231, 479808},
    {2, 2, 3, -2891, 19584},
    {2, 2, 4, 95, 1568},
    {2, 2, 5, -373, 28224},
    {2, 2, 6, 1, 1152},
    {2, 3, 3, 83293, 421056},
    {2, 3, 4, -3779, 24768},
    {2, 3, 5, 19, 288},
    {2, 3, 6, -1, 72},
    {2, 3, 7, 1, 1152},
    {2, 4, 4, 487117, 2427264},
    {2, 4, 5, -1079, 7056},
    {2, 4, 6, 19, 288},
    {2, 4, 7, -1, 72},
    {2, 4, 8, 1, 1152},
    {2, 5, 5, 5611, 28224},
    {2, 5, 6, -43, 288},
    {2, 5, 7, 35, 576},
    {2, 5, 8, -1, 96},
    {2, 6, 6, 205, 1152},
    {2, 6, 7, -31, 288},
    {2, 6, 8, 5, 192},
    {2, 7, 7, 97, 1152},
    {2, 7, 8, -7, 288},
    {2, 8, 8, 1, 128},
    {3, 0, 0, 59097, 4584832},
    {3, 0, 1, -10679, 280704},
    {3, 0, 2, 3889, 106624},
    {3, 0, 3, -941, 93568},
    {3, 0, 4, -10, 6321},
    {3, 0, 5, 1, 3136},
    {3, 1, 1, 34043, 280704},
    {3, 1, 2, -295, 2176},
    {3, 1, 3, 16697, 280704},
    {3, 1, 4, -59, 8256},
    {3, 2, 2, 95231, 479808},
    {3, 2, 3, -2891, 19584},
    {3, 2, 4, 95, 1568},
    {3, 2, 5, -373, 28224},
    {3, 2, 6, 1, 1152},
    {3, 3, 3, 83293, 421056},
    {3, 3, 4, -3779, 24768},
    {3, 3, 5, 19, 288},
    {3, 3, 6, -1, 72},
    {3, 3, 7, 1, 1152},
    {3, 4, 4, 487117, 2427264},
    {3, 4, 5, -1079, 7056},
    {3, 4, 6, 19, 288},
    {3, 4, 7, -1, 72},
    {3, 4, 8, 1, 1152},
    {3, 5, 5, 5611, 28224},
    {3, 5, 6, -43, 288},
    {3, 5, 7, 35, 576},
    {3, 5, 8, -1, 96},
    {3, 6, 6, 205, 1152},
    {3, 6, 7, -31, 288},
    {3, 6, 8, 5, 192},
    {3, 7, 7, 97, 1152},
    {3, 7, 8, -7, 288},
    {3, 8, 8, 1, 128},
    {4, 0, 0, 59097, 4584832},
    {4, 0, 1, -10679, 280704},
    {4, 0, 2, 3889, 106624},
    {4, 0, 3, -941, 93568},
    {4, 0, 4, -10, 6321},
    {4, 0, 5, 1, 3136},
    {4, 1, 1, 34043, 280704},
    {4, 1, 2, -295, 2176},
    {4, 1, 3, 16697, 280704},
    {4, 1, 4, -59, 8256},
    {4, 2, 2, 95231, 479808},
    {4, 2, 3, -2891, 19584},
    {4, 2, 4, 95, 1568},
    {4, 2, 5, -373, 28224},
    {4, 2, 6, 1, 1152},
    {4, 3, 3, 83293, 421056},
    {4, 3, 4, -3779, 24768},
    {4, 3, 5, 19, 288},
    {4, 3, 6, -1, 72},
    {4, 3, 7, 1, 1152},
    {4, 4, 4, 487117, 2427264},
    {4, 4, 5, -1079, 7056},
    {4, 4, 6, 19, 288},
    {4, 4, 7, -1, 72},
    {4, 4, 8, 1, 1152},
    {4, 5, 5, 5611, 28224},
    {4, 5, 6, -43, 288},
    {4, 5, 7, 35, 576},
    {4, 5, 8, -1, 96},
    {4, 6, 6, 205, 1152},
    {4, 6, 7, -31, 288},
    {4, 6, 8, 5, 192},
    {4, 7, 7, 97, 1152},
    {4, 7, 8, -7, 288},
    {4, 8, 8, 1, 128},
    {5, 0, 0, 59097, 4584832},
    {5, 0, 1, -10679, 280704},
    {5, 0, 2, 3889, 106624},
    {5, 0, 3, -941, 93568},
    {5, 0, 4, -10, 6321},
    {5, 0, 5, 1, 3136},
    {5, 1, 1, 34043, 280704},
    {5, 1, 2, -295, 2176},
    {5, 1, 3, 16697, 280704},
    {5, 1, 4, -59, 8256},
    {5, 2, 2, 95231, 479808},
    {5, 2, 3, -2891, 19584},
    {5, 2, 4, 95, 1568},
    {5, 2, 5, -373, 28224},
    {5, 2, 6, 1, 1152},
    {5, 3, 3, 83293, 421056},
    {5, 3, 4, -3779, 24768},
    {5, 3, 5, 19, 288},
    {5, 3, 6, -1, 72},
    {5, 3, 7, 1, 1152},
    {5, 4, 4, 487117, 2427264},
    {5, 4, 5, -1079, 7056},
    {5, 4, 6, 19, 288},
    {5, 4, 7, -1, 72},
    {5, 4, 8, 1, 1152},
    {5, 5, 5, 5611, 28224},
    {5, 5, 6, -43, 288},
    {5, 5, 7, 35, 576},
    {5, 5, 8, -1, 96},
    {5, 6, 6, 205, 1152},
    {5, 6, 7, -31, 288},
    {5, 6, 8, 5, 192},
    {5, 7, 7, 97, 1152},
    {5, 7, 8, -7, 288},
    {5, 8, 8, 1, 128},
    {6, 0, 0, 59097, 4584832},
    {6, 0, 1, -10679, 280704},
    {6, 0, 2, 3889, 106624},
    {6, 0, 3, -941, 93568},
    {6, 0, 4, -10, 6321},
    {6, 0, 5, 1, 3136},
    {6, 1, 1, 34043, 280704},
    {6, 1, 2, -295, 2176},
    {6, 1, 3, 16697, 280704},
    {6, 1, 4, -59, 8256},
    {6, 2, 2, 95231, 479808},
    {6, 2, 3, -2891, 19584},
    {6, 2, 4, 95, 1568},
    {6, 2, 5, -373, 28224},
    {6, 2, 6, 1, 1152},
    {6, 3, 3, 83293, 421056},
    {6, 3, 4, -3779, 24768},
    {6, 3, 5, 19, 288},
    {6, 3, 6, -1, 72},
    {6, 3, 7, 1, 1152},
    {6, 4, 4, 487117, 2427264},
    {6, 4, 5, -1079, 7056},
    {6, 4, 6, 19, 288},
    {6, 4, 7, -1, 72},
    {6, 4, 8, 1, 1152},
    {6, 5, 5, 5611, 28224},
    {6, 5, 6, -43, 288},
    {6, 5, 7, 35, 576},
    {6, 5, 8, -1, 96},
    {6, 6, 6, 205, 1152},
    {6, 6, 7, -31, 288},
    {6, 6, 8, 5, 192},
    {6, 7, 7, 97, 1152},
    {6, 7, 8, -7, 288},
    {6, 8, 8, 1, 128},
    {7, 0, 0, 59097, 4584832},
    {7, 0, 1, -10679, 280704},
    {7, 0, 2, 3889, 106624},
    {7, 0, 3, -941, 93568},
    {7, 0, 4, -10, 6321},
    {7, 0, 5, 1, 3136},
    {7, 1, 1, 34043, 280704},
    {7, 1, 2, -295, 2176},
    {7, 1, 3, 16697, 280704},
    {7, 1, 4, -59, 8256},
    {7, 2, 2, 95231, 479808},
    {7, 2, 3, -2891, 19584},
    {7, 2, 4, 95, 1568},
    {7, 2, 5, -373, 28224},
    {7, 2, 6, 1, 1152},
    {7, 3, 3, 83293, 421056},
    {7, 3, 4, -3779, 24768},
    {7, 3, 5, 19, 288},
    {7, 3, 6, -1, 72},
    {7, 3, 7, 1, 1152},
    {7, 4, 4, 487117, 2427264},
    {7, 4, 5, -1079, 7056},
    {7, 4, 6, 19, 288},
    {7, 4, 7, -1, 72},
    {7, 4, 8, 1, 1152},
    {7, 5, 5, 5611, 28224},
    {7, 5, 6, -43, 288},
    {7, 5, 7, 35, 576},
    {7, 5, 8, -1, 96},
    {7, 6, 6, 205, 1152},
    {7, 6, 7, -31, 288},
    {7, 6, 8, 5, 192},
    {7, 7, 7, 97, 1152},
    {7, 7, 8, -7, 288},
    {7, 8, 8, 1, 128},
}};

inline constexpr int kNgpCorrectionWindow = 9;
inline constexpr int kNgpCorrectionMuCount = 8;

}  // namespace sbpwave::detail
