#pragma once

// Published generating functions as plain text, transcribed separately from
// the structured fixtures so that a typo in either one shows up as a
// mismatch. k in the generic K_3 texts is bound at parse time.

namespace colpart::fixture_texts {

inline constexpr const char* k3_generic_num =
    "k x y (1 - (1 - k) y (3 - (2 - k) y) - x (1 - y) (4 - y (13 - 5 k) + (3 + k) (3 - 2 k) y^2 - (1 - "
    "k) (1 + (3 - k) k) y^3) + x^2 (1 - y)^2 (3 - (2 + 4 k) y + (1 - k + 3 k^2) y^2 + k^2 (1 - "
    "k ) y^3) )";

inline constexpr const char* k3_generic_den =
    "1 - x (5 - 12 (2 - k) y + x^2 (1 - y)^2 (3 - (2 + 4 k) y + k (1 + 2 k) y^2 + k (1 - k ) y^3 - "
    "(k - 1)^4 y^4) - x (1 - y) (7 - (25 - 8 k) y + (20 - 3 k - 4 k^2) y^2 + (5 - 24 k + 21 k^2 - "
    "5 k^3) y^3 - (7 - 18 k + 17 k^2 - 7 k^3 + k^4) y^4) + y^2 (32 - 26 k + 6 k^2 - (13 - 14 k + "
    "6 k^2 - k^3) y) )";

inline constexpr const char* k3_two_color_num =
    "2 x y (1 + 3 y - x (3 - 7 y + 4 y^2))";

inline constexpr const char* k3_two_color_den =
    "1 - x (4 + 3 y + y^2) + x^2 (3 - 7 y + 3 y^2 + y^3)";

inline constexpr const char* k4_two_color_num =
    "2xy (1+7y-x(y-1) (7y^2+y-9 )+x^2(y-1)^2 (8y^2-17y+8 ) )";

inline constexpr const char* k4_two_color_den =
    "1-2x(y^2+2y+5)+x^2(y-1)(y^3+6y^2+8y-17)-x^3(y-1)^2(y^3+6y^2-17y+8)";

inline constexpr const char* k5_two_color_num =
    "2xy (1+15y-x(y-1) (15y^2-13y-21 )+x^2(y-1)^2 (16y^2-51y+30 ) )";

inline constexpr const char* k5_two_color_den =
    "1-2x(y^2+4y+11)+x^2(y-1)(y^3+10y^2+2y-51)-x^3(y-1)^2(y^3+10y^2-51y+30)";

inline constexpr const char* k6_two_color_num =
    "2xy (1+31y-x(y-1)(62y^2-103y-48)+x^2(y-1)^2(31y^3-72y^2-125y+155)-x^3(y-1)^3(32y^3-185y^2+263y-108) )";

inline constexpr const char* k6_two_color_den =
    "1-x(3y^2+12y+49)+x^2(y-1)(3y^3+28y^2-6y-203)-x^3(y-1)^2(y^4+16y^3-40y^2-262y+263)+x^4(y-1)^3(y^4+15y^3-167y^2+263y-108)";

inline constexpr const char* k4_three_color_num =
    "3xy(1+6y+2y^2+2x(y-1)(y^3-9y^2+y+2)-x^2(2y-1)(y-1)^2(9y^2-8y+3))";

inline constexpr const char* k4_three_color_den =
    "1-x(2y^3+8y^2+12y+5)-x^2(y-1)(2y^4-13y^3-25y^2-y+7)+x^3(y-1)^2(16y^4+6y^3-21y^2+14y-3)";

inline constexpr const char* star_num =
    "(2y^4 + 6y^3 + 6y^2 + 2y)x + (-8y^7 + 4y^6 - 28y^5 + 40y^4 - 44y^3 + 4y^2 - 16y)x^2+ (14y^9 - "
    "22y^8 - 4y^7 + 104y^6 - 106y^5 - 32y^4 + 90y^3 - 52y^2 + 40y)x^3+ (-8y^10 - 8y^9 + 124y^8 - "
    "204y^7 + 52y^6 + 64y^5 + 16y^4 - 80y^3 + 92y^2 - 48y)x^4 + (-10y^11 + 4y^10 + 110y^9 - 268y^8 + "
    "112y^7 + 384y^6 - 662y^5 + 468y^4 - 120y^3 - 48y^2 + 30y)x^5 + (16y^11 - 28y^10 - 156y^9 + "
    "656y^8 - 1028y^7 + 708y^6 - 316y^4 + 168y^3 - 12y^2 - 8y)x^6 + (8y^11 - 58y^10 + 228y^9 - "
    "562y^8 + 852y^7 - 756y^6 + 340y^5 - 26y^4 - 36y^3 + 10y^2)x^7";

inline constexpr const char* star_den =
    "1 + (-y^4 - y^3 - y^2 - 7y - 9)x + (y^7 + y^6 + 5y^5 + 11y^4 - 4y^3 - 6y^2 + 14y + 28)x^2 + "
    "(-y^9 - 3y^8 + y^7 + 5y^6 - 22y^5 - 11y^4 + 7y^3 + 54y^2 - 18y - 44)x^3 + (7y^9 - 17y^8 + 2y^7 + "
    "20y^6 - 32y^5 + 45y^4 + 42y^3 - 105y^2 - y + 39)x^4 + (y^11 + 4y^10 - 24y^9 + 47y^8 - 28y^7 - "
    "62y^6 + 167y^5 - 125y^4 - 50y^3 + 83y^2 + 6y - 19)x^5 + (y^11 - 24y^10 + 94y^9 - 122y^8 - 61y^7 + "
    "365y^6 - 409y^5 + 116y^4 + 116y^3 - 91y^2 + 11y + 4)x^6 + (-3y^11 + 23y^10 - 74y^9 + 95y^8 + "
    "45y^7 - 289y^6 + 355y^5 - 183y^4 + 18y^3 + 18y^2 - 5y)x^7";

/// Entries of the 7-state star transition matrix, row by row.
inline constexpr const char* star_matrix[7][7] = {
    {"y^4 + 1", "3 y^4", "y^4", "3 y^3 + 3 y", "3 y^3", "3 y^2", "y^3"},
    {"0", "1", "0", "0", "y", "y^2", "0"},
    {"0", "0", "1", "0", "0", "0", "y"},
    {"y^2 + 1", "3 y^2 + 2", "y^2", "y^3 + 4 y + 1", "y^3 + 4 y", "3 y^2 + 2 y", "y^2"},
    {"0", "1", "1", "0", "1", "1", "y"},
    {"2", "y + 5", "y + 1", "(3 y^2 + 2 y + 1)/y", "3 y + 3", "y^2 + 2 y + 3", "2 y"},
    {"(y^2 + 1)/y^2", "(3 y + 3)/y", "2", "(3 y + 3)/y", "6", "6", "y + 1"},
};

}  // namespace colpart::fixture_texts
