#pragma once

// Named operators shared by the unit and acceptance tests.

namespace fixtures {

inline constexpr const char* EX1 = "3*x*(x^2-1)*D^2 + 2*(3*x^2-1)*D";
inline constexpr const char* F2F1A = "(x^2 - x)*D^2 + (31/24*x - 5/6)*D + 1/48";
inline constexpr const char* F2F1B = "(x^2 - x)*D^2 + (49/6*x - 7/3)*D + 12";
inline constexpr const char* F2F1C = "(x^2 - x)*D^2 + (65/24*x - 7/6)*D + 35/48";
inline constexpr const char* F2F1D = "(x^2 - x)*D^2 + (164/15*x - 16/3)*D + 1403/60";
inline constexpr const char* EXP = "D^2 - 1";

// The D^1 coefficient carries +99/80; with the opposite sign the indicial
// roots are irrational and the exponent table cannot hold.
inline constexpr const char* ORD3 =
    "(x-1)^3*x^3*(x+1)^3*D^3"
    " + 19/5*(x-1)^2*x^2*(x+1)^2*(x^2 + 22069/9576*x - 195/152)*D^2"
    " + 99/80*(x-1)*x*(x+1)*(x^4 - 117001919/37422*x^3 - 105923/5346*x^2 + 16795789/5346*x + 205/66)*D"
    " - 9/20*x^6 + 517319279/68040*x^5 + 256382531/27216*x^4 - 19723513/4320*x^3"
    " - 2560752251/272160*x^2 - 828238469/272160*x - 3/32";

inline constexpr const char* ORD3B =
    "(x-2)^3*(x-1)^3*x^3*D^3"
    " + 19/5*(x-2)^2*(x-1)^2*x^2*(x^2 - 16547/9576*x + 2420/1197)*D^2"
    " + 99/80*(x-2)*(x-1)*x*(x^4 + 8816399/112266*x^3 - 8566381/37422*x^2 + 7980386/56133*x - 3200/6237)*D"
    " - 9/20*x^6 + 5640547/68040*x^5 - 20050393/136080*x^4 - 2904319/30240*x^3"
    " + 5167531/54432*x^2 + 1144387/19440*x + 320/63";

// Annihilator of the roots of y^5 + x*y + 1.
inline constexpr const char* QUINTIC = "(256*x^5 + 3125)*D^4 + 3200*x^4*D^3 + 9840*x^3*D^2 + 6120*x^2*D - 504*x";

}  // namespace fixtures
