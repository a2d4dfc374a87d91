#pragma once

#include <array>

namespace nehari::quad {

// Fixed rules for the non-polynomial integrands (|u|^{1-gamma}, u^{-gamma} phi)
// and |u|^r. 7-point Gauss-Legendre per segment (exact through degree 13),
// 16-point symmetric triangle rule (exact through degree 8).

inline constexpr int n_line = 7;

/// Points on the reference segment (0,1).
inline constexpr std::array<double, n_line> line_points = {
    0.5 * (1.0 - 0.9491079123427585245261897),
    0.5 * (1.0 - 0.7415311855993944398638648),
    0.5 * (1.0 - 0.4058451513773971669066064),
    0.5,
    0.5 * (1.0 + 0.4058451513773971669066064),
    0.5 * (1.0 + 0.7415311855993944398638648),
    0.5 * (1.0 + 0.9491079123427585245261897),
};

/// Weights on (0,1); they sum to 1.
inline constexpr std::array<double, n_line> line_weights = {
    0.5 * 0.1294849661688696932706114,
    0.5 * 0.2797053914892766679014678,
    0.5 * 0.3818300505051189449503698,
    0.5 * 0.4179591836734693877551020,
    0.5 * 0.3818300505051189449503698,
    0.5 * 0.2797053914892766679014678,
    0.5 * 0.1294849661688696932706114,
};

inline constexpr int n_tri = 16;

namespace detail {
inline constexpr double ta = 0.081414823414554, tb = 0.459292588292723;
inline constexpr double tc = 0.658861384496480, td = 0.170569307751760;
inline constexpr double te = 0.898905543365938, tf = 0.050547228317031;
inline constexpr double tg = 0.008394777409958, th = 0.263112829634638,
                        ti = 0.728492392955404;
} // namespace detail

/// Barycentric coordinates of the triangle rule.
inline constexpr std::array<std::array<double, 3>, n_tri> tri_bary = {{
    {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
    {detail::ta, detail::tb, detail::tb},
    {detail::tb, detail::ta, detail::tb},
    {detail::tb, detail::tb, detail::ta},
    {detail::tc, detail::td, detail::td},
    {detail::td, detail::tc, detail::td},
    {detail::td, detail::td, detail::tc},
    {detail::te, detail::tf, detail::tf},
    {detail::tf, detail::te, detail::tf},
    {detail::tf, detail::tf, detail::te},
    {detail::tg, detail::th, detail::ti},
    {detail::tg, detail::ti, detail::th},
    {detail::th, detail::tg, detail::ti},
    {detail::th, detail::ti, detail::tg},
    {detail::ti, detail::tg, detail::th},
    {detail::ti, detail::th, detail::tg},
}};

/// Weights as fractions of the element area; they sum to 1.
inline constexpr std::array<double, n_tri> tri_weights = {
    0.144315607677787,
    0.095091634413923, 0.095091634413923, 0.095091634413923,
    0.103217370534718, 0.103217370534718, 0.103217370534718,
    0.032458497623198, 0.032458497623198, 0.032458497623198,
    0.027230314174435, 0.027230314174435, 0.027230314174435,
    0.027230314174435, 0.027230314174435, 0.027230314174435,
};

} // namespace nehari::quad
