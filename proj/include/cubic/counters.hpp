#ifndef CUBIC_COUNTERS_HPP
#define CUBIC_COUNTERS_HPP

#include <array>
#include <optional>
#include <string>

#include "cubic/conic.hpp"
#include "cubic/gf2m.hpp"
#include "cubic/mpoly.hpp"

namespace cubic {

struct CountRecord {
    int m = 0;
    long long count = 0;
    std::string method;
    double seconds = 0.0;
};

/// Naive counter: iterates P^5(F_{2^m}) by affine strata.  Cost ~q^5, so m
/// is capped at 5.
CountRecord count_naive(const MPolyF2& f, const FieldCtx& ctx);

/// Conic-bundle counter over all of P^3: accumulates S = sum over the
/// discriminant locus of (delta - 1) and returns q^4 + q^3 + q S + q + 1.
/// Throws contains_plane_error when A..F vanish simultaneously somewhere.
CountRecord count_conic_P3(const ConicBundle& bundle, const FieldCtx& ctx,
                           int threads = 1);

/// First F_2-point of P^3 where B = D = E = 0 (a singular point of the
/// discriminant), if any; projection center for the 3:1-cover counter.
std::optional<std::array<Fq, 4>> find_cover_center(const ConicBundle& bundle);

/// Cover counter: iterates Galois orbits of P^2 (the lines through the
/// center), restricting the discriminant quintic to each line; the top two
/// u-coefficients vanish because the center is a double point, leaving a
/// cubic solved exactly.  Agrees with count_conic_P3.
CountRecord count_conic_cover(const ConicBundle& bundle,
                              const std::array<Fq, 4>& center,
                              const FieldCtx& ctx, int threads = 1);

/// First F_2-point on the cubic, scanning P^5(F_2) in index order.
std::optional<std::array<Fq, 6>> find_point_F2(const MPolyF2& f);

/// Point-projection counter: iterates the P^4 of lines through an F_2-point
/// p of X; the restriction of f to each such line has a forced root at p and
/// the residual quadratic is solved exactly.  Cost ~q^4, capped at m = 9.
CountRecord count_point_projection(const MPolyF2& f,
                                   const std::array<Fq, 6>& p,
                                   const FieldCtx& ctx);

/// Points of P^5(F_{2^m}) where f and all six partials vanish.  Smoothness
/// audit; cost ~q^5, capped at m = 5.
std::vector<std::array<Fq, 6>> singular_points(const MPolyF2& f,
                                               const FieldCtx& ctx);

/// Formal partial derivative (characteristic 2).
MPolyF2 partial_derivative(const MPolyF2& f, int var);

} // namespace cubic

#endif
