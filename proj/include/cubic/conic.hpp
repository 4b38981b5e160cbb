#ifndef CUBIC_CONIC_HPP
#define CUBIC_CONIC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubic/gf2m.hpp"
#include "cubic/mpoly.hpp"

namespace cubic {

/// A line of P^5(F_2), stored as two independent points (6-bit masks).
/// Its three rational points are a, b and a^b.  Canonical form keeps the two
/// smallest of the three point masks, ordered.
struct Line {
    uint8_t a = 0;
    uint8_t b = 0;

    static Line canonical(uint8_t p, uint8_t q);
    std::array<uint8_t, 3> points() const { return {a, b, uint8_t(a ^ b)}; }
    bool operator==(const Line&) const = default;
    bool operator<(const Line& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
};

/// All lines of P^5(F_2) on which the cubic vanishes identically (all four
/// coefficients of the restricted binary cubic are zero), in canonical order.
/// P^5(F_2) carries 651 lines in total.
std::vector<Line> find_lines_F2(const MPolyF2& f);

/// Whether f vanishes identically on l (symbolic restriction).
bool line_on_cubic(const MPolyF2& f, const Line& l);

/// The six coefficient polynomials of the cubic written, after a change of
/// frame taking the chosen line to {y_0 = y_1 = y_2 = y_3 = 0}, as
///   A y4^2 + B y4 y5 + C y5^2 + D y4 + E y5 + F
/// with A, B, C linear and D, E quadratic and F cubic in y_0..y_3.
struct ConicBundle {
    MPolyF2 A, B, C, D, E, F;   // arity 4
    Line source_line;
    std::array<uint8_t, 6> frame;  // column masks of the change-of-basis matrix
};

/// Builds the bundle for a line contained in {f = 0}.  Throws
/// precondition_error when the line is not on the cubic.
ConicBundle frame_line(const MPolyF2& f, const Line& l);

/// Reassembles the original sextic-variable cubic from the bundle (inverse
/// change of frame applied); oracle for frame_line.
MPolyF2 reassemble(const ConicBundle& bundle);

/// The discriminant quintic A E^2 + B^2 F + C D^2 + B D E (the -4ACF term of
/// the characteristic-0 formula vanishes mod 2).
MPolyF2 discriminant(const ConicBundle& bundle);

Fq discriminant_eval(const ConicBundle& bundle, const FieldCtx& ctx,
                     std::span<const Fq> z);

/// Line count of a degenerate conic fiber: 0 (conjugate pair), 1 (double
/// line), or 2 (split pair); the fiber has delta*q + 1 points.
struct FiberClass {
    enum Kind { ConjugatePair, DoubleLine, SplitPair } kind;
    int delta;
};

/// Classifies the (degenerate) fiber over z: double line when B = D = E = 0
/// there, otherwise an Arf-invariant test on the first nonzero of B, D, E.
/// Throws contains_plane_error when all six coefficients vanish at z, and
/// precondition_error when the fiber is not degenerate at all.
FiberClass classify_fiber(const ConicBundle& bundle, const FieldCtx& ctx,
                          std::span<const Fq> z);

/// Evaluation-ready copy of the bundle coefficients.
struct CompiledBundle {
    CompiledF2 A, B, C, D, E, F, disc;
    explicit CompiledBundle(const ConicBundle& b)
        : A(b.A), B(b.B), C(b.C), D(b.D), E(b.E), F(b.F), disc(discriminant(b)) {}

    /// Same classification as classify_fiber, for hot loops.  Returns delta,
    /// or -1 when all six coefficients vanish (plane detected).
    int delta(const FieldCtx& ctx, const Fq* z) const;
};

/// 6x6 F_2 matrix utilities on column-mask representation.
std::array<uint8_t, 6> invert_gl6_f2(const std::array<uint8_t, 6>& cols);

} // namespace cubic

#endif
