#include "cubic/conic.hpp"

#include <algorithm>
#include <set>

namespace cubic {

Line Line::canonical(uint8_t p, uint8_t q) {
    std::array<uint8_t, 3> pts = {p, q, uint8_t(p ^ q)};
    std::sort(pts.begin(), pts.end());
    return Line{pts[0], pts[1]};
}

bool line_on_cubic(const MPolyF2& f, const Line& l) {
    // restrict to the (s, t) parametrization and check the binary cubic is 0
    std::vector<MPolyF2> images;
    images.reserve(6);
    for (int i = 0; i < 6; ++i) {
        std::vector<Exp> terms;
        if (l.a >> i & 1) terms.push_back(Exp{1, 0});
        if (l.b >> i & 1) terms.push_back(Exp{0, 1});
        images.push_back(MPolyF2::from_terms(2, std::move(terms), 's'));
    }
    return f.substitute(images).is_zero();
}

std::vector<Line> find_lines_F2(const MPolyF2& f) {
    if (f.arity() != 6) throw arity_error("find_lines_F2: expected arity 6");
    std::set<Line> lines;
    for (uint8_t p = 1; p < 64; ++p)
        for (uint8_t q = uint8_t(p + 1); q < 64 && q > p; ++q)
            lines.insert(Line::canonical(p, q));
    std::vector<Line> found;
    for (const Line& l : lines)
        if (line_on_cubic(f, l)) found.push_back(l);
    return found;
}

std::array<uint8_t, 6> invert_gl6_f2(const std::array<uint8_t, 6>& cols) {
    // rows of [M | I], M_{ij} = bit i of cols[j]; row i packs M bits 0..5,
    // identity bits 6..11
    std::array<uint16_t, 6> rows{};
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j)
            if (cols[j] >> i & 1) rows[i] |= uint16_t(1u << j);
        rows[i] |= uint16_t(1u << (6 + i));
    }
    for (int c = 0; c < 6; ++c) {
        int piv = -1;
        for (int r = c; r < 6; ++r)
            if (rows[r] >> c & 1) { piv = r; break; }
        if (piv < 0) throw precondition_error("invert_gl6_f2: singular matrix");
        std::swap(rows[c], rows[piv]);
        for (int r = 0; r < 6; ++r)
            if (r != c && (rows[r] >> c & 1)) rows[r] ^= rows[c];
    }
    std::array<uint8_t, 6> inv{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (rows[i] >> (6 + j) & 1) inv[j] |= uint8_t(1u << i);
    return inv;
}

ConicBundle frame_line(const MPolyF2& f, const Line& l) {
    if (!line_on_cubic(f, l))
        throw precondition_error("frame_line: line is not on the cubic");

    // complete {a, b} to a basis of F_2^6 with standard basis vectors;
    // the line spans the e4, e5 plane in the new coordinates
    std::array<uint8_t, 6> cols{};
    cols[4] = l.a;
    cols[5] = l.b;
    std::vector<uint8_t> echelon;  // reduced spanning set
    auto reduce = [&](uint8_t v) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (uint8_t e : echelon) {
                uint8_t lead = uint8_t(1u << poly2_degree(e));
                if (v & lead) {
                    v ^= e;
                    changed = true;
                }
            }
        }
        return v;
    };
    echelon.push_back(l.a);
    echelon.push_back(uint8_t(reduce(l.b)));
    int next = 0;
    for (int i = 0; i < 6 && next < 4; ++i) {
        uint8_t v = uint8_t(reduce(uint8_t(1u << i)));
        if (v) {
            cols[next++] = uint8_t(1u << i);
            echelon.push_back(v);
        }
    }

    // substitute y = M z
    std::vector<MPolyF2> images;
    for (int i = 0; i < 6; ++i) {
        std::vector<Exp> terms;
        for (int j = 0; j < 6; ++j)
            if (cols[j] >> i & 1) {
                Exp e{};
                e[j] = 1;
                terms.push_back(e);
            }
        images.push_back(MPolyF2::from_terms(6, std::move(terms), 'y'));
    }
    MPolyF2 g = f.substitute(images);

    // collect by the (e4, e5) exponent pair
    std::vector<Exp> tA, tB, tC, tD, tE, tF;
    for (Exp e : g.terms()) {
        int d4 = e[4], d5 = e[5];
        e[4] = e[5] = 0;
        if (d4 + d5 >= 3)
            throw precondition_error("frame_line: cubic terms along the line survived");
        if (d4 == 2) tA.push_back(e);
        else if (d4 == 1 && d5 == 1) tB.push_back(e);
        else if (d5 == 2) tC.push_back(e);
        else if (d4 == 1) tD.push_back(e);
        else if (d5 == 1) tE.push_back(e);
        else tF.push_back(e);
    }
    ConicBundle b;
    b.A = MPolyF2::from_terms(4, std::move(tA), 'y');
    b.B = MPolyF2::from_terms(4, std::move(tB), 'y');
    b.C = MPolyF2::from_terms(4, std::move(tC), 'y');
    b.D = MPolyF2::from_terms(4, std::move(tD), 'y');
    b.E = MPolyF2::from_terms(4, std::move(tE), 'y');
    b.F = MPolyF2::from_terms(4, std::move(tF), 'y');
    b.source_line = l;
    b.frame = cols;
    return b;
}

MPolyF2 reassemble(const ConicBundle& bundle) {
    auto lift = [](const MPolyF2& p, int d4, int d5) {
        std::vector<Exp> terms;
        for (Exp e : p.terms()) {
            e[4] = uint8_t(d4);
            e[5] = uint8_t(d5);
            terms.push_back(e);
        }
        return MPolyF2::from_terms(6, std::move(terms), 'y');
    };
    MPolyF2 g = lift(bundle.A, 2, 0) + lift(bundle.B, 1, 1) + lift(bundle.C, 0, 2) +
                lift(bundle.D, 1, 0) + lift(bundle.E, 0, 1) + lift(bundle.F, 0, 0);
    // undo the frame: z = M^{-1} y
    auto inv = invert_gl6_f2(bundle.frame);
    std::vector<MPolyF2> images;
    for (int j = 0; j < 6; ++j) {
        std::vector<Exp> terms;
        for (int i = 0; i < 6; ++i)
            if (inv[i] >> j & 1) {
                Exp e{};
                e[i] = 1;
                terms.push_back(e);
            }
        images.push_back(MPolyF2::from_terms(6, std::move(terms), 'y'));
    }
    return g.substitute(images);
}

MPolyF2 discriminant(const ConicBundle& b) {
    return b.A * b.E * b.E + b.B * b.B * b.F + b.C * b.D * b.D + b.B * b.D * b.E;
}

Fq discriminant_eval(const ConicBundle& bundle, const FieldCtx& ctx,
                     std::span<const Fq> z) {
    return discriminant(bundle).eval(ctx, z);
}

int CompiledBundle::delta(const FieldCtx& ctx, const Fq* z) const {
    Fq vB = B.eval(ctx, z);
    Fq vD = D.eval(ctx, z);
    Fq vE = E.eval(ctx, z);
    if (vB == 0 && vD == 0 && vE == 0) {
        if (A.eval(ctx, z) == 0 && C.eval(ctx, z) == 0 && F.eval(ctx, z) == 0)
            return -1;  // plane through the line
        return 1;       // double line
    }
    Fq ratio;
    if (vB != 0)
        ratio = ctx.div(ctx.mul(A.eval(ctx, z), C.eval(ctx, z)), ctx.mul(vB, vB));
    else if (vD != 0)
        ratio = ctx.div(ctx.mul(A.eval(ctx, z), F.eval(ctx, z)), ctx.mul(vD, vD));
    else
        ratio = ctx.div(ctx.mul(C.eval(ctx, z), F.eval(ctx, z)), ctx.mul(vE, vE));
    return ctx.abs_trace(ratio) == 0 ? 2 : 0;
}

FiberClass classify_fiber(const ConicBundle& bundle, const FieldCtx& ctx,
                          std::span<const Fq> z) {
    if (discriminant_eval(bundle, ctx, z) != 0)
        throw precondition_error("classify_fiber: fiber is not degenerate");
    CompiledBundle cb(bundle);
    int d = cb.delta(ctx, z.data());
    if (d < 0)
        throw contains_plane_error(
            "cubic contains a plane through the projection line");
    FiberClass fc;
    fc.delta = d;
    fc.kind = d == 0   ? FiberClass::ConjugatePair
              : d == 1 ? FiberClass::DoubleLine
                       : FiberClass::SplitPair;
    return fc;
}

} // namespace cubic
