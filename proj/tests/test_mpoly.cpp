#include "doctest.h"

#include <random>

#include "cubic/mpoly.hpp"

using namespace cubic;

namespace {

Exp mk(std::initializer_list<int> l) {
    Exp e{};
    int i = 0;
    for (int v : l) e[i++] = uint8_t(v);
    return e;
}

std::vector<Exp> monomials_of_degree(int arity, int deg) {
    std::vector<Exp> out;
    Exp e{};
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == arity - 1) {
            e[pos] = uint8_t(left);
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[pos] = uint8_t(k);
            self(self, pos + 1, left - k);
        }
        e[pos] = 0;
    };
    rec(rec, 0, deg);
    return out;
}

MPolyQ random_homog(std::mt19937& rng, int arity, int deg, char var) {
    auto monos = monomials_of_degree(arity, deg);
    MPolyQ p(arity, var);
    for (auto& e : monos) {
        int num = int(rng() % 11) - 5;
        int den = 1 + int(rng() % 4);
        if (num) p.set_coeff(e, Rat(num, den));
    }
    return p;
}

} // namespace

TEST_CASE("apolarity pairing basic values") {
    // <x0 x1, x0 x1> = 1 and <x0^2, x0^2> = 2
    MPolyQ a = MPolyQ::monomial(3, mk({1, 1, 0}), 1, 'x');
    CHECK(apolarity_pair(a, a).coeff(Exp{}) == 1);
    MPolyQ b = MPolyQ::monomial(3, mk({2, 0, 0}), 1, 'x');
    CHECK(apolarity_pair(b, b).coeff(Exp{}) == 2);
    MPolyQ c = MPolyQ::monomial(3, mk({3, 0, 0}), 1, 'x');
    CHECK(apolarity_pair(c, c).coeff(Exp{}) == 6);
    // <x^a, x^a> = prod a_i!
    MPolyQ d = MPolyQ::monomial(3, mk({2, 3, 1}), 1, 'x');
    CHECK(apolarity_pair(d, d).coeff(Exp{}) == 12);
}

TEST_CASE("apolarity pairing: k > d gives zero, errors") {
    MPolyQ cubic = MPolyQ::monomial(3, mk({3, 0, 0}), 1, 'x');
    MPolyQ quad = MPolyQ::monomial(3, mk({2, 0, 0}), 1, 'x');
    CHECK(apolarity_pair(cubic, quad).is_zero());
    MPolyQ other = MPolyQ::monomial(6, mk({1, 0, 0, 0, 0, 0}), 1, 'y');
    CHECK_THROWS_AS(apolarity_pair(cubic, other), arity_error);
    MPolyQ inhom = quad + MPolyQ::variable(3, 0, 'x');
    CHECK_THROWS_AS(apolarity_pair(inhom, cubic), homogeneity_error);
}

TEST_CASE("apolarity pairing bilinear and symmetric on R_d x R_d") {
    std::mt19937 rng(7);
    for (int d : {2, 3, 4}) {
        for (int it = 0; it < 10; ++it) {
            MPolyQ f = random_homog(rng, 3, d, 'x');
            MPolyQ g = random_homog(rng, 3, d, 'x');
            MPolyQ h = random_homog(rng, 3, d, 'x');
            CHECK(apolarity_pair(f, g) == apolarity_pair(g, f));
            CHECK(apolarity_pair(f + g, h) ==
                  apolarity_pair(f, h) + apolarity_pair(g, h));
            CHECK(apolarity_pair(f * Rat(3, 2), h) ==
                  apolarity_pair(f, h) * Rat(3, 2));
        }
    }
}

TEST_CASE("veronese substitution") {
    MPolyQ y0 = MPolyQ::variable(6, 0, 'y');
    CHECK(veronese_m(y0) == MPolyQ::monomial(3, mk({2, 0, 0}), 1, 'x'));
    MPolyQ y1y4 = MPolyQ::monomial(6, mk({0, 1, 0, 0, 1, 0}), 1, 'y');
    CHECK(veronese_m(y1y4) == MPolyQ::monomial(3, mk({1, 2, 1}), 1, 'x'));
    MPolyQ y3sq = MPolyQ::monomial(6, mk({0, 0, 0, 2, 0, 0}), 1, 'y');
    CHECK(veronese_m(y3sq) == MPolyQ::monomial(3, mk({0, 4, 0}), 1, 'x'));
}

TEST_CASE("mvee adjunction <h, mvee(g)> = <m(h), g>") {
    std::mt19937 rng(11);
    CHECK(mvee(MPolyQ(3, 'x')).is_zero());
    for (int it = 0; it < 20; ++it) {
        MPolyQ g = random_homog(rng, 3, 6, 'x');
        MPolyQ f = mvee(g);
        MPolyQ h = random_homog(rng, 6, 3, 'y');
        MPolyQ lhs = apolarity_pair(h, f);
        MPolyQ rhs = apolarity_pair(veronese_m(h), g);
        CHECK(lhs.coeff(Exp{}) == rhs.coeff(Exp{}));
    }
}

TEST_CASE("minors of small matrices") {
    auto y = [](int i) { return MPolyQ::variable(6, i, 'y'); };
    // symmetric 3x3 Veronese matrix
    std::vector<std::vector<MPolyQ>> ver = {
        {y(0), y(1), y(2)}, {y(1), y(3), y(4)}, {y(2), y(4), y(5)}};
    auto mv = minors_2x2(ver);
    CHECK(mv.size() == 9);
    CHECK(mv[0] == y(0) * y(3) - y(1) * y(1));
    // 2x4 scroll matrix
    std::vector<std::vector<MPolyQ>> scroll = {
        {y(0), y(1), y(3), y(4)}, {y(1), y(2), y(4), y(5)}};
    auto ms = minors_2x2(scroll);
    CHECK(ms.size() == 6);
    CHECK(ms[0] == y(0) * y(2) - y(1) * y(1));
    // [[y0,y1],[y1,y0]]
    std::vector<std::vector<MPolyQ>> sq = {{y(0), y(1)}, {y(1), y(0)}};
    auto m2 = minors_2x2(sq);
    CHECK(m2.size() == 1);
    CHECK(m2[0] == y(0) * y(0) - y(1) * y(1));
}

TEST_CASE("substitute_linear is a ring homomorphism") {
    std::mt19937 rng(23);
    for (int it = 0; it < 10; ++it) {
        MPolyQ f = random_homog(rng, 3, 2, 'x');
        MPolyQ g = random_homog(rng, 3, 3, 'x');
        std::vector<MPolyQ> images;
        for (int i = 0; i < 3; ++i) images.push_back(random_homog(rng, 3, 1, 'x'));
        CHECK(substitute_linear(f * g, images) ==
              substitute_linear(f, images) * substitute_linear(g, images));
    }
    // identity map
    std::vector<MPolyQ> id;
    for (int i = 0; i < 3; ++i) id.push_back(MPolyQ::variable(3, i, 'x'));
    MPolyQ f = random_homog(rng, 3, 4, 'x');
    CHECK(substitute_linear(f, id) == f);
}

TEST_CASE("reduce_mod2") {
    // 2 y0^3 + y1^3 -> y1^3
    MPolyQ f = MPolyQ::monomial(6, mk({3, 0, 0, 0, 0, 0}), 2, 'y') +
               MPolyQ::monomial(6, mk({0, 3, 0, 0, 0, 0}), 1, 'y');
    MPolyF2 r = reduce_mod2(f);
    CHECK(r.terms().size() == 1);
    CHECK(r.terms()[0] == mk({0, 3, 0, 0, 0, 0}));
    // 1/3 y0^3 -> y0^3 (odd denominator inverts to 1 mod 2)
    MPolyQ g = MPolyQ::monomial(6, mk({3, 0, 0, 0, 0, 0}), Rat(1, 3), 'y');
    CHECK(reduce_mod2(g).terms().size() == 1);
    // 1/2 y0^3 is not 2-integral
    MPolyQ h = MPolyQ::monomial(6, mk({3, 0, 0, 0, 0, 0}), Rat(1, 2), 'y');
    CHECK_THROWS_AS(reduce_mod2(h), not_2_integral_error);
}

TEST_CASE("parser round trip and errors") {
    MPolyQ f = parse_mpoly_q("2*y0^2*y1 - 1/2*y5^3 + y3*y4*y5", 6);
    CHECK(f.coeff(mk({2, 1, 0, 0, 0, 0})) == 2);
    CHECK(f.coeff(mk({0, 0, 0, 0, 0, 3})) == Rat(-1, 2));
    CHECK(f.coeff(mk({0, 0, 0, 1, 1, 1})) == 1);
    MPolyQ g = parse_mpoly_q(f.to_string(), 6);
    CHECK(f == g);
    CHECK_THROWS_AS(parse_mpoly_q("y9", 6), parse_error);
    CHECK_THROWS_AS(parse_mpoly_q("x0 + y1", 6), parse_error);
    CHECK_THROWS_AS(parse_mpoly_q("", 6), parse_error);
    CHECK_THROWS_AS(parse_mpoly_q("1/0", 6), parse_error);
    // whitespace insensitive
    CHECK(parse_mpoly_q("  2 * y0 ^ 2 * y1 ", 6) ==
          parse_mpoly_q("2*y0^2*y1", 6));
}

TEST_CASE("F2 evaluation vs naive term sum") {
    std::mt19937 rng(31);
    FieldCtx ctx(4);
    for (int it = 0; it < 30; ++it) {
        MPolyQ fq = random_homog(rng, 6, 3, 'y');
        // force odd denominators
        MPolyQ cleaned(6, 'y');
        for (auto& [e, c] : fq.terms()) cleaned.set_coeff(e, Rat(rat_num(c)));
        MPolyF2 f = reduce_mod2(cleaned);
        CompiledF2 cf(f);
        std::array<Fq, 6> pt;
        for (auto& v : pt) v = Fq(rng() & 15);
        Fq naive = 0;
        for (auto& e : f.terms()) {
            Fq t = 1;
            for (int i = 0; i < 6; ++i)
                for (int k = 0; k < e[i]; ++k) t = ctx.mul(t, pt[i]);
            naive ^= t;
        }
        CHECK(f.eval(ctx, pt) == naive);
        CHECK(cf.eval(ctx, pt.data()) == naive);
    }
    // homogeneous positive-degree polynomial vanishes at the origin
    MPolyF2 f = MPolyF2::monomial(6, mk({1, 1, 1, 0, 0, 0}), 'y');
    std::array<Fq, 6> zero{};
    CHECK(f.eval(ctx, zero) == 0);
    // Fermat-type cubic at (1,1,0,0,0,0) over F_2
    std::vector<Exp> cubes;
    for (int i = 0; i < 6; ++i) {
        Exp e{};
        e[i] = 3;
        cubes.push_back(e);
    }
    MPolyF2 fermat = MPolyF2::from_terms(6, cubes, 'y');
    FieldCtx f2(1);
    std::array<Fq, 6> p{1, 1, 0, 0, 0, 0};
    CHECK(fermat.eval(f2, p) == 0);
}
