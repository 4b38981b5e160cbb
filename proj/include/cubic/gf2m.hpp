#ifndef CUBIC_GF2M_HPP
#define CUBIC_GF2M_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubic/errors.hpp"

namespace cubic {

/// An element of F_{2^m}, the low m bits being the coefficients of its
/// representative polynomial.  Always interpreted relative to a FieldCtx.
using Fq = uint16_t;

/// Explicit model of F_{2^m}, 1 <= m <= 16.  Elements are bit vectors modulo
/// a fixed irreducible polynomial of degree m; addition is xor.  Immutable
/// after construction and safe to share across threads.
class FieldCtx {
public:
    /// Builds a context for F_{2^m}.  When no modulus is given, the
    /// lexicographically smallest irreducible polynomial of degree m is used,
    /// so two runs always agree.  Point counts do not depend on the choice.
    explicit FieldCtx(int m, std::optional<uint32_t> modulus = std::nullopt);

    int m() const { return m_; }
    uint32_t q() const { return q_; }
    /// Modulus bits, bit i = coefficient of x^i (bit m is always set).
    uint32_t modulus() const { return modulus_; }

    Fq add(Fq a, Fq b) const { return a ^ b; }

    Fq mul(Fq a, Fq b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Fq inv(Fq a) const {
        if (a == 0) throw arithmetic_domain_error("gf2m: inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }

    Fq div(Fq a, Fq b) const {
        if (b == 0) throw arithmetic_domain_error("gf2m: division by zero");
        if (a == 0) return 0;
        return exp_[log_[a] + q_ - 1 - log_[b]];
    }

    Fq pow(Fq a, long long e) const;

    Fq sqr(Fq a) const { return mul(a, a); }

    /// Unique square root; squaring is bijective in characteristic 2.
    Fq sqrt(Fq a) const { return sqrt_[a]; }

    /// Absolute trace Tr_{F_{2^m}/F_2}(a) = a + a^2 + ... + a^{2^{m-1}}.
    int abs_trace(Fq a) const { return trace_[a]; }

    /// Multiplication by carry-less product followed by reduction, bypassing
    /// the tables.  Used as an independent oracle for the table path.
    Fq mul_notable(Fq a, Fq b) const;

    /// All w with w^2 + w = c: two solutions (differing by 1) when
    /// Tr(c) = 0, none when Tr(c) = 1.
    std::vector<Fq> solve_artin_schreier(Fq c) const;

    /// Root set of c3 u^3 + c2 u^2 + c1 u + c0 over the field.  Lower-degree
    /// inputs (c3 = 0, ...) fall through to quadratic or linear solving.
    /// Throws degenerate_polynomial_error when all coefficients vanish.
    std::vector<Fq> solve_cubic(Fq c3, Fq c2, Fq c1, Fq c0) const;

    /// Distinct roots of a monic depressed cubic s^3 + p s + r, computed by
    /// gcd with x^q - x and trace splitting.  Table-free; works for every m.
    std::vector<Fq> roots_depressed_cubic_gcd(Fq p, Fq r) const;

    bool has_cubic_table() const { return !cubic_root_.empty(); }

    /// FNV-1a checksum over the arithmetic tables, for reproducibility dumps.
    uint64_t table_checksum() const;

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

private:
    int m_;
    uint32_t q_;
    uint32_t modulus_;
    Fq gen_;
    std::vector<Fq> exp_;   // exp_[i] = gen^i, doubled length, no modular fixup
    std::vector<Fq> log_;
    std::vector<Fq> sqrt_;
    std::vector<uint8_t> trace_;
    std::vector<Fq> as_root_;     // smallest root of w^2+w=c, 0xFFFF if none
    std::vector<Fq> cubic_root_;  // [p*q + r] -> smallest root of s^3+ps+r

    void build_tables();
};

/// Degree of a polynomial over F_2 packed in bits; -1 for the zero polynomial.
int poly2_degree(uint32_t a);
uint32_t poly2_mulmod(uint32_t a, uint32_t b, uint32_t mod);
uint32_t poly2_mod(uint64_t a, uint32_t mod);
bool poly2_irreducible(uint32_t a);
/// Lexicographically smallest irreducible polynomial of degree m over F_2.
uint32_t smallest_irreducible(int m);

/// One Frobenius orbit of P^2(F_{2^m}): the lexicographically smallest
/// member under the normalized-coordinate encoding, and the orbit length.
struct OrbitP2 {
    std::array<Fq, 3> rep;  // normalized: first nonzero coordinate is 1
    int size;               // divides m
};

/// All orbits of (a:b:c) -> (a^2:b^2:c^2) on P^2(F_{2^m}).  Orbit sizes sum
/// to 4^m + 2^m + 1.
std::vector<OrbitP2> galois_orbits_P2(const FieldCtx& ctx);

} // namespace cubic

#endif
