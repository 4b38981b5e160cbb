#ifndef CUBIC_MPOLY_HPP
#define CUBIC_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cubic/errors.hpp"
#include "cubic/gf2m.hpp"
#include "cubic/rational.hpp"

namespace cubic {

/// Dense exponent vector; entries beyond the arity are zero.  Arities in
/// this project never exceed 6 (x_0..x_2, y_0..y_3, y_0..y_5).
using Exp = std::array<uint8_t, 6>;

inline int exp_total(const Exp& e) {
    int t = 0;
    for (auto v : e) t += v;
    return t;
}

/// Multivariate polynomial with exact rational coefficients.
class MPolyQ {
public:
    MPolyQ() : arity_(0) {}
    explicit MPolyQ(int arity, char var = 'y') : arity_(arity), var_(var) {}

    static MPolyQ constant(int arity, const Rat& c, char var = 'y');
    static MPolyQ monomial(int arity, const Exp& e, const Rat& c, char var = 'y');
    static MPolyQ variable(int arity, int i, char var = 'y');

    int arity() const { return arity_; }
    char var_letter() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exp, Rat>& terms() const { return terms_; }

    Rat coeff(const Exp& e) const;
    void set_coeff(const Exp& e, const Rat& c);

    bool homogeneous() const;
    /// Total degree (of a homogeneous polynomial); -1 when zero.
    int degree() const;

    MPolyQ operator+(const MPolyQ& o) const;
    MPolyQ operator-(const MPolyQ& o) const;
    MPolyQ operator*(const MPolyQ& o) const;
    MPolyQ operator*(const Rat& c) const;
    bool operator==(const MPolyQ& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

    /// Composition: variable i is replaced by images[i].  All images must
    /// share one arity, which becomes the arity of the result.
    MPolyQ substitute(const std::vector<MPolyQ>& images) const;

    /// Canonical text form (terms in descending exponent order); parseable
    /// back by parse_mpoly_q.
    std::string to_string() const;

private:
    int arity_;
    char var_ = 'y';
    std::map<Exp, Rat> terms_;

    void add_term(const Exp& e, const Rat& c);
    friend MPolyQ parse_mpoly_q(const std::string&, int, char);
};

/// Multivariate polynomial with F_2 coefficients: the set of monomials
/// present.  Evaluates in any F_{2^m}.
class MPolyF2 {
public:
    MPolyF2() : arity_(0) {}
    explicit MPolyF2(int arity, char var = 'y') : arity_(arity), var_(var) {}

    static MPolyF2 variable(int arity, int i, char var = 'y');
    static MPolyF2 monomial(int arity, const Exp& e, char var = 'y');

    int arity() const { return arity_; }
    char var_letter() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Exp>& terms() const { return terms_; }

    bool homogeneous() const;
    int degree() const;

    MPolyF2 operator+(const MPolyF2& o) const;  // == subtraction
    MPolyF2 operator*(const MPolyF2& o) const;
    bool operator==(const MPolyF2& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

    MPolyF2 substitute(const std::vector<MPolyF2>& images) const;

    Fq eval(const FieldCtx& ctx, std::span<const Fq> point) const;

    std::string to_string() const;

    /// Replace the term set wholesale (terms become sorted and deduplicated
    /// with xor semantics).
    static MPolyF2 from_terms(int arity, std::vector<Exp> terms, char var = 'y');

private:
    int arity_;
    char var_ = 'y';
    std::vector<Exp> terms_;  // sorted, unique
};

/// Flattened term list for hot evaluation loops.
struct CompiledF2 {
    int arity = 0;
    int max_deg = 0;
    std::vector<Exp> terms;

    explicit CompiledF2(const MPolyF2& p);
    CompiledF2() = default;

    Fq eval(const FieldCtx& ctx, const Fq* point) const;
};

// ---- apolarity / inverse-system operations --------------------------------

/// <h, f>: h applied to f as a constant-coefficient differential operator,
/// x^a acting as the product of the d/dx_i^{a_i}.  Zero when deg h > deg f.
MPolyQ apolarity_pair(const MPolyQ& h, const MPolyQ& f);

/// The multiplication map S_d -> R_2d induced by y_0 -> x_0^2, y_1 -> x_0 x_1,
/// y_2 -> x_0 x_2, y_3 -> x_1^2, y_4 -> x_1 x_2, y_5 -> x_2^2.
MPolyQ veronese_m(const MPolyQ& h);

/// Transpose of veronese_m on sextics: the unique cubic f in the y-variables
/// with <h, f> = <m(h), g> for every cubic h.  Computed coefficient-wise in
/// the (orthogonal) monomial basis.
MPolyQ mvee(const MPolyQ& g);

struct ApolarityReport {
    bool apolar = true;
    int witness_index = -1;   // first violating generator
    MPolyQ residual;          // its nonzero pairing against f
};

/// f is apolar to the ideal generated by `generators` iff every generator
/// annihilates f under the apolarity pairing.
ApolarityReport is_apolar(const MPolyQ& f, const std::vector<MPolyQ>& generators);

/// All 2x2 minors of a matrix of linear forms, rows and columns chosen in
/// lexicographic order (row pair outer, column pair inner).
std::vector<MPolyQ> minors_2x2(const std::vector<std::vector<MPolyQ>>& mat);

/// Applies a linear change of variables given as one image per variable.
MPolyQ substitute_linear(const MPolyQ& f, const std::vector<MPolyQ>& images);

/// Reduction modulo 2; requires every coefficient to have odd denominator.
MPolyF2 reduce_mod2(const MPolyQ& f);

/// Text format: sums of terms like `3*y0^2*y1` or `-1/2*y5^3`.  Whitespace
/// insensitive.  Indices must be below the arity.
MPolyQ parse_mpoly_q(const std::string& text, int arity, char var = 'y');

/// FNV-1a checksum of the canonical text form, for dataset validation.
uint64_t poly_checksum(const MPolyQ& f);

} // namespace cubic

#endif
