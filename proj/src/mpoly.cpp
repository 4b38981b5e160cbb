#include "cubic/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cubic {

// ---- MPolyQ ---------------------------------------------------------------

MPolyQ MPolyQ::constant(int arity, const Rat& c, char var) {
    MPolyQ p(arity, var);
    if (c != 0) p.terms_[Exp{}] = c;
    return p;
}

MPolyQ MPolyQ::monomial(int arity, const Exp& e, const Rat& c, char var) {
    MPolyQ p(arity, var);
    if (c != 0) p.terms_[e] = c;
    return p;
}

MPolyQ MPolyQ::variable(int arity, int i, char var) {
    Exp e{};
    e[i] = 1;
    return monomial(arity, e, 1, var);
}

Rat MPolyQ::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPolyQ::set_coeff(const Exp& e, const Rat& c) {
    if (c == 0) terms_.erase(e);
    else terms_[e] = c;
}

void MPolyQ::add_term(const Exp& e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool MPolyQ::homogeneous() const {
    if (terms_.empty()) return true;
    int d = exp_total(terms_.begin()->first);
    for (auto& [e, c] : terms_)
        if (exp_total(e) != d) return false;
    return true;
}

int MPolyQ::degree() const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, exp_total(e));
    return d;
}

MPolyQ MPolyQ::operator+(const MPolyQ& o) const {
    if (arity_ != o.arity_) throw arity_error("MPolyQ: arity mismatch in +");
    MPolyQ r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPolyQ MPolyQ::operator-(const MPolyQ& o) const {
    if (arity_ != o.arity_) throw arity_error("MPolyQ: arity mismatch in -");
    MPolyQ r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPolyQ MPolyQ::operator*(const MPolyQ& o) const {
    if (arity_ != o.arity_) throw arity_error("MPolyQ: arity mismatch in *");
    MPolyQ r(arity_, var_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            Exp e{};
            for (int i = 0; i < 6; ++i) e[i] = uint8_t(e1[i] + e2[i]);
            r.add_term(e, c1 * c2);
        }
    return r;
}

MPolyQ MPolyQ::operator*(const Rat& c) const {
    MPolyQ r(arity_, var_);
    if (c == 0) return r;
    for (auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

MPolyQ MPolyQ::substitute(const std::vector<MPolyQ>& images) const {
    if ((int)images.size() != arity_)
        throw arity_error("MPolyQ::substitute: wrong number of images");
    int target = images.empty() ? 0 : images[0].arity();
    char tvar = images.empty() ? var_ : images[0].var_letter();
    for (auto& im : images)
        if (im.arity() != target)
            throw arity_error("MPolyQ::substitute: images of mixed arity");
    MPolyQ result(target, tvar);
    for (auto& [e, c] : terms_) {
        MPolyQ term = MPolyQ::constant(target, c, tvar);
        for (int i = 0; i < arity_; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * images[i];
        result = result + term;
    }
    return result;
}

static void format_term(std::ostringstream& os, const Exp& e, char var,
                        const std::string& coeff_abs, bool coeff_is_one) {
    bool wrote = false;
    if (!coeff_is_one || exp_total(e) == 0) {
        os << coeff_abs;
        wrote = true;
    }
    for (int i = 0; i < 6; ++i)
        if (e[i]) {
            if (wrote) os << "*";
            os << var << i;
            if (e[i] > 1) os << "^" << int(e[i]);
            wrote = true;
        }
}

std::string MPolyQ::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::ostringstream cs;
        cs << a;
        format_term(os, it->first, var_, cs.str(), a == 1);
    }
    return os.str();
}

// ---- MPolyF2 --------------------------------------------------------------

MPolyF2 MPolyF2::from_terms(int arity, std::vector<Exp> terms, char var) {
    std::sort(terms.begin(), terms.end());
    std::vector<Exp> kept;
    for (size_t i = 0; i < terms.size();) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2) kept.push_back(terms[i]);
        i = j;
    }
    MPolyF2 p(arity, var);
    p.terms_ = std::move(kept);
    return p;
}

MPolyF2 MPolyF2::variable(int arity, int i, char var) {
    Exp e{};
    e[i] = 1;
    return monomial(arity, e, var);
}

MPolyF2 MPolyF2::monomial(int arity, const Exp& e, char var) {
    MPolyF2 p(arity, var);
    p.terms_ = {e};
    return p;
}

bool MPolyF2::homogeneous() const {
    if (terms_.empty()) return true;
    int d = exp_total(terms_[0]);
    for (auto& e : terms_)
        if (exp_total(e) != d) return false;
    return true;
}

int MPolyF2::degree() const {
    int d = -1;
    for (auto& e : terms_) d = std::max(d, exp_total(e));
    return d;
}

MPolyF2 MPolyF2::operator+(const MPolyF2& o) const {
    if (arity_ != o.arity_) throw arity_error("MPolyF2: arity mismatch in +");
    std::vector<Exp> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(arity_, std::move(all), var_);
}

MPolyF2 MPolyF2::operator*(const MPolyF2& o) const {
    if (arity_ != o.arity_) throw arity_error("MPolyF2: arity mismatch in *");
    std::vector<Exp> all;
    all.reserve(terms_.size() * o.terms_.size());
    for (auto& e1 : terms_)
        for (auto& e2 : o.terms_) {
            Exp e{};
            for (int i = 0; i < 6; ++i) e[i] = uint8_t(e1[i] + e2[i]);
            all.push_back(e);
        }
    return from_terms(arity_, std::move(all), var_);
}

MPolyF2 MPolyF2::substitute(const std::vector<MPolyF2>& images) const {
    if ((int)images.size() != arity_)
        throw arity_error("MPolyF2::substitute: wrong number of images");
    int target = images.empty() ? 0 : images[0].arity();
    char tvar = images.empty() ? var_ : images[0].var_letter();
    MPolyF2 result(target, tvar);
    for (auto& e : terms_) {
        MPolyF2 term = MPolyF2::monomial(target, Exp{}, tvar);
        for (int i = 0; i < arity_; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * images[i];
        result = result + term;
    }
    return result;
}

Fq MPolyF2::eval(const FieldCtx& ctx, std::span<const Fq> point) const {
    if ((int)point.size() != arity_)
        throw arity_error("MPolyF2::eval: wrong point arity");
    Fq acc = 0;
    for (auto& e : terms_) {
        Fq t = 1;
        for (int i = 0; i < arity_; ++i)
            for (int k = 0; k < e[i]; ++k) t = ctx.mul(t, point[i]);
        acc ^= t;
    }
    return acc;
}

std::string MPolyF2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        format_term(os, *it, var_, "1", true);
    }
    return os.str();
}

CompiledF2::CompiledF2(const MPolyF2& p)
    : arity(p.arity()), max_deg(0), terms(p.terms()) {
    for (auto& e : terms)
        for (int i = 0; i < arity; ++i) max_deg = std::max(max_deg, int(e[i]));
}

Fq CompiledF2::eval(const FieldCtx& ctx, const Fq* point) const {
    Fq pw[6][7];
    for (int i = 0; i < arity; ++i) {
        pw[i][0] = 1;
        for (int k = 1; k <= max_deg; ++k) pw[i][k] = ctx.mul(pw[i][k - 1], point[i]);
    }
    Fq acc = 0;
    for (auto& e : terms) {
        Fq t = pw[0][e[0]];
        for (int i = 1; i < arity; ++i)
            if (e[i]) t = ctx.mul(t, pw[i][e[i]]);
        acc ^= t;
    }
    return acc;
}

// ---- apolarity ------------------------------------------------------------

static const Int FACT[7] = {1, 1, 2, 6, 24, 120, 720};

MPolyQ apolarity_pair(const MPolyQ& h, const MPolyQ& f) {
    if (h.arity() != f.arity())
        throw arity_error("apolarity_pair: mismatched variable sets");
    if (!h.homogeneous() || !f.homogeneous())
        throw homogeneity_error("apolarity_pair: inhomogeneous input");
    MPolyQ r(f.arity(), f.var_letter());
    if (h.is_zero() || f.is_zero()) return r;
    if (h.degree() > f.degree()) return r;  // <R_k, R_d> = 0 for k > d
    for (auto& [a, ca] : h.terms())
        for (auto& [b, cb] : f.terms()) {
            bool ok = true;
            Int scale = 1;
            Exp e{};
            for (int i = 0; i < 6 && ok; ++i) {
                if (b[i] < a[i]) { ok = false; break; }
                e[i] = uint8_t(b[i] - a[i]);
                scale *= FACT[b[i]] / FACT[b[i] - a[i]];  // falling factorial
            }
            if (ok) r.set_coeff(e, r.coeff(e) + ca * cb * Rat(scale));
        }
    return r;
}

static std::vector<MPolyQ> veronese_images() {
    auto x = [](int i, int j) {
        Exp e{};
        e[i]++;
        e[j]++;
        return MPolyQ::monomial(3, e, 1, 'x');
    };
    return {x(0, 0), x(0, 1), x(0, 2), x(1, 1), x(1, 2), x(2, 2)};
}

MPolyQ veronese_m(const MPolyQ& h) {
    if (h.arity() != 6)
        throw arity_error("veronese_m: expected a polynomial in y_0..y_5");
    if (!h.homogeneous()) throw homogeneity_error("veronese_m: inhomogeneous input");
    return h.substitute(veronese_images());
}

MPolyQ mvee(const MPolyQ& g) {
    if (g.arity() != 3)
        throw arity_error("mvee: expected a polynomial in x_0..x_2");
    if (!g.is_zero() && (!g.homogeneous() || g.degree() != 6))
        throw degree_error("mvee: expected a homogeneous sextic");
    MPolyQ f(6, 'y');
    // enumerate cubic monomials y^beta; the monomial basis is orthogonal for
    // the pairing, with <y^b, y^b> = prod b_i!
    Exp b{};
    for (b[0] = 0; b[0] <= 3; ++b[0])
        for (b[1] = 0; b[1] + b[0] <= 3; ++b[1])
            for (b[2] = 0; b[2] + b[1] + b[0] <= 3; ++b[2])
                for (b[3] = 0; b[3] + b[2] + b[1] + b[0] <= 3; ++b[3])
                    for (b[4] = 0; b[4] + b[3] + b[2] + b[1] + b[0] <= 3; ++b[4]) {
                        b[5] = uint8_t(3 - b[0] - b[1] - b[2] - b[3] - b[4]);
                        MPolyQ mono = MPolyQ::monomial(6, b, 1, 'y');
                        MPolyQ paired = apolarity_pair(veronese_m(mono), g);
                        Rat val = paired.coeff(Exp{});
                        Int denom = 1;
                        for (int i = 0; i < 6; ++i) denom *= FACT[b[i]];
                        f.set_coeff(b, val / Rat(denom));
                    }
    return f;
}

ApolarityReport is_apolar(const MPolyQ& f, const std::vector<MPolyQ>& generators) {
    ApolarityReport rep;
    for (size_t i = 0; i < generators.size(); ++i) {
        MPolyQ r = apolarity_pair(generators[i], f);
        if (!r.is_zero()) {
            rep.apolar = false;
            rep.witness_index = int(i);
            rep.residual = r;
            return rep;
        }
    }
    return rep;
}

std::vector<MPolyQ> minors_2x2(const std::vector<std::vector<MPolyQ>>& mat) {
    std::vector<MPolyQ> out;
    size_t rows = mat.size();
    size_t cols = rows ? mat[0].size() : 0;
    for (size_t i1 = 0; i1 < rows; ++i1)
        for (size_t i2 = i1 + 1; i2 < rows; ++i2)
            for (size_t j1 = 0; j1 < cols; ++j1)
                for (size_t j2 = j1 + 1; j2 < cols; ++j2)
                    out.push_back(mat[i1][j1] * mat[i2][j2] -
                                  mat[i1][j2] * mat[i2][j1]);
    return out;
}

MPolyQ substitute_linear(const MPolyQ& f, const std::vector<MPolyQ>& images) {
    for (auto& im : images)
        if (!im.is_zero() && im.degree() > 1)
            throw degree_error("substitute_linear: image of degree > 1");
    return f.substitute(images);
}

MPolyF2 reduce_mod2(const MPolyQ& f) {
    std::vector<Exp> terms;
    for (auto& [e, c] : f.terms()) {
        if (rat_den(c) % 2 == 0) {
            MPolyQ mono = MPolyQ::monomial(f.arity(), e, 1, f.var_letter());
            throw not_2_integral_error(
                "reduce_mod2: coefficient of " + mono.to_string() +
                " has even denominator");
        }
        if (rat_num(c) % 2 != 0) terms.push_back(e);
    }
    return MPolyF2::from_terms(f.arity(), std::move(terms), f.var_letter());
}

// ---- parser ---------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip_ws();
        return s[i++];
    }
};

Int parse_int(Cursor& c) {
    c.skip_ws();
    std::string digits;
    while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i]))
        digits += c.s[c.i++];
    if (digits.empty()) throw parse_error("polynomial: expected a number");
    return Int(digits);
}

} // namespace

MPolyQ parse_mpoly_q(const std::string& text, int arity, char var) {
    MPolyQ poly(arity, var);
    Cursor c{text};
    if (c.done()) throw parse_error("polynomial: empty input");
    bool first = true;
    while (!c.done()) {
        bool neg = false;
        char p = c.peek();
        if (p == '+' || p == '-') {
            neg = (p == '-');
            c.get();
        } else if (!first) {
            throw parse_error("polynomial: expected + or - between terms");
        }
        first = false;

        Rat coeff = 1;
        Exp e{};
        bool any = false;
        while (true) {
            char t = c.peek();
            if (std::isdigit((unsigned char)t)) {
                Int num = parse_int(c);
                if (c.peek() == '/') {
                    c.get();
                    Int den = parse_int(c);
                    if (den == 0) throw parse_error("polynomial: zero denominator");
                    coeff *= Rat(num, den);
                } else {
                    coeff *= Rat(num);
                }
                any = true;
            } else if (t == var || (std::isalpha((unsigned char)t))) {
                char letter = c.get();
                if (letter != var)
                    throw parse_error(std::string("polynomial: unexpected variable '") +
                                      letter + "'");
                Int idx = parse_int(c);
                if (idx < 0 || idx >= arity)
                    throw parse_error("polynomial: variable index out of range");
                int exponent = 1;
                if (c.peek() == '^') {
                    c.get();
                    Int ex = parse_int(c);
                    if (ex < 0 || ex > 60) throw parse_error("polynomial: bad exponent");
                    exponent = int(ex);
                }
                e[int(idx)] = uint8_t(e[int(idx)] + exponent);
                any = true;
            } else {
                break;
            }
            if (c.peek() == '*') {
                c.get();
                continue;
            }
            // juxtaposition without '*' is not part of the format
            char nxt = c.peek();
            if (nxt == '+' || nxt == '-' || nxt == '\0') break;
            throw parse_error("polynomial: expected '*', '+', or '-'");
        }
        if (!any) throw parse_error("polynomial: empty term");
        if (neg) coeff = -coeff;
        poly.add_term(e, coeff);
    }
    return poly;
}

uint64_t poly_checksum(const MPolyQ& f) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : f.to_string()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace cubic
