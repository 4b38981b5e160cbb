#include "cubic/zeta.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "json.hpp"

namespace cubic {

namespace {

Int int_pow(Int b, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::string rat_str(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

// quotient of num by the monic integer polynomial den; exact by construction
// in the cyclotomic recursion
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    int dn = int(num.size()) - 1, dd = int(den.size()) - 1;
    std::vector<Int> quot(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
        Int c = num[k + dd];
        quot[k] = c;
        for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (const Int& c : num)
        if (c != 0) throw precondition_error("divide_exact: nonzero remainder");
    return quot;
}

// rational polynomial division by a monic integer polynomial; returns the
// quotient or nullopt when the remainder is nonzero
std::optional<std::vector<Rat>> try_divide(const std::vector<Rat>& num,
                                           const std::vector<Int>& den) {
    int dn = int(num.size()) - 1, dd = int(den.size()) - 1;
    if (dn < dd) return std::nullopt;
    std::vector<Rat> rem = num, quot(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
        Rat c = rem[k + dd];
        quot[k] = c;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= c * Rat(den[i]);
    }
    for (const Rat& c : rem)
        if (c != 0) return std::nullopt;
    return quot;
}

void check_charpoly_shape(const CharPoly& chi) {
    if (chi.coeffs.size() != 23 || chi.coeffs[22] != 1)
        throw invalid_charpoly_error("expected a monic polynomial of degree 22");
}

// ---- arithmetic mod a small prime, for distinct-degree factorization -----

using PolyP = std::vector<long long>;  // ascending coefficients in [0, p)

PolyP trim(PolyP a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

PolyP mulmod_p(const PolyP& a, const PolyP& b, const PolyP& mod, long long p) {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    // reduce modulo mod (monic after normalization)
    long long lead_inv = 1;  // mod is normalized monic below
    (void)lead_inv;
    for (int k = int(c.size()) - 1; k >= int(mod.size()) - 1; --k) {
        long long f = c[k] % p;
        if (f == 0) continue;
        for (size_t i = 0; i < mod.size(); ++i) {
            size_t pos = k - (mod.size() - 1) + i;
            c[pos] = ((c[pos] - f * mod[i]) % p + p) % p;
        }
    }
    c.resize(mod.size() - 1);
    return trim(c);
}

long long inv_mod(long long a, long long p) {
    long long r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

PolyP make_monic(PolyP a, long long p) {
    a = trim(std::move(a));
    if (a.empty()) return a;
    long long s = inv_mod(a.back(), p);
    for (auto& c : a) c = c * s % p;
    return a;
}

PolyP gcd_p(PolyP a, PolyP b, long long p) {
    a = make_monic(std::move(a), p);
    b = make_monic(std::move(b), p);
    while (!b.empty()) {
        // a mod b
        PolyP r = a;
        for (int k = int(r.size()) - 1; k >= int(b.size()) - 1; --k) {
            long long f = r[k] % p;
            if (f == 0) continue;
            for (size_t i = 0; i < b.size(); ++i) {
                size_t pos = k - (b.size() - 1) + i;
                r[pos] = ((r[pos] - f * b[i]) % p + p) % p;
            }
        }
        r.resize(b.size() - 1);
        a = std::move(b);
        b = make_monic(trim(std::move(r)), p);
    }
    return a;
}

PolyP powmod_p(PolyP base, long long e, const PolyP& mod, long long p) {
    PolyP r = {1};
    while (e) {
        if (e & 1) r = mulmod_p(r, base, mod, p);
        base = mulmod_p(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PolyP derivative_p(const PolyP& a, long long p) {
    PolyP d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (long long)i % p);
    return trim(d);
}

// exact quotient mod p (divisor known to divide)
PolyP quot_p(PolyP a, const PolyP& b, long long p) {
    PolyP q(a.size() - b.size() + 1, 0);
    long long li = inv_mod(b.back(), p);
    for (int k = int(q.size()) - 1; k >= 0; --k) {
        long long f = a[k + b.size() - 1] * li % p;
        q[k] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            size_t pos = k + i;
            a[pos] = ((a[pos] - f * b[i]) % p + p) % p;
        }
    }
    return q;
}

// degree multiset of the irreducible factors of a squarefree monic g mod p
std::vector<int> ddf_degrees(PolyP g, long long p) {
    std::vector<int> degs;
    PolyP h = {0, 1};  // x
    int d = 0;
    while (int(g.size()) - 1 > 0) {
        ++d;
        if (2 * d > int(g.size()) - 1) {
            degs.push_back(int(g.size()) - 1);
            break;
        }
        h = powmod_p(std::move(h), p, g, p);
        PolyP hmx = h;
        if (hmx.size() < 2) hmx.resize(2, 0);
        hmx[1] = ((hmx[1] - 1) % p + p) % p;
        PolyP f = gcd_p(g, trim(hmx), p);
        if (int(f.size()) - 1 > 0) {
            int nfac = (int(f.size()) - 1) / d;
            for (int i = 0; i < nfac; ++i) degs.push_back(d);
            g = make_monic(quot_p(std::move(g), f, p), p);
            h = mulmod_p(h, {1}, g, p);  // reduce h modulo the smaller g
        }
    }
    return degs;
}

} // namespace

TraceSeries traces_from_counts(std::span<const long long> counts, uint32_t q) {
    TraceSeries ts;
    ts.q = q;
    for (size_t i = 0; i < counts.size(); ++i) {
        int m = int(i) + 1;
        Int qm = int_pow(q, m);
        Rat p = Rat(Int(counts[i]) - 1 - qm - int_pow(qm, 3) - int_pow(qm, 4),
                    int_pow(qm, 2)) -
                1;
        ts.traces.push_back(p);
    }
    return ts;
}

std::vector<Rat> newton_elementary(std::span<const Rat> p) {
    std::vector<Rat> e(p.size() + 1);
    e[0] = 1;
    for (size_t k = 1; k <= p.size(); ++k) {
        Rat s = 0;
        for (size_t i = 1; i <= k; ++i) {
            Rat term = e[k - i] * p[i - 1];
            s += (i % 2 == 1) ? term : -term;
        }
        e[k] = s / Rat(int(k));
    }
    return {e.begin() + 1, e.end()};
}

std::vector<Rat> newton_power_sums(std::span<const Rat> e, int n, int M) {
    auto ee = [&](int k) { return k <= int(e.size()) ? e[k - 1] : Rat(0); };
    std::vector<Rat> p(M);
    for (int k = 1; k <= M; ++k) {
        Rat s = 0;
        int jmax = std::min(k - 1, n);
        for (int j = 1; j <= jmax; ++j) {
            Rat term = ee(j) * p[k - j - 1];
            s += (j % 2 == 1) ? term : -term;
        }
        if (k <= n) s += (k % 2 == 1 ? Rat(k) : Rat(-k)) * ee(k);
        p[k - 1] = s;
    }
    return p;
}

std::vector<CharPoly> complete_charpoly(std::span<const long long> counts,
                                        uint32_t q) {
    if (counts.size() < 11)
        throw precondition_error(
            "complete_charpoly: need counts for m = 1..11 (half the degree)");
    TraceSeries ts = traces_from_counts(counts.subspan(0, 11), q);
    std::vector<Rat> e = newton_elementary(ts.traces);

    CharPoly base;
    base.coeffs.assign(23, 0);
    base.coeffs[22] = 1;
    for (int k = 1; k <= 11; ++k)
        base.coeffs[22 - k] = (k % 2 == 1) ? -e[k - 1] : e[k - 1];
    base.provenance = "completed from point counts by the functional equation";

    std::vector<CharPoly> out;
    for (int sign : {+1, -1}) {
        if (sign == -1 && e[10] != 0) continue;  // c11 = -c11 forces e_11 = 0
        CharPoly c = base;
        c.sign = sign;
        for (int j = 0; j <= 10; ++j) c.coeffs[j] = Rat(sign) * c.coeffs[22 - j];
        if (sign == -1) c.coeffs[11] = 0;
        out.push_back(std::move(c));
    }
    return out;
}

long long predict_count(const CharPoly& chi, int m, uint32_t q) {
    check_charpoly_shape(chi);
    std::vector<Rat> e(22);
    for (int k = 1; k <= 22; ++k)
        e[k - 1] = (k % 2 == 1) ? -chi.coeffs[22 - k] : chi.coeffs[22 - k];
    std::vector<Rat> p = newton_power_sums(e, 22, m);
    Int qm = int_pow(q, m);
    Rat count = 1 + Rat(qm) + Rat(int_pow(qm, 2)) * (1 + p[m - 1]) +
                Rat(int_pow(qm, 3)) + Rat(int_pow(qm, 4));
    if (!is_integer(count) || count < 0)
        throw invalid_charpoly_error("predicted count is not a non-negative integer");
    Int n = rat_num(count);
    if (n > std::numeric_limits<long long>::max())
        throw invalid_charpoly_error("predicted count overflows 64 bits");
    return n.convert_to<long long>();
}

CharPoly disambiguate(const std::vector<CharPoly>& candidates,
                      std::optional<long long> count12, uint32_t q) {
    std::vector<CharPoly> alive;
    for (const CharPoly& c : candidates) {
        check_charpoly_shape(c);
        // companion matrix of the monic polynomial, roots via Eigen
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(22, 22);
        for (int i = 1; i < 22; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < 22; ++i)
            comp(i, 21) = -c.coeffs[i].convert_to<double>();
        Eigen::VectorXcd roots = comp.eigenvalues();
        bool ok = true;
        for (int i = 0; i < 22; ++i)
            if (std::abs(std::abs(roots[i]) - 1.0) > 1e-9) ok = false;
        if (ok) alive.push_back(c);
    }
    if (alive.empty())
        throw invalid_charpoly_error(
            "no candidate has all roots on the unit circle");
    if (alive.size() == 1) return alive.front();
    if (!count12)
        throw invalid_charpoly_error(
            "ambiguous sign: supply the m = 12 count to disambiguate");
    std::vector<CharPoly> matching;
    for (const CharPoly& c : alive)
        if (predict_count(c, 12, q) == *count12) matching.push_back(c);
    if (matching.size() != 1)
        throw invalid_charpoly_error(
            "the m = 12 count does not single out a candidate");
    return matching.front();
}

IntegralityReport integrality_checks(const CharPoly& chi) {
    check_charpoly_shape(chi);
    IntegralityReport rep;
    auto scaled_integral = [&](int base) {
        for (int k = 0; k <= 22; ++k)
            if (!is_integer(chi.coeffs[k] * Rat(int_pow(base, 22 - k)))) return false;
        return true;
    };
    rep.twist2 = scaled_integral(2);
    rep.twist4 = scaled_integral(4);
    rep.all_integral = scaled_integral(1);
    return rep;
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<Int> cyclotomic_polynomial(int n) {
    if (n < 1) throw precondition_error("cyclotomic_polynomial: n >= 1");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
    return num;
}

std::vector<int> cyclotomic_candidates(int deg) {
    std::vector<int> out;
    for (int n = 1; n <= 1000; ++n)
        if (euler_phi(n) <= deg) out.push_back(n);
    return out;
}

std::vector<CyclotomicFactor> cyclotomic_factors(const CharPoly& chi) {
    check_charpoly_shape(chi);
    std::vector<CyclotomicFactor> out;
    for (int n : cyclotomic_candidates(22)) {
        std::vector<Int> phi = cyclotomic_polynomial(n);
        std::vector<Rat> cur = chi.coeffs;
        int mult = 0;
        while (auto quot = try_divide(cur, phi)) {
            ++mult;
            cur = *quot;
        }
        if (mult > 0) out.push_back({n, mult});
    }
    return out;
}

IrreducibilityReport irreducibility_modular(const CharPoly& chi) {
    check_charpoly_shape(chi);
    IrreducibilityReport rep;

    // a proper cyclotomic factor is a certified rational factor; when chi is
    // a cyclotomic polynomial itself it is irreducible outright
    auto cyc = cyclotomic_factors(chi);
    if (!cyc.empty()) {
        if (cyc.size() == 1 && cyc[0].multiplicity == 1 &&
            euler_phi(cyc[0].n) == 22) {
            rep.status = IrreducibilityReport::Irreducible;
            rep.witness = "chi = Phi_" + std::to_string(cyc[0].n);
            return rep;
        }
        rep.status = IrreducibilityReport::Reducible;
        rep.witness = "Phi_" + std::to_string(cyc.front().n);
        return rep;
    }

    // clear denominators to a primitive integer polynomial
    Int lcm = 1;
    for (const Rat& c : chi.coeffs)
        lcm = boost::multiprecision::lcm(lcm, rat_den(c));
    std::vector<Int> P(23);
    Int content = 0;
    for (int k = 0; k <= 22; ++k) {
        P[k] = rat_num(chi.coeffs[k] * Rat(lcm));
        content = boost::multiprecision::gcd(content, P[k]);
    }
    if (content > 1)
        for (auto& c : P) c /= content;

    // rational roots r = a/b, a | P[0], b | P[22]: linear-factor trial
    if (P[0] == 0) {
        rep.status = IrreducibilityReport::Reducible;
        rep.witness = "t";
        return rep;
    }
    auto small_divisors = [](Int v) {
        std::vector<Int> ds;
        if (v < 0) v = -v;
        for (Int d = 1; d * d <= v && d < 1000000; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    for (const Int& a : small_divisors(P[0]))
        for (const Int& b : small_divisors(P[22]))
            for (int s : {+1, -1}) {
                Rat r(a * s, b);
                Rat v = 0, t = 1;
                for (int k = 0; k <= 22; ++k) {
                    v += Rat(P[k]) * t;
                    t *= r;
                }
                if (v == 0) {
                    rep.status = IrreducibilityReport::Reducible;
                    rep.witness = "t - (" + rat_str(r) + ")";
                    return rep;
                }
            }

    // factor-degree patterns modulo small odd primes
    std::set<int> possible;
    for (int d = 1; d <= 21; ++d) possible.insert(d);
    for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (P[22] % p == 0) continue;  // leading coefficient drops mod p
        PolyP g(23);
        for (int k = 0; k <= 22; ++k)
            g[k] = ((P[k] % p).convert_to<long long>() + p) % p;
        g = make_monic(std::move(g), p);
        PolyP sq = gcd_p(g, derivative_p(g, p), p);
        if (int(sq.size()) - 1 > 0) continue;  // not squarefree mod p
        std::vector<int> degs = ddf_degrees(g, p);
        // subset sums over the degree multiset
        std::vector<char> reach(23, 0);
        reach[0] = 1;
        for (int d : degs)
            for (int s = 22 - d; s >= 0; --s)
                if (reach[s]) reach[s + d] = 1;
        for (auto it = possible.begin(); it != possible.end();)
            it = reach[*it] ? std::next(it) : possible.erase(it);
        rep.primes_used.push_back(int(p));
        if (possible.empty()) break;
    }
    rep.possible_factor_degrees.assign(possible.begin(), possible.end());
    if (rep.primes_used.empty())
        rep.status = IrreducibilityReport::Inconclusive;
    else
        rep.status = possible.empty() ? IrreducibilityReport::Irreducible
                                      : IrreducibilityReport::Inconclusive;
    return rep;
}

NLReport nl_verdict(const CharPoly& chi) {
    NLReport rep;
    rep.chi = chi;
    rep.cyclotomic = cyclotomic_factors(chi);
    rep.rank_bound = 0;
    for (const auto& f : rep.cyclotomic)
        rep.rank_bound += euler_phi(f.n) * f.multiplicity;
    rep.nl_general = rep.rank_bound == 0;
    rep.integrality = integrality_checks(chi);
    rep.irreducibility = irreducibility_modular(chi);
    return rep;
}

std::string nl_report_json(std::span<const long long> counts,
                           const NLReport& report, uint32_t q) {
    nlohmann::json j;
    j["q"] = q;
    j["counts"] = std::vector<long long>(counts.begin(), counts.end());
    TraceSeries ts = traces_from_counts(counts, q);
    std::vector<std::string> traces;
    for (const Rat& t : ts.traces) traces.push_back(rat_str(t));
    j["traces"] = traces;
    std::vector<std::string> chi;
    for (const Rat& c : report.chi.coeffs) chi.push_back(rat_str(c));
    j["charpoly"] = chi;
    j["sign"] = report.chi.sign;
    j["provenance"] = report.chi.provenance;
    j["cyclotomic_factors"] = nlohmann::json::array();
    for (const auto& f : report.cyclotomic)
        j["cyclotomic_factors"].push_back(
            {{"n", f.n}, {"multiplicity", f.multiplicity}});
    const char* status =
        report.irreducibility.status == IrreducibilityReport::Irreducible
            ? "irreducible"
        : report.irreducibility.status == IrreducibilityReport::Reducible
            ? "reducible"
            : "inconclusive";
    j["irreducibility"] = {
        {"status", status},
        {"primes_used", report.irreducibility.primes_used},
        {"possible_factor_degrees", report.irreducibility.possible_factor_degrees},
        {"witness", report.irreducibility.witness}};
    j["integrality"] = {{"twist2", report.integrality.twist2},
                        {"twist4", report.integrality.twist4},
                        {"all_integral", report.integrality.all_integral}};
    j["rank_bound"] = report.rank_bound;
    j["verdict"] = report.nl_general ? "Noether-Lefschetz general"
                                     : "cyclotomic eigenvalues present";
    return j.dump(2);
}

} // namespace cubic
