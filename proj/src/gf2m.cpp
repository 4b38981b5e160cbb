#include "cubic/gf2m.hpp"

#include <algorithm>
#include <numeric>

namespace cubic {

int poly2_degree(uint32_t a) {
    if (a == 0) return -1;
    int d = 0;
    while (a >> (d + 1)) ++d;
    return d;
}

uint32_t poly2_mod(uint64_t a, uint32_t mod) {
    int dm = poly2_degree(mod);
    for (int d = 63; d >= dm; --d)
        if (a >> d & 1) a ^= uint64_t(mod) << (d - dm);
    return uint32_t(a);
}

uint32_t poly2_mulmod(uint32_t a, uint32_t b, uint32_t mod) {
    uint64_t acc = 0;
    for (int i = 0; i <= poly2_degree(a); ++i)
        if (a >> i & 1) acc ^= uint64_t(b) << i;
    return poly2_mod(acc, mod);
}

bool poly2_irreducible(uint32_t a) {
    int d = poly2_degree(a);
    if (d <= 0) return false;
    if (d == 1) return true;
    // trial division by every polynomial of degree 1 .. d/2
    for (int e = 1; 2 * e <= d; ++e)
        for (uint32_t b = 1u << e; b < (2u << e); ++b) {
            // remainder of a mod b
            uint32_t r = a;
            int db = poly2_degree(b);
            for (int k = d; k >= db; --k)
                if (r >> k & 1) r ^= b << (k - db);
            if (r == 0) return false;
        }
    return true;
}

uint32_t smallest_irreducible(int m) {
    for (uint32_t a = 1u << m; a < (2u << m); ++a)
        if (poly2_irreducible(a)) return a;
    return 0;  // unreachable: irreducibles exist in every degree
}

FieldCtx::FieldCtx(int m, std::optional<uint32_t> modulus) : m_(m) {
    if (m < 1 || m > 16)
        throw unsupported_degree_error("gf2m: extension degree must be in 1..16");
    q_ = 1u << m;
    if (modulus) {
        if (poly2_degree(*modulus) != m)
            throw invalid_modulus_error("gf2m: modulus degree mismatch");
        if (!poly2_irreducible(*modulus))
            throw invalid_modulus_error("gf2m: modulus is reducible");
        modulus_ = *modulus;
    } else {
        modulus_ = smallest_irreducible(m);
    }
    build_tables();
}

Fq FieldCtx::mul_notable(Fq a, Fq b) const {
    uint64_t acc = 0;
    for (int i = 0; i < m_; ++i)
        if (a >> i & 1) acc ^= uint64_t(b) << i;
    return Fq(poly2_mod(acc, modulus_));
}

namespace {

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> ps;
    for (uint32_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

void FieldCtx::build_tables() {
    auto powmod = [&](Fq a, uint32_t e) {
        Fq r = 1, b = a;
        while (e) {
            if (e & 1) r = mul_notable(r, b);
            b = mul_notable(b, b);
            e >>= 1;
        }
        return r;
    };

    // find a generator of the multiplicative group; the modulus need not be
    // primitive, so x itself may not do
    uint32_t order = q_ - 1;
    auto ps = prime_factors(order);
    gen_ = 1;
    for (Fq c = (order == 1) ? 1 : 2; c < q_; ++c) {
        bool ok = true;
        for (uint32_t p : ps)
            if (powmod(c, order / p) == 1) { ok = false; break; }
        if (ok) { gen_ = c; break; }
    }

    exp_.assign(2 * order, 1);
    log_.assign(q_, 0);
    Fq v = 1;
    for (uint32_t i = 0; i < order; ++i) {
        exp_[i] = v;
        exp_[i + order] = v;
        log_[v] = Fq(i);
        v = mul_notable(v, gen_);
    }

    sqrt_.assign(q_, 0);
    trace_.assign(q_, 0);
    for (uint32_t a = 0; a < q_; ++a) {
        Fq sq = mul(Fq(a), Fq(a));
        sqrt_[sq] = Fq(a);
        Fq t = Fq(a), acc = Fq(a);
        for (int i = 1; i < m_; ++i) {
            t = mul(t, t);
            acc ^= t;
        }
        trace_[a] = uint8_t(acc & 1);
    }

    as_root_.assign(q_, 0xFFFF);
    for (uint32_t w = 0; w < q_; ++w) {
        Fq c = mul(Fq(w), Fq(w)) ^ Fq(w);
        if (as_root_[c] == 0xFFFF) as_root_[c] = Fq(w);
    }

    // depressed-cubic root table, quadratic in field size so capped at m = 12
    if (m_ <= 12) {
        cubic_root_.assign(size_t(q_) * q_, 0xFFFF);
        for (uint32_t p = 0; p < q_; ++p)
            for (uint32_t s = 0; s < q_; ++s) {
                Fq r = mul(mul(Fq(s), Fq(s)), Fq(s)) ^ mul(Fq(p), Fq(s));
                size_t idx = size_t(p) * q_ + r;
                if (cubic_root_[idx] == 0xFFFF) cubic_root_[idx] = Fq(s);
            }
    }
}

Fq FieldCtx::pow(Fq a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw arithmetic_domain_error("gf2m: 0 to a negative power");
        return 0;
    }
    long long order = q_ - 1;
    long long r = ((long long)log_[a] * (e % order)) % order;
    if (r < 0) r += order;
    return exp_[r];
}

std::vector<Fq> FieldCtx::solve_artin_schreier(Fq c) const {
    if (trace_[c]) return {};
    Fq w = as_root_[c];
    Fq w2 = w ^ 1;
    if (w > w2) std::swap(w, w2);
    return {w, w2};
}

std::vector<Fq> FieldCtx::roots_depressed_cubic_gcd(Fq p, Fq r) const {
    // polynomials of degree <= 3 over F_q as coefficient arrays, index = power
    using Poly = std::array<Fq, 4>;
    auto deg = [](const Poly& f) {
        for (int d = 3; d >= 0; --d)
            if (f[d]) return d;
        return -1;
    };
    // reduce a degree-<=4 square modulo s^3 + p s + r:
    //   s^3 = p s + r,  s^4 = p s^2 + r s
    auto sqr_mod = [&](const Poly& f) {
        Fq a0 = mul(f[0], f[0]), a1 = mul(f[1], f[1]), a2 = mul(f[2], f[2]);
        Poly g{};
        g[0] = a0;
        g[1] = mul(a2, r);       // s^4 = p s^2 + r s
        g[2] = a1 ^ mul(a2, p);
        return g;
    };
    auto gcd = [&](Poly a, Poly b) {
        int da = deg(a), db = deg(b);
        while (db >= 0) {
            while (da >= db) {
                Fq c = div(a[da], b[db]);
                for (int i = 0; i <= db; ++i) a[da - db + i] ^= mul(c, b[i]);
                da = deg(a);
            }
            std::swap(a, b);
            std::swap(da, db);
        }
        if (da > 0) {
            Fq lead = a[da];
            for (int i = 0; i <= da; ++i) a[i] = div(a[i], lead);
        }
        return a;
    };
    Poly f{r, p, 0, 1};

    // x^q mod f by repeated squaring
    Poly xq{0, 1, 0, 0};
    for (int i = 0; i < m_; ++i) xq = sqr_mod(xq);
    Poly h = xq;
    h[1] ^= 1;  // x^q - x
    Poly g = gcd(f, h);
    int dg = deg(g);

    std::vector<Fq> roots;
    auto solve_monic_quadratic = [&](Fq b, Fq c, std::vector<Fq>& out) {
        // roots of t^2 + b t + c
        if (b == 0) {
            out.push_back(sqrt_[c]);
            return;
        }
        for (Fq v : solve_artin_schreier(div(c, mul(b, b))))
            out.push_back(mul(b, v));
    };

    if (dg <= 0) return {};
    if (dg == 1) {
        roots.push_back(g[0]);
    } else if (dg == 2) {
        solve_monic_quadratic(g[1], g[0], roots);
    } else {
        // f splits into three distinct linear factors; split off one root with
        // the trace map Tr(a x) mod f, scanning a deterministically
        Fq root = 0;
        bool found = false;
        for (uint32_t a = 1; a < q_ && !found; ++a) {
            Poly t{0, Fq(a), 0, 0};
            Poly acc = t;
            for (int i = 1; i < m_; ++i) {
                t = sqr_mod(t);
                for (int j = 0; j < 4; ++j) acc[j] ^= t[j];
            }
            Poly g1 = gcd(f, acc);
            int d1 = deg(g1);
            if (d1 == 1) { root = g1[0]; found = true; }
            else if (d1 == 2) {
                std::vector<Fq> two;
                solve_monic_quadratic(g1[1], g1[0], two);
                root = two.front();
                found = true;
            }
        }
        if (!found) {
            // unreachable in theory; scan the field rather than miscount
            for (uint32_t s = 0; s < q_; ++s)
                if ((mul(mul(Fq(s), Fq(s)), Fq(s)) ^ mul(p, Fq(s)) ^ r) == 0)
                    roots.push_back(Fq(s));
            std::sort(roots.begin(), roots.end());
            return roots;
        }
        // deflate: s^3 + p s + r = (s + root)(s^2 + root s + (root^2 + p))
        roots.push_back(root);
        solve_monic_quadratic(root, mul(root, root) ^ p, roots);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Fq> FieldCtx::solve_cubic(Fq c3, Fq c2, Fq c1, Fq c0) const {
    if (c3 == 0 && c2 == 0 && c1 == 0 && c0 == 0)
        throw degenerate_polynomial_error("solve_cubic: zero polynomial");
    if (c3 == 0) {
        if (c2 == 0) {
            if (c1 == 0) return {};  // nonzero constant
            return {div(c0, c1)};
        }
        // quadratic: u^2 + (c1/c2) u + (c0/c2)
        Fq b = div(c1, c2), c = div(c0, c2);
        if (b == 0) return {sqrt_[c]};
        std::vector<Fq> roots;
        for (Fq v : solve_artin_schreier(div(c, mul(b, b))))
            roots.push_back(mul(b, v));
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    // monic cubic t^3 + a t^2 + b t + c, depressed by t = s + a
    Fq a = div(c2, c3), b = div(c1, c3), c = div(c0, c3);
    Fq p = mul(a, a) ^ b;
    Fq r = mul(a, b) ^ c;

    std::vector<Fq> sroots;
    if (!cubic_root_.empty()) {
        Fq s0 = cubic_root_[size_t(p) * q_ + r];
        if (s0 != 0xFFFF) {
            sroots.push_back(s0);
            // deflation quadratic s^2 + s0 s + (s0^2 + p)
            Fq bb = s0, cc = mul(s0, s0) ^ p;
            if (bb == 0) sroots.push_back(sqrt_[cc]);
            else
                for (Fq v : solve_artin_schreier(div(cc, mul(bb, bb))))
                    sroots.push_back(mul(bb, v));
        }
    } else {
        sroots = roots_depressed_cubic_gcd(p, r);
    }
    std::vector<Fq> roots;
    roots.reserve(sroots.size());
    for (Fq s : sroots) roots.push_back(s ^ a);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

uint64_t FieldCtx::table_checksum() const {
    uint64_t h = 14695981039346656037ull;
    auto mix = [&](uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(modulus_);
    for (Fq v : exp_) mix(v);
    for (Fq v : sqrt_) mix(v);
    for (uint8_t v : trace_) mix(v);
    for (Fq v : as_root_) mix(v);
    return h;
}

std::vector<OrbitP2> galois_orbits_P2(const FieldCtx& ctx) {
    const uint32_t q = ctx.q();
    const size_t n = 1 + size_t(q) + size_t(q) * q;
    auto index = [&](const std::array<Fq, 3>& pt) -> size_t {
        if (pt[0] == 1) return 1 + q + size_t(pt[1]) * q + pt[2];
        if (pt[1] == 1) return 1 + pt[2];
        return 0;
    };
    auto point = [&](size_t idx) -> std::array<Fq, 3> {
        if (idx == 0) return {0, 0, 1};
        if (idx <= q) return {0, 1, Fq(idx - 1)};
        size_t k = idx - 1 - q;
        return {1, Fq(k / q), Fq(k % q)};
    };
    std::vector<bool> seen(n, false);
    std::vector<OrbitP2> orbits;
    for (size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        auto rep = point(i);
        auto cur = rep;
        int size = 0;
        do {
            seen[index(cur)] = true;
            ++size;
            cur = {cur[0], ctx.sqr(cur[1]), ctx.sqr(cur[2])};
        } while (cur != rep);
        orbits.push_back({rep, size});
    }
    return orbits;
}

} // namespace cubic
