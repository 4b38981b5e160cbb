#include "cubic/counters.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace cubic {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// decodes index -> normalized point of P^n (first nonzero coordinate 1),
// strata ordered by leading position
template <int N>
std::array<Fq, N + 1> decode_pn(uint64_t idx, uint32_t q) {
    std::array<Fq, N + 1> pt{};
    uint64_t stratum = 1;
    for (int i = 0; i < N; ++i) stratum *= q;  // q^N, lead = coordinate 0
    int lead = 0;
    while (idx >= stratum) {
        idx -= stratum;
        stratum /= q;
        ++lead;
    }
    pt[lead] = 1;
    for (int i = N; i > lead; --i) {
        pt[i] = Fq(idx % q);
        idx /= q;
    }
    return pt;
}

uint64_t pn_size(int n, uint32_t q) {
    uint64_t total = 0, p = 1;
    for (int i = 0; i <= n; ++i) {
        total += p;
        p *= q;
    }
    return total;
}

} // namespace

MPolyF2 partial_derivative(const MPolyF2& f, int var) {
    std::vector<Exp> terms;
    for (Exp e : f.terms())
        if (e[var] % 2 == 1) {
            e[var] -= 1;
            terms.push_back(e);
        }
    return MPolyF2::from_terms(f.arity(), std::move(terms), f.var_letter());
}

CountRecord count_naive(const MPolyF2& f, const FieldCtx& ctx) {
    if (f.arity() != 6) throw arity_error("count_naive: expected arity 6");
    if (ctx.m() > 5)
        throw precondition_error(
            "count_naive: refusing m > 5 (cost grows like q^5; use the conic "
            "bundle counter)");
    auto t0 = Clock::now();
    CompiledF2 cf(f);
    const uint32_t q = ctx.q();
    uint64_t n = pn_size(5, q);
    long long count = 0;
    for (uint64_t idx = 0; idx < n; ++idx) {
        auto pt = decode_pn<5>(idx, q);
        if (cf.eval(ctx, pt.data()) == 0) ++count;
    }
    return {ctx.m(), count, "naive", elapsed(t0)};
}

std::vector<std::array<Fq, 6>> singular_points(const MPolyF2& f,
                                               const FieldCtx& ctx) {
    if (ctx.m() > 5)
        throw precondition_error("singular_points: refusing m > 5 (cost ~q^5)");
    CompiledF2 cf(f);
    std::vector<CompiledF2> partials;
    for (int i = 0; i < 6; ++i)
        partials.emplace_back(partial_derivative(f, i));
    const uint32_t q = ctx.q();
    uint64_t n = pn_size(5, q);
    std::vector<std::array<Fq, 6>> sing;
    for (uint64_t idx = 0; idx < n; ++idx) {
        auto pt = decode_pn<5>(idx, q);
        if (cf.eval(ctx, pt.data()) != 0) continue;
        bool all = true;
        for (auto& p : partials)
            if (p.eval(ctx, pt.data()) != 0) { all = false; break; }
        if (all) sing.push_back(pt);
    }
    return sing;
}

CountRecord count_conic_P3(const ConicBundle& bundle, const FieldCtx& ctx,
                           int threads) {
    auto t0 = Clock::now();
    CompiledBundle cb(bundle);
    const uint32_t q = ctx.q();
    const uint64_t n = pn_size(3, q);
    if (threads < 1) threads = 1;

    std::atomic<bool> plane{false};
    std::vector<long long> partial(threads, 0);
    auto worker = [&](int t) {
        uint64_t lo = n * t / threads, hi = n * (t + 1) / threads;
        long long s = 0;
        for (uint64_t idx = lo; idx < hi && !plane.load(std::memory_order_relaxed);
             ++idx) {
            auto z = decode_pn<3>(idx, q);
            if (cb.disc.eval(ctx, z.data()) != 0) continue;
            int d = cb.delta(ctx, z.data());
            if (d < 0) {
                plane.store(true, std::memory_order_relaxed);
                return;
            }
            s += d - 1;
        }
        partial[t] = s;
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    if (plane.load())
        throw contains_plane_error(
            "cubic contains a plane through the projection line");
    long long S = 0;
    for (long long s : partial) S += s;
    long long Q = q;
    long long count = Q * Q * Q * Q + Q * Q * Q + Q * S + Q + 1;
    return {ctx.m(), count, "p3", elapsed(t0)};
}

std::optional<std::array<Fq, 4>> find_cover_center(const ConicBundle& bundle) {
    FieldCtx f2(1);
    const uint32_t q = 2;
    uint64_t n = pn_size(3, q);
    for (uint64_t idx = 0; idx < n; ++idx) {
        auto z = decode_pn<3>(idx, q);
        if (bundle.B.eval(f2, z) == 0 && bundle.D.eval(f2, z) == 0 &&
            bundle.E.eval(f2, z) == 0)
            return z;
    }
    return std::nullopt;
}

CountRecord count_conic_cover(const ConicBundle& bundle,
                              const std::array<Fq, 4>& center,
                              const FieldCtx& ctx, int threads) {
    auto t0 = Clock::now();
    for (Fq c : center)
        if (c > 1) throw precondition_error("count_conic_cover: center must be an F_2-point");
    {
        FieldCtx f2(1);
        if (bundle.B.eval(f2, center) != 0 || bundle.D.eval(f2, center) != 0 ||
            bundle.E.eval(f2, center) != 0)
            throw precondition_error(
                "count_conic_cover: center is not a singular point of the "
                "discriminant (B, D, E must vanish there)");
        if (bundle.A.eval(f2, center) == 0 && bundle.C.eval(f2, center) == 0 &&
            bundle.F.eval(f2, center) == 0)
            throw contains_plane_error(
                "cubic contains a plane through the projection line");
    }

    // complement basis: the three standard basis vectors other than the
    // leading coordinate of the center
    int lead = 0;
    while (center[lead] == 0) ++lead;
    std::array<int, 3> comp{};
    {
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != lead) comp[k++] = i;
    }

    // restrict the quintic to the pencil of lines {u * center + w}:
    // symbolic substitution z_i = u c_i + sum_j w_j e_{comp[j], i} in the
    // 4-variable ring (u, w1, w2, w3)
    std::vector<MPolyF2> images;
    for (int i = 0; i < 4; ++i) {
        std::vector<Exp> terms;
        if (center[i]) terms.push_back(Exp{1, 0, 0, 0});
        for (int j = 0; j < 3; ++j)
            if (comp[j] == i) {
                Exp e{};
                e[j + 1] = 1;
                terms.push_back(e);
            }
        images.push_back(MPolyF2::from_terms(4, std::move(terms), 'u'));
    }
    MPolyF2 restricted = discriminant(bundle).substitute(images);

    // collect by u-power; the center is a double point of the quintic, so
    // the u^5 and u^4 coefficients must vanish identically
    std::array<std::vector<Exp>, 6> byu;
    for (Exp e : restricted.terms()) {
        int k = e[0];
        Exp w{e[1], e[2], e[3], 0, 0, 0};
        byu[k].push_back(w);
    }
    std::array<MPolyF2, 6> cu;
    for (int k = 0; k <= 5; ++k)
        cu[k] = MPolyF2::from_terms(3, std::move(byu[k]), 'w');
    if (!cu[5].is_zero() || !cu[4].is_zero())
        throw precondition_error(
            "count_conic_cover: restriction is not a cubic; center is not a "
            "double point");
    CompiledF2 c3(cu[3]), c2(cu[2]), c1(cu[1]), c0(cu[0]);

    CompiledBundle cb(bundle);
    const uint32_t q = ctx.q();
    auto orbits = galois_orbits_P2(ctx);
    if (threads < 1) threads = 1;

    auto line_point = [&](Fq u, const std::array<Fq, 3>& w) {
        std::array<Fq, 4> z{};
        for (int i = 0; i < 4; ++i)
            if (center[i]) z[i] = u;
        for (int j = 0; j < 3; ++j) z[comp[j]] ^= w[j];
        return z;
    };

    std::atomic<bool> plane{false};
    std::vector<long long> partial(threads, 0);
    auto worker = [&](int t) {
        size_t lo = orbits.size() * t / threads;
        size_t hi = orbits.size() * (t + 1) / threads;
        long long s = 0;
        for (size_t i = lo; i < hi; ++i) {
            if (plane.load(std::memory_order_relaxed)) return;
            const auto& orb = orbits[i];
            const Fq* w = orb.rep.data();
            Fq v3 = c3.eval(ctx, w), v2 = c2.eval(ctx, w);
            Fq v1 = c1.eval(ctx, w), v0 = c0.eval(ctx, w);
            if (v3 == 0 && v2 == 0 && v1 == 0 && v0 == 0) {
                // the whole line lies in the discriminant
                for (uint32_t u = 0; u < q; ++u) {
                    auto z = line_point(Fq(u), orb.rep);
                    int d = cb.delta(ctx, z.data());
                    if (d < 0) {
                        plane.store(true, std::memory_order_relaxed);
                        return;
                    }
                    s += (long long)(d - 1) * orb.size;
                }
                continue;
            }
            for (Fq u : ctx.solve_cubic(v3, v2, v1, v0)) {
                auto z = line_point(u, orb.rep);
                int d = cb.delta(ctx, z.data());
                if (d < 0) {
                    plane.store(true, std::memory_order_relaxed);
                    return;
                }
                s += (long long)(d - 1) * orb.size;
            }
        }
        partial[t] = s;
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    if (plane.load())
        throw contains_plane_error(
            "cubic contains a plane through the projection line");
    long long S = 0;
    for (long long s : partial) S += s;
    long long Q = q;
    long long count = Q * Q * Q * Q + Q * Q * Q + Q * S + Q + 1;
    return {ctx.m(), count, "cover", elapsed(t0)};
}

std::optional<std::array<Fq, 6>> find_point_F2(const MPolyF2& f) {
    FieldCtx f2(1);
    uint64_t n = pn_size(5, 2);
    for (uint64_t idx = 0; idx < n; ++idx) {
        auto pt = decode_pn<5>(idx, 2);
        if (f.eval(f2, pt) == 0) return pt;
    }
    return std::nullopt;
}

CountRecord count_point_projection(const MPolyF2& f,
                                   const std::array<Fq, 6>& p,
                                   const FieldCtx& ctx) {
    auto t0 = Clock::now();
    if (ctx.m() > 9)
        throw precondition_error(
            "count_point_projection: refusing m > 9 (cost grows like q^4)");
    for (Fq c : p)
        if (c > 1) throw precondition_error("count_point_projection: p must be an F_2-point");
    {
        FieldCtx f2(1);
        if (f.eval(f2, p) != 0)
            throw precondition_error("count_point_projection: p is not on the cubic");
    }

    int lead = 0;
    while (p[lead] == 0) ++lead;
    std::array<int, 5> comp{};
    {
        int k = 0;
        for (int i = 0; i < 6; ++i)
            if (i != lead) comp[k++] = i;
    }

    // f(w + u p) as a polynomial in u; the u^3 coefficient is f(p) = 0
    std::vector<MPolyF2> images;
    for (int i = 0; i < 6; ++i) {
        std::vector<Exp> terms;
        if (p[i]) terms.push_back(Exp{1, 0, 0, 0, 0, 0});
        for (int j = 0; j < 5; ++j)
            if (comp[j] == i) {
                Exp e{};
                e[j + 1] = 1;
                terms.push_back(e);
            }
        images.push_back(MPolyF2::from_terms(6, std::move(terms), 'u'));
    }
    MPolyF2 restricted = f.substitute(images);
    std::array<std::vector<Exp>, 4> byu;
    for (Exp e : restricted.terms()) {
        int k = e[0];
        Exp w{e[1], e[2], e[3], e[4], e[5]};
        byu[k].push_back(w);
    }
    if (!byu[3].empty())
        throw precondition_error("count_point_projection: p is not on the cubic");
    CompiledF2 C2(MPolyF2::from_terms(5, std::move(byu[2]), 'w'));
    CompiledF2 C1(MPolyF2::from_terms(5, std::move(byu[1]), 'w'));
    CompiledF2 C0(MPolyF2::from_terms(5, std::move(byu[0]), 'w'));

    const uint32_t q = ctx.q();
    uint64_t n = pn_size(4, q);
    long long total = 1;  // the center p itself
    for (uint64_t idx = 0; idx < n; ++idx) {
        auto w = decode_pn<4>(idx, q);
        Fq v2 = C2.eval(ctx, w.data());
        Fq v1 = C1.eval(ctx, w.data());
        Fq v0 = C0.eval(ctx, w.data());
        if (v2 == 0 && v1 == 0 && v0 == 0) {
            total += q;  // the whole line lies in X
        } else {
            total += (long long)ctx.solve_cubic(0, v2, v1, v0).size();
        }
    }
    return {ctx.m(), total, "point", elapsed(t0)};
}

} // namespace cubic
