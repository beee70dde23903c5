#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

#include "../errors.hpp"
#include "../numeric.hpp"

// Arithmetic of y^2 = x^3 + Ax + B over F_p for p up to ~2^20, sized so
// every product of two reduced residues fits a plain 64-bit multiply.

namespace lfkit::detail {

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        const std::int64_t q = r / nr;
        std::tie(t, nt) = std::tuple<std::int64_t, std::int64_t>(nt, t - q * nt);
        std::tie(r, nr) = std::tuple<std::int64_t, std::int64_t>(nr, r - q * nr);
    }
    if (r != 1) throw domain_error("mod_inv: argument not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

/// Square root mod an odd prime by Tonelli-Shanks; the input must be a
/// quadratic residue (or zero).
inline std::uint64_t mod_sqrt(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);

    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;

    std::uint64_t m = s;
    std::uint64_t c = mod_pow(z, q, p);
    std::uint64_t t = mod_pow(a, q, p);
    std::uint64_t r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, u = t;
        while (u != 1 && i < m) {
            u = u * u % p;
            ++i;
        }
        if (i == m) throw consistency_error("mod_sqrt: input is not a quadratic residue");
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

struct ECPoint {
    std::uint64_t x = 0, y = 0;
    bool inf = true;

    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.x == b.x && a.y == b.y;
    }
};

/// Chord-tangent group law; only A enters the addition formulas.
struct ECGroup {
    std::uint64_t p = 0, A = 0;

    ECPoint neg(ECPoint P) const {
        if (!P.inf && P.y != 0) P.y = p - P.y;
        return P;
    }

    ECPoint add(const ECPoint& P, const ECPoint& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        std::uint64_t lambda;
        if (P.x == Q.x) {
            if ((P.y + Q.y) % p == 0) return {};
            lambda = (3 * (P.x * P.x % p) + A) % p * mod_inv(2 * P.y % p, p) % p;
        } else {
            lambda = (Q.y + p - P.y) % p * mod_inv((Q.x + p - P.x) % p, p) % p;
        }
        const std::uint64_t x3 = (lambda * lambda % p + 2 * p - P.x - Q.x) % p;
        const std::uint64_t y3 = (lambda * ((P.x + p - x3) % p) % p + p - P.y) % p;
        return {x3, y3, false};
    }

    ECPoint mul(std::uint64_t n, ECPoint P) const {
        ECPoint r{};
        while (n) {
            if (n & 1) r = add(r, P);
            P = add(P, P);
            n >>= 1;
        }
        return r;
    }
};

inline std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Every n in [lo, hi] with n P = O, by baby-step giant-step. The returned
/// list is the intersection of ord(P) Z with the window, so consecutive
/// entries differ by exactly ord(P).
inline std::vector<std::uint64_t> bsgs_kill_set(const ECGroup& G, const ECPoint& P,
                                                std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t W = hi - lo;
    std::uint64_t m = isqrt64(W);
    if (m * m < W) ++m;
    if (m == 0) m = 1;

    // baby steps 1P..mP; hitting O early reveals the order outright
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> baby;
    baby.reserve(m);
    ECPoint B = P;
    for (std::uint64_t j = 1; j <= m; ++j) {
        if (B.inf) {
            std::vector<std::uint64_t> kills;
            for (std::uint64_t n = (lo + j - 1) / j * j; n <= hi; n += j) kills.push_back(n);
            if (kills.empty())
                throw consistency_error("bsgs_kill_set: no multiple of the point order in range");
            return kills;
        }
        baby.emplace_back(B.x, B.y, j);
        B = G.add(B, P);
    }
    std::sort(baby.begin(), baby.end());

    // giant steps: T_k = -(lo + k m) P, matched against baby j' in [1, m],
    // a unique representation j = k m + j' for every j >= 1; j = 0 is the
    // T_0 = O case. T_k = O for k >= 1 duplicates the baby-m match one
    // giant step earlier, so it is deliberately not recorded.
    const ECPoint S = G.neg(G.mul(m, P));
    ECPoint T = G.neg(G.mul(lo, P));
    std::vector<std::uint64_t> kills;
    if (T.inf) kills.push_back(lo);
    for (std::uint64_t k = 0; k * m + 1 <= W; ++k) {
        if (!T.inf) {
            auto it = std::lower_bound(baby.begin(), baby.end(),
                                       std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>(
                                           T.x, T.y, 0));
            if (it != baby.end() && std::get<0>(*it) == T.x && std::get<1>(*it) == T.y) {
                const std::uint64_t j = k * m + std::get<2>(*it);
                if (j <= W) kills.push_back(lo + j);
            }
        }
        T = G.add(T, S);
    }
    if (kills.empty())
        throw consistency_error("bsgs_kill_set: no multiple of the point order in range");
    return kills;
}

/// Exact order of P from any n with n P = O, by stripping prime factors.
inline std::uint64_t ec_point_order(const ECGroup& G, const ECPoint& P, std::uint64_t n) {
    std::uint64_t o = n, rest = n;
    for (std::uint64_t q = 2; q * q <= rest; q += (q == 2 ? 1 : 2)) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        while (o % q == 0 && G.mul(o / q, P).inf) o /= q;
    }
    if (rest > 1)
        while (o % rest == 0 && G.mul(o / rest, P).inf) o /= rest;
    return o;
}

/// #E(F_p) for E: y^2 = x^3 + Ax + B, p an odd prime of good reduction,
/// by sampling point orders on E and on its quadratic twist until the two
/// Hasse windows admit a single compatible pair (their orders add to
/// 2p + 2). Returns 0 when 64 samples fail to settle it, which for p in
/// the supported range signals the caller to fall back to a direct count.
inline std::uint64_t ec_group_order(std::uint64_t p, std::uint64_t A, std::uint64_t B) {
    const std::uint64_t s = isqrt64(4 * p);
    const std::uint64_t lo = p + 1 - s, hi = p + 1 + s;

    std::uint64_t g = 2;
    while (mod_pow(g, (p - 1) / 2, p) != p - 1) ++g;
    const std::uint64_t g2 = g * g % p, g3 = g2 * g % p;
    const ECGroup E{p, A};
    const ECGroup T{p, A * g2 % p};

    std::uint64_t L_e = 1, L_t = 1;
    std::uint64_t seed = p ^ 0x5bf03635ull;
    for (int tries = 0; tries < 64; ++tries) {
        const std::uint64_t x = splitmix64(seed) % p;
        const std::uint64_t u = (x * x % p * x + A * x + B) % p;

        const ECGroup* G = &E;
        ECPoint P{x, 0, false};
        std::uint64_t* L = &L_e;
        if (u != 0) {
            if (mod_pow(u, (p - 1) / 2, p) == 1) {
                P.y = mod_sqrt(u, p);
            } else {
                G = &T;
                L = &L_t;
                P = {g * x % p, mod_sqrt(g3 * u % p, p), false};
            }
        }

        const auto kills = bsgs_kill_set(*G, P, lo, hi);
        const std::uint64_t o = kills.size() >= 2 ? kills[1] - kills[0]
                                                  : ec_point_order(*G, P, kills[0]);
        *L = std::lcm(*L, o);

        std::uint64_t candidate = 0;
        int found = 0;
        for (std::uint64_t N = (lo + L_e - 1) / L_e * L_e; N <= hi; N += L_e)
            if ((2 * p + 2 - N) % L_t == 0) {
                candidate = N;
                if (++found > 1) break;
            }
        if (found == 1) return candidate;
        if (found == 0)
            throw consistency_error("ec_group_order: no order candidate in the Hasse window");
    }
    return 0;
}

} // namespace lfkit::detail
