#include "numtheory.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace geolab::numtheory {

namespace {

void check_hj_args(const Int& m, const Int& q, const char* who) {
    if (m < 2) throw std::domain_error(std::string(who) + ": need m >= 2, got m = " + to_string(m));
    if (q <= 0 || q >= m)
        throw std::domain_error(std::string(who) + ": need 0 < q < m, got q = " + to_string(q) +
                                ", m = " + to_string(m));
    if (gcd(q, m) != 1)
        throw std::domain_error(std::string(who) + ": gcd(" + to_string(q) + ", " + to_string(m) + ") != 1");
}

constexpr std::int64_t kMaxMaterializedChain = 10'000'000;
constexpr std::int64_t kMaxResolvedChain = 1'000'000;

}  // namespace

Int hj_length(const Int& m, const Int& q) {
    check_hj_args(m, q, "hj_length");
    Int a = m, b = q, l = 0;
    while (b > 0) {
        Int e = (a + b - 1) / b;
        if (e == 2) {
            // run of 2's: remainders fall arithmetically by a-b until below it
            Int diff = a - b;
            Int k = b / diff;
            l += k;
            a = b - (k - 1) * diff;
            b -= k * diff;
        } else {
            ++l;
            Int nb = e * b - a;
            a = b;
            b = nb;
        }
    }
    return l;
}

HjChain hj_expand(const Int& m, const Int& q) {
    check_hj_args(m, q, "hj_expand");
    if (hj_length(m, q) > kMaxMaterializedChain)
        throw std::domain_error("hj_expand: chain longer than " + std::to_string(kMaxMaterializedChain));
    HjChain out;
    out.m = m;
    out.q = q;
    Int a = m, b = q;
    while (b > 0) {
        Int e = (a + b - 1) / b;
        out.e.push_back(e);
        Int nb = e * b - a;
        a = b;
        b = nb;
    }
    return out;
}

Rat dedekind_sum(const Int& q_in, const Int& m) {
    if (m < 1) throw std::domain_error("dedekind_sum: need m >= 1, got " + to_string(m));
    if (q_in < 0) throw std::domain_error("dedekind_sum: need q >= 0, got " + to_string(q_in));
    Int q = mod_floor(q_in, m);
    if (gcd(q, m) != 1)
        throw std::domain_error("dedekind_sum: gcd(" + to_string(q_in) + ", " + to_string(m) + ") != 1");
    Rat s = 0;
    Int a = q, b = m;
    int sign = 1;
    while (a != 0) {
        // s(a,b) = (a^2 + b^2 + 1 - 3ab)/(12ab) - s(b mod a, a)
        s += make_rat(Int(sign) * (a * a + b * b + 1 - 3 * a * b), 12 * a * b);
        Int t = b % a;
        b = a;
        a = t;
        sign = -sign;
    }
    return s;
}

Rat c_coeff(const Int& q, const Int& m) {
    check_hj_args(m, q, "c_coeff");
    return 12 * dedekind_sum(q, m) + Rat(hj_length(m, q));
}

Int node_q(const Int& nu_i, const Int& nu_j, const Int& m) {
    if (m < 2) throw std::domain_error("node_q: need m >= 2, got " + to_string(m));
    Int a = mod_floor(nu_i, m), b = mod_floor(nu_j, m);
    if (gcd(a, m) != 1)
        throw std::domain_error("node_q: multiplicity " + to_string(nu_i) + " is not coprime to " + to_string(m));
    if (gcd(b, m) != 1)
        throw std::domain_error("node_q: multiplicity " + to_string(nu_j) + " is not coprime to " + to_string(m));
    Int q = mod_floor(-a * mod_inverse(b, m), m);
    if (q == 0 || gcd(q, m) != 1)
        throw identity_error("node_q: computed q = " + to_string(q) + " not a unit mod " + to_string(m));
    return q;
}

CqsResolution resolve_cqs(const Int& m, const Int& q) {
    check_hj_args(m, q, "resolve_cqs");
    if (hj_length(m, q) > kMaxResolvedChain)
        throw std::domain_error("resolve_cqs: chain longer than " + std::to_string(kMaxResolvedChain));

    CqsResolution out;
    out.m = m;
    out.q = q;
    out.e = hj_expand(m, q).e;
    const std::size_t l = out.e.size();

    // Discrepancies from the adjunction system
    //   sum_j disc_j (R_j . R_k) = -2 - R_k^2 = e_k - 2
    // with the chain intersection matrix (diag -e_k, off-diag 1), solved by
    // fraction-free forward elimination: the pivot after step k is
    // -P_k / P_{k-1} for the continuant sequence P_k = e_k P_{k-1} - P_{k-2},
    // the rescaled right-hand side is the prefix sum
    // U_k = sum_{j<=k} P_{j-1} (e_j - 2), and clearing the common denominator
    // m = P_l keeps back substitution integral, V_k = m * disc_k.
    std::vector<Int> P(l + 1), U(l + 1), V(l + 1);
    P[0] = 1;
    for (std::size_t k = 1; k <= l; ++k) {
        P[k] = out.e[k - 1] * P[k - 1] - (k >= 2 ? P[k - 2] : Int(0));
        // pivots must stay strictly below -1: 0 < P_{k-1} < P_k
        if (P[k] <= P[k - 1]) throw identity_error("resolve_cqs: singular adjunction system");
        U[k] = U[k - 1] + P[k - 1] * (out.e[k - 1] - 2);
    }
    if (P[l] != m) throw identity_error("resolve_cqs: chain determinant != m");
    V[l] = -U[l];
    for (std::size_t k = l - 1; k >= 1; --k) {
        Int num = P[k - 1] * V[k + 1] - m * U[k];
        if (num % P[k] != 0) throw identity_error("resolve_cqs: non-integral elimination step");
        V[k] = num / P[k];
    }
    out.disc.reserve(l);
    for (std::size_t k = 1; k <= l; ++k) out.disc.push_back(make_rat(V[k], m));

    // Pullback pairs: the boundary conditions f*(A).R_k = 0 make c_k the
    // remainder sequence of (m, q) and d_k the reversed remainder sequence of
    // (m, q^{-1} mod m).  Verify both against their defining linear systems.
    auto remainders = [](const Int& mm, const Int& qq) {
        std::vector<Int> r;
        Int a = mm, b = qq;
        while (b > 0) {
            r.push_back(b);
            Int e = (a + b - 1) / b;
            Int nb = e * b - a;
            a = b;
            b = nb;
        }
        return r;
    };
    out.c = remainders(m, q);
    out.d = remainders(m, mod_inverse(q, m));
    std::reverse(out.d.begin(), out.d.end());
    if (out.c.size() != l || out.d.size() != l)
        throw identity_error("resolve_cqs: pullback sequence length mismatch");

    auto row = [&](const std::vector<Int>& x, std::size_t k) {
        Int acc = -out.e[k] * x[k];
        if (k > 0) acc += x[k - 1];
        if (k + 1 < l) acc += x[k + 1];
        return acc;
    };
    for (std::size_t k = 0; k < l; ++k) {
        if (row(out.c, k) != (k == 0 ? -m : Int(0)))
            throw identity_error("resolve_cqs: pullback system for c fails at row " + std::to_string(k + 1));
        if (row(out.d, k) != (k + 1 == l ? -m : Int(0)))
            throw identity_error("resolve_cqs: pullback system for d fails at row " + std::to_string(k + 1));
        if (out.c[k] <= 0 || out.c[k] >= m || out.d[k] <= 0 || out.d[k] >= m)
            throw identity_error("resolve_cqs: pullback pair out of range at position " + std::to_string(k + 1));
        // independent recovery relation tying both routes together
        if (V[k + 1] != out.c[k] + out.d[k] - m)
            throw identity_error("resolve_cqs: discrepancy relation disc = -1 + (c+d)/m fails at position " +
                                 std::to_string(k + 1));
        if (V[k + 1] <= -m || V[k + 1] > 0)
            throw identity_error("resolve_cqs: discrepancy out of (-1, 0] at position " + std::to_string(k + 1));
    }
    return out;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1u) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1u;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    // deterministic witness set for all n < 3.3 * 10^24, hence for all 64-bit n
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n >= 18446744073709551557ull)  // largest 64-bit prime
        throw std::domain_error("next_prime: search would overflow 64 bits");
    std::uint64_t k = n + 1;
    if (k <= 2) return 2;
    if ((k & 1u) == 0) ++k;
    while (!is_prime(k)) k += 2;
    return k;
}

}  // namespace geolab::numtheory
