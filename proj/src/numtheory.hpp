#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace geolab::numtheory {

// Hirzebruch-Jung (negative-regular) continued fraction
//   m/q = e1 - 1/(e2 - 1/(... - 1/el)),   all ek >= 2.
struct HjChain {
    Int m, q;
    std::vector<Int> e;
    Int length() const { return Int(e.size()); }
};

// pre: m >= 2, 0 < q < m, gcd(q, m) = 1.
HjChain hj_expand(const Int& m, const Int& q);

// Chain length l(q, m) without materializing the chain; runs of 2's are
// consumed in one step, so this is fast even for l ~ m.
Int hj_length(const Int& m, const Int& q);

// Dedekind sum s(q, m) = sum_{i=1}^{m-1} ((i/m)) ((iq/m)), computed by the
// reciprocity recursion (logarithmic in m).  pre: m >= 1, q >= 0, gcd(q,m)=1.
Rat dedekind_sum(const Int& q, const Int& m);

// c(q, m) = 12 s(q, m) + l(q, m): the per-node coefficient entering the
// self-intersection side of the cover formulas.
Rat c_coeff(const Int& q, const Int& m);

// Unique q in (0, m) with nu_i + q * nu_j == 0 (mod m); multiplicities are
// reduced mod m first and must both be coprime to m.  pre: m >= 2.
Int node_q(const Int& nu_i, const Int& nu_j, const Int& m);

// Minimal resolution data of the cyclic quotient singularity (1/m)(1, q):
// a chain of rational curves R_1..R_l with R_k^2 = -e_k, discrepancies from
// the adjunction system, and the integer pullback pairs (c_k, d_k) of the
// two transverse branches meeting R_1 resp. R_l.
struct CqsResolution {
    Int m, q;
    std::vector<Int> e;
    std::vector<Rat> disc;  // each in (-1, 0]
    std::vector<Int> c, d;  // each in (0, m)
};

// pre: m >= 2, 0 < q < m, gcd(q, m) = 1.
CqsResolution resolve_cqs(const Int& m, const Int& q);

// Deterministic for every 64-bit input (Miller-Rabin, fixed witness set).
bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n; throws std::domain_error past 2^63.
std::uint64_t next_prime(std::uint64_t n);

}  // namespace geolab::numtheory
