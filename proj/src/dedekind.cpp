#include "dedekind.hpp"

namespace dedekind {

using exact::floor_div;

Rat sawtooth(const Rat& x) {
    if (denominator(x) == 1) return Rat(0);
    return x - Rat(exact::rat_floor(x)) - Rat(1, 2);
}

namespace {

// s(p,q) is invariant under q -> -q (both sawtooth factors flip sign), so the
// summation may assume q > 0. Each nonzero term is
//   ((k/q)) ((kp/q)) = (2(k mod q) - q) (2(kp mod q) - q) / (4 q^2),
// zero whenever either residue is 0.
Rat sum_int64(long long p, long long q) {
    __int128 acc = 0;
    for (long long k = 1; k < q; ++k) {
        long long m2 = (long long)(((__int128)k * p) % q);
        if (m2 < 0) m2 += q;
        if (m2 == 0) continue;
        acc += (__int128)(2 * k - q) * (2 * m2 - q);
    }
    bool neg = acc < 0;
    if (neg) acc = -acc;
    Int num = (Int((unsigned long long)(acc >> 64)) << 64) | Int((unsigned long long)(acc & ~0ULL));
    if (neg) num = -num;
    return Rat(num, Int(4) * q * q);
}

Rat sum_bigint(const Int& p, const Int& q) {
    Rat acc(0);
    Rat qr(q);
    for (Int k = 1; k < q; ++k) {
        Rat a = sawtooth(Rat(k) / qr);
        if (a == 0) continue;
        Rat b = sawtooth(Rat(k * p) / qr);
        if (b == 0) continue;
        acc += a * b;
    }
    return acc;
}

}  // namespace

Rat dedekind_sum(const CoprimePair& pq) {
    Int q = pq.q < 0 ? Int(-pq.q) : pq.q;
    const long long limit = 1LL << 30;
    if (pq.p > -limit && pq.p < limit && q < limit)
        return sum_int64((long long)pq.p, (long long)q);
    return sum_bigint(pq.p, q);
}

Rat dedekind_symbol(const CoprimePair& pq) {
    return Rat(12 * exact::sgn(pq.q)) * dedekind_sum(pq);
}

namespace {

// S on a fraction a/b with 0 < a < b, gcd 1, by reciprocity:
//   S(a/b) = a/b + b/a + 1/(ab) - 3 - S(b/a),   S(b/a) = S((b mod a)/a).
Rat symbol_descent(Int a, Int b) {
    Rat total(0);
    int sign = 1;
    while (a != 0 && b != 1) {
        total += Rat(sign) * (Rat(a, b) + Rat(b, a) + Rat(1, a * b) - 3);
        sign = -sign;
        Int r = b % a;  // a, b > 0 so r >= 0
        b = a;
        a = r;
    }
    return total;
}

}  // namespace

Rat dedekind_symbol_fast(const Rat& x) {
    // S is odd and 1-periodic: normalize to a representative a/b, 0 <= a < b.
    Int b = denominator(x);
    if (b == 1) return Rat(0);
    Int a = numerator(x) % b;
    if (a < 0) a += b;
    if (a == 0) return Rat(0);
    return symbol_descent(a, b);
}

}  // namespace dedekind
