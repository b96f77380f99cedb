#pragma once

// Dedekind sums and the rescaled Dedekind symbol.
//
//   sawtooth(x)      ((x)) = x - floor(x) - 1/2 for x not an integer, else 0
//   dedekind_sum     s(p,q) = sum_{k=1}^{|q|-1} ((k/q)) ((k p / q))
//   dedekind_symbol  S(p/q) = 12 sgn(q) s(p,q)
//
// The naive summation is the ground truth. dedekind_symbol_fast evaluates the
// same symbol by reciprocity descent (Euclidean, O(log)) and is what the
// heavier consumers (Kirby-Melvin brackets, splice prefactors) call; the two
// agree on every input, enforced by tests.

#include "rational.hpp"

namespace dedekind {

using exact::Int;
using exact::Rat;

// A fraction p/q, q != 0, gcd(p,q) = 1, kept as the raw pair (no sign
// normalization). Construction validates.
struct CoprimePair {
    Int p;
    Int q;

    CoprimePair(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
        if (q == 0) throw exact::ValidationError("CoprimePair: q must be nonzero");
        if (exact::gcd(p, q) != 1)
            throw exact::ValidationError("CoprimePair: p and q must be coprime");
    }

    // Builds the pair from an arbitrary fraction by reducing it.
    static CoprimePair from_fraction(const Int& num, const Int& den) {
        if (den == 0) throw exact::ValidationError("CoprimePair: zero denominator");
        Int g = exact::gcd(num, den);
        return CoprimePair(num / g, den / g);
    }

    static CoprimePair from_rat(const Rat& x) {
        return CoprimePair(numerator(x), denominator(x));
    }
};

// ((x)): 0 at integers, x - floor(x) - 1/2 otherwise.
Rat sawtooth(const Rat& x);

// Naive O(|q|) summation; exact.
Rat dedekind_sum(const CoprimePair& pq);

// 12 sgn(q) s(p,q).
Rat dedekind_symbol(const CoprimePair& pq);

// Same value as dedekind_symbol(CoprimePair::from_rat(x)), via the
// reciprocity recursion. x may be any rational (q is its denominator).
Rat dedekind_symbol_fast(const Rat& x);

}  // namespace dedekind
