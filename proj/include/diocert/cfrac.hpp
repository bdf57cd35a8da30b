#pragma once

#include <vector>

#include "diocert/real.hpp"

namespace diocert {

// Partial quotients a_0, a_1, ... of a real number together with the
// exact convergents p_k/q_k from the standard recurrence.
class ContinuedFraction {
public:
    size_t size() const { return quotients_.size(); }
    const std::vector<BigInt>& partial_quotients() const { return quotients_; }

    const BigInt& p(size_t k) const;
    const BigInt& q(size_t k) const;
    Rational convergent(size_t k) const;

    void push_quotient(const BigInt& a);

private:
    std::vector<BigInt> quotients_;
    std::vector<BigInt> p_;  // p_{-2}=0, p_{-1}=1 pre-seeded
    std::vector<BigInt> q_;
};

// Expand x up to index k_max (inclusive).  Each quotient is certified: the
// floor is taken on the whole interval and must be unambiguous, else
// precision_exhausted.  The caller asserts x is irrational.
ContinuedFraction cfrac_expand(const CertifiedReal& x, int k_max);

// Same, recomputing x at doubling precision until the expansion certifies.
ContinuedFraction cfrac_expand(const RealFn& x, int k_max,
                               const PrecisionPolicy& policy = {});

// Expand until some q_k exceeds the threshold (plus `extra` more terms),
// escalating precision as needed.  Throws no_convergent_found if the
// denominators never get there within max_terms.
ContinuedFraction cfrac_expand_until_q_exceeds(const RealFn& x, const BigInt& threshold,
                                               int extra, const PrecisionPolicy& policy = {},
                                               int max_terms = 400);

} // namespace diocert
