#include "diocert/cfrac.hpp"

namespace diocert {

const BigInt& ContinuedFraction::p(size_t k) const {
    if (k >= quotients_.size()) throw index_out_of_range("convergent index out of range");
    return p_[k + 2];
}

const BigInt& ContinuedFraction::q(size_t k) const {
    if (k >= quotients_.size()) throw index_out_of_range("convergent index out of range");
    return q_[k + 2];
}

Rational ContinuedFraction::convergent(size_t k) const {
    return make_rational(p(k), q(k));
}

void ContinuedFraction::push_quotient(const BigInt& a) {
    if (p_.empty()) {
        p_ = {BigInt(0), BigInt(1)};
        q_ = {BigInt(1), BigInt(0)};
    }
    if (!quotients_.empty() && a < 1)
        throw domain_error("partial quotient below 1 at k >= 1");
    quotients_.push_back(a);
    p_.push_back(a * p_[p_.size() - 1] + p_[p_.size() - 2]);
    q_.push_back(a * q_[q_.size() - 1] + q_[q_.size() - 2]);
}

ContinuedFraction cfrac_expand(const CertifiedReal& x, int k_max) {
    ContinuedFraction cf;
    CertifiedReal y = x;
    for (int k = 0; k <= k_max; ++k) {
        BigInt a = y.floor_certified();
        cf.push_quotient(a);
        if (k == k_max) break;
        CertifiedReal frac = y - CertifiedReal::from_bigint(a, y.precision());
        if (!frac.certainly_positive())
            throw precision_exhausted("cfrac: fractional part not certified positive");
        y = CertifiedReal::from_long(1, y.precision()) / frac;
    }
    return cf;
}

ContinuedFraction cfrac_expand(const RealFn& x, int k_max, const PrecisionPolicy& policy) {
    return with_rising_precision(policy, [&](long prec) {
        return cfrac_expand(x(prec), k_max);
    });
}

ContinuedFraction cfrac_expand_until_q_exceeds(const RealFn& x, const BigInt& threshold,
                                               int extra, const PrecisionPolicy& policy,
                                               int max_terms) {
    int k_max = 16;
    for (;;) {
        ContinuedFraction cf = cfrac_expand(x, k_max, policy);
        for (size_t k = 0; k < cf.size(); ++k) {
            if (cf.q(k) > threshold) {
                int need = static_cast<int>(k) + extra;
                if (static_cast<int>(cf.size()) > need) return cf;
                return cfrac_expand(x, need, policy);
            }
        }
        if (k_max >= max_terms)
            throw no_convergent_found("no convergent denominator exceeds threshold within term cap");
        k_max = std::min(k_max * 2, max_terms);
    }
}

} // namespace diocert
