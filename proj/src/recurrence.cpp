#include "diocert/recurrence.hpp"

#include <algorithm>

namespace diocert {

BinaryRecurrence::BinaryRecurrence(BigInt P, BigInt Q, BigInt U0, BigInt U1)
    : P_(std::move(P)), Q_(std::move(Q)), U0_(std::move(U0)), U1_(std::move(U1)) {
    if (P_ == 0 || Q_ == 0) throw degenerate_spec("recurrence needs P*Q != 0");
    if (U0_ == 0 && U1_ == 0) throw degenerate_spec("recurrence needs |U0|+|U1| > 0");
    delta_ = P_ * P_ + 4 * Q_;
    if (delta_ <= 0) throw degenerate_spec("recurrence needs positive discriminant");
    // alpha - beta = sqrt(delta) > 0 and |alpha| > |beta| together force
    // alpha > 0, i.e. P >= 1.  Negative P maps to the sequence (-1)^n U_n
    // with P' = -P, which callers can apply themselves.
    if (P_ < 0)
        throw degenerate_spec("dominant-root hypothesis needs P > 0 (negate odd terms to flip the sign of P)");
    if (a_coefficient().is_zero() || b_coefficient().is_zero())
        throw degenerate_spec("degenerate recurrence: a*b == 0");
    // alpha/beta is real; a root of unity only if alpha/beta = +-1, which is
    // excluded exactly by delta > 0 (not both roots equal) and P != 0.
    memo_ = {U0_, U1_};
}

CertifiedReal BinaryRecurrence::sqrt_delta(long prec) const {
    return CertifiedReal::from_bigint(delta_, prec).sqrt();
}

CertifiedReal BinaryRecurrence::alpha(long prec) const {
    return (CertifiedReal::from_bigint(P_, prec) + sqrt_delta(prec))
           / CertifiedReal::from_long(2, prec);
}

CertifiedReal BinaryRecurrence::beta(long prec) const {
    return (CertifiedReal::from_bigint(P_, prec) - sqrt_delta(prec))
           / CertifiedReal::from_long(2, prec);
}

QuadraticNumber BinaryRecurrence::alpha_quadratic() const {
    return QuadraticNumber(make_rational(P_, 2), make_rational(1, 2), delta_);
}

QuadraticNumber BinaryRecurrence::beta_quadratic() const {
    return QuadraticNumber(make_rational(P_, 2), make_rational(-1, 2), delta_);
}

QuadraticNumber BinaryRecurrence::a_coefficient() const {
    // U1 - U0*(P - sqrt(delta))/2
    return QuadraticNumber(Rational(U1_) - make_rational(U0_ * P_, 2),
                           make_rational(U0_, 2), delta_);
}

QuadraticNumber BinaryRecurrence::b_coefficient() const {
    return QuadraticNumber(Rational(U1_) - make_rational(U0_ * P_, 2),
                           make_rational(-U0_, 2), delta_);
}

BigInt BinaryRecurrence::term(long n) const {
    if (n < 0) throw domain_error("term index must be non-negative");
    std::lock_guard<std::mutex> lock(memo_mutex_);
    while (static_cast<long>(memo_.size()) <= n) {
        size_t k = memo_.size();
        memo_.push_back(P_ * memo_[k - 1] + Q_ * memo_[k - 2]);
    }
    return memo_[n];
}

ProblemSpec::ProblemSpec(BinaryRecurrence r, std::vector<BigInt> ps, std::vector<BigInt> bs,
                         int t_terms, Rational eps)
    : rec(std::move(r)), primes(std::move(ps)), coefficients(std::move(bs)),
      t(t_terms), epsilon(std::move(eps)) {
    if (primes.empty()) throw degenerate_spec("at least one prime required");
    if (coefficients.size() != primes.size())
        throw degenerate_spec("one coefficient per prime required");
    if (!std::is_sorted(primes.begin(), primes.end()))
        throw degenerate_spec("primes must be sorted ascending");
    for (const BigInt& p : primes)
        if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
            throw degenerate_spec("non-prime in prime list");
    for (const BigInt& b : coefficients)
        if (b < 1) throw degenerate_spec("coefficients must be positive");
    if (t < 1) throw degenerate_spec("t must be at least 1");
    if (epsilon <= 0 || epsilon >= 1) throw degenerate_spec("epsilon must lie in (0,1)");
}

BigInt ProblemSpec::K() const {
    return *std::max_element(coefficients.begin(), coefficients.end());
}

bool ProblemSpec::all_primes_equal() const {
    return primes.front() == primes.back();
}

ProblemSpec ProblemSpec::fibonacci_2_3() {
    return ProblemSpec(BinaryRecurrence::fibonacci(), {BigInt(2), BigInt(3)},
                       {BigInt(1), BigInt(1)}, 2, make_rational(1, 2));
}

std::pair<CertifiedReal, CertifiedReal> growth_constants(const ProblemSpec& spec,
                                                         const PrecisionPolicy& policy) {
    const QuadraticNumber a = spec.rec.a_coefficient();
    const QuadraticNumber b = spec.rec.b_coefficient();
    CertifiedReal c0 = with_rising_precision(policy, [&](long prec) {
        CertifiedReal num = a.abs_value(prec) + b.abs_value(prec);
        return num / spec.rec.sqrt_delta(prec);
    });
    CertifiedReal c1 = with_rising_precision(policy, [&](long prec) {
        CertifiedReal la = spec.rec.alpha(prec).abs().log();
        CertifiedReal lp1 = CertifiedReal::from_bigint(spec.primes.front(), prec).log();
        CertifiedReal lps = CertifiedReal::from_bigint(spec.primes.back(), prec).log();
        CertifiedReal branch1 = la * 2 / lps;
        CertifiedReal branch2 = la * (lps + lp1) / (lp1 * lps * 2);
        return branch1.max(branch2);
    });
    return {c0, c1};
}

CertifiedReal nonvanishing_threshold(const ProblemSpec& spec, const PrecisionPolicy& policy) {
    const QuadraticNumber a = spec.rec.a_coefficient();
    const QuadraticNumber b = spec.rec.b_coefficient();
    const BigInt& bs = spec.coefficients.back();
    CertifiedReal c1 = growth_constants(spec, policy).second;
    return with_rising_precision(policy, [&](long prec) {
        CertifiedReal abs_a = a.abs_value(prec);
        CertifiedReal abs_b = b.abs_value(prec);
        if (!abs_a.certainly_positive() || !abs_b.certainly_positive())
            throw precision_exhausted("nonvanishing: |a| or |b| not separated from zero");
        CertifiedReal alpha_abs = spec.rec.alpha(prec).abs();
        CertifiedReal beta_abs = spec.rec.beta(prec).abs();
        if (!beta_abs.certainly_positive())
            throw precision_exhausted("nonvanishing: |beta| not separated from zero");
        CertifiedReal log_alpha = alpha_abs.log();
        CertifiedReal log_ratio = (alpha_abs / beta_abs).log();
        CertifiedReal r = spec.rec.sqrt_delta(prec);
        CertifiedReal lps = CertifiedReal::from_bigint(spec.primes.back(), prec).log();
        // log(|alpha| / p_s^{c1}); c1 >= 2 log|alpha|/log p_s makes this
        // strictly negative, but guard against a zero interval anyway.
        CertifiedReal denom3 = log_alpha - c1 * lps;
        if (denom3.contains_zero())
            throw degenerate_denominator("nonvanishing: |alpha| = p_s^c1");
        CertifiedReal best = CertifiedReal::from_long(0, prec);
        bool first = true;
        for (int i = 1; i <= spec.t; ++i) {
            CertifiedReal num12 = (abs_b / abs_a * i).log();
            CertifiedReal num3 = (abs_b * 0 + CertifiedReal::from_bigint(bs, prec) * r / abs_a).log();
            CertifiedReal b1 = num12 / log_ratio;
            CertifiedReal b2 = num12 / log_alpha;
            CertifiedReal b3 = num3 / denom3;
            CertifiedReal m = b1.max(b2).max(b3);
            best = first ? m : best.max(m);
            first = false;
        }
        return best;
    });
}

} // namespace diocert
