#pragma once

#include <mpfr.h>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "diocert/bigint.hpp"
#include "diocert/errors.hpp"

namespace diocert {

// Escalation policy for certified computations: start precision in bits,
// doubling on precision_exhausted up to the ceiling.
struct PrecisionPolicy {
    long start = 192;
    long ceiling = 16384;
};

// A real number known rigorously: the true value lies in [lo, hi].
// Every operation rounds lo down and hi up, so enclosures never lie.
// midpoint()/error_radius() expose the equivalent center-radius view.
class CertifiedReal {
public:
    CertifiedReal();
    explicit CertifiedReal(long prec);
    CertifiedReal(const CertifiedReal& o);
    CertifiedReal(CertifiedReal&& o) noexcept;
    CertifiedReal& operator=(const CertifiedReal& o);
    CertifiedReal& operator=(CertifiedReal&& o) noexcept;
    ~CertifiedReal();

    static CertifiedReal from_long(long v, long prec);
    static CertifiedReal from_bigint(const BigInt& v, long prec);
    static CertifiedReal from_rational(const Rational& v, long prec);

    long precision() const { return prec_; }

    CertifiedReal operator+(const CertifiedReal& o) const;
    CertifiedReal operator-(const CertifiedReal& o) const;
    CertifiedReal operator*(const CertifiedReal& o) const;
    CertifiedReal operator/(const CertifiedReal& o) const;
    CertifiedReal operator-() const;
    CertifiedReal abs() const;

    CertifiedReal log() const;
    CertifiedReal sqrt() const;
    CertifiedReal exp() const;
    CertifiedReal pow_int(long e) const;
    CertifiedReal pow(const CertifiedReal& e) const;  // exp(e*log(*this)), base > 0

    CertifiedReal min(const CertifiedReal& o) const;
    CertifiedReal max(const CertifiedReal& o) const;

    // Certified facts about the whole interval.
    bool certainly_positive() const;
    bool certainly_negative() const;
    bool certainly_nonneg() const;
    bool is_exact_zero() const;
    bool contains_zero() const;
    bool certainly_less(const CertifiedReal& o) const;     // hi <  o.lo
    bool certainly_le(const CertifiedReal& o) const;       // hi <= o.lo
    bool contains(const CertifiedReal& o) const;           // o subseteq this
    bool contains_bigint(const BigInt& v) const;

    // Decide a < b for the true values; throws precision_exhausted when the
    // intervals overlap and the answer cannot be certified.
    static bool decide_less(const CertifiedReal& a, const CertifiedReal& b);

    // Exact integer bounds.  floor/ceil throw precision_exhausted when the
    // interval straddles an integer boundary; the *_outward forms never do.
    BigInt floor_certified() const;
    BigInt ceil_certified() const;
    BigInt floor_lower() const;   // floor of the lower endpoint
    BigInt ceil_upper() const;    // ceil of the upper endpoint
    BigInt nearest_integer() const;  // nearest to the midpoint

    CertifiedReal lower_endpoint() const;  // point interval at lo
    CertifiedReal upper_endpoint() const;  // point interval at hi

    CertifiedReal midpoint() const;
    CertifiedReal error_radius() const;

    double to_double() const;  // midpoint approximation, display only
    std::string decimal_midpoint(int digits = 36) const;
    std::string decimal_radius() const;

    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }
    mpfr_t& lo_raw() { return lo_; }
    mpfr_t& hi_raw() { return hi_; }
    void normalize_check() const;  // asserts lo <= hi

private:
    mpfr_t lo_, hi_;
    long prec_;
};

CertifiedReal operator+(long a, const CertifiedReal& b);
CertifiedReal operator-(long a, const CertifiedReal& b);
CertifiedReal operator*(long a, const CertifiedReal& b);
CertifiedReal operator/(long a, const CertifiedReal& b);
CertifiedReal operator+(const CertifiedReal& a, long b);
CertifiedReal operator-(const CertifiedReal& a, long b);
CertifiedReal operator*(const CertifiedReal& a, long b);
CertifiedReal operator/(const CertifiedReal& a, long b);

// A value recomputable at any working precision; the unit of escalation.
using RealFn = std::function<CertifiedReal(long prec)>;

RealFn constant_fn(const Rational& v);
RealFn constant_fn(const BigInt& v);
RealFn constant_fn(long v);

// Wrap fn so repeated evaluation at the same precision reuses the result.
// Thread-safe; used when many workers share one base constant.
RealFn memoize_fn(RealFn fn);

// Run f(prec) with doubling precision until it stops throwing
// precision_exhausted, or rethrow once the ceiling is passed.
template <typename F>
auto with_rising_precision(const PrecisionPolicy& policy, F&& f) {
    long p = policy.start;
    for (;;) {
        try {
            return f(p);
        } catch (const precision_exhausted&) {
            if (p >= policy.ceiling) throw;
            p = std::min(p * 2, policy.ceiling);
        }
    }
}

// Spec'd arithmetic entry points.
CertifiedReal certified_log(const Rational& x, long prec);
CertifiedReal certified_log(const CertifiedReal& x);
CertifiedReal certified_sqrt(const Rational& x, long prec);
CertifiedReal certified_sqrt(const CertifiedReal& x);

// Distance from x to the nearest integer, in [0, 1/2].  Requires the
// radius to be below 1/4; throws precision_exhausted when x straddles a
// half-integer ambiguously.
CertifiedReal nearest_int_distance(const CertifiedReal& x);

} // namespace diocert
