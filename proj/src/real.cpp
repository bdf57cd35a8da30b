#include "diocert/real.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace diocert {

namespace {
constexpr long kMinPrec = 64;

long clamp_prec(long p) { return std::max(p, kMinPrec); }
} // namespace

CertifiedReal::CertifiedReal() : CertifiedReal(kMinPrec) {}

CertifiedReal::CertifiedReal(long prec) : prec_(clamp_prec(prec)) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

CertifiedReal::CertifiedReal(const CertifiedReal& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

CertifiedReal::CertifiedReal(CertifiedReal&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, kMinPrec);
    mpfr_init2(hi_, kMinPrec);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

CertifiedReal& CertifiedReal::operator=(const CertifiedReal& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
        prec_ = o.prec_;
    }
    return *this;
}

CertifiedReal& CertifiedReal::operator=(CertifiedReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        prec_ = o.prec_;
    }
    return *this;
}

CertifiedReal::~CertifiedReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

CertifiedReal CertifiedReal::from_long(long v, long prec) {
    CertifiedReal r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::from_bigint(const BigInt& v, long prec) {
    // widen so integer constants stay exact
    long need = static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)) + 2;
    CertifiedReal r(std::max(clamp_prec(prec), need));
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::from_rational(const Rational& v, long prec) {
    CertifiedReal r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

void CertifiedReal::normalize_check() const {
    if (mpfr_cmp(lo_, hi_) > 0)
        throw domain_error("interval invariant violated (lo > hi)");
}

CertifiedReal CertifiedReal::operator+(const CertifiedReal& o) const {
    CertifiedReal r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::operator-(const CertifiedReal& o) const {
    CertifiedReal r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::operator*(const CertifiedReal& o) const {
    CertifiedReal r(std::max(prec_, o.prec_));
    mpfr_t t, best_lo, best_hi;
    mpfr_init2(t, r.prec_);
    mpfr_init2(best_lo, r.prec_);
    mpfr_init2(best_hi, r.prec_);
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t, as[i], bs[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, best_lo) < 0) mpfr_set(best_lo, t, MPFR_RNDD);
            mpfr_mul(t, as[i], bs[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, best_hi) > 0) mpfr_set(best_hi, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_set(r.lo_, best_lo, MPFR_RNDD);
    mpfr_set(r.hi_, best_hi, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    return r;
}

CertifiedReal CertifiedReal::operator/(const CertifiedReal& o) const {
    if (o.is_exact_zero()) throw domain_error("division by zero interval");
    if (o.contains_zero())
        throw precision_exhausted("divisor interval contains zero");
    CertifiedReal r(std::max(prec_, o.prec_));
    mpfr_t t, best_lo, best_hi;
    mpfr_init2(t, r.prec_);
    mpfr_init2(best_lo, r.prec_);
    mpfr_init2(best_hi, r.prec_);
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            mpfr_div(t, as[i], bs[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, best_lo) < 0) mpfr_set(best_lo, t, MPFR_RNDD);
            mpfr_div(t, as[i], bs[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, best_hi) > 0) mpfr_set(best_hi, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_set(r.lo_, best_lo, MPFR_RNDD);
    mpfr_set(r.hi_, best_hi, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    return r;
}

CertifiedReal CertifiedReal::operator-() const {
    CertifiedReal r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::abs() const {
    CertifiedReal r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    // straddles zero: |x| in [0, max(-lo, hi)]
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_neg(t, lo_, MPFR_RNDU);
    if (mpfr_cmp(t, hi_) > 0)
        mpfr_set(r.hi_, t, MPFR_RNDU);
    else
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

CertifiedReal CertifiedReal::log() const {
    if (mpfr_sgn(hi_) <= 0) throw domain_error("log of nonpositive value");
    if (mpfr_sgn(lo_) <= 0)
        throw precision_exhausted("log argument not certified positive");
    CertifiedReal r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::sqrt() const {
    if (mpfr_sgn(hi_) < 0) throw domain_error("sqrt of negative value");
    if (mpfr_sgn(lo_) < 0)
        throw precision_exhausted("sqrt argument not certified nonnegative");
    CertifiedReal r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::exp() const {
    CertifiedReal r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::pow_int(long e) const {
    if (e == 0) return from_long(1, prec_);
    if (e < 0) return from_long(1, prec_) / pow_int(-e);
    CertifiedReal r(prec_);
    if (mpfr_sgn(lo_) >= 0) {
        mpfr_pow_si(r.lo_, lo_, e, MPFR_RNDD);
        mpfr_pow_si(r.hi_, hi_, e, MPFR_RNDU);
        return r;
    }
    if (mpfr_sgn(hi_) <= 0) {
        if (e % 2 == 0) {
            mpfr_pow_si(r.lo_, hi_, e, MPFR_RNDD);
            mpfr_pow_si(r.hi_, lo_, e, MPFR_RNDU);
        } else {
            mpfr_pow_si(r.lo_, lo_, e, MPFR_RNDD);
            mpfr_pow_si(r.hi_, hi_, e, MPFR_RNDU);
        }
        return r;
    }
    // straddles zero
    if (e % 2 == 0) {
        mpfr_t a, b;
        mpfr_init2(a, prec_);
        mpfr_init2(b, prec_);
        mpfr_pow_si(a, lo_, e, MPFR_RNDU);
        mpfr_pow_si(b, hi_, e, MPFR_RNDU);
        mpfr_set_zero(r.lo_, 1);
        mpfr_set(r.hi_, mpfr_cmp(a, b) > 0 ? a : b, MPFR_RNDU);
        mpfr_clear(a);
        mpfr_clear(b);
    } else {
        mpfr_pow_si(r.lo_, lo_, e, MPFR_RNDD);
        mpfr_pow_si(r.hi_, hi_, e, MPFR_RNDU);
    }
    return r;
}

CertifiedReal CertifiedReal::pow(const CertifiedReal& e) const {
    return (e * log()).exp();
}

CertifiedReal CertifiedReal::min(const CertifiedReal& o) const {
    CertifiedReal r(std::max(prec_, o.prec_));
    mpfr_set(r.lo_, mpfr_cmp(lo_, o.lo_) < 0 ? lo_ : o.lo_, MPFR_RNDD);
    mpfr_set(r.hi_, mpfr_cmp(hi_, o.hi_) < 0 ? hi_ : o.hi_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::max(const CertifiedReal& o) const {
    CertifiedReal r(std::max(prec_, o.prec_));
    mpfr_set(r.lo_, mpfr_cmp(lo_, o.lo_) > 0 ? lo_ : o.lo_, MPFR_RNDD);
    mpfr_set(r.hi_, mpfr_cmp(hi_, o.hi_) > 0 ? hi_ : o.hi_, MPFR_RNDU);
    return r;
}

bool CertifiedReal::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool CertifiedReal::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool CertifiedReal::certainly_nonneg() const { return mpfr_sgn(lo_) >= 0; }

bool CertifiedReal::is_exact_zero() const {
    return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
}

bool CertifiedReal::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool CertifiedReal::certainly_less(const CertifiedReal& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool CertifiedReal::certainly_le(const CertifiedReal& o) const {
    return mpfr_cmp(hi_, o.lo_) <= 0;
}

bool CertifiedReal::contains(const CertifiedReal& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
}

bool CertifiedReal::contains_bigint(const BigInt& v) const {
    return mpfr_cmp_z(lo_, v.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, v.get_mpz_t()) >= 0;
}

bool CertifiedReal::decide_less(const CertifiedReal& a, const CertifiedReal& b) {
    if (a.certainly_less(b)) return true;
    if (mpfr_cmp(b.hi_, a.lo_) <= 0) return false;
    throw precision_exhausted("comparison not certified");
}

BigInt CertifiedReal::floor_lower() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
    return z;
}

BigInt CertifiedReal::ceil_upper() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
    return z;
}

BigInt CertifiedReal::floor_certified() const {
    BigInt a = floor_lower();
    BigInt b;
    mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDD);
    if (a != b) throw precision_exhausted("floor straddles an integer");
    return a;
}

BigInt CertifiedReal::ceil_certified() const {
    BigInt a, b;
    mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDU);
    mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDU);
    if (a != b) throw precision_exhausted("ceil straddles an integer");
    return a;
}

BigInt CertifiedReal::nearest_integer() const {
    mpfr_t mid;
    mpfr_init2(mid, prec_ + 8);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), mid, MPFR_RNDN);
    mpfr_clear(mid);
    return z;
}

CertifiedReal CertifiedReal::lower_endpoint() const {
    CertifiedReal r(prec_);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, lo_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::upper_endpoint() const {
    CertifiedReal r(prec_);
    mpfr_set(r.lo_, hi_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::midpoint() const {
    CertifiedReal r(prec_);
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDD);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
    mpfr_add(r.hi_, lo_, hi_, MPFR_RNDU);
    mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::error_radius() const {
    CertifiedReal r(prec_);
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
    mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
    if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
    return r;
}

double CertifiedReal::to_double() const {
    mpfr_t mid;
    mpfr_init2(mid, 64);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    double d = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(mid);
    return d;
}

namespace {
std::string mpfr_decimal(const mpfr_t v, int digits) {
    char buf[512];
    mpfr_snprintf(buf, sizeof buf, "%.*Re", digits, v);
    return std::string(buf);
}
} // namespace

std::string CertifiedReal::decimal_midpoint(int digits) const {
    mpfr_t mid;
    mpfr_init2(mid, prec_ + 8);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    std::string s = mpfr_decimal(mid, digits);
    mpfr_clear(mid);
    return s;
}

std::string CertifiedReal::decimal_radius() const {
    mpfr_t rad;
    mpfr_init2(rad, 64);
    mpfr_sub(rad, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(rad, rad, 1, MPFR_RNDU);
    std::string s = mpfr_decimal(rad, 3);
    mpfr_clear(rad);
    return s;
}

CertifiedReal operator+(long a, const CertifiedReal& b) {
    return CertifiedReal::from_long(a, b.precision()) + b;
}
CertifiedReal operator-(long a, const CertifiedReal& b) {
    return CertifiedReal::from_long(a, b.precision()) - b;
}
CertifiedReal operator*(long a, const CertifiedReal& b) {
    return CertifiedReal::from_long(a, b.precision()) * b;
}
CertifiedReal operator/(long a, const CertifiedReal& b) {
    return CertifiedReal::from_long(a, b.precision()) / b;
}
CertifiedReal operator+(const CertifiedReal& a, long b) {
    return a + CertifiedReal::from_long(b, a.precision());
}
CertifiedReal operator-(const CertifiedReal& a, long b) {
    return a - CertifiedReal::from_long(b, a.precision());
}
CertifiedReal operator*(const CertifiedReal& a, long b) {
    return a * CertifiedReal::from_long(b, a.precision());
}
CertifiedReal operator/(const CertifiedReal& a, long b) {
    return a / CertifiedReal::from_long(b, a.precision());
}

RealFn constant_fn(const Rational& v) {
    return [v](long prec) { return CertifiedReal::from_rational(v, prec); };
}

RealFn constant_fn(const BigInt& v) {
    return [v](long prec) { return CertifiedReal::from_bigint(v, prec); };
}

RealFn constant_fn(long v) {
    return [v](long prec) { return CertifiedReal::from_long(v, prec); };
}

RealFn memoize_fn(RealFn fn) {
    auto cache = std::make_shared<std::map<long, CertifiedReal>>();
    auto mtx = std::make_shared<std::mutex>();
    return [fn = std::move(fn), cache, mtx](long prec) {
        {
            std::lock_guard<std::mutex> lock(*mtx);
            auto it = cache->find(prec);
            if (it != cache->end()) return it->second;
        }
        CertifiedReal v = fn(prec);
        std::lock_guard<std::mutex> lock(*mtx);
        return cache->emplace(prec, std::move(v)).first->second;
    };
}

CertifiedReal certified_log(const Rational& x, long prec) {
    if (x <= 0) throw domain_error("log of nonpositive rational");
    return CertifiedReal::from_rational(x, prec).log();
}

CertifiedReal certified_log(const CertifiedReal& x) { return x.log(); }

CertifiedReal certified_sqrt(const Rational& x, long prec) {
    if (x < 0) throw domain_error("sqrt of negative rational");
    return CertifiedReal::from_rational(x, prec).sqrt();
}

CertifiedReal certified_sqrt(const CertifiedReal& x) { return x.sqrt(); }

CertifiedReal nearest_int_distance(const CertifiedReal& x) {
    CertifiedReal quarter = CertifiedReal::from_rational(make_rational(1, 4), x.precision());
    if (!x.error_radius().certainly_less(quarter))
        throw precision_exhausted("nearest_int_distance: radius not below 1/4");
    BigInt n = x.nearest_integer();
    CertifiedReal d = (x - CertifiedReal::from_bigint(n, x.precision())).abs();
    CertifiedReal half = CertifiedReal::from_rational(make_rational(1, 2), x.precision());
    if (mpfr_cmp(d.hi_raw(), half.lo_raw()) > 0)
        throw precision_exhausted("nearest_int_distance: straddles a half-integer");
    return d;
}

} // namespace diocert
