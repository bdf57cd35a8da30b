#include "diocert/heights.hpp"

#include "diocert/recurrence.hpp"

namespace diocert {

QuadraticNumber::QuadraticNumber(Rational x, Rational y, BigInt delta)
    : x_(std::move(x)), y_(std::move(y)), delta_(std::move(delta)) {
    if (delta_ <= 0) throw domain_error("quadratic number needs delta > 0");
    if (is_perfect_square(delta_)) {
        x_ += y_ * Rational(exact_sqrt(delta_));
        y_ = 0;
    }
}

QuadraticNumber QuadraticNumber::from_rational(const Rational& x) {
    return QuadraticNumber(x, Rational(0), BigInt(1));
}

QuadraticNumber QuadraticNumber::sqrt_of(const BigInt& delta) {
    return QuadraticNumber(Rational(0), Rational(1), delta);
}

bool QuadraticNumber::is_root_of_unity() const {
    return y_ == 0 && (x_ == 1 || x_ == -1);
}

QuadraticNumber QuadraticNumber::conjugate() const {
    return QuadraticNumber(x_, -y_, delta_);
}

namespace {
void require_same_field(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (!a.is_rational() && !b.is_rational() && a.delta() != b.delta())
        throw domain_error("quadratic numbers from different fields");
}

BigInt shared_delta(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.is_rational() ? b.delta() : a.delta();
}
} // namespace

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
    require_same_field(*this, o);
    return QuadraticNumber(x_ + o.x_, y_ + o.y_, shared_delta(*this, o));
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const {
    require_same_field(*this, o);
    return QuadraticNumber(x_ - o.x_, y_ - o.y_, shared_delta(*this, o));
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
    require_same_field(*this, o);
    BigInt d = shared_delta(*this, o);
    return QuadraticNumber(x_ * o.x_ + y_ * o.y_ * Rational(d),
                           x_ * o.y_ + y_ * o.x_, d);
}

QuadraticNumber QuadraticNumber::operator*(const Rational& r) const {
    return QuadraticNumber(x_ * r, y_ * r, delta_);
}

QuadraticNumber QuadraticNumber::inverse() const {
    if (is_zero()) throw zero_input("inverse of zero");
    Rational n = norm();
    if (n == 0) throw zero_input("inverse of zero-norm element");
    return QuadraticNumber(x_ / n, -y_ / n, delta_);
}

QuadraticNumber QuadraticNumber::operator-() const {
    return QuadraticNumber(-x_, -y_, delta_);
}

QuadraticNumber QuadraticNumber::pow(unsigned e) const {
    QuadraticNumber r(Rational(1), Rational(0), delta_);
    QuadraticNumber base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rational QuadraticNumber::norm() const { return x_ * x_ - y_ * y_ * Rational(delta_); }
Rational QuadraticNumber::trace() const { return x_ * 2; }

std::array<BigInt, 3> QuadraticNumber::minimal_polynomial() const {
    if (is_rational()) {
        Rational v = x_;
        v.canonicalize();
        return {BigInt(0), denominator(v), -numerator(v)};
    }
    Rational tr = trace();
    Rational nm = norm();
    BigInt d;
    mpz_lcm(d.get_mpz_t(), denominator(tr).get_mpz_t(), denominator(nm).get_mpz_t());
    BigInt a = d;
    Rational bq = tr * Rational(d);
    Rational cq = nm * Rational(d);
    BigInt b = -numerator(bq);
    BigInt c = numerator(cq);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return {a / g, b / g, c / g};
}

CertifiedReal QuadraticNumber::value(long prec) const {
    CertifiedReal xs = CertifiedReal::from_rational(x_, prec);
    if (y_ == 0) return xs;
    CertifiedReal root = CertifiedReal::from_bigint(delta_, prec).sqrt();
    return xs + CertifiedReal::from_rational(y_, prec) * root;
}

CertifiedReal QuadraticNumber::abs_value(long prec) const {
    return value(prec).abs();
}

namespace {
CertifiedReal log_plus(const CertifiedReal& v) {
    CertifiedReal one = CertifiedReal::from_long(1, v.precision());
    return v.max(one).log();
}
} // namespace

CertifiedReal log_height(const QuadraticNumber& q, const PrecisionPolicy& policy) {
    if (q.is_zero()) throw zero_input("height of zero");
    auto poly = q.minimal_polynomial();
    if (q.degree() == 1) {
        BigInt den = poly[1];
        BigInt num = poly[2];  // aX + b with root -b/a
        return with_rising_precision(policy, [&](long prec) {
            BigInt anum = ::abs(num);
            CertifiedReal m = CertifiedReal::from_bigint(anum > den ? anum : den, prec);
            return m.log();
        });
    }
    return with_rising_precision(policy, [&](long prec) {
        CertifiedReal lead = CertifiedReal::from_bigint(poly[0], prec);
        CertifiedReal r1 = q.abs_value(prec);
        CertifiedReal r2 = q.conjugate().abs_value(prec);
        CertifiedReal h = (lead.log() + log_plus(r1) + log_plus(r2))
                          / CertifiedReal::from_long(2, prec);
        return h;
    });
}

bool pink_ziegler_floor(const QuadraticNumber& q, const PrecisionPolicy& policy) {
    if (q.is_root_of_unity()) return true;
    Rational floor_val = make_rational(24, 100);
    return with_rising_precision(policy, [&](long prec) {
        CertifiedReal f = CertifiedReal::from_rational(floor_val, prec);
        CertifiedReal hv = log_height(q, {prec, prec});
        return !CertifiedReal::decide_less(hv, f);
    });
}

namespace {
CertifiedReal a_of_i_impl(const ProblemSpec& spec, const std::vector<long>& gaps,
                          const PrecisionPolicy& policy, bool certified) {
    for (long g : gaps)
        if (g < 0) throw domain_error("a_of_i: gaps must be non-negative");
    const QuadraticNumber a = spec.rec.a_coefficient();
    const long i = static_cast<long>(gaps.size()) + 1;
    return with_rising_precision(policy, [&](long prec) {
        CertifiedReal log_abs_a = a.abs_value(prec).log();
        CertifiedReal lead = log_abs_a * 2;
        if (certified) {
            CertifiedReal h2 = log_height(a, {prec, prec}) * 2;
            lead = lead.max(h2).max(log_abs_a.abs());
        }
        CertifiedReal log_delta = CertifiedReal::from_bigint(spec.rec.delta(), prec).log();
        long gap_sum = 0;
        for (long g : gaps) gap_sum += g;
        CertifiedReal log_alpha = spec.rec.alpha(prec).abs().log();
        CertifiedReal gap_term = log_alpha * (2 * gap_sum);
        CertifiedReal log4 = CertifiedReal::from_long(4, prec).log() * i;
        return lead + log_delta + gap_term + log4;
    });
}
} // namespace

CertifiedReal a_of_i(const ProblemSpec& spec, const std::vector<long>& gaps,
                     const PrecisionPolicy& policy) {
    return a_of_i_impl(spec, gaps, policy, false);
}

CertifiedReal a_of_i_certified(const ProblemSpec& spec, const std::vector<long>& gaps,
                               const PrecisionPolicy& policy) {
    return a_of_i_impl(spec, gaps, policy, true);
}

} // namespace diocert
