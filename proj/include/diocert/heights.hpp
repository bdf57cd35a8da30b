#pragma once

#include <array>
#include <vector>

#include "diocert/real.hpp"

namespace diocert {

struct ProblemSpec;

// Element x + y*sqrt(delta) of a real quadratic field (delta > 0).
// Square deltas are folded into the rational part at construction, so
// y != 0 implies degree 2 with an exact integral minimal polynomial.
class QuadraticNumber {
public:
    QuadraticNumber(Rational x, Rational y, BigInt delta);
    static QuadraticNumber from_rational(const Rational& x);
    static QuadraticNumber sqrt_of(const BigInt& delta);

    const Rational& rational_part() const { return x_; }
    const Rational& surd_part() const { return y_; }
    const BigInt& delta() const { return delta_; }

    int degree() const { return y_ == 0 ? 1 : 2; }
    bool is_rational() const { return y_ == 0; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_root_of_unity() const;  // real quadratic: only +-1

    QuadraticNumber conjugate() const;
    QuadraticNumber operator+(const QuadraticNumber& o) const;
    QuadraticNumber operator-(const QuadraticNumber& o) const;
    QuadraticNumber operator*(const QuadraticNumber& o) const;
    QuadraticNumber operator*(const Rational& r) const;
    QuadraticNumber inverse() const;
    QuadraticNumber operator-() const;
    QuadraticNumber pow(unsigned e) const;

    Rational norm() const;   // x^2 - y^2*delta
    Rational trace() const;  // 2x

    // Primitive integral minimal polynomial, leading coefficient positive.
    // Degree 2: {a, b, c} for aX^2+bX+c; degree 1: {0, a, b} for aX+b.
    std::array<BigInt, 3> minimal_polynomial() const;

    CertifiedReal value(long prec) const;
    CertifiedReal abs_value(long prec) const;  // certified |x + y sqrt(delta)|

private:
    Rational x_, y_;
    BigInt delta_;
};

// Logarithmic Weil height from the exact minimal polynomial.
CertifiedReal log_height(const QuadraticNumber& q, const PrecisionPolicy& policy = {});

// Degree-two height floor: h >= 0.24 unless the number is a root of unity.
bool pink_ziegler_floor(const QuadraticNumber& q, const PrecisionPolicy& policy = {});

// A(i) = 2 log|a| + log(delta) + 2 (sum of gaps) log|alpha| + i log 4,
// the height/logarithm bound for the composite third logarithm built from
// i recurrence terms with the given index gaps (gaps has i-1 entries).
CertifiedReal a_of_i(const ProblemSpec& spec, const std::vector<long>& gaps,
                     const PrecisionPolicy& policy = {});

// Variant that stays valid when |a| or its conjugate is below 1: the
// 2 log|a| term is replaced by max(2 log|a|, 2 h(a), |log|a||).
CertifiedReal a_of_i_certified(const ProblemSpec& spec, const std::vector<long>& gaps,
                               const PrecisionPolicy& policy = {});

} // namespace diocert
