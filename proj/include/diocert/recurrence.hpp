#pragma once

#include <mutex>
#include <utility>
#include <vector>

#include "diocert/heights.hpp"
#include "diocert/real.hpp"

namespace diocert {

// Binary recurrence U_n = P U_{n-1} + Q U_{n-2} with positive discriminant
// and dominant positive root alpha > |beta| (so P >= 1).  Validated at
// construction: non-degenerate, |U0|+|U1| > 0, PQ != 0.
class BinaryRecurrence {
public:
    BinaryRecurrence(BigInt P, BigInt Q, BigInt U0, BigInt U1);

    static BinaryRecurrence fibonacci() { return {1, 1, 0, 1}; }

    const BigInt& P() const { return P_; }
    const BigInt& Q() const { return Q_; }
    const BigInt& U0() const { return U0_; }
    const BigInt& U1() const { return U1_; }
    const BigInt& delta() const { return delta_; }

    int field_degree() const { return is_perfect_square(delta_) ? 1 : 2; }

    CertifiedReal alpha(long prec) const;       // (P + sqrt(delta))/2
    CertifiedReal beta(long prec) const;        // (P - sqrt(delta))/2
    CertifiedReal sqrt_delta(long prec) const;

    QuadraticNumber alpha_quadratic() const;
    QuadraticNumber beta_quadratic() const;
    QuadraticNumber a_coefficient() const;  // U1 - U0*beta
    QuadraticNumber b_coefficient() const;  // U1 - U0*alpha

    // Exact term by integer iteration; prefix memoized.
    BigInt term(long n) const;

private:
    BigInt P_, Q_, U0_, U1_, delta_;
    mutable std::vector<BigInt> memo_;
    mutable std::mutex memo_mutex_;
};

struct ProblemSpec {
    BinaryRecurrence rec;
    std::vector<BigInt> primes;        // ascending, not necessarily distinct
    std::vector<BigInt> coefficients;  // b_i >= 1
    int t = 1;                         // number of recurrence terms
    Rational epsilon = make_rational(1, 2);

    ProblemSpec(BinaryRecurrence r, std::vector<BigInt> ps, std::vector<BigInt> bs,
                int t_terms, Rational eps);

    int s() const { return static_cast<int>(primes.size()); }
    BigInt K() const;  // max coefficient
    bool all_primes_equal() const;

    static ProblemSpec fibonacci_2_3();  // Fibonacci, primes (2,3), b=(1,1), t=2
};

// Lemma-style growth data: |U_n| <= c0 |alpha|^n and z_s <= c1 n_1.
std::pair<CertifiedReal, CertifiedReal> growth_constants(const ProblemSpec& spec,
                                                         const PrecisionPolicy& policy = {});

// Threshold ell: for n_1 > ell every linear form in the chain is nonzero.
CertifiedReal nonvanishing_threshold(const ProblemSpec& spec,
                                     const PrecisionPolicy& policy = {});

} // namespace diocert
