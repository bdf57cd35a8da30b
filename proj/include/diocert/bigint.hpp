#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "diocert/errors.hpp"

namespace diocert {

// Exact arbitrary-precision integers and rationals, backed by GMP.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Reduced rational with positive denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline const BigInt numerator(const Rational& r) { return BigInt(r.get_num()); }
inline const BigInt denominator(const Rational& r) { return BigInt(r.get_den()); }

// Largest e with p^e | x; empty for x = 0 (the valuation is infinite there).
inline std::optional<long> padic_valuation(const BigInt& x, const BigInt& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw domain_error("padic_valuation: p must be prime");
    if (x == 0) return std::nullopt;
    BigInt rem;
    mp_bitcnt_t e = mpz_remove(rem.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return static_cast<long>(e);
}

inline bool is_perfect_square(const BigInt& x) {
    return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline BigInt exact_sqrt(const BigInt& x) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

// ceil(a*b/c) for non-negative inputs, exact.
inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace diocert
