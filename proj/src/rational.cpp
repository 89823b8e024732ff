#include "legcount/rational.hpp"

namespace legcount {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer int_pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer int_pow(long base, unsigned long exp) {
    return int_pow(Integer(base), exp);
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0)
        return Rational(1);
    if (exp < 0 && base == 0)
        throw verification_error("pow_rational: zero base with negative exponent");
    const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Rational r;
    // num/den of a canonical rational stay coprime under powers.
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    if (exp < 0) {
        Rational inv;
        mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
        return inv;
    }
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw verification_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace legcount
