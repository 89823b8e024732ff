#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace legcount {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when a weight draw hits a removable zero, i.e. a factor that is
// nonzero for generic weights. The whole draw must be discarded and redrawn;
// this is never a mathematical zero of the count.
class degenerate_weights_error : public std::runtime_error {
public:
    explicit degenerate_weights_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised when two independent evaluations disagree, a Bott sum fails to be an
// integer, or an impossible state is reached. Signals an implementation bug,
// never bad user input.
class verification_error : public std::logic_error {
public:
    explicit verification_error(const std::string& what)
        : std::logic_error(what) {}
};

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// base^exp with the 0^0 == 1 convention.
Integer int_pow(const Integer& base, unsigned long exp);
Integer int_pow(long base, unsigned long exp);

// base^exp for integer exp; negative exp requires base != 0.
Rational pow_rational(const Rational& base, long exp);

Rational make_rational(const Integer& num, const Integer& den);

}  // namespace legcount
