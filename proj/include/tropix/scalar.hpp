#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tropix {

/// Exact rational number, always kept in canonical reduced form.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Coordinates of a point or direction in N_R, or of a linear form in M_R.
using Vec = std::vector<Scalar>;

/// Parses "a", "-a" or "a/b". Throws InvalidInput on malformed text or zero denominator.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& q);
std::string to_string(const Vec& v);

/// p-adic valuation of a nonzero rational. Throws InvalidInput on zero.
long padic_valuation(const Scalar& q, unsigned long p);

/// p^k as an exact rational (k may be negative).
Scalar prime_power(unsigned long p, long k);

bool is_integral(const Scalar& q);

/// An element of R ∪ {-inf}.
class ExtendedScalar {
public:
    ExtendedScalar() = default;
    ExtendedScalar(Scalar value) : finite_(true), value_(std::move(value)) {}

    static ExtendedScalar minus_infinity() { return ExtendedScalar{}; }

    bool is_finite() const { return finite_; }
    const Scalar& value() const;

    friend bool operator==(const ExtendedScalar& a, const ExtendedScalar& b);
    friend std::strong_ordering operator<=>(const ExtendedScalar& a, const ExtendedScalar& b);

private:
    bool finite_ = false;
    Scalar value_;
};

/// "-inf" for the point at infinity, otherwise the rational.
std::string to_string(const ExtendedScalar& x);

/// Exact decimal rendering with a fixed number of fractional digits (round half away from zero).
std::string to_decimal(const Scalar& q, unsigned digits);

std::ostream& operator<<(std::ostream& os, const ExtendedScalar& x);

} // namespace tropix
