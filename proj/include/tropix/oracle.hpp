#pragma once

#include "tropix/compactify.hpp"
#include "tropix/tropical.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace tropix {

/// Dense univariate polynomial over Q; coeffs[i] multiplies z^i. Kept trimmed.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Scalar> coeffs);
    static RationalPoly constant(const Scalar& c) { return RationalPoly({c}); }
    static RationalPoly monomial(const Scalar& c, std::size_t degree);

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    bool operator==(const RationalPoly&) const = default;

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

/// A polynomial in one variable known through the valuations of its
/// coefficients, optionally with the literal coefficients behind them.
class UnivariateValuedPoly {
public:
    static UnivariateValuedPoly from_valuations(const std::map<long, Scalar>& valuations);
    static UnivariateValuedPoly from_literals(const RationalPoly& poly, unsigned long p);

    /// degree ↦ valuation of the coefficient, present terms only.
    const std::map<long, Scalar>& valuations() const { return valuations_; }
    long degree() const { return valuations_.rbegin()->first; }
    long order_at_zero() const { return valuations_.begin()->first; }
    const std::optional<RationalPoly>& literal() const { return literal_; }

private:
    UnivariateValuedPoly() = default;
    std::map<long, Scalar> valuations_;
    std::optional<RationalPoly> literal_;
};

struct NewtonSegment {
    Scalar slope;
    long length = 0;
    Scalar root_valuation() const { return -slope; }
};

/// Lower-hull segments of {(i, val(c_i))}, left to right. The roots at 0
/// (order of vanishing) are not included. Throws InvalidInput on a constant.
std::vector<NewtonSegment> newton_polygon_valuations(const UnivariateValuedPoly& f);

/// Res_var(f, g), a polynomial in the remaining variable. Both inputs need
/// literal coefficients over the same prime and nonnegative exponents.
/// Throws InfiniteFiber when the resultant vanishes identically.
UnivariateValuedPoly eliminate(const ValuedLaurentPoly& f, const ValuedLaurentPoly& g, std::size_t var);

struct FiberRoot {
    /// Root coordinate valuations; nullopt is +∞ (a zero coordinate).
    std::optional<Scalar> vx;
    std::optional<Scalar> vy;
    long multiplicity = 1;
    /// The point in the chart of P̄, if its direction to infinity lies in Recc(P).
    std::optional<ExtendedPoint> location;
    bool in_closure = false;
    bool in_relint = false;

    /// Tropical coordinates (−v), with −∞ for zero coordinates.
    std::vector<ExtendedScalar> trop() const;
};

struct FiberReport {
    std::vector<FiberRoot> roots;
    /// Σ multiplicity over roots in P̄.
    long length = 0;
    /// Σ multiplicity over all roots.
    long total = 0;
};

/// Valuations of the common roots of a square planar system with literal
/// coefficients, counted in P̄. Throws PairingAmbiguity if x- and
/// y-valuations cannot be matched unambiguously.
FiberReport fiber_count(const std::vector<ValuedLaurentPoly>& fs, const Polyhedron& p);

/// Rationals of p-adic valuation zero from a seeded generator.
class UnitSampler {
public:
    UnitSampler(unsigned long p, std::uint64_t seed);
    Scalar next();
    /// A unit times p^k.
    Scalar next_with_valuation(long k);

private:
    unsigned long p_;
    std::mt19937_64 rng_;
};

} // namespace tropix
