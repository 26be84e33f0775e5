#pragma once

#include "tropix/polyhedron.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tropix {

/// An exponent u ∈ M ≅ Z^n.
using Exponent = std::vector<int>;

Vec to_vec(const Exponent& u);
std::string to_string(const Exponent& u);

/// A Laurent polynomial Σ a_u x^u seen through its coefficient valuations.
///
/// Terms store the tropical coefficient c_u = −val(a_u), measured in units of
/// ln p, so trop coordinates are negated valuations. When literal rational
/// coefficients are known (for the oracle) they are kept alongside, and then
/// c_u = −v_p(a_u) exactly.
class ValuedLaurentPoly {
public:
    /// Terms given by coefficient valuations val(a_u). Repeated exponents are rejected.
    static ValuedLaurentPoly from_valuations(std::size_t n, const std::vector<std::pair<Exponent, Scalar>>& terms);
    /// Terms given directly by tropical coefficients c_u.
    static ValuedLaurentPoly from_tropical(std::size_t n, const std::vector<std::pair<Exponent, Scalar>>& terms);
    /// Literal rational coefficients over Q_p. Repeated exponents are summed; zero terms dropped.
    static ValuedLaurentPoly from_literals(std::size_t n, unsigned long p,
                                           const std::vector<std::pair<Exponent, Scalar>>& terms);

    std::size_t ambient_dim() const { return n_; }
    /// u ↦ c_u.
    const std::map<Exponent, Scalar>& terms() const { return terms_; }
    std::vector<Exponent> support() const;

    bool has_literals() const { return prime_ != 0; }
    unsigned long prime() const { return prime_; }
    /// u ↦ a_u. Empty unless has_literals().
    const std::map<Exponent, Scalar>& literals() const { return literals_; }

    /// Adds δ to every tropical coefficient (drops literals).
    ValuedLaurentPoly shifted(const Scalar& delta) const;

private:
    ValuedLaurentPoly() = default;
    void validate() const;

    std::size_t n_ = 0;
    std::map<Exponent, Scalar> terms_;
    unsigned long prime_ = 0;
    std::map<Exponent, Scalar> literals_;
};

/// conv(support(f)).
Polyhedron newton_polytope(const ValuedLaurentPoly& f);

struct TropEvaluation {
    Scalar value;
    /// Exponents attaining the maximum, ascending.
    std::vector<Exponent> attained;
};

/// max_u (c_u + ⟨u, v⟩) with the maximizing terms.
TropEvaluation trop_evaluate(const ValuedLaurentPoly& f, const Vec& v);
Scalar trop_eval(const ValuedLaurentPoly& f, const Vec& v);

/// Max-plus coordinates to valuation (min-plus) coordinates and back: plain negation.
Vec to_valuation_coords(const Vec& trop_point);
Vec from_valuation_coords(const Vec& valuations);

/// A one-dimensional cell of a planar tropical curve.
struct HypersurfaceCell {
    enum class Kind { segment, ray, line };

    Kind kind = Kind::segment;
    Polyhedron locus = Polyhedron::empty(2);
    long weight = 1;
    /// Base point: first endpoint of a segment, apex of a ray, canonical point of a line.
    Vec base;
    /// Primitive integer direction; for segments it points from `base` to `end`.
    Vec direction;
    /// Segments only.
    Vec end;
    /// Endpoints of the dual edge in the regular subdivision.
    Exponent dual_from;
    Exponent dual_to;

    static HypersurfaceCell segment(const Vec& a, const Vec& b, long weight);
    static HypersurfaceCell ray(const Vec& apex, const Vec& direction, long weight);
    static HypersurfaceCell line(const Vec& point, const Vec& direction, long weight);
};

/// A tropical curve in R^2 together with its dual regular subdivision.
struct TropicalHypersurface {
    std::vector<HypersurfaceCell> cells;
    std::vector<Vec> vertices;
    /// Maximal cells of the regular subdivision of the Newton polytope, as exponent sets.
    std::vector<std::vector<Exponent>> subdivision;

    bool empty() const { return cells.empty(); }
};

/// The corner locus of trop(f) in R^2, weighted by lattice lengths of dual edges.
/// Fewer than two terms give the empty curve.
TropicalHypersurface tropical_hypersurface(const ValuedLaurentPoly& f);

/// Σ weight · primitive outgoing direction = 0 at every vertex.
bool balancing_check(const TropicalHypersurface& th);

/// log |f|_P = max over u ∈ support(f), v ∈ Vert(P) of c_u + ⟨u, v⟩.
/// Throws SupportViolation if some ⟨u, ·⟩ is unbounded above on P.
Scalar sup_norm(const ValuedLaurentPoly& f, const Polyhedron& p);

} // namespace tropix
