#pragma once

#include "tropix/compactify.hpp"
#include "tropix/tropical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropix {

struct IntersectionPoint {
    ExtendedPoint location;
    long multiplicity = 1;
};

struct IntersectionReport {
    /// Sorted by stratum, then lexicographically by coordinates.
    std::vector<IntersectionPoint> points;
    long total = 0;
    bool transverse = true;
    /// Set only when a finiteness check was run.
    std::optional<bool> criterion_holds;
};

/// weightA · weightB · |det(dirA, dirB)| for two cells crossing in a single point.
/// Throws NonTransverse for parallel cells or cells that do not meet.
long transverse_multiplicity(const HypersurfaceCell& a, const HypersurfaceCell& b);

/// Which generic direction to displace B along.
enum class Perturbation { primary, fallback };

/// The translation vector used for a given pair of curves: (1, ζ) for the
/// primary rule, (ζ, 1) for the fallback, with ζ the least integer >= 2 that
/// is not parallel to any cell direction.
Vec perturbation_direction(const TropicalHypersurface& a, const TropicalHypersurface& b, Perturbation rule);

/// lim_{ε→0+} A ∩ (B + εw), points counted with multiplicity. The ε-dependence
/// is tracked as first-order terms, so the limit is exact.
IntersectionReport stable_intersection(const TropicalHypersurface& a, const TropicalHypersurface& b,
                                       Perturbation rule = Perturbation::primary);

/// Keeps the points lying in Relint(P̄) and recomputes the total.
IntersectionReport restrict_to_relint(const IntersectionReport& report, const CompactifiedPolyhedron& pbar);

/// area(P+Q) − area(P) − area(Q) for planar lattice polytopes.
long mixed_volume(const Polyhedron& p, const Polyhedron& q);

/// Whether every stratum piece of `cells` lies in the relative interior of the
/// matching piece of P̄. Throws StratumMismatch when the charts differ.
bool finiteness_criterion(const CompactifiedSet& cells, const CompactifiedPolyhedron& pbar);

/// ∩ TH(f_i) for two planar polynomials, closed up in `chart`.
CompactifiedSet trop_prevariety(const std::vector<ValuedLaurentPoly>& fs, const Chart& chart);

// ---------------------------------------------------------------------------
// Parametric systems
// ---------------------------------------------------------------------------

class ParameterGrid {
public:
    ParameterGrid() = default;
    void add(std::string name, std::vector<Scalar> values);

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<Scalar>>& values() const { return values_; }
    std::size_t size() const;
    /// Row-major: the last parameter varies fastest.
    std::vector<std::vector<Scalar>> points() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<Scalar>> values_;
};

/// A term whose coefficient valuation is `valuation` plus, if `param` is
/// set, the valuation assigned to that parameter.
struct ParametricTerm {
    Exponent exponent;
    Scalar valuation;
    std::optional<std::string> param;
};

struct ParametricPoly {
    std::size_t ambient_dim = 2;
    std::vector<ParametricTerm> terms;

    /// Throws InvalidInput on a parameter missing from `names`.
    ValuedLaurentPoly instantiate(const std::vector<std::string>& names, const std::vector<Scalar>& values) const;
};

struct ContinuityRow {
    std::vector<Scalar> params;
    /// Restricted to Relint(P̄); criterion_holds is always set.
    IntersectionReport report;
    CompactifiedSet prevariety;
};

struct ContinuityReport {
    std::vector<std::string> names;
    std::vector<ContinuityRow> rows;
    std::size_t holding = 0;
    /// The common total over criterion-holding rows, if they agree.
    std::optional<long> common_total;
    bool violation = false;
};

/// Runs the finiteness criterion and the restricted stable intersection at
/// each grid point. Rows are evaluated on `threads` workers and returned in
/// grid order.
ContinuityReport continuity_verify(const std::vector<ParametricPoly>& system, const Polyhedron& p,
                                   const ParameterGrid& grid, unsigned threads = 1);

} // namespace tropix
