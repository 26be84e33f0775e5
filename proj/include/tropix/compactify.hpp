#pragma once

#include "tropix/cone.hpp"
#include "tropix/errors.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tropix {

// ---------------------------------------------------------------------------
// Fans
// ---------------------------------------------------------------------------

/// A finite face-closed family of cones meeting pairwise along common faces.
struct Fan {
    std::size_t ambient_dim = 0;
    /// Ordered by dimension, then lexicographically.
    std::vector<Cone> cones;
    /// faces[i]: indices into `cones` of the faces of cones[i], including i.
    std::vector<std::vector<std::size_t>> faces;
    bool pointed = true;
};

/// Two cones whose intersection is not a face of both.
class FanViolation : public Error {
public:
    FanViolation(Cone first, Cone second);

    const Cone& first() const { return first_; }
    const Cone& second() const { return second_; }

private:
    Cone first_;
    Cone second_;
};

/// Face closure of `cones`, validated. Throws FanViolation.
Fan fan_from_cones(const std::vector<Cone>& cones);

/// "We could not exhibit a fan", which is not a proof that none exists.
struct Undecided {
    Cone first;
    Cone second;
    std::string reason;
};

/// Tries the fan generated by the recession cones. Throws NotPointed on a non-pointed input.
std::variant<Fan, Undecided> simultaneously_compactifiable(const std::vector<Polyhedron>& family);

/// Whether the support of the fan is all of R^n. Only n <= 2.
bool is_complete(const Fan& fan);

// ---------------------------------------------------------------------------
// The partial compactification N_R(σ)
// ---------------------------------------------------------------------------

/// A point of N_R(σ): a stratum (index into Chart::strata()) and a
/// representative in N_R of a class of N_R / Span(τ).
struct ExtendedPoint {
    std::size_t stratum = 0;
    Vec coords;
};

/// N_R(σ) for a pointed cone σ, stratified by the faces τ of σ. Each stratum
/// N_R / Span(τ) gets coordinates x ↦ (⟨w, x⟩) for an integer basis w of τ^⊥.
class Chart {
public:
    explicit Chart(Cone sigma);

    const Cone& sigma() const { return sigma_; }
    std::size_t ambient_dim() const { return sigma_.ambient_dim(); }

    /// Faces of σ; strata()[0] is {0}, the torus stratum.
    const std::vector<Cone>& strata() const { return strata_; }
    std::size_t stratum_count() const { return strata_.size(); }
    std::optional<std::size_t> stratum_index(const Cone& tau) const;

    const Matrix& quotient_basis(std::size_t stratum) const;
    std::size_t quotient_dim(std::size_t stratum) const { return quotient_basis(stratum).size(); }

    Vec project(std::size_t stratum, const Vec& x) const;
    Polyhedron project(std::size_t stratum, const Polyhedron& p) const;

    /// Coordinates of x in its stratum.
    Vec quotient_coords(const ExtendedPoint& x) const;
    bool same_point(const ExtendedPoint& a, const ExtendedPoint& b) const;

    /// The stratum where q + t·d lands as t → ∞: the face of σ with d in its relative interior.
    std::optional<std::size_t> limit_stratum(const Vec& direction) const;

    bool operator==(const Chart& other) const { return sigma_ == other.sigma_; }

private:
    void check_stratum(std::size_t stratum) const;

    Cone sigma_;
    std::vector<Cone> strata_;
    std::vector<Matrix> quotient_bases_;
};

/// ι(x) = (⟨u_i, x⟩)_i with −∞ for every u_i ∉ τ^⊥. Throws InvalidInput if some u_i ∉ σ∨.
std::vector<ExtendedScalar> iota_embed(const Chart& chart, const ExtendedPoint& x, const std::vector<Vec>& generators);

/// P̄ = ⊔_{τ ≺ Recc(P)} π_τ(P).
struct CompactifiedPolyhedron {
    Polyhedron base;
    Chart chart;
    /// pieces[k] = π_{τ_k}(base) in the coordinates of stratum k.
    std::vector<Polyhedron> pieces;
};

CompactifiedPolyhedron compactify(const Polyhedron& p);

/// The closure in N_R(σ) of a finite union of polyhedra.
struct CompactifiedSet {
    Chart chart;
    std::vector<Polyhedron> cells;
    /// pieces[k]: the nonempty closure pieces at stratum k.
    std::vector<std::vector<Polyhedron>> pieces;

    bool empty() const { return cells.empty(); }
};

CompactifiedSet closure_in_compactification(const Polyhedron& q, const Cone& sigma);
CompactifiedSet closure_in_compactification(const std::vector<Polyhedron>& cells, const Chart& chart);

/// Relint(P̄) taken stratum-wise: x lies in the relative interior of π_τ(P).
bool compactified_relint_contains(const CompactifiedPolyhedron& pbar, const ExtendedPoint& x);
bool compactified_contains(const CompactifiedPolyhedron& pbar, const ExtendedPoint& x);

} // namespace tropix
