#pragma once

#include "tropix/linalg.hpp"

#include <cstddef>
#include <vector>

namespace tropix {

/// The closed half-space ⟨normal, x⟩ ≤ bound.
struct Halfspace {
    Vec normal;
    Scalar bound;

    bool operator==(const Halfspace&) const = default;
};

/// A convex polyhedron in Q^n held in both representations.
///
/// The H-representation is canonical: `equations()` span the affine hull
/// (RREF-reduced, primitive integer normals) and `facets()` are the
/// irredundant inequalities, each reduced modulo the equations and scaled to a
/// primitive integer normal. The V-representation keeps `lineality()` as a
/// canonical basis and `vertices()`/`rays()` inside its orthogonal complement,
/// so two polyhedra describe the same set iff they compare equal.
class Polyhedron {
public:
    /// {x : ⟨u_i, x⟩ ≤ a_i}. Redundant and repeated inequalities are fine.
    static Polyhedron from_halfspaces(std::size_t dim, const std::vector<Halfspace>& halfspaces);
    /// conv(vertices) + cone(rays) + span(lineality). No vertices means empty.
    static Polyhedron from_generators(std::size_t dim, const std::vector<Vec>& vertices,
                                      const std::vector<Vec>& rays = {}, const std::vector<Vec>& lineality = {});
    static Polyhedron empty(std::size_t dim);
    static Polyhedron whole_space(std::size_t dim);
    static Polyhedron point(const Vec& p) { return from_generators(p.size(), {p}); }

    std::size_t ambient_dim() const { return dim_; }
    bool is_empty() const { return empty_; }
    /// Affine dimension, -1 when empty.
    int dim() const;

    const std::vector<Halfspace>& facets() const { return facets_; }
    const std::vector<Halfspace>& equations() const { return equations_; }
    /// Facets plus both orientations of each equation. For the empty set a
    /// pair of contradictory inequalities.
    std::vector<Halfspace> halfspaces() const;

    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Vec>& rays() const { return rays_; }
    const std::vector<Vec>& lineality() const { return lineality_; }

    bool is_bounded() const { return rays_.empty() && lineality_.empty(); }
    bool is_pointed() const { return lineality_.empty(); }

    bool contains(const Vec& x) const;
    /// x ∈ P and every facet inequality is strict at x.
    bool relint_contains(const Vec& x) const;
    /// d lies in the recession cone.
    bool contains_direction(const Vec& d) const;

    Polyhedron intersect(const Polyhedron& other) const;
    /// Image under x ↦ (⟨w, x⟩)_{w ∈ rows}.
    Polyhedron linear_image(const Matrix& rows) const;

    bool operator==(const Polyhedron& other) const;

private:
    Polyhedron() = default;
    void check_point(const Vec& x) const;

    std::size_t dim_ = 0;
    bool empty_ = true;
    std::vector<Halfspace> facets_;
    std::vector<Halfspace> equations_;
    std::vector<Vec> vertices_;
    std::vector<Vec> rays_;
    std::vector<Vec> lineality_;
};

Polyhedron make_polyhedron(std::size_t dim, const std::vector<Halfspace>& halfspaces);

/// a ⊆ b, decided on generators of a against inequalities of b.
bool is_subset(const Polyhedron& a, const Polyhedron& b);
bool same_set(const Polyhedron& a, const Polyhedron& b);

/// a ⊆ relint(b).
bool is_subset_of_relint(const Polyhedron& a, const Polyhedron& b);

bool relint_contains(const Polyhedron& p, const Vec& x);

/// All nonempty faces including P itself, ordered by dimension and then
/// lexicographically by (vertices, rays).
std::vector<Polyhedron> faces(const Polyhedron& p);

/// Orders faces: dimension first, then vertex and ray lists lexicographically.
bool face_order_less(const Polyhedron& a, const Polyhedron& b);

/// |det(d1, d2)| for independent primitive integer planar directions.
Integer lattice_index(const Vec& d1, const Vec& d2);

std::string describe(const Polyhedron& p);

} // namespace tropix
