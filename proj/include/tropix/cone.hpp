#pragma once

#include "tropix/polyhedron.hpp"

namespace tropix {

/// A polyhedral cone: a polyhedron whose defining bounds are all zero.
class Cone {
public:
    /// Wraps a polyhedron; throws InvalidInput unless it is a nonempty cone with apex at the origin.
    explicit Cone(Polyhedron p);

    static Cone generated_by(std::size_t dim, const std::vector<Vec>& rays, const std::vector<Vec>& lineality = {});
    /// {x : ⟨u, x⟩ <= 0 for all u in normals}.
    static Cone from_normals(std::size_t dim, const std::vector<Vec>& normals);
    static Cone zero(std::size_t dim);
    static Cone full(std::size_t dim);

    const Polyhedron& polyhedron() const { return poly_; }
    std::size_t ambient_dim() const { return poly_.ambient_dim(); }
    int dim() const { return poly_.dim(); }
    const std::vector<Vec>& rays() const { return poly_.rays(); }
    const std::vector<Vec>& lineality() const { return poly_.lineality(); }
    bool is_pointed() const { return poly_.is_pointed(); }
    bool contains(const Vec& d) const { return poly_.contains(d); }
    bool relint_contains(const Vec& d) const { return poly_.relint_contains(d); }

    /// Faces ordered as in tropix::faces; the first one is the minimal face.
    std::vector<Cone> faces() const;
    Cone intersect(const Cone& other) const { return Cone(poly_.intersect(other.poly_)); }

    bool operator==(const Cone& other) const { return poly_ == other.poly_; }

private:
    Polyhedron poly_;
};

/// {v : ⟨u_i, v⟩ <= 0}: the polyhedron's inequalities with their bounds dropped.
Cone recession_cone(const Polyhedron& p);

/// σ∨ = {u : ⟨u, v⟩ <= 0 for all v in σ}.
Cone polar_cone(const Cone& c);

bool is_pointed(const Cone& c);

std::string describe(const Cone& c);

} // namespace tropix
