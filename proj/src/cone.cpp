#include "tropix/cone.hpp"

#include "tropix/errors.hpp"

namespace tropix {

Cone::Cone(Polyhedron p) : poly_(std::move(p))
{
    if (poly_.is_empty())
        throw InvalidInput("a cone cannot be empty");
    if (poly_.vertices().size() != 1 || !is_zero(poly_.vertices().front()))
        throw InvalidInput("not a cone with apex at the origin: " + describe(poly_));
}

Cone Cone::generated_by(std::size_t dim, const std::vector<Vec>& rays, const std::vector<Vec>& lineality)
{
    return Cone(Polyhedron::from_generators(dim, {zero_vec(dim)}, rays, lineality));
}

Cone Cone::from_normals(std::size_t dim, const std::vector<Vec>& normals)
{
    std::vector<Halfspace> hs;
    for (const auto& u : normals)
        if (!is_zero(u))
            hs.push_back({u, Scalar(0)});
    return Cone(Polyhedron::from_halfspaces(dim, hs));
}

Cone Cone::zero(std::size_t dim)
{
    return generated_by(dim, {});
}

Cone Cone::full(std::size_t dim)
{
    return Cone(Polyhedron::whole_space(dim));
}

std::vector<Cone> Cone::faces() const
{
    std::vector<Cone> out;
    for (auto& f : tropix::faces(poly_))
        out.emplace_back(std::move(f));
    return out;
}

Cone recession_cone(const Polyhedron& p)
{
    if (p.is_empty())
        throw EmptyInput("recession cone of the empty polyhedron");
    return Cone::generated_by(p.ambient_dim(), p.rays(), p.lineality());
}

Cone polar_cone(const Cone& c)
{
    std::vector<Vec> normals = c.rays();
    for (const auto& l : c.lineality()) {
        normals.push_back(l);
        normals.push_back(negate(l));
    }
    return Cone::from_normals(c.ambient_dim(), normals);
}

bool is_pointed(const Cone& c)
{
    return c.is_pointed();
}

std::string describe(const Cone& c)
{
    if (c.rays().empty() && c.lineality().empty())
        return "{0}";
    std::string s = "Cone(";
    for (std::size_t i = 0; i < c.rays().size(); ++i)
        s += (i ? "," : "") + to_string(c.rays()[i]);
    s += ")";
    if (!c.lineality().empty()) {
        s += "+Span(";
        for (std::size_t i = 0; i < c.lineality().size(); ++i)
            s += (i ? "," : "") + to_string(c.lineality()[i]);
        s += ")";
    }
    return s;
}

} // namespace tropix
