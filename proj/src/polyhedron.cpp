#include "tropix/polyhedron.hpp"

#include "double_description.hpp"
#include "tropix/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropix {

namespace {

struct VRep {
    std::vector<Vec> vertices;
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
};

struct HRep {
    std::vector<Halfspace> facets;
    std::vector<Halfspace> equations;
};

bool halfspace_less(const Halfspace& a, const Halfspace& b)
{
    if (a.normal != b.normal)
        return lex_less(a.normal, b.normal);
    return a.bound < b.bound;
}

// Scales (u, a) by a positive factor so that u is a primitive integer vector.
Halfspace normalized(const Vec& y)
{
    Vec u(y.begin(), y.end() - 1);
    Vec pu = primitive(u);
    std::size_t j = 0;
    while (u[j] == 0)
        ++j;
    Scalar k = pu[j] / u[j];
    return {std::move(pu), y.back() * k};
}

Matrix lineality_basis(std::size_t n, const std::vector<Halfspace>& hs)
{
    Matrix normals;
    for (const auto& h : hs)
        normals.push_back(h.normal);
    Matrix basis = nullspace(normals, n);
    for (auto& b : basis)
        b = primitive(b);
    return basis;
}

VRep h_to_v(std::size_t n, const std::vector<Halfspace>& hs)
{
    VRep out;
    out.lineality = lineality_basis(n, hs);

    Matrix rows;
    for (const auto& h : hs) {
        Vec r = h.normal;
        r.push_back(-h.bound);
        rows.push_back(std::move(r));
    }
    Vec t_row = zero_vec(n + 1);
    t_row[n] = -1;
    rows.push_back(std::move(t_row));
    for (const auto& l : out.lineality) {
        Vec r = l;
        r.push_back(0);
        rows.push_back(r);
        rows.push_back(negate(r));
    }

    for (auto& g : detail::extreme_rays(rows, n + 1)) {
        Scalar t = g.back();
        g.pop_back();
        if (t > 0)
            out.vertices.push_back(scale(g, 1 / t));
        else
            out.rays.push_back(primitive(g));
    }
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    return out;
}

HRep v_to_h(std::size_t n, const VRep& v)
{
    Matrix rows;
    for (const auto& p : v.vertices) {
        Vec r = p;
        r.push_back(-1);
        rows.push_back(std::move(r));
    }
    for (const auto& d : v.rays) {
        Vec r = d;
        r.push_back(0);
        rows.push_back(std::move(r));
    }
    for (const auto& l : v.lineality) {
        Vec r = l;
        r.push_back(0);
        rows.push_back(r);
        rows.push_back(negate(r));
    }

    const Rref eq = rref(nullspace(rows, n + 1), n + 1);
    Matrix constrained = rows;
    for (const auto& e : eq.rows) {
        constrained.push_back(e);
        constrained.push_back(negate(e));
    }

    HRep out;
    for (const auto& y : detail::extreme_rays(constrained, n + 1)) {
        Vec red = eq.reduce(y);
        if (is_zero(Vec(red.begin(), red.end() - 1)))
            continue; // the trivial inequality 0 <= a
        out.facets.push_back(normalized(red));
    }
    for (const auto& e : eq.rows)
        out.equations.push_back(normalized(e));
    std::sort(out.facets.begin(), out.facets.end(), halfspace_less);
    out.facets.erase(std::unique(out.facets.begin(), out.facets.end()), out.facets.end());
    return out;
}

void check_dim(std::size_t dim, const Vec& v, const char* what)
{
    if (v.size() != dim)
        throw DimensionMismatch(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                                std::to_string(dim));
}

std::vector<Vec> nonzero_only(const std::vector<Vec>& vs)
{
    std::vector<Vec> out;
    for (const auto& v : vs)
        if (!is_zero(v))
            out.push_back(v);
    return out;
}

} // namespace

Polyhedron Polyhedron::empty(std::size_t dim)
{
    Polyhedron p;
    p.dim_ = dim;
    p.empty_ = true;
    return p;
}

Polyhedron Polyhedron::whole_space(std::size_t dim)
{
    return from_halfspaces(dim, {});
}

Polyhedron Polyhedron::from_halfspaces(std::size_t dim, const std::vector<Halfspace>& halfspaces)
{
    std::vector<Halfspace> rows;
    for (const auto& h : halfspaces) {
        check_dim(dim, h.normal, "halfspace normal");
        // 0 <= bound holds everywhere or nowhere
        if (is_zero(h.normal)) {
            if (h.bound < 0)
                return empty(dim);
            continue;
        }
        rows.push_back(h);
    }
    VRep v = h_to_v(dim, rows);
    if (v.vertices.empty())
        return empty(dim);
    HRep h = v_to_h(dim, v);

    Polyhedron p;
    p.dim_ = dim;
    p.empty_ = false;
    p.facets_ = std::move(h.facets);
    p.equations_ = std::move(h.equations);
    p.vertices_ = std::move(v.vertices);
    p.rays_ = std::move(v.rays);
    p.lineality_ = std::move(v.lineality);
    return p;
}

Polyhedron Polyhedron::from_generators(std::size_t dim, const std::vector<Vec>& vertices, const std::vector<Vec>& rays,
                                       const std::vector<Vec>& lineality)
{
    for (const auto& v : vertices)
        check_dim(dim, v, "vertex");
    for (const auto& r : rays)
        check_dim(dim, r, "ray");
    for (const auto& l : lineality)
        check_dim(dim, l, "lineality direction");
    if (vertices.empty())
        return empty(dim);
    HRep h = v_to_h(dim, {vertices, nonzero_only(rays), nonzero_only(lineality)});
    return from_halfspaces(dim, [&] {
        std::vector<Halfspace> all = h.facets;
        for (const auto& e : h.equations) {
            all.push_back(e);
            all.push_back({negate(e.normal), -e.bound});
        }
        return all;
    }());
}

int Polyhedron::dim() const
{
    if (empty_)
        return -1;
    return static_cast<int>(dim_) - static_cast<int>(equations_.size());
}

std::vector<Halfspace> Polyhedron::halfspaces() const
{
    if (empty_) {
        if (dim_ == 0)
            return {};
        Vec e = unit_vec(dim_, 0);
        return {{e, Scalar(0)}, {negate(e), Scalar(-1)}};
    }
    std::vector<Halfspace> all = facets_;
    for (const auto& e : equations_) {
        all.push_back(e);
        all.push_back({negate(e.normal), -e.bound});
    }
    return all;
}

void Polyhedron::check_point(const Vec& x) const
{
    check_dim(dim_, x, "point");
}

bool Polyhedron::contains(const Vec& x) const
{
    check_point(x);
    if (empty_)
        return false;
    for (const auto& e : equations_)
        if (dot(e.normal, x) != e.bound)
            return false;
    for (const auto& f : facets_)
        if (dot(f.normal, x) > f.bound)
            return false;
    return true;
}

bool Polyhedron::relint_contains(const Vec& x) const
{
    if (!contains(x))
        return false;
    for (const auto& f : facets_)
        if (dot(f.normal, x) == f.bound)
            return false;
    return true;
}

bool Polyhedron::contains_direction(const Vec& d) const
{
    check_point(d);
    if (empty_)
        return false;
    for (const auto& e : equations_)
        if (dot(e.normal, d) != 0)
            return false;
    for (const auto& f : facets_)
        if (dot(f.normal, d) > 0)
            return false;
    return true;
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const
{
    if (other.dim_ != dim_)
        throw DimensionMismatch("intersect: ambient dimensions differ");
    if (empty_ || other.empty_)
        return empty(dim_);
    std::vector<Halfspace> all = halfspaces();
    for (auto& h : other.halfspaces())
        all.push_back(std::move(h));
    return from_halfspaces(dim_, all);
}

Polyhedron Polyhedron::linear_image(const Matrix& rows) const
{
    for (const auto& r : rows)
        check_dim(dim_, r, "projection row");
    const std::size_t m = rows.size();
    if (empty_)
        return empty(m);
    std::vector<Vec> v, r, l;
    for (const auto& x : vertices_)
        v.push_back(apply(rows, x));
    for (const auto& x : rays_)
        r.push_back(apply(rows, x));
    for (const auto& x : lineality_)
        l.push_back(apply(rows, x));
    return from_generators(m, v, r, l);
}

bool Polyhedron::operator==(const Polyhedron& other) const
{
    return dim_ == other.dim_ && empty_ == other.empty_ && facets_ == other.facets_ &&
           equations_ == other.equations_ && vertices_ == other.vertices_ && rays_ == other.rays_ &&
           lineality_ == other.lineality_;
}

Polyhedron make_polyhedron(std::size_t dim, const std::vector<Halfspace>& halfspaces)
{
    if (dim == 0)
        throw InvalidInput("make_polyhedron: ambient dimension must be at least 1");
    return Polyhedron::from_halfspaces(dim, halfspaces);
}

bool is_subset(const Polyhedron& a, const Polyhedron& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("is_subset: ambient dimensions differ");
    if (a.is_empty())
        return true;
    if (b.is_empty())
        return false;
    for (const auto& v : a.vertices())
        if (!b.contains(v))
            return false;
    for (const auto& r : a.rays())
        if (!b.contains_direction(r))
            return false;
    for (const auto& l : a.lineality())
        if (!b.contains_direction(l) || !b.contains_direction(negate(l)))
            return false;
    return true;
}

bool same_set(const Polyhedron& a, const Polyhedron& b)
{
    return is_subset(a, b) && is_subset(b, a);
}

bool is_subset_of_relint(const Polyhedron& a, const Polyhedron& b)
{
    if (a.is_empty())
        return true;
    if (!is_subset(a, b))
        return false;
    // A point v + Σλr of a is strict on a facet as soon as v is, since ⟨u, r⟩ <= 0.
    for (const auto& v : a.vertices())
        if (!b.relint_contains(v))
            return false;
    return true;
}

bool relint_contains(const Polyhedron& p, const Vec& x)
{
    return p.relint_contains(x);
}

bool face_order_less(const Polyhedron& a, const Polyhedron& b)
{
    if (a.dim() != b.dim())
        return a.dim() < b.dim();
    auto vec_list_less = [](const std::vector<Vec>& x, const std::vector<Vec>& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), lex_less);
    };
    if (a.vertices() != b.vertices())
        return vec_list_less(a.vertices(), b.vertices());
    return vec_list_less(a.rays(), b.rays());
}

std::vector<Polyhedron> faces(const Polyhedron& p)
{
    if (p.is_empty())
        throw EmptyInput("faces: empty polyhedron");
    const auto& fs = p.facets();
    const auto& vs = p.vertices();
    const auto& rs = p.rays();
    const std::size_t nv = vs.size();
    const std::size_t ng = nv + rs.size();

    // tight[f][g]: generator g attains facet f with equality.
    std::vector<std::vector<bool>> tight(fs.size(), std::vector<bool>(ng));
    for (std::size_t f = 0; f < fs.size(); ++f) {
        for (std::size_t g = 0; g < nv; ++g)
            tight[f][g] = dot(fs[f].normal, vs[g]) == fs[f].bound;
        for (std::size_t g = nv; g < ng; ++g)
            tight[f][g] = dot(fs[f].normal, rs[g - nv]) == 0;
    }

    using GenSet = std::vector<bool>;
    std::set<GenSet> seen;
    std::vector<GenSet> queue{GenSet(ng, true)};
    seen.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const GenSet cur = queue[head];
        for (std::size_t f = 0; f < fs.size(); ++f) {
            GenSet next(ng, false);
            bool has_vertex = false;
            bool changed = false;
            for (std::size_t g = 0; g < ng; ++g) {
                next[g] = cur[g] && tight[f][g];
                if (next[g] && g < nv)
                    has_vertex = true;
                if (cur[g] && !next[g])
                    changed = true;
            }
            if (!changed || !has_vertex || seen.count(next))
                continue;
            seen.insert(next);
            queue.push_back(std::move(next));
        }
    }

    std::vector<Polyhedron> out;
    for (const auto& gs : queue) {
        std::vector<Vec> fv, fr;
        for (std::size_t g = 0; g < nv; ++g)
            if (gs[g])
                fv.push_back(vs[g]);
        for (std::size_t g = nv; g < ng; ++g)
            if (gs[g])
                fr.push_back(rs[g - nv]);
        out.push_back(Polyhedron::from_generators(p.ambient_dim(), fv, fr, p.lineality()));
    }
    std::sort(out.begin(), out.end(), face_order_less);
    return out;
}

Integer lattice_index(const Vec& d1, const Vec& d2)
{
    if (d1.size() != 2 || d2.size() != 2)
        throw UnsupportedDimension("lattice_index is planar");
    if (!is_primitive_integral(d1) || !is_primitive_integral(d2))
        throw InvalidInput("lattice_index expects primitive integer directions");
    Scalar d = det2(d1, d2);
    if (d == 0)
        throw NonTransverse("lattice_index: parallel directions " + to_string(d1) + ", " + to_string(d2));
    return abs(d.get_num());
}

std::string describe(const Polyhedron& p)
{
    if (p.is_empty())
        return "empty";
    auto list = [](const std::vector<Vec>& vs) {
        std::string s = "[";
        for (std::size_t i = 0; i < vs.size(); ++i)
            s += (i ? " " : "") + to_string(vs[i]);
        return s + "]";
    };
    std::string s = "vertices " + list(p.vertices());
    if (!p.rays().empty())
        s += " rays " + list(p.rays());
    if (!p.lineality().empty())
        s += " lineality " + list(p.lineality());
    return s;
}

} // namespace tropix
