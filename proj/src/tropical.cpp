#include "tropix/tropical.hpp"

#include "tropix/cone.hpp"
#include "tropix/errors.hpp"
#include "tropix/geometry2d.hpp"

#include <algorithm>
#include <numeric>

namespace tropix {

Vec to_vec(const Exponent& u)
{
    Vec v;
    v.reserve(u.size());
    for (int x : u)
        v.emplace_back(x);
    return v;
}

std::string to_string(const Exponent& u)
{
    std::string s = "(";
    for (std::size_t i = 0; i < u.size(); ++i)
        s += (i ? "," : "") + std::to_string(u[i]);
    return s + ")";
}

namespace {

bool is_prime(unsigned long p)
{
    if (p < 2)
        return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Exponent to_exponent(const Vec& v)
{
    Exponent u;
    for (const auto& x : v)
        u.push_back(static_cast<int>(x.get_num().get_si()));
    return u;
}

} // namespace

void ValuedLaurentPoly::validate() const
{
    if (terms_.empty())
        throw InvalidInput("a polynomial needs at least one nonzero term");
    for (const auto& [u, c] : terms_)
        if (u.size() != n_)
            throw DimensionMismatch("exponent " + to_string(u) + " does not have length " + std::to_string(n_));
}

ValuedLaurentPoly ValuedLaurentPoly::from_valuations(std::size_t n, const std::vector<std::pair<Exponent, Scalar>>& terms)
{
    ValuedLaurentPoly f;
    f.n_ = n;
    for (const auto& [u, val] : terms)
        if (!f.terms_.emplace(u, -val).second)
            throw InvalidInput("repeated exponent " + to_string(u));
    f.validate();
    return f;
}

ValuedLaurentPoly ValuedLaurentPoly::from_tropical(std::size_t n, const std::vector<std::pair<Exponent, Scalar>>& terms)
{
    ValuedLaurentPoly f;
    f.n_ = n;
    for (const auto& [u, c] : terms)
        if (!f.terms_.emplace(u, c).second)
            throw InvalidInput("repeated exponent " + to_string(u));
    f.validate();
    return f;
}

ValuedLaurentPoly ValuedLaurentPoly::from_literals(std::size_t n, unsigned long p,
                                                   const std::vector<std::pair<Exponent, Scalar>>& terms)
{
    if (!is_prime(p))
        throw InvalidInput("p = " + std::to_string(p) + " is not prime");
    ValuedLaurentPoly f;
    f.n_ = n;
    f.prime_ = p;
    for (const auto& [u, a] : terms)
        f.literals_[u] += a;
    std::erase_if(f.literals_, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [u, a] : f.literals_)
        f.terms_.emplace(u, Scalar(-padic_valuation(a, p)));
    f.validate();
    return f;
}

std::vector<Exponent> ValuedLaurentPoly::support() const
{
    std::vector<Exponent> s;
    for (const auto& [u, c] : terms_)
        s.push_back(u);
    return s;
}

ValuedLaurentPoly ValuedLaurentPoly::shifted(const Scalar& delta) const
{
    ValuedLaurentPoly f;
    f.n_ = n_;
    for (const auto& [u, c] : terms_)
        f.terms_.emplace(u, c + delta);
    return f;
}

Polyhedron newton_polytope(const ValuedLaurentPoly& f)
{
    std::vector<Vec> pts;
    for (const auto& [u, c] : f.terms())
        pts.push_back(to_vec(u));
    return Polyhedron::from_generators(f.ambient_dim(), pts);
}

TropEvaluation trop_evaluate(const ValuedLaurentPoly& f, const Vec& v)
{
    if (v.size() != f.ambient_dim())
        throw DimensionMismatch("trop_eval: point has the wrong dimension");
    TropEvaluation out;
    bool first = true;
    for (const auto& [u, c] : f.terms()) {
        Scalar val = c + dot(to_vec(u), v);
        if (first || val > out.value) {
            out.value = val;
            out.attained.assign(1, u);
            first = false;
        } else if (val == out.value) {
            out.attained.push_back(u);
        }
    }
    return out;
}

Scalar trop_eval(const ValuedLaurentPoly& f, const Vec& v)
{
    return trop_evaluate(f, v).value;
}

Vec to_valuation_coords(const Vec& trop_point)
{
    return negate(trop_point);
}

Vec from_valuation_coords(const Vec& valuations)
{
    return negate(valuations);
}

HypersurfaceCell HypersurfaceCell::segment(const Vec& a, const Vec& b, long weight)
{
    if (a == b)
        throw InvalidInput("degenerate segment cell");
    HypersurfaceCell c;
    c.kind = Kind::segment;
    c.base = lex_less(b, a) ? b : a;
    c.end = lex_less(b, a) ? a : b;
    c.direction = primitive(sub(c.end, c.base));
    c.weight = weight;
    c.locus = Polyhedron::from_generators(2, {a, b});
    return c;
}

HypersurfaceCell HypersurfaceCell::ray(const Vec& apex, const Vec& direction, long weight)
{
    HypersurfaceCell c;
    c.kind = Kind::ray;
    c.base = apex;
    c.direction = primitive(direction);
    c.weight = weight;
    c.locus = Polyhedron::from_generators(2, {apex}, {c.direction});
    return c;
}

HypersurfaceCell HypersurfaceCell::line(const Vec& point, const Vec& direction, long weight)
{
    HypersurfaceCell c;
    c.kind = Kind::line;
    c.direction = primitive(direction);
    c.weight = weight;
    c.locus = Polyhedron::from_generators(2, {point}, {}, {c.direction});
    c.base = c.locus.vertices().front();
    return c;
}

namespace {

long lattice_length(const Vec& a, const Vec& b)
{
    Integer dx = abs(Scalar(b[0] - a[0]).get_num());
    Integer dy = abs(Scalar(b[1] - a[1]).get_num());
    Integer g;
    mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    return g.get_si();
}

bool cell_less(const HypersurfaceCell& a, const HypersurfaceCell& b)
{
    if (a.kind != b.kind)
        return a.kind < b.kind;
    if (a.base != b.base)
        return lex_less(a.base, b.base);
    if (a.direction != b.direction)
        return lex_less(a.direction, b.direction);
    return lex_less(a.end, b.end);
}

// All support points on one line: the curve is a family of parallel lines.
TropicalHypersurface collinear_hypersurface(const ValuedLaurentPoly& f, const std::vector<Vec>& pts,
                                            const std::vector<Scalar>& cs)
{
    std::size_t j = 1;
    while (pts[j] == pts[0])
        ++j;
    const Vec d = primitive(sub(pts[j], pts[0]));
    const Scalar dd = dot(d, d);

    struct Lifted {
        Scalar k;
        Scalar c;
        std::size_t idx;
    };
    std::vector<Lifted> lifted;
    for (std::size_t i = 0; i < pts.size(); ++i)
        lifted.push_back({dot(sub(pts[i], pts[0]), d) / dd, cs[i], i});
    std::sort(lifted.begin(), lifted.end(), [](const Lifted& a, const Lifted& b) { return a.k < b.k; });

    std::vector<Lifted> upper;
    for (const auto& p : lifted) {
        while (upper.size() >= 2) {
            const auto& o = upper[upper.size() - 2];
            const auto& a = upper.back();
            Scalar cr = (a.k - o.k) * (p.c - o.c) - (a.c - o.c) * (p.k - o.k);
            if (cr < 0)
                break;
            upper.pop_back();
        }
        upper.push_back(p);
    }

    TropicalHypersurface th;
    for (std::size_t i = 0; i + 1 < upper.size(); ++i) {
        const auto& a = upper[i];
        const auto& b = upper[i + 1];
        const Scalar s = (a.c - b.c) / (b.k - a.k);
        const Vec point = scale(d, s / dd);
        HypersurfaceCell cell = HypersurfaceCell::line(point, planar::rotate_ccw(d), lattice_length(pts[a.idx], pts[b.idx]));
        cell.dual_from = to_exponent(pts[a.idx]);
        cell.dual_to = to_exponent(pts[b.idx]);
        th.subdivision.push_back(trop_evaluate(f, cell.base).attained);
        th.cells.push_back(std::move(cell));
    }
    std::sort(th.cells.begin(), th.cells.end(), cell_less);
    std::sort(th.subdivision.begin(), th.subdivision.end());
    return th;
}

} // namespace

TropicalHypersurface tropical_hypersurface(const ValuedLaurentPoly& f)
{
    if (f.ambient_dim() != 2)
        throw UnsupportedDimension("tropical_hypersurface enumerates cells in the plane only");
    std::vector<Vec> pts;
    std::vector<Scalar> cs;
    for (const auto& [u, c] : f.terms()) {
        pts.push_back(to_vec(u));
        cs.push_back(c);
    }
    if (pts.size() < 2)
        return {};

    bool collinear = true;
    for (std::size_t i = 2; i < pts.size() && collinear; ++i)
        collinear = det2(sub(pts[1], pts[0]), sub(pts[i], pts[0])) == 0;
    if (collinear)
        return collinear_hypersurface(f, pts, cs);

    // Vertices: points where three non-collinear terms tie for the maximum.
    std::vector<Vec> vertices;
    const std::size_t m = pts.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const Vec e1 = sub(pts[j], pts[i]);
            for (std::size_t k = j + 1; k < m; ++k) {
                const Vec e2 = sub(pts[k], pts[i]);
                const Scalar det = det2(e1, e2);
                if (det == 0)
                    continue;
                const Scalar r1 = cs[i] - cs[j];
                const Scalar r2 = cs[i] - cs[k];
                Vec v{(r1 * e2[1] - r2 * e1[1]) / det, (e1[0] * r2 - e2[0] * r1) / det};
                if (trop_eval(f, v) == cs[i] + dot(pts[i], v))
                    vertices.push_back(std::move(v));
            }
        }
    }
    std::sort(vertices.begin(), vertices.end(), lex_less);
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    TropicalHypersurface th;
    th.vertices = vertices;
    for (const auto& v : vertices) {
        const auto attained = trop_evaluate(f, v).attained;
        th.subdivision.push_back(attained);
        std::vector<Vec> cell_pts;
        for (const auto& u : attained)
            cell_pts.push_back(to_vec(u));
        const auto hull = planar::convex_hull(cell_pts);
        for (std::size_t h = 0; h < hull.size(); ++h) {
            const Vec& a = hull[h];
            const Vec& b = hull[(h + 1) % hull.size()];
            const Vec e = sub(b, a);
            const Vec w = primitive(Vec{e[1], -e[0]}); // outward normal of a ccw edge
            const Scalar ca = f.terms().at(to_exponent(a)) + dot(a, v);

            // Walk from v along w until another term catches up with a.
            std::optional<Scalar> stop;
            for (std::size_t t = 0; t < m; ++t) {
                const Scalar slope = dot(sub(pts[t], a), w);
                if (slope <= 0)
                    continue;
                const Scalar gap = ca - (cs[t] + dot(pts[t], v));
                const Scalar s = gap / slope;
                if (!stop || s < *stop)
                    stop = s;
            }
            HypersurfaceCell cell = stop ? HypersurfaceCell::segment(v, add(v, scale(w, *stop)), lattice_length(a, b))
                                         : HypersurfaceCell::ray(v, w, lattice_length(a, b));
            cell.dual_from = to_exponent(lex_less(b, a) ? b : a);
            cell.dual_to = to_exponent(lex_less(b, a) ? a : b);
            const bool seen = std::any_of(th.cells.begin(), th.cells.end(), [&](const HypersurfaceCell& c) {
                return c.kind == cell.kind && c.base == cell.base && c.direction == cell.direction && c.end == cell.end;
            });
            if (!seen)
                th.cells.push_back(std::move(cell));
        }
    }
    std::sort(th.cells.begin(), th.cells.end(), cell_less);
    std::sort(th.subdivision.begin(), th.subdivision.end());
    return th;
}

bool balancing_check(const TropicalHypersurface& th)
{
    for (const auto& v : th.vertices) {
        Vec sum = zero_vec(2);
        for (const auto& c : th.cells) {
            const Vec wd = scale(c.direction, Scalar(c.weight));
            if (c.kind == HypersurfaceCell::Kind::line)
                continue;
            if (c.base == v)
                sum = add(sum, wd);
            else if (c.kind == HypersurfaceCell::Kind::segment && c.end == v)
                sum = sub(sum, wd);
        }
        if (!is_zero(sum))
            return false;
    }
    return true;
}

Scalar sup_norm(const ValuedLaurentPoly& f, const Polyhedron& p)
{
    if (p.ambient_dim() != f.ambient_dim())
        throw DimensionMismatch("sup_norm: polynomial and polyhedron dimensions differ");
    if (p.is_empty())
        throw EmptyInput("sup_norm: empty polyhedron");
    if (!p.is_pointed())
        throw NotPointed("sup_norm: polyhedron must be pointed");
    for (const auto& [u, c] : f.terms()) {
        const Vec uv = to_vec(u);
        for (const auto& r : p.rays())
            if (dot(uv, r) > 0)
                throw SupportViolation("exponent " + to_string(u) + " is unbounded along recession ray " + to_string(r));
    }
    std::optional<Scalar> best;
    for (const auto& [u, c] : f.terms()) {
        const Vec uv = to_vec(u);
        for (const auto& v : p.vertices()) {
            Scalar val = c + dot(uv, v);
            if (!best || val > *best)
                best = val;
        }
    }
    return *best;
}

} // namespace tropix
