#include "tropix/intersect.hpp"

#include "tropix/errors.hpp"
#include "tropix/geometry2d.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace tropix {

namespace {

// A cell as base + s·dir with s in [lo, hi]; a missing bound is infinite.
struct ParamCell {
    Vec base;
    Vec dir;
    std::optional<Scalar> lo;
    std::optional<Scalar> hi;
    long weight;
    const HypersurfaceCell* cell;
};

ParamCell parametrize(const HypersurfaceCell& c)
{
    ParamCell p{c.base, c.direction, Scalar(0), std::nullopt, c.weight, &c};
    switch (c.kind) {
    case HypersurfaceCell::Kind::segment: {
        const std::size_t k = c.direction[0] != 0 ? 0 : 1;
        p.hi = (c.end[k] - c.base[k]) / c.direction[k];
        break;
    }
    case HypersurfaceCell::Kind::ray:
        break;
    case HypersurfaceCell::Kind::line:
        p.lo.reset();
        break;
    }
    return p;
}

// s0 + ε·s1 stays inside [lo, hi] for all small ε > 0.
bool inside_eventually(const ParamCell& c, const Scalar& s0, const Scalar& s1)
{
    if (c.lo && (s0 < *c.lo || (s0 == *c.lo && s1 <= 0)))
        return false;
    if (c.hi && (s0 > *c.hi || (s0 == *c.hi && s1 >= 0)))
        return false;
    return true;
}

bool inside_closed(const ParamCell& c, const Scalar& s)
{
    return (!c.lo || s >= *c.lo) && (!c.hi || s <= *c.hi);
}

bool at_endpoint(const ParamCell& c, const Scalar& s)
{
    return (c.lo && s == *c.lo) || (c.hi && s == *c.hi);
}

void check_planar(const TropicalHypersurface& th)
{
    for (const auto& c : th.cells)
        if (c.base.size() != 2)
            throw UnsupportedDimension("stable intersection is implemented in the plane only");
}

IntersectionReport collect(const std::map<Vec, long, decltype(&lex_less)>& acc, bool transverse)
{
    IntersectionReport r;
    r.transverse = transverse;
    for (const auto& [x, m] : acc) {
        r.points.push_back({ExtendedPoint{0, x}, m});
        r.total += m;
    }
    return r;
}

} // namespace

long transverse_multiplicity(const HypersurfaceCell& a, const HypersurfaceCell& b)
{
    if (a.direction.size() != 2 || b.direction.size() != 2)
        throw UnsupportedDimension("transverse_multiplicity: cells must be planar");
    const Integer index = lattice_index(a.direction, b.direction);
    const Polyhedron meet = a.locus.intersect(b.locus);
    if (meet.is_empty())
        throw NonTransverse("transverse_multiplicity: cells do not meet");
    return a.weight * b.weight * index.get_si();
}

Vec perturbation_direction(const TropicalHypersurface& a, const TropicalHypersurface& b, Perturbation rule)
{
    std::vector<Scalar> excluded;
    for (const auto* th : {&a, &b}) {
        for (const auto& c : th->cells) {
            const Vec& d = c.direction;
            if (rule == Perturbation::primary && d[0] != 0)
                excluded.push_back(d[1] / d[0]);
            if (rule == Perturbation::fallback && d[1] != 0)
                excluded.push_back(d[0] / d[1]);
        }
    }
    long zeta = 2;
    while (std::find(excluded.begin(), excluded.end(), Scalar(zeta)) != excluded.end())
        ++zeta;
    return rule == Perturbation::primary ? Vec{Scalar(1), Scalar(zeta)} : Vec{Scalar(zeta), Scalar(1)};
}

IntersectionReport stable_intersection(const TropicalHypersurface& a, const TropicalHypersurface& b, Perturbation rule)
{
    check_planar(a);
    check_planar(b);
    const Vec w = perturbation_direction(a, b, rule);

    std::vector<ParamCell> pa, pb;
    for (const auto& c : a.cells)
        pa.push_back(parametrize(c));
    for (const auto& c : b.cells)
        pb.push_back(parametrize(c));

    std::map<Vec, long, decltype(&lex_less)> acc(&lex_less);
    bool transverse = true;
    for (const auto& ca : pa) {
        for (const auto& cb : pb) {
            // ca.base + s·da = cb.base + εw + t·db
            const Scalar det = det2(ca.dir, cb.dir);
            if (det == 0) {
                if (transverse && !ca.cell->locus.intersect(cb.cell->locus).is_empty())
                    transverse = false;
                continue;
            }
            const Vec r0 = sub(cb.base, ca.base);
            const Scalar s0 = det2(r0, cb.dir) / det;
            const Scalar s1 = det2(w, cb.dir) / det;
            const Scalar t0 = det2(r0, ca.dir) / det;
            const Scalar t1 = det2(w, ca.dir) / det;
            if (transverse && inside_closed(ca, s0) && inside_closed(cb, t0)
                && (at_endpoint(ca, s0) || at_endpoint(cb, t0)))
                transverse = false;
            if (!inside_eventually(ca, s0, s1) || !inside_eventually(cb, t0, t1))
                continue;
            const Vec x = add(ca.base, scale(ca.dir, s0));
            acc[x] += ca.weight * cb.weight * Scalar(abs(det)).get_num().get_si();
        }
    }
    return collect(acc, transverse);
}

IntersectionReport restrict_to_relint(const IntersectionReport& report, const CompactifiedPolyhedron& pbar)
{
    IntersectionReport out;
    out.transverse = report.transverse;
    out.criterion_holds = report.criterion_holds;
    for (const auto& pt : report.points) {
        if (compactified_relint_contains(pbar, pt.location)) {
            out.points.push_back(pt);
            out.total += pt.multiplicity;
        }
    }
    return out;
}

long mixed_volume(const Polyhedron& p, const Polyhedron& q)
{
    for (const auto* x : {&p, &q}) {
        if (x->ambient_dim() != 2)
            throw UnsupportedDimension("mixed_volume is implemented in the plane only");
        if (x->is_empty())
            throw EmptyInput("mixed_volume: empty polytope");
        if (!x->is_bounded())
            throw InvalidInput("mixed_volume: unbounded polyhedron");
        for (const auto& v : x->vertices())
            if (!is_integral(v[0]) || !is_integral(v[1]))
                throw InvalidInput("mixed_volume: inputs are not lattice polytopes");
    }
    const Scalar mv = planar::hull_area(planar::minkowski_sum(p.vertices(), q.vertices()))
                      - planar::hull_area(p.vertices()) - planar::hull_area(q.vertices());
    return mv.get_num().get_si();
}

bool finiteness_criterion(const CompactifiedSet& cells, const CompactifiedPolyhedron& pbar)
{
    if (!(cells.chart == pbar.chart))
        throw StratumMismatch("finiteness_criterion: the set and P̄ live in different compactifications");
    for (std::size_t k = 0; k < cells.pieces.size(); ++k)
        for (const auto& piece : cells.pieces[k])
            if (pbar.pieces[k].is_empty() || !is_subset_of_relint(piece, pbar.pieces[k]))
                return false;
    return true;
}

CompactifiedSet trop_prevariety(const std::vector<ValuedLaurentPoly>& fs, const Chart& chart)
{
    if (fs.size() != 2)
        throw InvalidInput("trop_prevariety expects exactly two polynomials");
    const auto a = tropical_hypersurface(fs[0]);
    const auto b = tropical_hypersurface(fs[1]);

    std::vector<Polyhedron> meets;
    for (const auto& ca : a.cells) {
        for (const auto& cb : b.cells) {
            Polyhedron m = ca.locus.intersect(cb.locus);
            if (!m.is_empty() && std::find(meets.begin(), meets.end(), m) == meets.end())
                meets.push_back(std::move(m));
        }
    }
    // Drop pieces already covered by a larger one, e.g. a vertex on an overlap.
    std::vector<Polyhedron> kept;
    for (std::size_t i = 0; i < meets.size(); ++i) {
        bool covered = false;
        for (std::size_t j = 0; j < meets.size() && !covered; ++j)
            covered = j != i && is_subset(meets[i], meets[j]) && !(meets[i] == meets[j]);
        if (!covered)
            kept.push_back(meets[i]);
    }
    std::sort(kept.begin(), kept.end(), face_order_less);
    return closure_in_compactification(kept, chart);
}

void ParameterGrid::add(std::string name, std::vector<Scalar> values)
{
    if (values.empty())
        throw InvalidInput("parameter " + name + " has no values");
    if (std::find(names_.begin(), names_.end(), name) != names_.end())
        throw InvalidInput("parameter " + name + " listed twice");
    names_.push_back(std::move(name));
    values_.push_back(std::move(values));
}

std::size_t ParameterGrid::size() const
{
    if (names_.empty())
        return 0;
    std::size_t n = 1;
    for (const auto& v : values_)
        n *= v.size();
    return n;
}

std::vector<std::vector<Scalar>> ParameterGrid::points() const
{
    std::vector<std::vector<Scalar>> out;
    if (names_.empty())
        return out;
    std::vector<std::size_t> idx(names_.size(), 0);
    while (true) {
        std::vector<Scalar> pt;
        for (std::size_t i = 0; i < idx.size(); ++i)
            pt.push_back(values_[i][idx[i]]);
        out.push_back(std::move(pt));
        std::size_t i = idx.size();
        while (i > 0) {
            --i;
            if (++idx[i] < values_[i].size())
                break;
            idx[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

ValuedLaurentPoly ParametricPoly::instantiate(const std::vector<std::string>& names, const std::vector<Scalar>& values) const
{
    std::vector<std::pair<Exponent, Scalar>> terms;
    for (const auto& t : this->terms) {
        Scalar val = t.valuation;
        if (t.param) {
            auto it = std::find(names.begin(), names.end(), *t.param);
            if (it == names.end())
                throw InvalidInput("unknown parameter '" + *t.param + "'");
            val += values[static_cast<std::size_t>(it - names.begin())];
        }
        terms.emplace_back(t.exponent, val);
    }
    return ValuedLaurentPoly::from_valuations(ambient_dim, terms);
}

ContinuityReport continuity_verify(const std::vector<ParametricPoly>& system, const Polyhedron& p,
                                   const ParameterGrid& grid, unsigned threads)
{
    if (system.size() != 2)
        throw InvalidInput("continuity_verify expects a square planar system of two polynomials");
    if (grid.size() == 0)
        throw InvalidInput("continuity_verify: empty parameter grid");
    // Resolve parameter references up front so a bad reference fails before any work.
    for (const auto& f : system)
        for (const auto& t : f.terms)
            if (t.param && std::find(grid.names().begin(), grid.names().end(), *t.param) == grid.names().end())
                throw InvalidInput("unknown parameter '" + *t.param + "'");

    const CompactifiedPolyhedron pbar = compactify(p);
    const auto points = grid.points();
    std::vector<std::optional<ContinuityRow>> rows(points.size());

    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < points.size(); i += stride) {
            std::vector<ValuedLaurentPoly> fs;
            for (const auto& f : system)
                fs.push_back(f.instantiate(grid.names(), points[i]));
            CompactifiedSet pre = trop_prevariety(fs, pbar.chart);
            const bool holds = finiteness_criterion(pre, pbar);
            IntersectionReport rep = restrict_to_relint(
                stable_intersection(tropical_hypersurface(fs[0]), tropical_hypersurface(fs[1])), pbar);
            rep.criterion_holds = holds;
            rows[i] = ContinuityRow{points[i], std::move(rep), std::move(pre)};
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work, t, threads);
        for (auto& th : pool)
            th.join();
    }

    ContinuityReport out;
    out.names = grid.names();
    for (auto& r : rows) {
        if (*r->report.criterion_holds) {
            ++out.holding;
            if (!out.common_total)
                out.common_total = r->report.total;
            else if (*out.common_total != r->report.total)
                out.violation = true;
        }
        out.rows.push_back(std::move(*r));
    }
    if (out.violation)
        out.common_total.reset();
    return out;
}

} // namespace tropix
