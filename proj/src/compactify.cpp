#include "tropix/compactify.hpp"

#include <algorithm>

namespace tropix {

// ---------------------------------------------------------------------------
// Fans

FanViolation::FanViolation(Cone first, Cone second)
    : Error("cones " + describe(first) + " and " + describe(second) + " meet in " +
            describe(first.intersect(second)) + ", which is not a common face"),
      first_(std::move(first)), second_(std::move(second))
{
}

namespace {

std::optional<std::size_t> find_cone(const std::vector<Cone>& cones, const Cone& c)
{
    for (std::size_t i = 0; i < cones.size(); ++i)
        if (cones[i] == c)
            return i;
    return std::nullopt;
}

} // namespace

Fan fan_from_cones(const std::vector<Cone>& cones)
{
    Fan fan;
    if (cones.empty())
        throw EmptyInput("fan_from_cones: no cones");
    fan.ambient_dim = cones.front().ambient_dim();
    for (const auto& c : cones) {
        if (c.ambient_dim() != fan.ambient_dim)
            throw DimensionMismatch("fan_from_cones: cones live in different dimensions");
        for (auto& f : c.faces())
            if (!find_cone(fan.cones, f))
                fan.cones.push_back(std::move(f));
    }
    std::sort(fan.cones.begin(), fan.cones.end(),
              [](const Cone& a, const Cone& b) { return face_order_less(a.polyhedron(), b.polyhedron()); });

    for (const auto& c : fan.cones) {
        std::vector<std::size_t> idx;
        for (const auto& f : c.faces())
            idx.push_back(*find_cone(fan.cones, f));
        std::sort(idx.begin(), idx.end());
        fan.faces.push_back(std::move(idx));
        fan.pointed = fan.pointed && c.is_pointed();
    }

    for (std::size_t i = 0; i < fan.cones.size(); ++i) {
        for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
            const Cone meet = fan.cones[i].intersect(fan.cones[j]);
            auto k = find_cone(fan.cones, meet);
            auto is_face_of = [&](std::size_t c) {
                return k && std::binary_search(fan.faces[c].begin(), fan.faces[c].end(), *k);
            };
            if (!is_face_of(i) || !is_face_of(j))
                throw FanViolation(fan.cones[i], fan.cones[j]);
        }
    }
    return fan;
}

std::variant<Fan, Undecided> simultaneously_compactifiable(const std::vector<Polyhedron>& family)
{
    std::vector<Cone> recs;
    for (const auto& p : family) {
        if (p.is_empty())
            throw EmptyInput("simultaneously_compactifiable: empty polyhedron in family");
        if (!p.is_pointed())
            throw NotPointed("simultaneously_compactifiable: " + describe(p) + " is not pointed");
        recs.push_back(recession_cone(p));
    }
    try {
        return fan_from_cones(recs);
    } catch (const FanViolation& v) {
        return Undecided{v.first(), v.second(), v.what()};
    }
}

namespace {

bool upper_half(const Vec& d)
{
    return d[1] > 0 || (d[1] == 0 && d[0] > 0);
}

bool angle_less(const Vec& a, const Vec& b)
{
    bool ha = upper_half(a), hb = upper_half(b);
    if (ha != hb)
        return ha;
    return det2(a, b) > 0;
}

} // namespace

bool is_complete(const Fan& fan)
{
    const std::size_t n = fan.ambient_dim;
    auto covered = [&](const Vec& d) {
        return std::any_of(fan.cones.begin(), fan.cones.end(), [&](const Cone& c) { return c.contains(d); });
    };
    if (n == 1)
        return covered({Scalar(1)}) && covered({Scalar(-1)});
    if (n != 2)
        throw UnsupportedDimension("is_complete supports ambient dimension 1 or 2");

    std::vector<Vec> dirs;
    for (const auto& c : fan.cones) {
        for (const auto& r : c.rays())
            dirs.push_back(r);
        for (const auto& l : c.lineality()) {
            dirs.push_back(l);
            dirs.push_back(negate(l));
        }
    }
    if (dirs.empty())
        return covered({Scalar(1), Scalar(0)});
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

    // Membership is constant on each open arc between consecutive critical
    // directions, and the support is closed, so one sample per arc decides.
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const Vec& a = dirs[i];
        const Vec& b = dirs[(i + 1) % dirs.size()];
        Vec sample = det2(a, b) > 0 ? add(a, b) : Vec{-a[1], a[0]};
        if (!covered(sample))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Charts

Chart::Chart(Cone sigma) : sigma_(std::move(sigma))
{
    if (!sigma_.is_pointed())
        throw NotPointed("N_R(σ) requires a pointed cone, got " + describe(sigma_));
    strata_ = sigma_.faces();
    for (const auto& tau : strata_) {
        Matrix basis = nullspace(tau.rays(), ambient_dim());
        for (auto& b : basis)
            b = primitive(b);
        quotient_bases_.push_back(std::move(basis));
    }
}

void Chart::check_stratum(std::size_t stratum) const
{
    if (stratum >= strata_.size())
        throw StratumMismatch("stratum index " + std::to_string(stratum) + " is not a face of " + describe(sigma_));
}

std::optional<std::size_t> Chart::stratum_index(const Cone& tau) const
{
    for (std::size_t i = 0; i < strata_.size(); ++i)
        if (strata_[i] == tau)
            return i;
    return std::nullopt;
}

const Matrix& Chart::quotient_basis(std::size_t stratum) const
{
    check_stratum(stratum);
    return quotient_bases_[stratum];
}

Vec Chart::project(std::size_t stratum, const Vec& x) const
{
    return apply(quotient_basis(stratum), x);
}

Polyhedron Chart::project(std::size_t stratum, const Polyhedron& p) const
{
    return p.linear_image(quotient_basis(stratum));
}

Vec Chart::quotient_coords(const ExtendedPoint& x) const
{
    return project(x.stratum, x.coords);
}

bool Chart::same_point(const ExtendedPoint& a, const ExtendedPoint& b) const
{
    return a.stratum == b.stratum && quotient_coords(a) == quotient_coords(b);
}

std::optional<std::size_t> Chart::limit_stratum(const Vec& direction) const
{
    for (std::size_t i = 0; i < strata_.size(); ++i)
        if (strata_[i].relint_contains(direction))
            return i;
    return std::nullopt;
}

std::vector<ExtendedScalar> iota_embed(const Chart& chart, const ExtendedPoint& x, const std::vector<Vec>& generators)
{
    const Cone& tau = chart.strata().at(x.stratum);
    std::vector<ExtendedScalar> out;
    for (const auto& u : generators) {
        for (const auto& r : chart.sigma().rays())
            if (dot(u, r) > 0)
                throw InvalidInput("iota_embed: " + to_string(u) + " is not in the polar cone");
        bool orthogonal = std::all_of(tau.rays().begin(), tau.rays().end(),
                                      [&](const Vec& r) { return dot(u, r) == 0; });
        out.push_back(orthogonal ? ExtendedScalar(dot(u, x.coords)) : ExtendedScalar::minus_infinity());
    }
    return out;
}

CompactifiedPolyhedron compactify(const Polyhedron& p)
{
    if (p.is_empty())
        throw EmptyInput("compactify: empty polyhedron");
    if (!p.is_pointed())
        throw NotPointed("compactify: " + describe(p) + " is not pointed");
    Chart chart(recession_cone(p));
    std::vector<Polyhedron> pieces;
    for (std::size_t k = 0; k < chart.stratum_count(); ++k)
        pieces.push_back(chart.project(k, p));
    return {p, std::move(chart), std::move(pieces)};
}

CompactifiedSet closure_in_compactification(const Polyhedron& q, const Cone& sigma)
{
    if (q.is_empty())
        throw EmptyInput("closure_in_compactification: empty polyhedron");
    return closure_in_compactification(std::vector<Polyhedron>{q}, Chart(sigma));
}

CompactifiedSet closure_in_compactification(const std::vector<Polyhedron>& cells, const Chart& chart)
{
    CompactifiedSet out{chart, {}, std::vector<std::vector<Polyhedron>>(chart.stratum_count())};
    for (const auto& q : cells) {
        if (q.is_empty())
            continue;
        if (q.ambient_dim() != chart.ambient_dim())
            throw DimensionMismatch("closure_in_compactification: cell dimension differs from chart");
        out.cells.push_back(q);
        const Cone rec = recession_cone(q);
        for (std::size_t k = 0; k < chart.stratum_count(); ++k) {
            bool reaches = k == 0;
            if (!reaches) {
                const Cone meet = chart.strata()[k].intersect(rec);
                Vec sum = zero_vec(chart.ambient_dim());
                for (const auto& r : meet.rays())
                    sum = add(sum, r);
                reaches = chart.strata()[k].relint_contains(sum);
            }
            if (!reaches)
                continue;
            Polyhedron piece = chart.project(k, q);
            auto& bucket = out.pieces[k];
            if (std::find(bucket.begin(), bucket.end(), piece) == bucket.end())
                bucket.push_back(std::move(piece));
        }
    }
    return out;
}

bool compactified_contains(const CompactifiedPolyhedron& pbar, const ExtendedPoint& x)
{
    if (x.stratum >= pbar.pieces.size())
        throw StratumMismatch("stratum index " + std::to_string(x.stratum) + " out of range");
    const Polyhedron& piece = pbar.pieces[x.stratum];
    return !piece.is_empty() && piece.contains(pbar.chart.quotient_coords(x));
}

bool compactified_relint_contains(const CompactifiedPolyhedron& pbar, const ExtendedPoint& x)
{
    if (x.stratum >= pbar.pieces.size())
        throw StratumMismatch("stratum index " + std::to_string(x.stratum) + " out of range");
    const Polyhedron& piece = pbar.pieces[x.stratum];
    return !piece.is_empty() && piece.relint_contains(pbar.chart.quotient_coords(x));
}

} // namespace tropix
