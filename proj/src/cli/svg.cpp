#include "tropix/cli/svg.hpp"

#include "tropix/geometry2d.hpp"

#include <algorithm>
#include <sstream>

namespace tropix::cli {

namespace {

constexpr long kPixelsPerUnit = 20;

struct Frame {
    PlotWindow w;

    std::string x(const Scalar& v) const { return to_decimal((v - w.xmin) * kPixelsPerUnit, 2); }
    std::string y(const Scalar& v) const { return to_decimal((w.ymax - v) * kPixelsPerUnit, 2); }
    std::string width() const { return to_decimal((w.xmax - w.xmin) * kPixelsPerUnit, 2); }
    std::string height() const { return to_decimal((w.ymax - w.ymin) * kPixelsPerUnit, 2); }

    Vec clamp(const Vec& p) const
    {
        return {std::clamp(p[0], w.xmin, w.xmax), std::clamp(p[1], w.ymin, w.ymax)};
    }
};

// Liang–Barsky on base + s·dir, s ∈ [lo, hi] (missing bounds are infinite).
std::optional<std::pair<Vec, Vec>> clip(const Vec& base, const Vec& dir, std::optional<Scalar> lo,
                                        std::optional<Scalar> hi, const PlotWindow& w)
{
    const Scalar mins[2] = {w.xmin, w.ymin};
    const Scalar maxs[2] = {w.xmax, w.ymax};
    for (int k = 0; k < 2; ++k) {
        if (dir[k] == 0) {
            if (base[k] < mins[k] || base[k] > maxs[k])
                return std::nullopt;
            continue;
        }
        Scalar a = (mins[k] - base[k]) / dir[k];
        Scalar b = (maxs[k] - base[k]) / dir[k];
        if (a > b)
            std::swap(a, b);
        if (!lo || a > *lo)
            lo = a;
        if (!hi || b < *hi)
            hi = b;
    }
    if (*lo > *hi)
        return std::nullopt;
    return std::pair{add(base, scale(dir, *lo)), add(base, scale(dir, *hi))};
}

std::optional<std::pair<Vec, Vec>> clip_cell(const HypersurfaceCell& c, const PlotWindow& w)
{
    using K = HypersurfaceCell::Kind;
    if (c.kind == K::segment) {
        const std::size_t k = c.direction[0] != 0 ? 0 : 1;
        return clip(c.base, c.direction, Scalar(0), (c.end[k] - c.base[k]) / c.direction[k], w);
    }
    if (c.kind == K::ray)
        return clip(c.base, c.direction, Scalar(0), std::nullopt, w);
    return clip(c.base, c.direction, std::nullopt, std::nullopt, w);
}

bool in_window(const Vec& p, const PlotWindow& w)
{
    return p[0] >= w.xmin && p[0] <= w.xmax && p[1] >= w.ymin && p[1] <= w.ymax;
}

// A lift to N_R of a point given in the coordinates of `stratum`, pushed to the window edge.
Vec edge_point(const Chart& chart, std::size_t stratum, const Vec& q, const PlotWindow& w)
{
    const Matrix& basis = chart.quotient_basis(stratum);
    Vec lift = zero_vec(2);
    if (!basis.empty()) {
        // least-squares lift: x = Wᵀ (W Wᵀ)⁻¹ q
        Matrix gram(basis.size(), Vec(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                gram[i][j] = dot(basis[i], basis[j]);
        const Vec coef = *solve(gram, q);
        for (std::size_t i = 0; i < basis.size(); ++i)
            lift = add(lift, scale(basis[i], coef[i]));
    }
    Vec d = zero_vec(2);
    for (const auto& r : chart.strata()[stratum].rays())
        d = add(d, r);
    Scalar t = 0;
    const Scalar span = (w.xmax - w.xmin) + (w.ymax - w.ymin);
    const Scalar far = span + abs(lift[0]) + abs(lift[1]);
    if (!is_zero(d))
        t = far / std::max(abs(d[0]), abs(d[1]));
    const Vec p = add(lift, scale(d, t));
    return {std::clamp(p[0], w.xmin, w.xmax), std::clamp(p[1], w.ymin, w.ymax)};
}

void extend(std::optional<PlotWindow>& box, const Vec& p)
{
    if (!box) {
        box = PlotWindow{p[0], p[0], p[1], p[1]};
        return;
    }
    box->xmin = std::min(box->xmin, p[0]);
    box->xmax = std::max(box->xmax, p[0]);
    box->ymin = std::min(box->ymin, p[1]);
    box->ymax = std::max(box->ymax, p[1]);
}

} // namespace

PlotWindow default_window(const PlotInput& in)
{
    std::optional<PlotWindow> box;
    for (const auto& v : in.pbar.base.vertices())
        extend(box, v);
    for (const auto& c : in.curves) {
        for (const auto& v : c.hypersurface.vertices)
            extend(box, v);
        for (const auto& cell : c.hypersurface.cells)
            extend(box, cell.base);
    }
    for (const auto& pt : in.intersection.points)
        extend(box, pt.location.coords);
    if (!box)
        box = PlotWindow{0, 0, 0, 0};
    return {box->xmin - 4, box->xmax + 4, box->ymin - 4, box->ymax + 4};
}

std::string render_svg(const PlotInput& in)
{
    const Frame f{in.window ? *in.window : default_window(in)};
    const PlotWindow& w = f.w;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f.width() << "\" height=\""
        << f.height() << "\" viewBox=\"0 0 " << f.width() << ' ' << f.height() << "\">\n";
    out << "<title>tropical curves, window [" << to_string(w.xmin) << ',' << to_string(w.xmax) << "]x["
        << to_string(w.ymin) << ',' << to_string(w.ymax) << "]</title>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << f.width() << "\" height=\"" << f.height()
        << "\" fill=\"white\" stroke=\"black\"/>\n";

    // axes
    out << "<g id=\"axes\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    if (w.xmin <= 0 && 0 <= w.xmax)
        out << "  <line x1=\"" << f.x(0) << "\" y1=\"" << f.y(w.ymax) << "\" x2=\"" << f.x(0) << "\" y2=\""
            << f.y(w.ymin) << "\"/>\n";
    if (w.ymin <= 0 && 0 <= w.ymax)
        out << "  <line x1=\"" << f.x(w.xmin) << "\" y1=\"" << f.y(0) << "\" x2=\"" << f.x(w.xmax) << "\" y2=\""
            << f.y(0) << "\"/>\n";
    out << "</g>\n";

    // region: P cut to the window
    const Polyhedron box = Polyhedron::from_halfspaces(
        2, {{{1, 0}, w.xmax}, {{-1, 0}, -w.xmin}, {{0, 1}, w.ymax}, {{0, -1}, -w.ymin}});
    const Polyhedron shown = in.pbar.base.intersect(box);
    out << "<g id=\"region\">\n";
    if (!shown.is_empty()) {
        const auto poly = planar::convex_hull(shown.vertices());
        out << "  <polygon points=\"";
        for (std::size_t i = 0; i < poly.size(); ++i)
            out << (i ? " " : "") << f.x(poly[i][0]) << ',' << f.y(poly[i][1]);
        out << "\" fill=\"#dfe8f5\" stroke=\"#5577aa\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t k = 1; k < in.pbar.pieces.size(); ++k) {
        const Polyhedron& piece = in.pbar.pieces[k];
        if (piece.is_empty() || !piece.is_bounded())
            continue;
        std::vector<Vec> ends;
        for (const auto& v : piece.vertices())
            ends.push_back(edge_point(in.pbar.chart, k, v, w));
        std::sort(ends.begin(), ends.end(), lex_less);
        out << "  <line x1=\"" << f.x(ends.front()[0]) << "\" y1=\"" << f.y(ends.front()[1]) << "\" x2=\""
            << f.x(ends.back()[0]) << "\" y2=\"" << f.y(ends.back()[1])
            << "\" stroke=\"#5577aa\" stroke-width=\"5\" stroke-linecap=\"round\"/>\n";
    }
    out << "</g>\n";

    // curves: later curves dashed so overlaps show both colours
    for (std::size_t i = 0; i < in.curves.size(); ++i) {
        const auto& c = in.curves[i];
        out << "<g id=\"curve-" << c.name << "\" stroke=\"" << c.color << "\" stroke-width=\"2\" fill=\"none\""
            << (i > 0 ? " stroke-dasharray=\"6,4\"" : "") << ">\n";
        for (const auto& cell : c.hypersurface.cells) {
            const auto seg = clip_cell(cell, w);
            if (!seg)
                continue;
            out << "  <line x1=\"" << f.x(seg->first[0]) << "\" y1=\"" << f.y(seg->first[1]) << "\" x2=\""
                << f.x(seg->second[0]) << "\" y2=\"" << f.y(seg->second[1]) << "\"/>\n";
            if (cell.weight > 1) {
                const Vec mid = scale(add(seg->first, seg->second), Scalar(1, 2));
                out << "  <text x=\"" << f.x(mid[0]) << "\" y=\"" << f.y(mid[1])
                    << "\" font-size=\"10\" stroke=\"none\" fill=\"" << c.color << "\">" << cell.weight << "</text>\n";
            }
        }
        for (const auto& v : c.hypersurface.vertices) {
            if (!in_window(v, w))
                continue;
            out << "  <circle cx=\"" << f.x(v[0]) << "\" cy=\"" << f.y(v[1]) << "\" r=\"2.5\" fill=\"" << c.color
                << "\"/>\n";
            out << "  <text x=\"" << f.x(v[0]) << "\" y=\"" << f.y(v[1]) << "\" dx=\"4\" dy=\"-4\" font-size=\"10\""
                << " stroke=\"none\" fill=\"" << c.color << "\">" << to_string(v) << "</text>\n";
        }
        out << "</g>\n";
    }

    // pieces of the prevariety at infinity
    out << "<g id=\"strata\">\n";
    if (in.prevariety) {
        for (std::size_t k = 1; k < in.prevariety->pieces.size(); ++k) {
            for (const auto& piece : in.prevariety->pieces[k]) {
                if (!piece.is_bounded())
                    continue;
                for (const auto& v : piece.vertices()) {
                    const Vec p = edge_point(in.prevariety->chart, k, v, w);
                    const std::string cx = f.x(p[0]), cy = f.y(p[1]);
                    out << "  <rect x=\"" << cx << "\" y=\"" << cy
                        << "\" width=\"8\" height=\"8\" transform=\"translate(-4,-4)\" fill=\"black\"/>\n";
                    out << "  <text x=\"" << cx << "\" y=\"" << cy << "\" dx=\"6\" dy=\"-6\" font-size=\"10\">"
                        << to_string(v) << " at -inf</text>\n";
                }
            }
        }
    }
    out << "</g>\n";

    out << "<g id=\"intersections\">\n";
    for (const auto& pt : in.intersection.points) {
        const Vec& x = pt.location.coords;
        if (pt.location.stratum != 0 || !in_window(x, w))
            continue;
        out << "  <circle cx=\"" << f.x(x[0]) << "\" cy=\"" << f.y(x[1])
            << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        out << "  <text x=\"" << f.x(x[0]) << "\" y=\"" << f.y(x[1]) << "\" dx=\"7\" dy=\"12\" font-size=\"10\">"
            << to_string(x) << " m=" << pt.multiplicity << "</text>\n";
    }
    out << "</g>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace tropix::cli
