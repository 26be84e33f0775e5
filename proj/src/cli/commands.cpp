#include "tropix/cli/commands.hpp"

#include "tropix/cli/svg.hpp"
#include "tropix/errors.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace tropix::cli {

namespace {

std::map<std::string, Scalar> valuation_params(const Scenario& s, const CommandOptions& opt)
{
    return opt.params ? parse_valuation_params(*opt.params, s) : std::map<std::string, Scalar>{};
}

void require_planar_system(const Scenario& s)
{
    if (s.n != 2)
        throw InvalidInput("intersection commands need n = 2, the scenario has n = " + std::to_string(s.n));
    if (s.polys.size() < 2)
        throw InvalidInput("intersection commands need two polynomials");
}

std::string params_line(const std::map<std::string, Scalar>& params)
{
    if (params.empty())
        return "(none)";
    std::string s;
    for (const auto& [k, v] : params)
        s += (s.empty() ? "" : " ") + k + "=" + to_string(v);
    return s;
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string stratum_name(const Chart& chart, std::size_t k)
{
    return k == 0 ? "{0}" : describe(chart.strata()[k]);
}

std::string kind_name(HypersurfaceCell::Kind k)
{
    switch (k) {
    case HypersurfaceCell::Kind::segment:
        return "segment";
    case HypersurfaceCell::Kind::ray:
        return "ray";
    case HypersurfaceCell::Kind::line:
        return "line";
    }
    return "?";
}

std::string points_cell(const IntersectionReport& r)
{
    if (r.points.empty())
        return "-";
    std::string s;
    for (const auto& p : r.points)
        s += (s.empty() ? "" : " ") + to_string(p.location.coords) + "x" + std::to_string(p.multiplicity);
    return s;
}

void write_hypersurface(std::ostream& out, const PolySpec& poly, const ValuedLaurentPoly& f)
{
    out << "polynomial " << poly.name << "\n";
    out << "terms (exponent, c = -val):\n";
    for (const auto& [u, c] : f.terms())
        out << "  " << std::left << std::setw(12) << to_string(u) << to_string(c) << "\n";
    if (f.ambient_dim() != 2) {
        out << "cell enumeration is available for n = 2 only\n";
        return;
    }
    const auto th = tropical_hypersurface(f);
    if (th.empty()) {
        out << "empty hypersurface (fewer than two terms)\n";
        return;
    }
    out << "vertices:\n";
    if (th.vertices.empty())
        out << "  (none)\n";
    for (const auto& v : th.vertices)
        out << "  " << to_string(v) << "\n";
    out << "cells:\n";
    for (const auto& c : th.cells) {
        out << "  " << std::left << std::setw(8) << kind_name(c.kind) << " base " << std::setw(14) << to_string(c.base)
            << " dir " << std::setw(8) << to_string(c.direction);
        if (c.kind == HypersurfaceCell::Kind::segment)
            out << " end " << std::setw(14) << to_string(c.end);
        out << " weight " << c.weight << "  dual " << to_string(c.dual_from) << "-" << to_string(c.dual_to) << "\n";
    }
    out << "dual subdivision:\n";
    for (const auto& cell : th.subdivision) {
        out << "  {";
        for (std::size_t i = 0; i < cell.size(); ++i)
            out << (i ? "," : "") << to_string(cell[i]);
        out << "}\n";
    }
    out << "balanced: " << yes_no(balancing_check(th)) << "\n";
}

void write_pieces(std::ostream& out, const CompactifiedSet& set)
{
    if (set.empty()) {
        out << "  (empty)\n";
        return;
    }
    for (std::size_t k = 0; k < set.pieces.size(); ++k)
        for (const auto& piece : set.pieces[k])
            out << "  stratum " << std::left << std::setw(14) << stratum_name(set.chart, k) << describe(piece) << "\n";
}

} // namespace

int cmd_tropicalize(const Scenario& s, const CommandOptions& opt, std::ostream& out)
{
    const PolySpec& poly = s.poly(opt.poly ? *opt.poly : s.polys.front().name);
    const auto params = valuation_params(s, opt);
    const auto f = instantiate_valuations(s, poly, params);
    out << "parameters: " << params_line(params) << "\n";
    write_hypersurface(out, poly, f);
    return exit_ok;
}

int cmd_intersect(const Scenario& s, const CommandOptions& opt, std::ostream& out)
{
    require_planar_system(s);
    const auto params = valuation_params(s, opt);
    const std::vector<ValuedLaurentPoly> fs{instantiate_valuations(s, s.polys[0], params),
                                            instantiate_valuations(s, s.polys[1], params)};
    const CompactifiedPolyhedron pbar = compactify(s.region);
    const auto stable = stable_intersection(tropical_hypersurface(fs[0]), tropical_hypersurface(fs[1]));
    const CompactifiedSet pre = trop_prevariety(fs, pbar.chart);
    const bool holds = finiteness_criterion(pre, pbar);
    auto restricted = restrict_to_relint(stable, pbar);

    out << "parameters: " << params_line(params) << "\n";
    out << "system: " << s.polys[0].name << ", " << s.polys[1].name << "\n";
    out << "region: " << describe(s.region) << "\n";
    out << "sigma = Recc(P): " << describe(pbar.chart.sigma()) << "\n";
    out << "stable intersection in R^2 (" << (stable.transverse ? "transverse" : "non-transverse, perturbed limit")
        << "):\n";
    if (stable.points.empty())
        out << "  (none)\n";
    for (const auto& p : stable.points)
        out << "  point " << std::left << std::setw(14) << to_string(p.location.coords) << " multiplicity "
            << p.multiplicity << "  in Relint(P-bar): " << yes_no(compactified_relint_contains(pbar, p.location))
            << "\n";
    out << "total in R^2: " << stable.total << "\n";
    out << "prevariety:\n";
    write_pieces(out, pre);
    out << "finiteness criterion: " << (holds ? "holds" : "fails") << "\n";
    out << "total in Relint(P-bar): " << restricted.total << "\n";
    return exit_ok;
}

int cmd_verify(const Scenario& s, const CommandOptions& opt, std::ostream& out)
{
    require_planar_system(s);
    if (s.grid.size() == 0)
        throw InvalidInput("verify needs a nonempty parameter grid");
    const std::vector<ParametricPoly> system{parametric(s, s.polys[0]), parametric(s, s.polys[1])};
    auto report = continuity_verify(system, s.region, s.grid, opt.threads);
    std::sort(report.rows.begin(), report.rows.end(),
              [](const ContinuityRow& a, const ContinuityRow& b) { return a.params < b.params; });

    out << "system: " << s.polys[0].name << ", " << s.polys[1].name << "\n";
    out << "region: " << describe(s.region) << "\n";
    out << std::left;
    for (const auto& name : report.names)
        out << std::setw(8) << name;
    out << std::setw(11) << "criterion" << std::setw(7) << "total" << "points in Relint(P-bar)\n";
    std::vector<const ContinuityRow*> failing;
    std::set<long> totals;
    for (const auto& row : report.rows) {
        for (const auto& v : row.params)
            out << std::setw(8) << to_string(v);
        const bool holds = *row.report.criterion_holds;
        out << std::setw(11) << (holds ? "holds" : "fails") << std::setw(7) << row.report.total
            << points_cell(row.report) << "\n";
        if (holds)
            totals.insert(row.report.total);
        else
            failing.push_back(&row);
    }
    if (!failing.empty()) {
        out << "criterion fails at " << failing.size() << " of " << report.rows.size() << " grid points:\n";
        for (const auto* row : failing) {
            out << " ";
            for (std::size_t i = 0; i < report.names.size(); ++i)
                out << " " << report.names[i] << "=" << to_string(row->params[i]);
            out << "\n";
        }
    }
    if (report.holding == 0) {
        out << "UNDECIDED: the criterion holds at none of the " << report.rows.size() << " grid points\n";
        return exit_undecided;
    }
    if (report.violation) {
        out << "CONTINUITY VIOLATION: totals";
        for (long t : totals)
            out << " " << t;
        out << " over " << report.holding << "/" << report.rows.size() << " criterion-holding points\n";
        return exit_violation;
    }
    out << "CONSTANT length " << *report.common_total << " over " << report.holding << "/" << report.rows.size()
        << " criterion-holding points\n";
    return exit_ok;
}

int cmd_plot(const Scenario& s, const CommandOptions& opt, std::ostream& out)
{
    require_planar_system(s);
    const auto params = valuation_params(s, opt);
    const std::vector<ValuedLaurentPoly> fs{instantiate_valuations(s, s.polys[0], params),
                                            instantiate_valuations(s, s.polys[1], params)};
    PlotInput in{s.window, compactify(s.region), {}, {}, std::nullopt};
    in.curves.push_back({s.polys[0].name, "red", tropical_hypersurface(fs[0])});
    in.curves.push_back({s.polys[1].name, "green", tropical_hypersurface(fs[1])});
    in.intersection = stable_intersection(in.curves[0].hypersurface, in.curves[1].hypersurface);
    in.prevariety = trop_prevariety(fs, in.pbar.chart);
    out << render_svg(in);
    return exit_ok;
}

int cmd_oracle(const Scenario& s, const CommandOptions& opt, std::ostream& out)
{
    require_planar_system(s);
    const auto literal = opt.params ? parse_literal_params(*opt.params, s) : std::map<std::string, LiteralValue>{};
    const auto values = resolve_literals(literal, s.p, opt.seed);
    const std::vector<ValuedLaurentPoly> fs{instantiate_literals(s, s.polys[0], values),
                                            instantiate_literals(s, s.polys[1], values)};
    const FiberReport rep = fiber_count(fs, s.region);
    const CompactifiedPolyhedron pbar = compactify(s.region);

    out << "p = " << s.p << ", seed = " << opt.seed << "\n";
    out << "parameters:";
    if (values.empty())
        out << " (none)";
    for (const auto& [k, v] : values)
        out << " " << k << "=" << to_string(v) << " (v_p " << padic_valuation(v, s.p) << ")";
    out << "\n";
    out << "roots (valuations, tropical point, multiplicity):\n";
    for (const auto& r : rep.roots) {
        const auto t = r.trop();
        auto val = [](const std::optional<Scalar>& v) { return v ? to_string(*v) : std::string("+inf"); };
        std::string vals = "(" + val(r.vx) + "," + val(r.vy) + ")";
        std::string trop = "(" + to_string(t[0]) + "," + to_string(t[1]) + ")";
        out << "  val " << std::left << std::setw(14) << vals << " trop " << std::setw(14) << trop << " mult "
            << r.multiplicity << "  stratum "
            << (r.location ? stratum_name(pbar.chart, r.location->stratum) : std::string("outside N_R(sigma)"))
            << "  in P-bar: " << yes_no(r.in_closure) << "  in Relint: " << yes_no(r.in_relint) << "\n";
    }
    out << "fiber length in P-bar: " << rep.length << " (of " << rep.total << " roots)\n";
    return exit_ok;
}

int cmd_check_fan(const Scenario& s, const CommandOptions&, std::ostream& out)
{
    std::vector<Polyhedron> family;
    std::vector<std::string> names;
    if (s.regions.empty()) {
        family.push_back(s.region);
        names.push_back("region");
    }
    for (const auto& r : s.regions) {
        family.push_back(r.region);
        names.push_back(r.name);
    }
    out << "recession cones:\n";
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!family[i].is_pointed())
            throw NotPointed("region '" + names[i] + "' is not pointed");
        out << "  " << std::left << std::setw(12) << names[i] << describe(recession_cone(family[i])) << "\n";
    }
    const auto result = simultaneously_compactifiable(family);
    if (const auto* u = std::get_if<Undecided>(&result)) {
        out << "UNDECIDED: " << describe(u->first) << " and " << describe(u->second)
            << " do not meet in a common face\n";
        return exit_undecided;
    }
    const Fan& fan = std::get<Fan>(result);
    out << "FAN with " << fan.cones.size() << " cones:\n";
    for (const auto& c : fan.cones)
        out << "  " << describe(c) << "\n";
    if (fan.ambient_dim <= 2)
        out << "complete: " << yes_no(is_complete(fan)) << "\n";
    return exit_ok;
}

int run_command(const std::string& command, const CommandOptions& opt, std::ostream& out, std::ostream& err)
{
    using Handler = int (*)(const Scenario&, const CommandOptions&, std::ostream&);
    static const std::map<std::string, Handler> handlers{
        {"tropicalize", cmd_tropicalize}, {"intersect", cmd_intersect}, {"verify", cmd_verify},
        {"plot", cmd_plot},               {"oracle", cmd_oracle},       {"check-fan", cmd_check_fan},
    };
    const auto it = handlers.find(command);
    if (it == handlers.end()) {
        err << "error: unknown command '" << command << "'\n";
        return exit_input;
    }
    try {
        const Scenario s = load_scenario(opt.scenario);
        std::ostringstream buf;
        const int code = it->second(s, opt, buf);
        if (opt.out) {
            std::ofstream file(*opt.out, std::ios::binary);
            if (!file) {
                err << "error: cannot write '" << *opt.out << "'\n";
                return exit_input;
            }
            file << buf.str();
        } else {
            out << buf.str();
        }
        return code;
    } catch (const PairingAmbiguity& e) {
        err << "ambiguous: " << e.what() << "\n";
        return exit_undecided;
    } catch (const InfiniteFiber& e) {
        err << "undecidable: " << e.what() << "\n";
        return exit_undecided;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

} // namespace tropix::cli
