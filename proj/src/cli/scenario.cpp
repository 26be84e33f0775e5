#include "tropix/cli/scenario.hpp"

#include "tropix/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tropix::cli {

using json = nlohmann::ordered_json;

namespace {

Scalar scalar_of(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Scalar(j.get<long>());
    if (j.is_string())
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const InvalidInput& e) {
            throw InvalidInput(where + ": " + e.what());
        }
    throw InvalidInput(where + ": expected a rational written as \"num/den\" or an integer");
}

const json& require(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::vector<Halfspace> halfspaces_of(const json& j, std::size_t n, const std::string& where)
{
    const json& hs = require(j, "halfspaces", where);
    if (!hs.is_array())
        throw InvalidInput(where + ".halfspaces: expected a list");
    std::vector<Halfspace> out;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const std::string at = where + ".halfspaces[" + std::to_string(i) + "]";
        const json& normal = require(hs[i], "normal", at);
        if (!normal.is_array() || normal.size() != n)
            throw InvalidInput(at + ".normal: expected " + std::to_string(n) + " entries");
        Halfspace h;
        for (const auto& x : normal)
            h.normal.push_back(scalar_of(x, at + ".normal"));
        h.bound = scalar_of(require(hs[i], "bound", at), at + ".bound");
        out.push_back(std::move(h));
    }
    return out;
}

TermSpec term_of(const json& t, std::size_t n, const std::string& at)
{
    TermSpec term;
    const json& e = require(t, "exp", at);
    if (!e.is_array() || e.size() != n)
        throw InvalidInput(at + ".exp: expected " + std::to_string(n) + " integers");
    for (const auto& x : e) {
        if (!x.is_number_integer())
            throw InvalidInput(at + ".exp: exponents must be integers");
        term.exponent.push_back(x.get<int>());
    }
    const bool has_val = t.contains("val");
    const bool has_coeff = t.contains("coeff");
    if (has_val == has_coeff)
        throw InvalidInput(at + ": give exactly one of \"val\" and \"coeff\"");
    if (has_val) {
        term.kind = TermSpec::Kind::valuation;
        term.value = scalar_of(t.at("val"), at + ".val");
        return term;
    }
    const json& c = t.at("coeff");
    if (c.is_object()) {
        term.kind = TermSpec::Kind::param;
        const json& name = require(c, "param", at + ".coeff");
        if (!name.is_string() || name.get<std::string>().empty())
            throw InvalidInput(at + ".coeff.param: expected a parameter name");
        term.param = name.get<std::string>();
        term.value = c.contains("factor") ? scalar_of(c.at("factor"), at + ".coeff.factor") : Scalar(1);
        if (term.value == 0)
            throw InvalidInput(at + ".coeff.factor: must be nonzero");
    } else {
        term.kind = TermSpec::Kind::literal;
        term.value = scalar_of(c, at + ".coeff");
        if (term.value == 0)
            throw InvalidInput(at + ".coeff: zero coefficients must be omitted");
    }
    return term;
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        out.push_back(item.substr(first, item.find_last_not_of(" \t") - first + 1));
    }
    return out;
}

// Maps a --params key to the scenario's parameter name.
std::string param_key(const std::string& key, const std::vector<std::string>& names)
{
    if (std::find(names.begin(), names.end(), key) != names.end())
        return key;
    if (key.size() > 1 && key[0] == 'v' && std::find(names.begin(), names.end(), key.substr(1)) != names.end())
        return key.substr(1);
    throw InvalidInput("--params: unknown parameter '" + key + "'");
}

} // namespace

const PolySpec& Scenario::poly(const std::string& name) const
{
    for (const auto& p : polys)
        if (p.name == name)
            return p;
    throw InvalidInput("no polynomial named '" + name + "'");
}

std::vector<std::string> Scenario::referenced_params() const
{
    std::vector<std::string> out;
    for (const auto& p : polys)
        for (const auto& t : p.terms)
            if (t.kind == TermSpec::Kind::param && std::find(out.begin(), out.end(), t.param) == out.end())
                out.push_back(t.param);
    return out;
}

Scenario parse_scenario(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw InvalidInput("scenario: expected a JSON object");

    Scenario s;
    const json& n = require(j, "n", "scenario");
    if (!n.is_number_integer() || n.get<long>() < 1)
        throw InvalidInput("scenario.n: expected a positive integer");
    s.n = n.get<std::size_t>();
    const json& p = require(j, "p", "scenario");
    if (!p.is_number_integer() || p.get<long>() < 2)
        throw InvalidInput("scenario.p: expected a prime");
    s.p = p.get<unsigned long>();
    for (unsigned long d = 2; d * d <= s.p; ++d)
        if (s.p % d == 0)
            throw InvalidInput("scenario.p: " + std::to_string(s.p) + " is not prime");

    s.halfspaces = halfspaces_of(require(j, "region", "scenario"), s.n, "region");
    s.region = Polyhedron::from_halfspaces(s.n, s.halfspaces);
    if (s.region.is_empty())
        throw InvalidInput("region: the half-spaces have empty intersection");

    const json& polys = require(j, "polys", "scenario");
    if (!polys.is_object() || polys.empty())
        throw InvalidInput("scenario.polys: expected a nonempty object");
    for (const auto& [name, terms] : polys.items()) {
        const std::string where = "polys." + name;
        if (!terms.is_array() || terms.empty())
            throw InvalidInput(where + ": expected a nonempty list of terms");
        PolySpec poly{name, {}};
        for (std::size_t i = 0; i < terms.size(); ++i)
            poly.terms.push_back(term_of(terms[i], s.n, where + "[" + std::to_string(i) + "]"));
        for (std::size_t i = 0; i < poly.terms.size(); ++i)
            for (std::size_t k = 0; k < i; ++k)
                if (poly.terms[i].exponent == poly.terms[k].exponent)
                    throw InvalidInput(where + ": repeated exponent " + to_string(poly.terms[i].exponent));
        s.polys.push_back(std::move(poly));
    }

    if (j.contains("grid")) {
        const json& g = j.at("grid");
        if (!g.is_object())
            throw InvalidInput("scenario.grid: expected an object of value lists");
        for (const auto& [name, values] : g.items()) {
            if (!values.is_array())
                throw InvalidInput("grid." + name + ": expected a list");
            std::vector<Scalar> v;
            for (const auto& x : values)
                v.push_back(scalar_of(x, "grid." + name));
            s.grid.add(name, std::move(v));
        }
        for (const auto& name : s.referenced_params())
            if (std::find(s.grid.names().begin(), s.grid.names().end(), name) == s.grid.names().end())
                throw InvalidInput("parameter '" + name + "' is referenced but has no grid values");
    }

    if (j.contains("plot")) {
        const json& w = j.at("plot");
        PlotWindow win{scalar_of(require(w, "xmin", "plot"), "plot.xmin"), scalar_of(require(w, "xmax", "plot"), "plot.xmax"),
                       scalar_of(require(w, "ymin", "plot"), "plot.ymin"), scalar_of(require(w, "ymax", "plot"), "plot.ymax")};
        if (win.xmin >= win.xmax || win.ymin >= win.ymax)
            throw InvalidInput("plot: empty window");
        s.window = win;
    }

    if (j.contains("regions")) {
        const json& rs = j.at("regions");
        if (!rs.is_array())
            throw InvalidInput("scenario.regions: expected a list");
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const std::string at = "regions[" + std::to_string(i) + "]";
            const json& name = require(rs[i], "name", at);
            if (!name.is_string())
                throw InvalidInput(at + ".name: expected a string");
            Polyhedron r = Polyhedron::from_halfspaces(s.n, halfspaces_of(rs[i], s.n, at));
            if (r.is_empty())
                throw InvalidInput(at + ": empty region");
            s.regions.push_back({name.get<std::string>(), std::move(r)});
        }
    }
    return s;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot read scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

ParametricPoly parametric(const Scenario& s, const PolySpec& poly)
{
    ParametricPoly out;
    out.ambient_dim = s.n;
    for (const auto& t : poly.terms) {
        switch (t.kind) {
        case TermSpec::Kind::valuation:
            out.terms.push_back({t.exponent, t.value, std::nullopt});
            break;
        case TermSpec::Kind::literal:
            out.terms.push_back({t.exponent, Scalar(padic_valuation(t.value, s.p)), std::nullopt});
            break;
        case TermSpec::Kind::param:
            out.terms.push_back({t.exponent, Scalar(padic_valuation(t.value, s.p)), t.param});
            break;
        }
    }
    return out;
}

std::map<std::string, Scalar> parse_valuation_params(const std::string& text, const Scenario& s)
{
    const auto names = s.referenced_params();
    std::map<std::string, Scalar> out;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InvalidInput("--params: expected name=value, got '" + item + "'");
        const std::string key = param_key(item.substr(0, eq), names);
        out[key] = parse_scalar(item.substr(eq + 1));
    }
    return out;
}

ValuedLaurentPoly instantiate_valuations(const Scenario& s, const PolySpec& poly,
                                         const std::map<std::string, Scalar>& params)
{
    std::vector<std::string> names;
    std::vector<Scalar> values;
    for (const auto& [k, v] : params) {
        names.push_back(k);
        values.push_back(v);
    }
    for (const auto& t : poly.terms)
        if (t.kind == TermSpec::Kind::param && !params.count(t.param))
            throw InvalidInput("--params: no value for parameter '" + t.param + "'");
    return parametric(s, poly).instantiate(names, values);
}

std::map<std::string, LiteralValue> parse_literal_params(const std::string& text, const Scenario& s)
{
    const auto names = s.referenced_params();
    std::map<std::string, LiteralValue> out;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InvalidInput("--params: expected name=value, got '" + item + "'");
        const std::string key = param_key(item.substr(0, eq), names);
        std::string value = item.substr(eq + 1);
        LiteralValue lit;
        lit.coefficient = Scalar(1);
        std::string head = value;
        const auto star = value.find('*');
        std::string power;
        if (star != std::string::npos) {
            head = value.substr(0, star);
            power = value.substr(star + 1);
        } else if (value.rfind("p^", 0) == 0) {
            head.clear();
            power = value;
        }
        if (!head.empty()) {
            if (head == "u")
                lit.coefficient.reset();
            else
                lit.coefficient = parse_scalar(head);
        }
        if (!power.empty()) {
            if (power.rfind("p^", 0) != 0)
                throw InvalidInput("--params: expected p^k after '*' in '" + value + "'");
            try {
                std::size_t used = 0;
                lit.exponent = std::stol(power.substr(2), &used);
                if (used != power.size() - 2)
                    throw InvalidInput("");
            } catch (const std::exception&) {
                throw InvalidInput("--params: bad exponent in '" + value + "'");
            }
        }
        if (lit.coefficient && *lit.coefficient == 0)
            throw InvalidInput("--params: parameter '" + key + "' is zero");
        out[key] = lit;
    }
    return out;
}

std::map<std::string, Scalar> resolve_literals(const std::map<std::string, LiteralValue>& params, unsigned long p,
                                               std::uint64_t seed)
{
    UnitSampler units(p, seed);
    std::map<std::string, Scalar> out;
    for (const auto& [name, lit] : params) {
        const Scalar c = lit.coefficient ? *lit.coefficient : units.next();
        out[name] = c * prime_power(p, lit.exponent);
    }
    return out;
}

ValuedLaurentPoly instantiate_literals(const Scenario& s, const PolySpec& poly,
                                       const std::map<std::string, Scalar>& params)
{
    std::vector<std::pair<Exponent, Scalar>> terms;
    for (const auto& t : poly.terms) {
        switch (t.kind) {
        case TermSpec::Kind::valuation:
            if (!is_integral(t.value))
                throw InvalidInput("polys." + poly.name + ": valuation " + to_string(t.value)
                                   + " has no literal p-power coefficient");
            terms.emplace_back(t.exponent, prime_power(s.p, t.value.get_num().get_si()));
            break;
        case TermSpec::Kind::literal:
            terms.emplace_back(t.exponent, t.value);
            break;
        case TermSpec::Kind::param: {
            auto it = params.find(t.param);
            if (it == params.end())
                throw InvalidInput("--params: no value for parameter '" + t.param + "'");
            terms.emplace_back(t.exponent, t.value * it->second);
            break;
        }
        }
    }
    return ValuedLaurentPoly::from_literals(s.n, s.p, terms);
}

} // namespace tropix::cli
