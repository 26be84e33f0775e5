#pragma once

#include "tropix/intersect.hpp"
#include "tropix/oracle.hpp"
#include "tropix/polyhedron.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropix::cli {

/// One term of a scenario polynomial, as written in the file.
struct TermSpec {
    enum class Kind { valuation, literal, param };

    Exponent exponent;
    Kind kind = Kind::valuation;
    /// The valuation, the literal coefficient, or the factor multiplying the parameter.
    Scalar value;
    std::string param;
};

struct PolySpec {
    std::string name;
    std::vector<TermSpec> terms;
};

struct PlotWindow {
    Scalar xmin, xmax, ymin, ymax;
};

struct NamedRegion {
    std::string name;
    Polyhedron region;
};

struct Scenario {
    std::size_t n = 2;
    unsigned long p = 0;
    std::vector<Halfspace> halfspaces;
    Polyhedron region = Polyhedron::empty(2);
    std::vector<PolySpec> polys;
    ParameterGrid grid;
    std::optional<PlotWindow> window;
    std::vector<NamedRegion> regions;

    const PolySpec& poly(const std::string& name) const;
    /// All parameter names referenced by any polynomial, in first-use order.
    std::vector<std::string> referenced_params() const;
};

/// Throws InvalidInput with a message naming the offending field.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Coefficient valuations as a parametric polynomial (valuation = v_p(factor) + param).
ParametricPoly parametric(const Scenario& s, const PolySpec& poly);

/// "vt1=-8,vt2=6"; a key may be the parameter name or the name prefixed by "v".
std::map<std::string, Scalar> parse_valuation_params(const std::string& text, const Scenario& s);

ValuedLaurentPoly instantiate_valuations(const Scenario& s, const PolySpec& poly,
                                         const std::map<std::string, Scalar>& params);

/// A literal parameter value: a rational, "u" for a random unit, "p^k", or "<rational|u>*p^k".
struct LiteralValue {
    std::optional<Scalar> coefficient; // nullopt: draw a unit
    long exponent = 0;
};

/// "t1=u*p^-8,t2=p^6".
std::map<std::string, LiteralValue> parse_literal_params(const std::string& text, const Scenario& s);

/// Resolves random units in a fixed order (sorted by parameter name).
std::map<std::string, Scalar> resolve_literals(const std::map<std::string, LiteralValue>& params, unsigned long p,
                                               std::uint64_t seed);

ValuedLaurentPoly instantiate_literals(const Scenario& s, const PolySpec& poly,
                                       const std::map<std::string, Scalar>& params);

} // namespace tropix::cli
