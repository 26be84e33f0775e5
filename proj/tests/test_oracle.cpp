#include <doctest.h>

#include "oracles.hpp"
#include "tropix/errors.hpp"
#include "tropix/intersect.hpp"
#include "tropix/oracle.hpp"

#include <random>
#include <set>

using namespace tropix;
using ref::v2;

namespace {

constexpr unsigned long p = 5;

Polyhedron strip_p()
{
    return make_polyhedron(2, {{{-1, 0}, 3}, {{1, 0}, -1}, {{0, 1}, 0}});
}

std::vector<ValuedLaurentPoly> literal_system(const Scalar& t1, const Scalar& t2)
{
    return {ValuedLaurentPoly::from_literals(2, p, {{{0, 0}, t2}, {{1, 0}, 1}, {{0, 1}, t1}}),
            ValuedLaurentPoly::from_literals(2, p, {{{0, 0}, 25}, {{1, 0}, 1}, {{0, 1}, 1}})};
}

std::multiset<Scalar> root_valuations(const UnivariateValuedPoly& f)
{
    std::multiset<Scalar> out;
    for (const auto& s : newton_polygon_valuations(f))
        for (long i = 0; i < s.length; ++i)
            out.insert(s.root_valuation());
    return out;
}

// Coefficients of ∏ (z − r_i), by repeated convolution.
std::vector<Scalar> from_roots(const std::vector<Scalar>& roots)
{
    std::vector<Scalar> c{Scalar(1)};
    for (const auto& r : roots) {
        std::vector<Scalar> next(c.size() + 1, Scalar(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

std::vector<Scalar> convolve(const std::vector<Scalar>& a, const std::vector<Scalar>& b)
{
    std::vector<Scalar> c(a.size() + b.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

} // namespace

TEST_CASE("newton_polygon_valuations")
{
    // p + x
    auto segs = newton_polygon_valuations(UnivariateValuedPoly::from_literals(RationalPoly({Scalar(5), Scalar(1)}), p));
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].root_valuation() == 1);
    CHECK(segs[0].length == 1);

    // 1 + x + p²x²
    segs = newton_polygon_valuations(UnivariateValuedPoly::from_literals(RationalPoly({Scalar(1), Scalar(1), Scalar(25)}), p));
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].root_valuation() == 0);
    CHECK(segs[1].root_valuation() == -2);
    CHECK(segs[0].length == 1);
    CHECK(segs[1].length == 1);

    // p² + x²
    segs = newton_polygon_valuations(UnivariateValuedPoly::from_valuations({{0, 2}, {2, 0}}));
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].root_valuation() == 1);
    CHECK(segs[0].length == 2);

    // x²(1 + x): the double root at 0 is not a segment
    const auto f = UnivariateValuedPoly::from_valuations({{2, 0}, {3, 0}});
    CHECK(f.order_at_zero() == 2);
    segs = newton_polygon_valuations(f);
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].length == 1);

    // fractional slopes
    segs = newton_polygon_valuations(UnivariateValuedPoly::from_valuations({{0, 1}, {2, 0}, {3, 5}}));
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].root_valuation() == Scalar(1) / 2);
    CHECK(segs[1].root_valuation() == -5);

    CHECK_THROWS_AS(newton_polygon_valuations(UnivariateValuedPoly::from_valuations({{0, 3}})), InvalidInput);
    CHECK_THROWS_AS(UnivariateValuedPoly::from_literals(RationalPoly(), p), InvalidInput);
    CHECK_THROWS_AS(UnivariateValuedPoly::from_valuations({}), InvalidInput);
}

TEST_CASE("RationalPoly arithmetic")
{
    const RationalPoly a({Scalar(1), Scalar(2)});
    const RationalPoly b({Scalar(-1), Scalar(0), Scalar(3)});
    CHECK((a * b).coeffs() == std::vector<Scalar>{-1, -2, 3, 6});
    CHECK((a + b).coeffs() == std::vector<Scalar>{0, 2, 3});
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(RationalPoly::monomial(Scalar(4), 3).coeffs() == std::vector<Scalar>{0, 0, 0, 4});
    CHECK(RationalPoly({Scalar(1), Scalar(0), Scalar(0)}).degree() == 0);
}

TEST_CASE("eliminate: the example system in y")
{
    UnitSampler units(p, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const Scalar t1 = units.next_with_valuation(-8);
        const Scalar t2 = units.next_with_valuation(6);
        const auto sys = literal_system(t1, t2);
        const auto r = eliminate(sys[0], sys[1], 1);
        REQUIRE(r.literal());
        const std::vector<Scalar> expect{t1 * 25 - t2, t1 - 1};
        const std::vector<Scalar> negated{-expect[0], -expect[1]};
        const auto& got = r.literal()->coeffs();
        CHECK((got == expect || got == negated));
        CHECK(r.valuations().at(0) == ref::valuation(expect[0], p));
        CHECK(r.valuations().at(1) == ref::valuation(expect[1], p));
    }
}

TEST_CASE("eliminate: errors")
{
    const auto sys = literal_system(Scalar(1, 625), Scalar(15625));
    CHECK_THROWS_AS(eliminate(sys[0], sys[0], 1), InfiniteFiber);

    const auto no_y = ValuedLaurentPoly::from_literals(2, p, {{{3, 0}, 1}, {{0, 0}, 5}});
    CHECK_THROWS_AS(eliminate(sys[1], no_y, 1), InvalidInput);

    const auto other_prime = ValuedLaurentPoly::from_literals(2, 3, {{{0, 0}, 1}, {{0, 1}, 1}});
    CHECK_THROWS_AS(eliminate(sys[1], other_prime, 1), InvalidInput);

    const auto laurent = ValuedLaurentPoly::from_literals(2, p, {{{0, -1}, 1}, {{1, 0}, 1}});
    CHECK_THROWS_AS(eliminate(sys[1], laurent, 1), InvalidInput);

    const auto valued = ValuedLaurentPoly::from_valuations(2, {{{0, 0}, 0}, {{0, 1}, 0}});
    CHECK_THROWS_AS(eliminate(sys[1], valued, 1), InvalidInput);
}

TEST_CASE("eliminate: degree two in the eliminated variable")
{
    // y² − x and y − 1: resultant x − 1 up to sign
    const auto f = ValuedLaurentPoly::from_literals(2, p, {{{0, 2}, 1}, {{1, 0}, -1}});
    const auto g = ValuedLaurentPoly::from_literals(2, p, {{{0, 1}, 1}, {{0, 0}, -1}});
    const auto r = eliminate(f, g, 1);
    const auto& c = r.literal()->coeffs();
    REQUIRE(c.size() == 2);
    CHECK(c[0] == -c[1]);
    CHECK_THROWS_AS(eliminate(f, g, 0), InvalidInput); // g has no x
}

TEST_CASE("fiber_count: the example cases")
{
    UnitSampler units(p, 1);
    {
        const auto rep = fiber_count(literal_system(units.next_with_valuation(-8), Scalar(15625)), strip_p());
        REQUIRE(rep.roots.size() == 1);
        CHECK(*rep.roots[0].vx == 2);
        CHECK(*rep.roots[0].vy == 10);
        CHECK(rep.roots[0].trop() == std::vector<ExtendedScalar>{Scalar(-2), Scalar(-10)});
        CHECK(rep.roots[0].in_relint);
        CHECK(rep.length == 1);
        CHECK(rep.total == 1);
    }
    {
        // t2 = p²: y = 0 exactly
        const auto rep = fiber_count(literal_system(units.next_with_valuation(-8), Scalar(25)), strip_p());
        REQUIRE(rep.roots.size() == 1);
        const auto& r = rep.roots[0];
        CHECK(*r.vx == 2);
        CHECK(!r.vy);
        CHECK(r.trop()[0] == ExtendedScalar(Scalar(-2)));
        CHECK(!r.trop()[1].is_finite());
        REQUIRE(r.location);
        CHECK(r.location->stratum == 1);
        CHECK(r.in_closure);
        CHECK(r.in_relint);
        CHECK(rep.length == 1);
    }
    {
        const auto rep = fiber_count(literal_system(units.next_with_valuation(-8), Scalar(50)), strip_p());
        REQUIRE(rep.roots.size() == 1);
        CHECK(rep.roots[0].trop() == std::vector<ExtendedScalar>{Scalar(-2), Scalar(-10)});
        CHECK(rep.length == 1);
    }
    {
        // vt2 = -6, vt1 = -6: the root tropicalizes to (0,0), outside P
        const auto rep = fiber_count(literal_system(units.next_with_valuation(-6), units.next_with_valuation(-6)), strip_p());
        CHECK(rep.total == 1);
        CHECK(rep.length == 0);
        CHECK(!rep.roots[0].in_relint);
    }
    CHECK_THROWS_AS(fiber_count(literal_system(Scalar(1), Scalar(25)), strip_p()), InfiniteFiber);
}

TEST_CASE("fiber_count: coinciding valuations pair without ambiguity")
{
    // xy = p², x + y = p: x and y are the roots of z² − pz + p², both of valuation 1
    const auto f = ValuedLaurentPoly::from_literals(2, p, {{{1, 1}, 1}, {{0, 0}, -25}});
    const auto g = ValuedLaurentPoly::from_literals(2, p, {{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, -5}});
    const auto quadrant = make_polyhedron(2, {{{1, 0}, 0}, {{0, 1}, 0}});
    const auto rep = fiber_count({f, g}, quadrant);
    CHECK(rep.total == 2);
    CHECK(rep.length == 2);
    long mult = 0;
    for (const auto& r : rep.roots) {
        CHECK(r.trop() == std::vector<ExtendedScalar>{Scalar(-1), Scalar(-1)});
        CHECK(r.in_relint);
        mult += r.multiplicity;
    }
    CHECK(mult == 2);
}

TEST_CASE("UnitSampler")
{
    UnitSampler a(p, 9), b(p, 9), c(p, 10);
    bool differs = false;
    for (int i = 0; i < 200; ++i) {
        const Scalar u = a.next();
        CHECK(u == b.next());
        differs = differs || u != c.next();
        CHECK(ref::valuation(u, p) == 0);
        const Scalar w = a.next_with_valuation(i % 11 - 5);
        b.next_with_valuation(i % 11 - 5);
        CHECK(ref::valuation(w, p) == i % 11 - 5);
    }
    CHECK(differs);
    CHECK_THROWS_AS(UnitSampler(4, 1), InvalidInput);
}

TEST_CASE("property: Newton polygons find the valuations of known roots")
{
    std::mt19937_64 rng(61);
    UnitSampler units(p, 61);
    std::uniform_int_distribution<int> deg(1, 6), k(-4, 4), zero(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Scalar> roots;
        std::multiset<Scalar> expect;
        long zeros = 0;
        const int d = deg(rng);
        for (int i = 0; i < d; ++i) {
            if (zero(rng) == 0) {
                roots.emplace_back(0);
                ++zeros;
                continue;
            }
            roots.push_back(units.next_with_valuation(k(rng)));
            expect.insert(Scalar(ref::valuation(roots.back(), p)));
        }
        const auto f = UnivariateValuedPoly::from_literals(RationalPoly(from_roots(roots)), p);
        CHECK(f.order_at_zero() == zeros);
        if (zeros == d) {
            CHECK(newton_polygon_valuations(f).empty()); // z^d
            continue;
        }
        const auto segs = newton_polygon_valuations(f);
        long total = 0;
        for (const auto& s : segs)
            total += s.length;
        CHECK(total == f.degree() - f.order_at_zero());
        CHECK(root_valuations(f) == expect);
        for (std::size_t i = 1; i < segs.size(); ++i)
            CHECK(segs[i - 1].slope < segs[i].slope);
    }
}

TEST_CASE("property: Newton totals for random valuation data")
{
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> deg(1, 6), val(-5, 5), keep(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = deg(rng);
        std::map<long, Scalar> v;
        for (int i = 0; i < d; ++i)
            if (keep(rng) != 0)
                v[i] = val(rng);
        v[d] = val(rng);
        if (v.size() < 2)
            v[0] = val(rng);
        const auto f = UnivariateValuedPoly::from_valuations(v);
        long total = 0;
        for (const auto& s : newton_polygon_valuations(f)) {
            CHECK(s.length >= 1);
            total += s.length;
            // each segment is supported: both end points are data points on the lower hull
        }
        CHECK(total == f.degree() - f.order_at_zero());
    }
}

TEST_CASE("property: valuations of a product are the union")
{
    std::mt19937_64 rng(71);
    UnitSampler units(p, 71);
    std::uniform_int_distribution<int> deg(1, 4), k(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        auto random_poly = [&] {
            std::vector<Scalar> c;
            const int d = deg(rng);
            for (int i = 0; i <= d; ++i)
                c.push_back(units.next_with_valuation(k(rng)));
            return c;
        };
        const auto a = random_poly();
        const auto b = random_poly();
        const auto fa = UnivariateValuedPoly::from_literals(RationalPoly(a), p);
        const auto fb = UnivariateValuedPoly::from_literals(RationalPoly(b), p);
        const auto fab = UnivariateValuedPoly::from_literals(RationalPoly(convolve(a, b)), p);
        auto expect = root_valuations(fa);
        const auto rb = root_valuations(fb);
        expect.insert(rb.begin(), rb.end());
        CHECK(root_valuations(fab) == expect);
    }
}

TEST_CASE("property: oracle and stable intersection agree on transverse example-shaped instances")
{
    std::mt19937_64 rng(73);
    UnitSampler units(p, 73);
    std::uniform_int_distribution<int> k(-5, 5);
    const auto f2v = ValuedLaurentPoly::from_valuations(2, {{{0, 0}, 2}, {{1, 0}, 0}, {{0, 1}, 0}});
    int transverse = 0;
    for (int attempt = 0; attempt < 500 && transverse < 50; ++attempt) {
        const long k1 = k(rng), k2 = k(rng);
        const auto f1v = ValuedLaurentPoly::from_valuations(2, {{{0, 0}, k2}, {{1, 0}, 0}, {{0, 1}, k1}});
        const auto st = stable_intersection(tropical_hypersurface(f1v), tropical_hypersurface(f2v));
        if (!st.transverse)
            continue;
        ++transverse;
        const Scalar t1 = units.next_with_valuation(k1), t2 = units.next_with_valuation(k2);
        const auto rep = fiber_count(literal_system(t1, t2), strip_p());
        CHECK(rep.total == st.total);
        REQUIRE(rep.roots.size() == st.points.size());
        for (std::size_t i = 0; i < rep.roots.size(); ++i) {
            const auto tr = rep.roots[i].trop();
            CHECK(tr == std::vector<ExtendedScalar>{st.points[i].location.coords[0], st.points[i].location.coords[1]});
            CHECK(rep.roots[i].multiplicity == st.points[i].multiplicity);
        }
        // closed form: y = (p² − t2)/(t1 − 1), x = −p² − y
        const Scalar y = (Scalar(25) - t2) / (t1 - 1);
        const Scalar x = -Scalar(25) - y;
        REQUIRE(rep.roots.size() == 1);
        CHECK(*rep.roots[0].vx == ref::valuation(x, p));
        CHECK(*rep.roots[0].vy == ref::valuation(y, p));
    }
    CHECK(transverse == 50);
}
