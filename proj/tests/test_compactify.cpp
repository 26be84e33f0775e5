#include <doctest.h>

#include "oracles.hpp"
#include "tropix/compactify.hpp"
#include "tropix/errors.hpp"

#include <random>

using namespace tropix;
using ref::v2;

namespace {

Polyhedron strip_p()
{
    return make_polyhedron(2, {{{-1, 0}, 3}, {{1, 0}, -1}, {{0, 1}, 0}});
}

Cone down()
{
    return Cone::generated_by(2, {v2(0, -1)});
}

bool is_minus_inf(const ExtendedScalar& x)
{
    return !x.is_finite();
}

} // namespace

TEST_CASE("fan_from_cones")
{
    const Fan f = fan_from_cones({down()});
    REQUIRE(f.cones.size() == 2);
    CHECK(f.cones[0] == Cone::zero(2));
    CHECK(f.cones[1] == down());

    const Fan g = fan_from_cones({Cone::generated_by(2, {v2(1, 0)}), Cone::generated_by(2, {v2(0, 1)})});
    CHECK(g.cones.size() == 3);

    const Cone a = Cone::generated_by(2, {v2(1, 0), v2(0, 1)});
    const Cone b = Cone::generated_by(2, {v2(1, 1), v2(-1, 1)});
    try {
        fan_from_cones({a, b});
        FAIL("expected a FanViolation");
    } catch (const FanViolation& v) {
        const Cone m = v.first().intersect(v.second());
        const auto f1 = v.first().faces();
        const auto f2 = v.second().faces();
        const bool common = std::find(f1.begin(), f1.end(), m) != f1.end() && std::find(f2.begin(), f2.end(), m) != f2.end();
        CHECK(!common);
    }
}

TEST_CASE("property: fan axioms on face closures")
{
    const Fan f = fan_from_cones({Cone::generated_by(2, {v2(1, 0), v2(0, 1)}), Cone::generated_by(2, {v2(0, 1), v2(-1, 0)}),
                                  Cone::generated_by(2, {v2(0, -1)})});
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        for (const auto& face : f.cones[i].faces())
            CHECK(std::find(f.cones.begin(), f.cones.end(), face) != f.cones.end());
        for (std::size_t j = 0; j < f.cones.size(); ++j) {
            const Cone m = f.cones[i].intersect(f.cones[j]);
            const auto fi = f.cones[i].faces();
            const auto fj = f.cones[j].faces();
            CHECK(std::find(fi.begin(), fi.end(), m) != fi.end());
            CHECK(std::find(fj.begin(), fj.end(), m) != fj.end());
        }
        CHECK(f.cones[i].is_pointed());
    }
    CHECK(f.pointed);
}

TEST_CASE("simultaneously_compactifiable")
{
    // Recc of the strip is a face of the quadrant's recession cone
    const Polyhedron quadrant = make_polyhedron(2, {{{1, 0}, 0}, {{0, 1}, 0}});
    auto ok = simultaneously_compactifiable({strip_p(), quadrant});
    REQUIRE(std::holds_alternative<Fan>(ok));
    CHECK(std::get<Fan>(ok).cones.size() == 4);

    // two pointed cones crossing without a common face
    const Polyhedron a = Polyhedron::from_generators(2, {v2(0, 0)}, {v2(1, 0), v2(0, 1)});
    const Polyhedron b = Polyhedron::from_generators(2, {v2(5, 5)}, {v2(1, 1), v2(-1, 1)});
    CHECK(std::holds_alternative<Undecided>(simultaneously_compactifiable({a, b})));

    const Polyhedron tri = Polyhedron::from_generators(2, {v2(0, 0), v2(1, 0), v2(0, 1)});
    auto bounded = simultaneously_compactifiable({tri, tri});
    REQUIRE(std::holds_alternative<Fan>(bounded));
    CHECK(std::get<Fan>(bounded).cones.size() == 1);

    CHECK_THROWS_AS(simultaneously_compactifiable({make_polyhedron(2, {{{0, 1}, 0}})}), NotPointed);
}

TEST_CASE("iota_embed")
{
    const Chart chart(down());
    const std::vector<Vec> gens{v2(1, 0), v2(-1, 0), v2(0, 1)};
    auto e = iota_embed(chart, {0, v2(-2, -10)}, gens);
    CHECK(e == std::vector<ExtendedScalar>{Scalar(-2), Scalar(2), Scalar(-10)});
    const std::size_t top = *chart.stratum_index(down());
    e = iota_embed(chart, {top, v2(-2, 0)}, gens);
    CHECK(e[0] == ExtendedScalar(Scalar(-2)));
    CHECK(e[1] == ExtendedScalar(Scalar(2)));
    CHECK(is_minus_inf(e[2]));
    e = iota_embed(chart, {0, v2(0, 0)}, gens);
    CHECK(e == std::vector<ExtendedScalar>{Scalar(0), Scalar(0), Scalar(0)});
    CHECK_THROWS_AS(iota_embed(chart, {0, v2(0, 0)}, {v2(0, -1)}), InvalidInput);
}

TEST_CASE("compactify")
{
    const auto pbar = compactify(strip_p());
    REQUIRE(pbar.pieces.size() == 2);
    CHECK(pbar.pieces[0] == strip_p());
    CHECK(pbar.pieces[1] == Polyhedron::from_generators(1, {{Scalar(-3)}, {Scalar(-1)}}));

    const Polyhedron tri = Polyhedron::from_generators(2, {v2(0, 0), v2(1, 0), v2(0, 1)});
    const auto tbar = compactify(tri);
    REQUIRE(tbar.pieces.size() == 1);
    CHECK(tbar.pieces[0] == tri);

    const Polyhedron half_line = make_polyhedron(1, {{{1}, 0}});
    const auto hbar = compactify(half_line);
    REQUIRE(hbar.pieces.size() == 2);
    CHECK(hbar.pieces[1].ambient_dim() == 0);
    CHECK(!hbar.pieces[1].is_empty());

    CHECK_THROWS_AS(compactify(make_polyhedron(2, {{{0, 1}, 0}})), NotPointed);
}

TEST_CASE("closure_in_compactification")
{
    const Polyhedron q = Polyhedron::from_generators(2, {v2(-2, -10)}, {v2(0, -1)});
    const auto c = closure_in_compactification(q, down());
    REQUIRE(c.pieces.size() == 2);
    REQUIRE(c.pieces[0].size() == 1);
    CHECK(c.pieces[0][0] == q);
    REQUIRE(c.pieces[1].size() == 1);
    CHECK(c.pieces[1][0] == Polyhedron::point({Scalar(-2)}));

    const auto b = closure_in_compactification(Polyhedron::point(v2(1, 1)), down());
    CHECK(b.pieces[0].size() == 1);
    CHECK(b.pieces[1].empty());

    const auto side = closure_in_compactification(Polyhedron::from_generators(2, {v2(0, 0)}, {v2(-1, 0)}), down());
    CHECK(side.pieces[0].size() == 1);
    CHECK(side.pieces[1].empty());
}

TEST_CASE("compactified_relint_contains")
{
    const auto pbar = compactify(strip_p());
    CHECK(compactified_relint_contains(pbar, {0, v2(-2, -10)}));
    CHECK(compactified_relint_contains(pbar, {1, v2(-2, 0)}));
    CHECK(!compactified_relint_contains(pbar, {1, v2(-3, 0)}));
    CHECK(compactified_contains(pbar, {1, v2(-3, 0)}));
    CHECK_THROWS_AS(compactified_relint_contains(pbar, {2, v2(0, 0)}), StratumMismatch);
}

TEST_CASE("is_complete")
{
    const Fan quadrants = fan_from_cones({Cone::generated_by(2, {v2(1, 0), v2(0, 1)}), Cone::generated_by(2, {v2(0, 1), v2(-1, 0)}),
                                          Cone::generated_by(2, {v2(-1, 0), v2(0, -1)}), Cone::generated_by(2, {v2(0, -1), v2(1, 0)})});
    CHECK(is_complete(quadrants));
    CHECK(!is_complete(fan_from_cones({down()})));
    const Fan line = fan_from_cones({Cone::generated_by(1, {{Scalar(-1)}}), Cone::generated_by(1, {{Scalar(1)}})});
    CHECK(line.cones.size() == 3);
    CHECK(is_complete(line));
    const Fan three = fan_from_cones({Cone::generated_by(3, {{1, 0, 0}})});
    CHECK_THROWS_AS(is_complete(three), UnsupportedDimension);
}

TEST_CASE("property: strata, relint on the torus, and the iota-image characterization")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> d(-3, 3);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Vec> pts{v2(d(rng), d(rng)), v2(d(rng), d(rng)), v2(d(rng), d(rng))};
        std::vector<Vec> rays;
        for (int i = 0; i < trial % 3; ++i)
            rays.push_back(v2(d(rng), d(rng)));
        std::erase_if(rays, [](const Vec& r) { return is_zero(r); });
        const Polyhedron p = Polyhedron::from_generators(2, pts, rays);
        if (!p.is_pointed())
            continue;
        const auto pbar = compactify(p);
        const Cone sigma = recession_cone(p);
        CHECK(pbar.pieces.size() == sigma.faces().size());
        CHECK(pbar.pieces[0] == p);

        std::vector<Vec> normals;
        std::vector<Scalar> bounds;
        for (const auto& h : p.halfspaces()) {
            normals.push_back(h.normal);
            bounds.push_back(h.bound);
        }
        for (std::size_t k = 0; k < pbar.chart.stratum_count(); ++k) {
            for (int x = -4; x <= 4; ++x) {
                for (int y = -4; y <= 4; ++y) {
                    const ExtendedPoint e{k, v2(x, y)};
                    const auto img = iota_embed(pbar.chart, e, normals);
                    bool inside = true;
                    for (std::size_t i = 0; i < img.size(); ++i)
                        inside = inside && img[i] <= ExtendedScalar(bounds[i]);
                    REQUIRE(compactified_contains(pbar, e) == inside);
                    if (k == 0)
                        REQUIRE(compactified_relint_contains(pbar, e) == p.relint_contains(e.coords));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("property: limits of q + t v land where the closure says")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> d(-3, 3);
    const Cone sigma = Cone::generated_by(2, {v2(0, -1), v2(-1, -1)});
    const Chart chart(sigma);
    const Cone dual = polar_cone(sigma);
    std::vector<Vec> gens = dual.rays();
    for (const auto& l : dual.lineality()) {
        gens.push_back(l);
        gens.push_back(negate(l));
    }
    for (int trial = 0; trial < 60; ++trial) {
        const Vec v = add(scale(v2(0, -1), d(rng) + 3), scale(v2(-1, -1), d(rng) + 3));
        if (is_zero(v))
            continue;
        const Vec q = v2(d(rng), d(rng));
        const Polyhedron cell = Polyhedron::from_generators(2, {q, add(q, v2(1, 0))}, {v});
        const auto closure = closure_in_compactification({cell}, chart);
        const std::size_t k = *chart.limit_stratum(v);
        const auto limit = iota_embed(chart, {k, q}, gens);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const Scalar slope = dot(gens[i], v);
            CHECK(slope <= 0);
            if (slope < 0)
                CHECK(is_minus_inf(limit[i]));
            else
                CHECK(limit[i] == ExtendedScalar(dot(gens[i], q)));
        }
        bool found = false;
        for (const auto& piece : closure.pieces[k])
            found = found || piece.contains(chart.project(k, q));
        CHECK(found);
    }
}
