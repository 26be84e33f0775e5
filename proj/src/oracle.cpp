#include "tropix/oracle.hpp"

#include "tropix/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace tropix {

RationalPoly::RationalPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

RationalPoly RationalPoly::monomial(const Scalar& c, std::size_t degree)
{
    std::vector<Scalar> v(degree + 1);
    v[degree] = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const
{
    std::vector<Scalar> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        v[i] += o.coeffs_[i];
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const
{
    std::vector<Scalar> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        v[i] -= o.coeffs_[i];
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    std::vector<Scalar> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return RationalPoly(std::move(v));
}

UnivariateValuedPoly UnivariateValuedPoly::from_valuations(const std::map<long, Scalar>& valuations)
{
    if (valuations.empty())
        throw InvalidInput("zero polynomial");
    if (valuations.begin()->first < 0)
        throw InvalidInput("negative degree");
    UnivariateValuedPoly f;
    f.valuations_ = valuations;
    return f;
}

UnivariateValuedPoly UnivariateValuedPoly::from_literals(const RationalPoly& poly, unsigned long p)
{
    if (poly.is_zero())
        throw InvalidInput("zero polynomial");
    UnivariateValuedPoly f;
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i)
        if (poly.coeffs()[i] != 0)
            f.valuations_[static_cast<long>(i)] = Scalar(padic_valuation(poly.coeffs()[i], p));
    f.literal_ = poly;
    return f;
}

std::vector<NewtonSegment> newton_polygon_valuations(const UnivariateValuedPoly& f)
{
    if (f.degree() < 1)
        throw InvalidInput("newton_polygon_valuations: polynomial of degree 0");
    std::vector<std::pair<long, Scalar>> hull;
    for (const auto& [i, v] : f.valuations()) {
        while (hull.size() >= 2) {
            const auto& [i0, v0] = hull[hull.size() - 2];
            const auto& [i1, v1] = hull.back();
            // keep i1 only if it lies strictly below the chord from i0 to i
            if ((v1 - v0) * (i - i0) < (v - v0) * (i1 - i0))
                break;
            hull.pop_back();
        }
        hull.emplace_back(i, v);
    }
    std::vector<NewtonSegment> out;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const long len = hull[k + 1].first - hull[k].first;
        out.push_back({(hull[k + 1].second - hull[k].second) / len, len});
    }
    return out;
}

namespace {

// f as a polynomial in `var` with coefficients in Q[other variable].
std::vector<RationalPoly> split(const ValuedLaurentPoly& f, std::size_t var)
{
    std::vector<RationalPoly> out;
    for (const auto& [u, a] : f.literals()) {
        if (u[0] < 0 || u[1] < 0)
            throw InvalidInput("eliminate: negative exponent " + to_string(u));
        const auto i = static_cast<std::size_t>(u[var]);
        if (out.size() <= i)
            out.resize(i + 1);
        out[i] = out[i] + RationalPoly::monomial(a, static_cast<std::size_t>(u[1 - var]));
    }
    return out;
}

RationalPoly determinant(const std::vector<std::vector<RationalPoly>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return RationalPoly::constant(1);
    // Laplace expansion along rows, memoized on the set of columns still free.
    std::unordered_map<std::uint32_t, RationalPoly> memo;
    auto rec = [&](auto&& self, std::size_t row, std::uint32_t free) -> RationalPoly {
        if (row == n)
            return RationalPoly::constant(1);
        if (auto it = memo.find(free); it != memo.end())
            return it->second;
        RationalPoly sum;
        int position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(free & (1u << c)))
                continue;
            if (!m[row][c].is_zero()) {
                RationalPoly term = m[row][c] * self(self, row + 1, free & ~(1u << c));
                sum = position % 2 == 0 ? sum + term : sum - term;
            }
            ++position;
        }
        memo.emplace(free, sum);
        return sum;
    };
    return rec(rec, 0, (n == 32 ? ~0u : (1u << n) - 1));
}

} // namespace

UnivariateValuedPoly eliminate(const ValuedLaurentPoly& f, const ValuedLaurentPoly& g, std::size_t var)
{
    if (f.ambient_dim() != 2 || g.ambient_dim() != 2)
        throw UnsupportedDimension("eliminate: bivariate systems only");
    if (var > 1)
        throw InvalidInput("eliminate: variable index must be 0 or 1");
    if (!f.has_literals() || !g.has_literals())
        throw InvalidInput("eliminate: literal coefficients required");
    if (f.prime() != g.prime())
        throw InvalidInput("eliminate: polynomials over different primes");
    const auto a = split(f, var);
    const auto b = split(g, var);
    const std::size_t m = a.size() - 1;
    const std::size_t k = b.size() - 1;
    if (m == 0)
        throw InvalidInput("eliminate: the first polynomial does not involve the variable");
    if (k == 0)
        throw InvalidInput("eliminate: the second polynomial does not involve the variable");
    if (m + k > 24)
        throw InvalidInput("eliminate: degrees too large");

    const std::size_t n = m + k;
    std::vector<std::vector<RationalPoly>> syl(n, std::vector<RationalPoly>(n));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i <= m; ++i)
            syl[r][r + m - i] = a[i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= k; ++i)
            syl[k + r][r + k - i] = b[i];
    const RationalPoly res = determinant(syl);
    if (res.is_zero())
        throw InfiniteFiber("resultant vanishes identically: the fiber is not finite");
    return UnivariateValuedPoly::from_literals(res, f.prime());
}

std::vector<ExtendedScalar> FiberRoot::trop() const
{
    auto t = [](const std::optional<Scalar>& v) {
        return v ? ExtendedScalar(-*v) : ExtendedScalar::minus_infinity();
    };
    return {t(vx), t(vy)};
}

namespace {

using ValuationClass = std::pair<std::optional<Scalar>, long>;

std::vector<ValuationClass> root_classes(const UnivariateValuedPoly& r)
{
    std::vector<ValuationClass> out;
    if (r.degree() >= 1)
        for (const auto& s : newton_polygon_valuations(r))
            out.emplace_back(s.root_valuation(), s.length);
    if (r.order_at_zero() > 0)
        out.emplace_back(std::nullopt, r.order_at_zero());
    return out;
}

// The maximum of f restricted to the coordinates that stay finite is attained
// at least twice (or f vanishes identically there).
bool tropically_compatible(const ValuedLaurentPoly& f, const std::optional<Scalar>& vx, const std::optional<Scalar>& vy)
{
    std::optional<Scalar> best;
    int hits = 0;
    for (const auto& [u, c] : f.terms()) {
        if ((!vx && u[0] != 0) || (!vy && u[1] != 0))
            continue;
        Scalar val = c;
        if (vx)
            val -= *vx * u[0];
        if (vy)
            val -= *vy * u[1];
        if (!best || val > *best) {
            best = val;
            hits = 1;
        } else if (val == *best) {
            ++hits;
        }
    }
    return hits != 1;
}

// Pairs each class on one side with the single compatible class on the other.
std::optional<std::vector<FiberRoot>> pair_one_way(const std::vector<ValuationClass>& xs,
                                                   const std::vector<ValuationClass>& ys,
                                                   const std::vector<ValuedLaurentPoly>& fs, bool x_first)
{
    std::vector<long> used(ys.size(), 0);
    std::vector<FiberRoot> roots;
    for (const auto& [vx, mx] : xs) {
        std::optional<std::size_t> match;
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const auto& vy = ys[j].first;
            const auto& cx = x_first ? vx : vy;
            const auto& cy = x_first ? vy : vx;
            if (tropically_compatible(fs[0], cx, cy) && tropically_compatible(fs[1], cx, cy)) {
                if (match)
                    return std::nullopt;
                match = j;
            }
        }
        if (!match)
            return std::nullopt;
        used[*match] += mx;
        FiberRoot r;
        r.vx = x_first ? vx : ys[*match].first;
        r.vy = x_first ? ys[*match].first : vx;
        r.multiplicity = mx;
        roots.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < ys.size(); ++j)
        if (used[j] != ys[j].second)
            return std::nullopt;
    return roots;
}

} // namespace

FiberReport fiber_count(const std::vector<ValuedLaurentPoly>& fs, const Polyhedron& p)
{
    if (fs.size() != 2)
        throw InvalidInput("fiber_count expects exactly two polynomials");
    const auto rx = eliminate(fs[0], fs[1], 1);
    const auto ry = eliminate(fs[0], fs[1], 0);
    const auto xs = root_classes(rx);
    const auto ys = root_classes(ry);
    long nx = 0, ny = 0;
    for (const auto& c : xs)
        nx += c.second;
    for (const auto& c : ys)
        ny += c.second;
    if (nx != ny)
        throw PairingAmbiguity("the two eliminants count " + std::to_string(nx) + " and " + std::to_string(ny)
                               + " roots");

    auto roots = pair_one_way(xs, ys, fs, true);
    if (!roots)
        roots = pair_one_way(ys, xs, fs, false);
    if (!roots)
        throw PairingAmbiguity("x- and y-valuations of the roots cannot be matched unambiguously");

    const CompactifiedPolyhedron pbar = compactify(p);
    FiberReport out;
    for (auto& r : *roots) {
        Vec coords{r.vx ? Scalar(-*r.vx) : Scalar(0), r.vy ? Scalar(-*r.vy) : Scalar(0)};
        Vec direction{r.vx ? Scalar(0) : Scalar(-1), r.vy ? Scalar(0) : Scalar(-1)};
        const auto stratum = pbar.chart.limit_stratum(direction);
        if (stratum) {
            r.location = ExtendedPoint{*stratum, coords};
            r.in_closure = compactified_contains(pbar, *r.location);
            r.in_relint = compactified_relint_contains(pbar, *r.location);
        }
        out.total += r.multiplicity;
        if (r.in_closure)
            out.length += r.multiplicity;
    }
    std::sort(roots->begin(), roots->end(), [](const FiberRoot& a, const FiberRoot& b) {
        return std::pair(a.trop(), a.multiplicity) < std::pair(b.trop(), b.multiplicity);
    });
    out.roots = std::move(*roots);
    return out;
}

UnitSampler::UnitSampler(unsigned long p, std::uint64_t seed) : p_(p), rng_(seed)
{
    if (mpz_probab_prime_p(Integer(p).get_mpz_t(), 25) == 0)
        throw InvalidInput("UnitSampler: p must be a prime");
}

Scalar UnitSampler::next()
{
    std::uniform_int_distribution<long> dist(1, 1000);
    auto draw = [&] {
        long v;
        do
            v = dist(rng_);
        while (v % static_cast<long>(p_) == 0);
        return v;
    };
    const long num = draw();
    const long den = draw();
    Scalar q(num, den);
    q.canonicalize();
    return (rng_() & 1) ? Scalar(-q) : q;
}

Scalar UnitSampler::next_with_valuation(long k)
{
    return next() * prime_power(p_, k);
}

} // namespace tropix
