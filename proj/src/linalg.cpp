#include "tropix/linalg.hpp"

#include "tropix/errors.hpp"

#include <algorithm>

namespace tropix {

Scalar dot(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("dot: length " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("add: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("sub: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Vec& a, const Scalar& s)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] * s;
    return r;
}

Vec negate(const Vec& a)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vec zero_vec(std::size_t n)
{
    return Vec(n, Scalar(0));
}

Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v(n, Scalar(0));
    v[i] = 1;
    return v;
}

Matrix identity(std::size_t n)
{
    Matrix m;
    for (std::size_t i = 0; i < n; ++i)
        m.push_back(unit_vec(n, i));
    return m;
}

Vec Rref::reduce(Vec v) const
{
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Scalar f = v[pivots[r]];
        if (f == 0)
            continue;
        for (std::size_t c = 0; c < cols; ++c)
            v[c] -= f * rows[r][c];
    }
    return v;
}

Rref rref(Matrix rows, std::size_t cols)
{
    for (const auto& r : rows)
        if (r.size() != cols)
            throw DimensionMismatch("rref: row length mismatch");
    Rref out;
    out.cols = cols;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t piv = lead;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[lead]);
        const Scalar inv = 1 / rows[lead][col];
        for (auto& x : rows[lead])
            x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0)
                continue;
            const Scalar f = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] -= f * rows[lead][c];
        }
        out.pivots.push_back(col);
        ++lead;
    }
    rows.resize(lead);
    out.rows = std::move(rows);
    return out;
}

std::size_t rank(const Matrix& rows, std::size_t cols)
{
    return rref(rows, cols).rank();
}

Matrix nullspace(const Matrix& rows, std::size_t cols)
{
    const Rref r = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vec v = zero_vec(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < r.rows.size(); ++i)
            v[r.pivots[i]] = -r.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("solve: row count mismatch");
    if (a.empty())
        return std::nullopt;
    const std::size_t n = a.front().size();
    Matrix aug;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Vec row = a[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    const Rref r = rref(aug, n + 1);
    if (r.rank() != n || (!r.pivots.empty() && r.pivots.back() == n))
        return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = r.rows[i][n];
    return x;
}

Vec primitive(const Vec& v)
{
    if (is_zero(v))
        throw InvalidInput("primitive: zero vector");
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    for (const auto& x : v) {
        Integer num = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Integer num = v[i].get_num() * (l / v[i].get_den());
        r[i] = Scalar(num / g);
    }
    return r;
}

bool is_primitive_integral(const Vec& v)
{
    if (is_zero(v))
        return false;
    Integer g = 0;
    for (const auto& x : v) {
        if (!is_integral(x))
            return false;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    return g == 1;
}

Scalar det2(const Vec& a, const Vec& b)
{
    if (a.size() != 2 || b.size() != 2)
        throw DimensionMismatch("det2 expects planar vectors");
    return a[0] * b[1] - a[1] * b[0];
}

Vec apply(const Matrix& m, const Vec& v)
{
    Vec r;
    r.reserve(m.size());
    for (const auto& row : m)
        r.push_back(dot(row, v));
    return r;
}

bool lex_less(const Vec& a, const Vec& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace tropix
