#pragma once

#include "tropix/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tropix {

using Matrix = std::vector<Vec>;

Scalar dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& s);
Vec negate(const Vec& a);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Matrix identity(std::size_t n);

/// Reduced row echelon form. Rows are nonzero, pivots strictly increasing, pivot entries 1.
struct Rref {
    Matrix rows;
    std::vector<std::size_t> pivots;
    std::size_t cols = 0;

    std::size_t rank() const { return rows.size(); }
    /// Canonical representative of v modulo the row space.
    Vec reduce(Vec v) const;
    bool spans(const Vec& v) const { return is_zero(reduce(v)); }
};

Rref rref(Matrix rows, std::size_t cols);
std::size_t rank(const Matrix& rows, std::size_t cols);

/// Canonical basis of {x : row·x = 0 for all rows}, read off the RREF.
Matrix nullspace(const Matrix& rows, std::size_t cols);

/// Unique solution of A x = b (A square or overdetermined with full column rank), if any.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Positive multiple of v with coprime integer coordinates. v must be nonzero.
Vec primitive(const Vec& v);
bool is_primitive_integral(const Vec& v);

Scalar det2(const Vec& a, const Vec& b);

/// Matrix-vector product with rows of `m`.
Vec apply(const Matrix& m, const Vec& v);

bool lex_less(const Vec& a, const Vec& b);

} // namespace tropix
