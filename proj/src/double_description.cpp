#include "double_description.hpp"

#include "tropix/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tropix::detail {

namespace {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Bits operator&(const Bits& o) const
    {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] &= o.words_[i];
        return r;
    }

    bool subset_of(const Bits& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    Vec v;
    Bits zero;
};

} // namespace

std::vector<Vec> extreme_rays(const Matrix& rows, std::size_t dim)
{
    if (dim == 0)
        return {};
    const std::size_t m = rows.size();

    // Greedy choice of `dim` independent rows for the initial simplicial cone.
    std::vector<std::size_t> basis;
    {
        Matrix chosen;
        std::size_t r = 0;
        for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
            chosen.push_back(rows[i]);
            std::size_t nr = rank(chosen, dim);
            if (nr > r) {
                basis.push_back(i);
                r = nr;
            } else {
                chosen.pop_back();
            }
        }
        if (basis.size() < dim)
            throw std::logic_error("extreme_rays: cone is not pointed");
    }

    // Columns of -B^{-1} are the rays of {x : Bx <= 0}.
    Matrix aug;
    for (std::size_t k = 0; k < dim; ++k) {
        Vec row = rows[basis[k]];
        for (std::size_t j = 0; j < dim; ++j)
            row.push_back(j == k ? Scalar(1) : Scalar(0));
        aug.push_back(std::move(row));
    }
    const Rref inv = rref(std::move(aug), 2 * dim);

    std::vector<bool> processed(m, false);
    for (auto b : basis)
        processed[b] = true;

    auto zero_set = [&](const Vec& v) {
        Bits z(m);
        for (std::size_t i = 0; i < m; ++i)
            if (processed[i] && dot(rows[i], v) == 0)
                z.set(i);
        return z;
    };

    std::vector<Ray> rays;
    for (std::size_t k = 0; k < dim; ++k) {
        Vec v(dim);
        for (std::size_t i = 0; i < dim; ++i)
            v[i] = -inv.rows[i][dim + k];
        v = primitive(v);
        rays.push_back({v, zero_set(v)});
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (processed[i])
            continue;
        const Vec& a = rows[i];
        std::vector<Scalar> s(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            s[r] = dot(a, rays[r].v);
            if (s[r] > 0)
                pos.push_back(r);
            else if (s[r] < 0)
                neg.push_back(r);
        }
        if (pos.empty()) {
            processed[i] = true;
            for (auto& r : rays)
                if (dot(a, r.v) == 0)
                    r.zero.set(i);
            continue;
        }
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (s[r] > 0)
                continue;
            Ray kept = rays[r];
            if (s[r] == 0)
                kept.zero.set(i);
            next.push_back(std::move(kept));
        }
        for (auto p : pos) {
            for (auto n : neg) {
                Bits common = rays[p].zero & rays[n].zero;
                if (dim >= 2 && common.count() + 2 < dim)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != n && common.subset_of(rays[r].zero))
                        adjacent = false;
                if (!adjacent)
                    continue;
                Vec v = add(scale(rays[n].v, s[p]), scale(rays[p].v, -s[n]));
                v = primitive(v);
                common.set(i);
                next.push_back({std::move(v), std::move(common)});
            }
        }
        processed[i] = true;
        rays = std::move(next);
    }

    std::vector<Vec> out;
    out.reserve(rays.size());
    for (auto& r : rays)
        out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace tropix::detail
