#include "tropix/scalar.hpp"

#include "tropix/errors.hpp"

#include <ostream>

namespace tropix {

namespace {

bool valid_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    if (num.front() == '+')
        num.remove_prefix(1);
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& q)
{
    return q.get_str();
}

std::string to_string(const Vec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

long padic_valuation(const Scalar& q, unsigned long p)
{
    if (q == 0)
        throw InvalidInput("valuation of zero");
    if (p < 2)
        throw InvalidInput("prime must be at least 2");
    Integer tmp;
    Integer pz(p);
    long num = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_num_mpz_t(), pz.get_mpz_t()));
    long den = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_den_mpz_t(), pz.get_mpz_t()));
    return num - den;
}

Scalar prime_power(unsigned long p, long k)
{
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? -k : k));
    Scalar q = k < 0 ? Scalar(Integer(1), pk) : Scalar(pk);
    q.canonicalize();
    return q;
}

bool is_integral(const Scalar& q)
{
    return q.get_den() == 1;
}

const Scalar& ExtendedScalar::value() const
{
    if (!finite_)
        throw InvalidInput("value() of -inf");
    return value_;
}

bool operator==(const ExtendedScalar& a, const ExtendedScalar& b)
{
    if (a.finite_ != b.finite_)
        return false;
    return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedScalar& a, const ExtendedScalar& b)
{
    if (!a.finite_ || !b.finite_)
        return a.finite_ <=> b.finite_;
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const ExtendedScalar& x)
{
    return x.is_finite() ? to_string(x.value()) : "-inf";
}

std::string to_decimal(const Scalar& q, unsigned digits)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer num = abs(q.get_num()) * scale * 2 + q.get_den();
    Integer den = q.get_den() * 2;
    Integer r = num / den; // floor(|q|*10^d + 1/2)
    std::string s = r.get_str();
    if (s.size() <= digits)
        s.insert(0, digits + 1 - s.size(), '0');
    if (digits)
        s.insert(s.size() - digits, ".");
    if (q < 0 && r != 0)
        s.insert(0, "-");
    return s;
}

std::ostream& operator<<(std::ostream& os, const ExtendedScalar& x)
{
    return os << to_string(x);
}

} // namespace tropix
