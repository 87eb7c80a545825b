#include "cedual/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cedual {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

std::optional<Scalar> parse_scalar(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;

    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    if (negative) n = -n;
    Scalar x(n, d);
    x.canonicalize();
    return x;
}

std::string to_string(const Scalar& x)
{
    // mpq_get_str omits "/1" only for canonical values.
    Scalar c = x;
    c.canonicalize();
    return c.get_str(10);
}

long valuation(const Integer& x, unsigned long p)
{
    if (x == 0) throw std::domain_error("valuation of zero is undefined");
    Integer r = x;
    long v = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
        ++v;
    }
    return v;
}

long valuation(const Scalar& x, unsigned long p)
{
    if (is_zero(x)) throw std::domain_error("valuation of zero is undefined");
    return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

Scalar power(const Scalar& x, long e)
{
    if (e < 0) {
        if (is_zero(x)) throw std::domain_error("negative power of zero");
        Scalar inv = 1 / x;
        return power(inv, -e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Scalar(num, den);
}

Scalar padic_abs(const Scalar& x, unsigned long p)
{
    if (is_zero(x)) return Scalar(0);
    return power(Scalar(static_cast<long>(p)), -valuation(x, p));
}

bool is_prime(unsigned long n)
{
    if (n < 2) return false;
    for (unsigned long f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

bool is_power_of(unsigned long n, unsigned long p)
{
    if (p < 2 || n < p) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

std::uint64_t binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t v = 1;
    for (unsigned i = 0; i < k; ++i) {
        v = v * (n - i) / (i + 1);
    }
    return v;
}

} // namespace cedual
