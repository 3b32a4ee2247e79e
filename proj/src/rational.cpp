#include "flexdp/rational.hpp"

#include "flexdp/errors.hpp"

#include <cctype>

namespace flexdp {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size())
        return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
        throw InputError("malformed rational '" + std::string(text) + "'");

    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational & value)
{
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer lcm_of_denominators(std::span<const Rational> values)
{
    Integer result = 1;
    for (const auto & v : values)
        mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), v.get_den_mpz_t());
    return result;
}

} // namespace flexdp
