#include "critwin/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace critwin {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

[[noreturn]] void bad(std::string_view text)
{
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            bad(text);
        cpp_int den{std::string(q)};
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = Rational(cpp_int(std::string(p)), den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            bad(text);
        cpp_int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        cpp_int num = whole.empty() ? cpp_int(0) : cpp_int(std::string(whole));
        num = num * scale + (frac.empty() ? cpp_int(0) : cpp_int(std::string(frac)));
        value = Rational(num, scale);
    } else {
        if (!all_digits(s))
            bad(text);
        value = Rational(cpp_int(std::string(s)));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q)
{
    return q.str();
}

double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

std::string to_decimal(const Rational& q, int significant)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, to_double(q));
    return buf;
}

} // namespace critwin
