#include "dispkit/rational.hpp"
#include "dispkit/matrix.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dispkit {

double to_nearest_double(const Rational& q)
{
    const double t = q.get_d();
    if (!std::isfinite(t))
        return t;
    double best = t;
    Rational best_err = abs(q - Rational(t));
    for (const double c : {std::nextafter(t, -std::numeric_limits<double>::infinity()),
                           std::nextafter(t, std::numeric_limits<double>::infinity())}) {
        if (!std::isfinite(c))
            continue;
        Rational err = abs(q - Rational(c));
        if (err < best_err) {
            best = c;
            best_err = std::move(err);
        }
    }
    return best;
}

namespace {

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
    throw std::invalid_argument("invalid number '" + std::string(text) + "'");
}

mpz_class pow10(unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rational parse_decimal(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part))
            bad(text);
        const auto [ptr, ec] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
        if (ec != std::errc{} || exponent > 4000)
            bad(text);
        if (exp_negative)
            exponent = -exponent;
    }
    std::string digits;
    long frac_len = 0;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto ip = s.substr(0, dot);
        const auto fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            bad(text);
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(s))
            bad(text);
        digits = std::string(s);
    }
    Rational q{mpz_class(digits, 10)};
    exponent -= frac_len;
    if (exponent > 0)
        q *= pow10(static_cast<unsigned long>(exponent));
    else if (exponent < 0)
        q /= pow10(static_cast<unsigned long>(-exponent));
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    if (text.empty())
        bad(text);
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        const std::string_view den = text.substr(slash + 1);
        bool negative = false;
        if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
            negative = num.front() == '-';
            num.remove_prefix(1);
        }
        if (!all_digits(num) || !all_digits(den))
            bad(text);
        const mpz_class d(std::string(den), 10);
        if (d == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational q(mpz_class(std::string(num), 10), d);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }
    return parse_decimal(text);
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

std::string to_string(double x)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{})
        throw std::runtime_error("to_string(double): formatting failed");
    return std::string(buf, ptr);
}

std::string shape_string(std::size_t rows, std::size_t cols)
{
    return std::to_string(rows) + "x" + std::to_string(cols);
}

} // namespace dispkit
