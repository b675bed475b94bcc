#include "ptcubic/numeric.hpp"
#include "ptcubic/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <regex>
#include <string>

namespace ptcubic {

namespace {

Int pow10i(long k) {
    return boost::multiprecision::pow(Int(10), static_cast<unsigned>(k));
}

int decimal_digit_count(const Int& v) {
    std::string s = boost::multiprecision::abs(v).str();
    return static_cast<int>(s.size());
}

// Largest e with 10^e <= |value|, for value != 0.
long decimal_exponent(const Rat& value) {
    Rat a = boost::multiprecision::abs(value);
    long e = decimal_digit_count(boost::multiprecision::numerator(a)) -
             decimal_digit_count(boost::multiprecision::denominator(a));
    auto pow10r = [](long k) {
        return k >= 0 ? Rat(pow10i(k)) : Rat(1, pow10i(-k));
    };
    while (a < pow10r(e)) --e;
    while (a >= pow10r(e + 1)) ++e;
    return e;
}

// round-half-to-even(value * 10^places) as an exact integer.
Int scaled_round(const Rat& value, long places) {
    Rat scaled = places >= 0 ? Rat(value * Rat(pow10i(places)))
                             : Rat(value / Rat(pow10i(-places)));
    Int n = boost::multiprecision::numerator(scaled);
    Int d = boost::multiprecision::denominator(scaled); // d > 0, canonical
    Int q = n / d;                                      // truncates toward zero
    Int r = n - q * d;
    if (r < 0) { // convert to floor division
        --q;
        r += d;
    }
    Int twice = r * 2;
    if (twice > d || (twice == d && (q % 2) != 0)) ++q;
    return q;
}

// Digit string of |m| together with the sign, for assembling output.
struct SignedDigits {
    bool negative;
    std::string digits;
};

SignedDigits split_sign(const Int& m) {
    SignedDigits out;
    out.negative = m < 0;
    out.digits = boost::multiprecision::abs(m).str();
    return out;
}

} // namespace

Int parse_integer(const std::string& text) {
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw InputError("no digits in '" + text + "'");
    for (size_t i = pos; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw InputError("cannot parse '" + text + "' as an integer");
    // The Int string constructor auto-detects the base, so a leading zero
    // ("050263") would be read as octal; strip the zeros to force decimal.
    while (pos + 1 < text.size() && text[pos] == '0') ++pos;
    Int value(text.substr(pos));
    return negative ? Int(-value) : value;
}

Rat parse_rational(const std::string& text) {
    std::string s = text;
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    if (s.empty()) throw InputError("empty string is not a number");

    static const std::regex fraction_re(R"(^([+-]?\d+)/([+-]?\d+)$)");
    static const std::regex decimal_re(
        R"(^([+-]?)(\d+(?:\.\d*)?|\.\d+)(?:[eE]([+-]?\d+))?$)");

    std::smatch m;
    if (std::regex_match(s, m, fraction_re)) {
        Int num = parse_integer(m[1].str());
        Int den = parse_integer(m[2].str());
        if (den == 0) throw InputError("zero denominator in '" + text + "'");
        return Rat(num, den);
    }

    if (std::regex_match(s, m, decimal_re)) {
        bool negative = m[1].str() == "-";
        std::string body = m[2].str();
        long exponent = 0;
        if (m[3].matched) {
            errno = 0;
            exponent = std::strtol(m[3].str().c_str(), nullptr, 10);
            if (errno != 0 || exponent > (1L << 20) || exponent < -(1L << 20))
                throw InputError("exponent out of range in '" + text + "'");
        }
        auto dot = body.find('.');
        std::string digits = body;
        long frac_len = 0;
        if (dot != std::string::npos) {
            frac_len = static_cast<long>(body.size() - dot - 1);
            digits = body.substr(0, dot) + body.substr(dot + 1);
        }
        if (digits.empty()) throw InputError("no digits in '" + text + "'");
        Int mant = parse_integer(digits);
        if (negative) mant = -mant;
        long shift = exponent - frac_len;
        return shift >= 0 ? Rat(mant * pow10i(shift))
                          : Rat(mant, pow10i(-shift));
    }

    throw InputError("cannot parse '" + text + "' as a rational number");
}

Rat round_to_places(const Rat& value, int places) {
    Int m = scaled_round(value, places);
    return places >= 0 ? Rat(m, pow10i(places)) : Rat(m * pow10i(-places));
}

Rat round_to_digits(const Rat& value, int digits) {
    if (digits < 1) throw InputError("significant digits must be >= 1");
    if (value == 0) return Rat(0);
    long e = decimal_exponent(value);
    return round_to_places(value, static_cast<int>(digits - 1 - e));
}

std::string format_fixed(const Rat& value, int places) {
    if (places < 0) throw InputError("decimal places must be >= 0");
    SignedDigits sd = split_sign(scaled_round(value, places));
    std::string& d = sd.digits;
    if (static_cast<long>(d.size()) <= places)
        d.insert(0, places + 1 - d.size(), '0');
    std::string out = sd.negative ? "-" : "";
    out += d.substr(0, d.size() - places);
    if (places > 0) {
        out += '.';
        out += d.substr(d.size() - places);
    }
    return out;
}

std::string format_significant(const Rat& value, int digits) {
    if (digits < 1) throw InputError("significant digits must be >= 1");
    if (value == 0) return "0";

    long e = decimal_exponent(value);
    Int m = scaled_round(value, digits - 1 - e);
    if (boost::multiprecision::abs(m) >= pow10i(digits)) {
        m /= 10; // rounding carried into a new leading digit (999... -> 1000...)
        ++e;
    }
    SignedDigits sd = split_sign(m);
    const std::string& d = sd.digits;
    std::string sign = sd.negative ? "-" : "";

    if (e >= -4 && e < digits) {
        if (e >= static_cast<long>(d.size()) - 1) {
            // all digits at or above the decimal point, no fabricated zeros
            return sign + d +
                   std::string(static_cast<size_t>(e) - d.size() + 1, '0');
        }
        if (e >= 0)
            return sign + d.substr(0, e + 1) + "." + d.substr(e + 1);
        return sign + "0." + std::string(-e - 1, '0') + d;
    }

    std::string mantissa(1, d[0]);
    if (d.size() > 1) mantissa += "." + d.substr(1);
    return sign + mantissa + "e" + (e < 0 ? "-" : "+") +
           std::to_string(e < 0 ? -e : e);
}

std::string format_real(const Real& value, int digits) {
    if (digits < 1) throw InputError("significant digits must be >= 1");
    return value.str(std::min(digits, kMaxPrintDigits));
}

Real to_real(const Rat& value) {
    return Real(boost::multiprecision::numerator(value)) /
           Real(boost::multiprecision::denominator(value));
}

Real to_real(const Int& value) { return Real(value); }

} // namespace ptcubic
