#include "rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>
#include <stdexcept>

namespace geolab {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num);
    r /= den;  // operator/ canonicalizes sign and reduces
    return r;
}

bool is_integer(const Rat& x) { return denominator(x) == 1; }

Int parse_int(const std::string& text) {
    std::size_t i = 0, n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = n;
    while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
    if (i == j) throw std::domain_error("empty integer literal");
    std::size_t k = i;
    if (text[k] == '+' || text[k] == '-') ++k;
    if (k == j) throw std::domain_error("bad integer literal: '" + text + "'");
    for (std::size_t t = k; t < j; ++t)
        if (!std::isdigit(static_cast<unsigned char>(text[t])))
            throw std::domain_error("bad integer literal: '" + text + "'");
    return Int(text.substr(i, j - i));
}

namespace {

// mantissa[.mantissa][eE[+-]exp]
Rat parse_decimal(const std::string& s) {
    std::size_t n = s.size(), i = 0;
    bool neg = false;
    if (i < n && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false, seen_point = false;
    for (; i < n; ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_point) ++frac_digits;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw std::domain_error("bad rational literal: '" + s + "'");
    long exp10 = 0;
    if (i < n && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < n && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i == n) throw std::domain_error("bad rational literal: '" + s + "'");
        long e = 0;
        for (; i < n; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::domain_error("bad rational literal: '" + s + "'");
            e = e * 10 + (s[i] - '0');
            if (e > 1000000) throw std::domain_error("exponent out of range: '" + s + "'");
        }
        exp10 = eneg ? -e : e;
    }
    if (i != n) throw std::domain_error("bad rational literal: '" + s + "'");
    Int mant(digits.empty() ? "0" : digits);
    if (neg) mant = -mant;
    long net = exp10 - frac_digits;
    if (net >= 0) return Rat(mant * pow10(static_cast<unsigned>(net)));
    return make_rat(mant, pow10(static_cast<unsigned>(-net)));
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::size_t i = 0, n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = n;
    while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
    if (i == j) throw std::domain_error("empty rational literal");
    std::string s = text.substr(i, j - i);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        if (slash == 0 || slash + 1 == s.size() || s.find('/', slash + 1) != std::string::npos)
            throw std::domain_error("bad rational literal: '" + s + "'");
        return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }
    return parse_decimal(s);
}

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

std::string decimal_string(const Rat& x, unsigned digits) {
    Int num = numerator(x), den = denominator(x);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale = pow10(digits);
    Int q = (num * scale) / den;
    Int r = (num * scale) % den;
    Int twice = 2 * r;
    if (twice > den || (twice == den && ((q & 1) != 0))) ++q;  // ties to even
    Int ip = q / scale, fp = q % scale;
    std::string out;
    if (neg && (ip != 0 || fp != 0)) out += '-';
    out += ip.str();
    if (digits > 0) {
        std::string f = fp.str();
        out += '.';
        out.append(digits - f.size(), '0');
        out += f;
    }
    return out;
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int mod_floor(const Int& x, const Int& m) {
    if (m <= 0) throw std::domain_error("modulus must be positive");
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    // extended Euclid
    Int old_r = mod_floor(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw std::domain_error("no modular inverse: gcd(" + to_string(a) + ", " + to_string(m) + ") != 1");
    return mod_floor(old_s, m);
}

Int pow10(unsigned k) {
    Int r = 1;
    Int base = 10;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

Int isqrt(const Int& x) {
    if (x < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(x);
}

}  // namespace geolab
