#include "weyr/scalar.hpp"

#include <stdexcept>

namespace weyr {

Scalar Scalar::inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw std::domain_error("division by zero Scalar");
    return {re / n, -im / n};
}

std::string Scalar::str() const {
    if (im == 0) return re.get_str();
    std::string s = re.get_str();
    if (im > 0) s += "+";
    s += im.get_str();
    s += "i";
    return s;
}

namespace {

// A rational literal: optional sign, digits, optional /digits.
std::size_t scan_rational(const std::string& s, std::size_t pos, Rational* out) {
    std::size_t i = pos;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits_start) throw std::invalid_argument("bad rational in '" + s + "'");
    if (i < s.size() && s[i] == '/') {
        ++i;
        std::size_t den_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_start) throw std::invalid_argument("bad denominator in '" + s + "'");
    }
    // mpq_set_str rejects a leading '+', so drop it from the literal.
    std::size_t lit_start = s[pos] == '+' ? pos + 1 : pos;
    Rational r(s.substr(lit_start, i - lit_start));
    r.canonicalize();
    *out = r;
    return i;
}

}  // namespace

Scalar Scalar::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty scalar literal");
    // Pure imaginary shorthand "i", "-i", "p/qi" is accepted too.
    Scalar out;
    std::size_t i = 0;
    if (s == "i" || s == "+i") return {Rational(0), Rational(1)};
    if (s == "-i") return {Rational(0), Rational(-1)};
    i = scan_rational(s, 0, &out.re);
    if (i == s.size()) return out;
    if (s[i] == 'i' && i + 1 == s.size()) {
        out.im = out.re;
        out.re = 0;
        return out;
    }
    if (s[i] != '+' && s[i] != '-')
        throw std::invalid_argument("malformed scalar '" + s + "'");
    if (i + 2 == s.size() && s[i + 1] == 'i') {  // "a+i" / "a-i"
        out.im = s[i] == '+' ? 1 : -1;
        return out;
    }
    std::size_t j = scan_rational(s, i, &out.im);
    if (j + 1 != s.size() || s[j] != 'i')
        throw std::invalid_argument("malformed scalar '" + s + "'");
    return out;
}

}  // namespace weyr
