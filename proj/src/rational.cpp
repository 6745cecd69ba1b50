#include "modepoly/rational.hpp"

#include "modepoly/error.hpp"

#include <cmath>
#include <string>

namespace modepoly {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw InvalidInput("malformed rational: '" + std::string(text) + "'");
    BigInt den = parse_integer(den_text, text);
    if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw InvalidInput("non-finite value");
    Rational q;
    mpq_set_d(q.get_mpq_t(), value);
    return q;
}

} // namespace modepoly
