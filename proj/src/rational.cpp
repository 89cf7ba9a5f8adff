#include "l2betti/rational.hpp"

#include <stdexcept>

#include "l2betti/errors.hpp"

namespace l2betti {

Rational make_rational(long p, long q) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    const std::string num(text.substr(0, slash));
    std::string den = "1";
    if (slash != std::string_view::npos) {
        den = std::string(text.substr(slash + 1));
        if (den.empty()) throw ParseError("missing denominator in rational literal");
    }
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw ParseError("bad numerator '" + num + "'");
    if (d.set_str(den, 10) != 0) throw ParseError("bad denominator '" + den + "'");
    if (d == 0) throw ParseError("zero denominator in rational literal");
    Rational r(n);
    r /= Rational(d);
    return r;
}

} // namespace l2betti
