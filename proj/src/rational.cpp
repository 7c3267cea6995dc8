#include "thomforge/rational.hpp"

#include <ostream>

namespace thomforge {

Rational::Rational(long n, long d) {
    if (d == 0) throw PreconditionError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    if (v_.get_den() == 0) throw PreconditionError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(text)));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw PreconditionError("rational with zero denominator");
        mpq_class q(num, den);
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

long Rational::to_long() const {
    if (!is_integer()) throw PreconditionError("value " + str() + " is not an integer");
    if (!v_.get_num().fits_slong_p()) throw PreconditionError("integer " + str() + " overflows long");
    return v_.get_num().get_si();
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace thomforge
