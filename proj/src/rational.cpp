#include "prefcone/rational.hpp"

#include <cctype>
#include <ostream>

#include "prefcone/error.hpp"

namespace prefcone {

namespace {

// Strict integer literal; a sign is only allowed when `allow_sign` is set
// (numerators yes, denominators no). GMP itself is never handed the sign.
bool parse_integer(const std::string& s, bool allow_sign, mpz_class& out) {
    std::size_t i = 0;
    bool negate = false;
    if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negate = s[i] == '-';
        ++i;
    }
    if (i >= s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    out = mpz_class(s.substr(i));
    if (negate) out = -out;
    return true;
}

} // namespace

Rational::Rational(long n, long d) {
    if (d == 0) throw validation_error("rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw validation_error("rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw validation_error("rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw validation_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    std::string ns = slash == std::string::npos ? text : text.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
    mpz_class n, d;
    if (!parse_integer(ns, /*allow_sign=*/true, n) ||
        !parse_integer(ds, /*allow_sign=*/false, d))
        throw validation_error("rational: cannot parse '" + text + "'");
    if (d == 0) throw validation_error("rational: zero denominator in '" + text + "'");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace prefcone
