#include "cevian/rational.hpp"

#include "cevian/error.hpp"

#include <ostream>

namespace cevian {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    value_ /= o.value_;
    return *this;
}

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return false;
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    mpz_class num;
    mpz_class den = 1;
    if (!parse_integer(text.substr(0, slash), num))
        throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        auto d = text.substr(slash + 1);
        if (d.empty() || d[0] == '-' || d[0] == '+' || !parse_integer(d, den) || den == 0)
            throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool rational_sqrt(const Rational& r, Rational& root) {
    if (r.sign() < 0) return false;
    const mpz_class& n = r.raw().get_num();
    const mpz_class& d = r.raw().get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    root = Rational(sn, sd);
    return true;
}

mpz_class squarefree_part(const mpz_class& n) {
    if (n == 0) throw Error(ErrorCode::Degenerate, "square-free part of zero");
    mpz_class m = abs(n);
    mpz_class result = 1;
    // Trial division up to the cube root: afterwards the cofactor has at most
    // two prime factors, so it is either a perfect square or square-free.
    for (mpz_class p = 2; p * p * p <= m; p += (p == 2 ? 1 : 2)) {
        int exponent = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
            m /= p;
            ++exponent;
        }
        if (exponent % 2 == 1) result *= p;
    }
    if (mpz_perfect_square_p(m.get_mpz_t()) == 0) result *= m;
    return n < 0 ? mpz_class(-result) : result;
}

mpz_class squarefree_decompose(const Rational& r, Rational& s) {
    // r = n/d = n*d / d^2
    const mpz_class nd = r.raw().get_num() * r.raw().get_den();
    const mpz_class k = squarefree_part(nd);
    const mpz_class sq = nd / k;  // a perfect square
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
    s = Rational(root, r.raw().get_den());
    return k;
}

}  // namespace cevian
