#include "cevian/quad_ext.hpp"

#include "cevian/error.hpp"

#include <cmath>
#include <ostream>

namespace cevian {

QuadExt::QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d < 1) throw Error(ErrorCode::IncompatibleExtensions, "extension discriminant must be positive");
    if (!b_.is_zero() && d != 1 && squarefree_part(mpz_class(d)) != d)
        throw Error(ErrorCode::IncompatibleExtensions, "discriminant " + std::to_string(d) + " is not square-free");
    canonicalize();
}

void QuadExt::canonicalize() {
    if (d_ == 1) {
        a_ += b_;
        b_ = Rational(0);
    }
    if (b_.is_zero()) d_ = 1;
}

long QuadExt::join_field(const QuadExt& o) const {
    if (d_ == 1) return o.d_;
    if (o.d_ == 1 || o.d_ == d_) return d_;
    throw Error(ErrorCode::IncompatibleExtensions,
                "cannot combine sqrt(" + std::to_string(d_) + ") with sqrt(" + std::to_string(o.d_) + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = join_field(o);
    a_ += o.a_;
    b_ += o.b_;
    canonicalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = join_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    canonicalize();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    const long d = join_field(o);
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    canonicalize();
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(sqrt d)");
    join_field(o);
    if (o.b_.is_zero()) {
        a_ /= o.a_;
        b_ /= o.a_;
        canonicalize();
        return *this;
    }
    // x / y = x * conj(y) / N(y)
    const Rational n = o.norm();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    canonicalize();
    return *this;
}

int QuadExt::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 d
    const int c = (a_ * a_ <=> b_ * b_ * Rational(d_)) == std::strong_ordering::greater ? 1 : -1;
    return c > 0 ? sa : sb;
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

double QuadExt::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.str();
    s += b_.sign() < 0 ? "-" : "+";
    s += (b_.sign() < 0 ? -b_ : b_).str();
    s += "*sqrt(" + std::to_string(d_) + ")";
    return s;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

QuadExt QuadExt::parse(std::string_view text) {
    const auto bad = [&] { return Error(ErrorCode::ParseError, "bad scalar '" + std::string(text) + "'"); };
    const auto root = text.find("sqrt(");
    if (root == std::string_view::npos) return QuadExt(Rational::parse(text));
    if (text.back() != ')') throw bad();
    // head is "", "a", "a+", "a-", "a+b*", "-b*", ... in front of sqrt(
    std::string_view head = text.substr(0, root);
    std::string_view coeff;
    Rational a(0);
    int sign = 1;
    std::size_t split = std::string_view::npos;
    for (std::size_t i = head.size(); i-- > 0;) {
        if ((head[i] == '+' || head[i] == '-') && (i == 0 || head[i - 1] != '/')) {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        coeff = head;
    } else {
        if (split > 0) a = Rational::parse(head.substr(0, split));
        if (head[split] == '-') sign = -1;
        coeff = head.substr(split + 1);
    }
    Rational b(1);
    if (!coeff.empty()) {
        if (coeff.back() != '*') throw bad();
        b = Rational::parse(coeff.substr(0, coeff.size() - 1));
    }
    if (sign < 0) b = -b;
    const auto radicand = text.substr(root + 5, text.size() - root - 6);
    const Rational d = Rational::parse(radicand);
    if (!d.is_integer() || d.sign() <= 0 || !mpz_class(d.numerator()).fits_slong_p()) throw bad();
    const long dl = d.numerator().get_si();
    if (dl == 1 || b.is_zero()) throw bad();
    return {a, b, dl};
}

}  // namespace cevian
