#include "cevian/scalar.hpp"

namespace cevian {

std::optional<Rational> exact_sqrt(const Rational& x, long /*field*/) {
    Rational root;
    if (rational_sqrt(x, root)) return root;
    return std::nullopt;
}

std::optional<QuadExt> exact_sqrt(const QuadExt& x, long field) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_rational()) {
        Rational root;
        if (rational_sqrt(x.rational_part(), root)) return QuadExt(root);
        if (field > 1 && rational_sqrt(x.rational_part() / Rational(field), root))
            return QuadExt(Rational(0), root, field);
        return std::nullopt;
    }
    // (p + q sqrt d)^2 = a + b sqrt d  <=>  p^2 + d q^2 = a, 2 p q = b.
    // p^2 is a root of u^2 - a u + d b^2 / 4, so a^2 - d b^2 must be a square.
    const Rational& a = x.rational_part();
    const Rational& b = x.radical_part();
    Rational t;
    if (!rational_sqrt(x.norm(), t)) return std::nullopt;
    for (const Rational& p2 : {(a + t) / Rational(2), (a - t) / Rational(2)}) {
        Rational p;
        if (p2.is_zero() || !rational_sqrt(p2, p)) continue;
        QuadExt root(p, b / (Rational(2) * p), x.field());
        if (root.sign() < 0) root = -root;
        return root;
    }
    return std::nullopt;
}

}  // namespace cevian
