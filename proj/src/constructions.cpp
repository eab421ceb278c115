#include "cevian/constructions.hpp"

#include "cevian/quadratic.hpp"

namespace cevian {

ProjPoint<QuadExt> special_point_ha() {
    // y + z = 2, yz = -1 with x = 1: y, z are the roots of t^2 - 2t - 1
    const QuadExt a(1), b(-2), c(-1);
    long field = 1;
    auto roots = solve_quadratic(a, b, c, field);
    if (const auto* lift = std::get_if<NeedsExtension>(&roots)) {
        field = lift->d;
        roots = solve_quadratic(a, b, c, field);
    }
    const auto* two = std::get_if<TwoRoots<QuadExt>>(&roots);
    if (two == nullptr) throw Error(ErrorCode::DegenerateConfiguration, "special configuration has no two real roots");
    return {QuadExt(1), two->r1, two->r2};
}

ConstructionSet<QuadExt> special_configuration_ha() {
    auto cs = construct(special_point_ha());
    if (!(cs.h == vertex_a<QuadExt>()) || !(cs.o == midpoint_bc<QuadExt>()))
        throw Error(ErrorCode::DegenerateConfiguration, "special configuration does not have H = A, O = D0");
    return cs;
}

}  // namespace cevian
