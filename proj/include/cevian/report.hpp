#pragma once

#include "cevian/triangle.hpp"
#include "cevian/verify.hpp"

#include <json.hpp>

#include <string>

namespace cevian {

/// Version of the JSON layout documented in docs/report-schema.md.
inline constexpr int kReportSchemaVersion = 1;

template <ExactField S>
nlohmann::json point_json(const ProjPoint<S>& p);

/// Every member of a construction set with exact strings, plus a "render"
/// object with float Cartesian images for the given triangle.
template <ExactField S>
nlohmann::json construction_report(const ConstructionSet<S>& cs, const CartesianTriangle& tri);

nlohmann::json degeneracy_json(const DegeneracyReport& flags);

nlohmann::json check_result_json(const CheckResult& r);
nlohmann::json suite_report_json(const SuiteReport& r);

/// Report of the locus conic for vertex 0, 1, 2.
nlohmann::json locus_report(int vertex);

extern template nlohmann::json point_json(const ProjPoint<Rational>&);
extern template nlohmann::json point_json(const ProjPoint<QuadExt>&);
extern template nlohmann::json construction_report(const ConstructionSet<Rational>&, const CartesianTriangle&);
extern template nlohmann::json construction_report(const ConstructionSet<QuadExt>&, const CartesianTriangle&);

}  // namespace cevian
