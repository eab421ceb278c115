#pragma once

#include "cevian/constructions.hpp"
#include "cevian/triangle.hpp"

#include <string>
#include <vector>

namespace cevian {

/// Named objects drawn by each figure preset ("fig1", "fig2", "fig3").
std::vector<std::string> preset_layers(const std::string& preset);

/// SVG drawing of a construction set. Floats are produced here and nowhere
/// else; every coordinate written is finite. Output is byte-identical for
/// equal input.
template <ExactField S>
std::string render_svg(const ConstructionSet<S>& cs, const CartesianTriangle& tri, const std::string& preset);

extern template std::string render_svg(const ConstructionSet<Rational>&, const CartesianTriangle&, const std::string&);
extern template std::string render_svg(const ConstructionSet<QuadExt>&, const CartesianTriangle&, const std::string&);

}  // namespace cevian
