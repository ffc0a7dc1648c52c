// JSON rendering of polynomials, classes, and fixture parsing.
//
// CharPoly: {"terms":[{"exp":[...r+1 ints],"coef":"<decimal>"}...]},
// terms sorted lexicographically by exponent vector.
// KClass:   {"cartan":{"family":"A","rank":2},"class_kind":...,
//            "values":[{"w":[reduced word],"num":...,"den":[...]}...]}.
// Fixtures: {"dim": d, "points":[{"label","cell_dim","weights":[...]}]}.
#pragma once

#include <nlohmann/json.hpp>

#include "kflag/kclasses.hpp"
#include "kflag/poincare.hpp"

namespace kflag {

using json = nlohmann::ordered_json;

json charpoly_to_json(const CharPoly& p);
CharPoly charpoly_from_json(const json& j, int vars);

json ratchar_to_json(const RatChar& r);

json kclass_to_json(const KClass& k, const std::string& class_kind);

json bb_data_to_json(const BBFixedPointData& d);
BBFixedPointData bb_data_from_json(const json& j);

}  // namespace kflag
