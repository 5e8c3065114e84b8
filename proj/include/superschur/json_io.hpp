#pragma once

#include "json.hpp"
#include "superschur/algebra.hpp"
#include "superschur/centralizer.hpp"
#include "superschur/classify.hpp"
#include "superschur/supermap.hpp"
#include "superschur/sym_action.hpp"

namespace superschur {

using json = nlohmann::ordered_json;

json to_json(const Field& f);
json to_json(const SuperSpace& s);
/// sparse triples [[row, col, scalar-string], ...] in row-major order
json to_json(const SuperMap& m);
json to_json(const SuperAlgebra& a);
json to_json(const GammaLabel& l);
json to_json(const Partition& p);
json to_json(const WeightDecomposition& w);

Field field_from_json(const json& j);
SuperSpace superspace_from_json(const json& j);
SuperMap supermap_from_json(const json& j);
SuperAlgebra superalgebra_from_json(const json& j);

}  // namespace superschur
