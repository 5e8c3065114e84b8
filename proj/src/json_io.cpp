#include "superschur/json_io.hpp"

namespace superschur {

json to_json(const Field& f) { return json{{"characteristic", f.characteristic()}}; }

json to_json(const SuperSpace& s) {
  return json{{"field", to_json(s.field())},
              {"parities", s.parities()},
              {"labels", s.labels()}};
}

json to_json(const SuperMap& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.matrix().rows(); ++r)
    for (std::size_t c = 0; c < m.matrix().cols(); ++c)
      if (!m.at(r, c).is_zero())
        entries.push_back(json::array({r, c, m.at(r, c).str()}));
  return json{{"source", to_json(m.source())},
              {"target", to_json(m.target())},
              {"entries", entries}};
}

json to_json(const SuperAlgebra& a) {
  json unit = json::array();
  for (const auto& c : a.unit()) unit.push_back(c.str());
  json constants = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product(i, j))
        if (!c.is_zero()) constants.push_back(json::array({i, j, k, c.str()}));
  return json{{"name", a.name()},         {"field", to_json(a.field())},
              {"dim", a.dim()},           {"parities", a.parities()},
              {"labels", a.labels()},     {"unit", unit},
              {"constants", constants}};
}

json to_json(const GammaLabel& l) {
  json even = json::array();
  for (const auto& [idx, mult] : l.even)
    even.push_back(json::array({idx, mult}));
  return json{{"even", even}, {"odd", l.odd}};
}

json to_json(const Partition& p) { return json(p); }

json to_json(const WeightDecomposition& w) {
  json blocks = json::array();
  for (const auto& b : w.blocks)
    blocks.push_back(
        json{{"weight", b.weight}, {"dimension", b.positions.size()}});
  return json{{"n", w.n}, {"d", w.d}, {"blocks", blocks}};
}

Field field_from_json(const json& j) {
  return Field::of_characteristic(j.at("characteristic").get<std::uint32_t>());
}

SuperSpace superspace_from_json(const json& j) {
  return SuperSpace(field_from_json(j.at("field")),
                    j.at("parities").get<std::vector<int>>(),
                    j.at("labels").get<std::vector<std::string>>());
}

SuperMap supermap_from_json(const json& j) {
  SuperSpace src = superspace_from_json(j.at("source"));
  SuperSpace tgt = superspace_from_json(j.at("target"));
  Matrix m(src.field(), tgt.dim(), src.dim());
  for (const auto& e : j.at("entries"))
    m.at(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()) =
        Scalar::parse(src.field(), e.at(2).get<std::string>());
  return SuperMap(std::move(src), std::move(tgt), std::move(m));
}

SuperAlgebra superalgebra_from_json(const json& j) {
  Field f = field_from_json(j.at("field"));
  std::size_t dim = j.at("dim").get<std::size_t>();
  Vec unit = zero_vec(f, dim);
  for (std::size_t i = 0; i < dim; ++i)
    unit[i] = Scalar::parse(f, j.at("unit").at(i).get<std::string>());
  std::vector<std::vector<SuperAlgebra::SparseVec>> prod(
      dim, std::vector<SuperAlgebra::SparseVec>(dim));
  for (const auto& e : j.at("constants"))
    prod[e.at(0).get<std::size_t>()][e.at(1).get<std::size_t>()].emplace_back(
        e.at(2).get<std::size_t>(),
        Scalar::parse(f, e.at(3).get<std::string>()));
  return SuperAlgebra(j.at("name").get<std::string>(), f,
                      j.at("parities").get<std::vector<int>>(),
                      j.at("labels").get<std::vector<std::string>>(),
                      std::move(unit), std::move(prod));
}

}  // namespace superschur
