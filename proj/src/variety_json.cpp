#include <stdexcept>

#include "qs/variety.hpp"

namespace qs {

namespace {

json field_to_json(const Field& f) {
  if (f.is_rational()) return json{{"kind", "rational"}};
  return json{{"kind", "prime"}, {"p", f.modulus}};
}

Field field_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return Field::rationals();
  if (kind == "prime") return Field::prime(j.at("p").get<std::uint64_t>());
  throw std::invalid_argument("unknown field kind: " + kind);
}

json points_to_json(const std::vector<ProjPoint>& pts) {
  json arr = json::array();
  for (const ProjPoint& p : pts) {
    json row = json::array();
    for (const Scalar& s : p.coords()) row.push_back(s.str());
    arr.push_back(std::move(row));
  }
  return arr;
}

json params_to_json(const std::vector<std::vector<Scalar>>& params) {
  json arr = json::array();
  for (const auto& row : params) {
    json jr = json::array();
    for (const Scalar& s : row) jr.push_back(s.str());
    arr.push_back(std::move(jr));
  }
  return arr;
}

}  // namespace

json variety_to_json(const VarietyRep& v) {
  json j;
  j["tag"] = tag_name(v.tag);
  j["ambientDim"] = v.ambient_dim;
  j["dim"] = v.dim;
  j["codim"] = v.codim;
  j["degree"] = v.degree;
  if (v.sectional_genus)
    j["sectionalGenus"] = *v.sectional_genus;
  else
    j["sectionalGenus"] = nullptr;
  j["field"] = field_to_json(v.field);
  j["seed"] = std::to_string(v.seed);
  if (const Parametrization* par = v.parametrization()) {
    json maps = json::array();
    for (const MultiPoly& m : par->maps) maps.push_back(m.str());
    j["parametrization"] = json{{"sourceVars", par->source_vars}, {"maps", maps}};
  } else if (const ImplicitCurve* ic = v.implicit_curve()) {
    json basis = json::array();
    for (const MultiPoly& b : ic->section_basis) basis.push_back(b.str());
    j["implicit"] = json{{"relation",
                          json{{"leadVar", ic->relation.lead_var},
                               {"leadExp", ic->relation.lead_exp},
                               {"replacement", ic->relation.replacement.str()}}},
                         {"sectionBasis", basis}};
  } else if (const PointList* pl = v.point_list()) {
    // sampled points may live in a prime field even when the defining data
    // is rational; record their field explicitly
    if (!pl->points.empty() && !(pl->points.front().field() == v.field))
      j["pointField"] = field_to_json(pl->points.front().field());
    j["points"] = points_to_json(pl->points);
    if (!pl->params.empty()) j["params"] = params_to_json(pl->params);
  }
  if (v.scroll) {
    json jt = json::array();
    for (int a : v.scroll->type) jt.push_back(a);
    j["scroll"] = json{{"type", jt},
                       {"a", v.scroll->a},
                       {"b", v.scroll->b},
                       {"form", v.scroll->form.str()}};
  }
  j["construction"] = v.construction;
  return j;
}

VarietyRep variety_from_json(const json& j) {
  VarietyRep v;
  v.tag = tag_from_name(j.at("tag").get<std::string>());
  v.ambient_dim = j.at("ambientDim").get<int>();
  v.dim = j.at("dim").get<int>();
  v.codim = j.at("codim").get<int>();
  v.degree = j.at("degree").get<long long>();
  if (j.contains("sectionalGenus") && !j["sectionalGenus"].is_null())
    v.sectional_genus = j["sectionalGenus"].get<int>();
  v.field = field_from_json(j.at("field"));
  if (j.contains("seed")) v.seed = std::stoull(j["seed"].get<std::string>());
  if (j.contains("construction")) v.construction = j["construction"];

  if (j.contains("parametrization")) {
    const json& jp = j["parametrization"];
    Parametrization par{jp.at("sourceVars").get<int>(), {}};
    for (const json& s : jp.at("maps"))
      par.maps.push_back(MultiPoly::parse(s.get<std::string>(), par.source_vars, v.field));
    v.rep = std::move(par);
  } else if (j.contains("implicit")) {
    const json& ji = j["implicit"];
    const json& jr = ji.at("relation");
    Relation rel(jr.at("leadVar").get<int>(), jr.at("leadExp").get<int>(),
                 MultiPoly::parse(jr.at("replacement").get<std::string>(), 2, v.field));
    ImplicitCurve ic{std::move(rel), {}};
    for (const json& s : ji.at("sectionBasis"))
      ic.section_basis.push_back(MultiPoly::parse(s.get<std::string>(), 2, v.field));
    v.rep = std::move(ic);
  } else if (j.contains("points")) {
    Field pf = j.contains("pointField") ? field_from_json(j["pointField"]) : v.field;
    PointList pl;
    for (const json& row : j["points"]) {
      std::vector<Scalar> coords;
      for (const json& s : row) coords.push_back(Scalar::parse(s.get<std::string>(), pf));
      pl.points.emplace_back(std::move(coords));
    }
    if (j.contains("params"))
      for (const json& row : j["params"]) {
        std::vector<Scalar> ps;
        for (const json& s : row) ps.push_back(Scalar::parse(s.get<std::string>(), pf));
        pl.params.push_back(std::move(ps));
      }
    v.rep = std::move(pl);
  } else {
    throw std::invalid_argument("variety JSON carries no representation");
  }

  if (j.contains("scroll")) {
    const json& js = j["scroll"];
    std::vector<int> type;
    for (const json& a : js.at("type")) type.push_back(a.get<int>());
    MultiPoly form = MultiPoly::parse(js.at("form").get<std::string>(),
                                      2 + static_cast<int>(type.size()), v.field);
    v.scroll = ScrollInfo{std::move(type), js.at("a").get<int>(), js.at("b").get<long long>(),
                          std::move(form)};
  }
  return v;
}

}  // namespace qs
