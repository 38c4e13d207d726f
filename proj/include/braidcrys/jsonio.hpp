// JSON views of elements and reports.  Integer values that fit in a JSON-safe
// range are emitted as numbers; anything larger becomes a decimal string, so
// round-trips are lossless at any magnitude.

#ifndef BRAIDCRYS_JSONIO_HPP_
#define BRAIDCRYS_JSONIO_HPP_

#include <string>

#include <json.hpp>

#include "braidcrys/bieberbach.hpp"
#include "braidcrys/crystal.hpp"
#include "braidcrys/families.hpp"
#include "braidcrys/torsion.hpp"
#include "braidcrys/words.hpp"

namespace braidcrys {

using json = nlohmann::json;

inline json bigint_to_json(const Bigint& x) {
  // 2^53 bound keeps every emitted number exact in doubles as well
  if (x.fits_slonglong()) {
    long long v = x.as_slonglong();
    if (v <= 9007199254740991LL && v >= -9007199254740991LL) return json(v);
  }
  return json(x.str());
}

inline Bigint bigint_from_json(const json& j) {
  if (j.is_number_integer()) return Bigint(j.get<long long>());
  if (j.is_string()) return Bigint::from_string(j.get<std::string>());
  throw DomainError("expected an integer or a decimal string");
}

inline json element_to_json(const Element& e) {
  const CrystalGroup& g = *e.group;
  json vec = json::object();
  for (int k = 0; k < g.rank(); ++k)
    if (!e.v[k].is_zero()) vec[g.label(k).str()] = bigint_to_json(e.v[k]);
  json perm = json::array();
  for (int x : e.w.data) perm.push_back(x);
  return json{{"family", family_name(g.family())},
              {"n", g.n()},
              {"vector", vec},
              {"perm", perm},
              {"canonical", format_element(e)}};
}

inline Element element_from_json(const json& j) {
  FamilyTag tag = family_from_string(j.at("family").get<std::string>());
  int n = j.at("n").get<int>();
  CrystalGroupPtr g = make_family(tag, n);
  std::vector<Bigint> v(g->rank());
  for (const auto& [key, val] : j.at("vector").items()) {
    size_t comma = key.find(',');
    if (comma == std::string::npos) throw DomainError("bad vector label: " + key);
    Label l{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
    v[g->label_index(l)] = bigint_from_json(val);
  }
  PointElem w;
  for (const auto& x : j.at("perm")) w.data.push_back(x.get<int>());
  if (static_cast<int>(w.data.size()) != n)
    throw DomainError("perm entry has wrong length");
  if (g->point_kind() == PointKind::Perms) {
    Perm check(w.data);  // validates bijectivity
  } else {
    for (int s : w.data)
      if (s != 1 && s != -1) throw DomainError("sign tuple entries must be +-1");
  }
  return make_element(g, std::move(v), std::move(w));
}

inline json order_to_json(const std::optional<long long>& ord) {
  if (ord) return json(*ord);
  return json("infinite");
}

inline json certificate_to_json(const TorsionCertificate& cert) {
  json sums = json::array();
  const CrystalGroup& g = *cert.element.group;
  for (const auto& s : cert.sums)
    sums.push_back(json{{"orbit_rep", g.label(s.rep_index).str()},
                        {"sum", bigint_to_json(s.sum)},
                        {"self_inverse", s.self_inverse}});
  return json{{"finite", cert.order.has_value()},
              {"order", order_to_json(cert.order)},
              {"orbit_sums", sums}};
}

inline json matrix_to_json(const IntMat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(bigint_to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline json manifold_report_to_json(const ManifoldReport& rep) {
  json blocks = json::array();
  for (const IntMat& b : rep.blocks) blocks.push_back(matrix_to_json(b));
  json dets = json::array();
  for (const Bigint& d : rep.block_determinants) dets.push_back(bigint_to_json(d));
  json charp = json::array();
  for (const Bigint& c : rep.charpoly) charp.push_back(bigint_to_json(c));
  json mult = json::object();
  for (auto [d, m] : rep.cyclotomic_mult) mult[std::to_string(d)] = m;
  return json{{"n", rep.n},
              {"dimension", rep.dimension},
              {"betti1", rep.betti1},
              {"betti1_formula", "dimension - rank(holonomy_action - identity)"},
              {"rank_holonomy_minus_identity", rep.rank_holonomy_minus_identity},
              {"orientable", rep.orientable},
              {"anosov", rep.anosov},
              {"kahler", rep.kahler},
              {"torsion_free", rep.torsion_free},
              {"holonomy_order", rep.holonomy_order},
              {"center_rank", rep.center_rank},
              {"charpoly", charp},
              {"blocks", blocks},
              {"block_determinants", dets},
              {"cyclotomic_multiplicities", mult}};
}

}  // namespace braidcrys

#endif
