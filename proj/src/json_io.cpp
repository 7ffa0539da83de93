#include "wetzel/json_io.hpp"

namespace wetzel {

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

void require_exact_keys(const Json& j,
                        std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  for (const char* k : keys) (void)require_key(j, k);
  if (j.size() != keys.size()) {
    for (const auto& item : j.items()) {
      bool known = false;
      for (const char* k : keys)
        if (item.key() == k) { known = true; break; }
      if (!known)
        throw ParseError("unexpected key '" + item.key() + "'");
    }
  }
}

std::string require_string(const Json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::uint64_t require_uint(const Json& j, const char* what) {
  if (!j.is_number_unsigned())
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

bool require_bool(const Json& j, const char* what) {
  if (!j.is_boolean())
    throw ParseError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be an array");
  return j;
}

Json rat_to_json(const Rat& r) {
  return Json{{"num", r.num_str()}, {"den", r.den_str()}};
}

Rat rat_from_json(const Json& j) {
  require_exact_keys(j, {"num", "den"});
  return Rat::parse_canonical(require_string(j.at("num"), "num"),
                              require_string(j.at("den"), "den"));
}

Json qc_to_json(const QC& z) {
  return Json{{"re", rat_to_json(z.re)}, {"im", rat_to_json(z.im)}};
}

QC qc_from_json(const Json& j) {
  require_exact_keys(j, {"re", "im"});
  return QC(rat_from_json(j.at("re")), rat_from_json(j.at("im")));
}

Json qc_list_to_json(std::span<const QC> zs) {
  Json arr = Json::array();
  for (const QC& z : zs) arr.push_back(qc_to_json(z));
  return arr;
}

std::vector<QC> qc_list_from_json(const Json& j) {
  std::vector<QC> out;
  for (const Json& item : require_array(j, "point list"))
    out.push_back(qc_from_json(item));
  return out;
}

Json hfset_to_json(const HFSet& s) {
  Json arr = Json::array();
  for (const HFSet& m : s.elts()) arr.push_back(hfset_to_json(m));
  return arr;
}

HFSet hfset_from_json(const Json& j) {
  std::vector<HFSet> elems;
  for (const Json& item : require_array(j, "set"))
    elems.push_back(hfset_from_json(item));
  return HFSet::of(std::move(elems));
}

Json ordcnf_to_json(const OrdCNF& a) {
  Json arr = Json::array();
  for (const OrdCNF::Term& t : a.terms())
    arr.push_back(Json{{"exp", ordcnf_to_json(t.exp)},
                       {"coef", t.coef.get_str()}});
  return arr;
}

OrdCNF ordcnf_from_json(const Json& j) {
  std::vector<OrdCNF::Term> terms;
  for (const Json& item : require_array(j, "ordinal")) {
    require_exact_keys(item, {"exp", "coef"});
    std::string coef = require_string(item.at("coef"), "coef");
    for (char c : coef)
      if (c < '0' || c > '9') throw ParseError("malformed coefficient '" + coef + "'");
    if (coef.empty() || (coef[0] == '0' && coef.size() > 1))
      throw ParseError("malformed coefficient '" + coef + "'");
    terms.push_back({ordcnf_from_json(item.at("exp")), Int(coef)});
  }
  try {
    return OrdCNF::make(std::move(terms));
  } catch (const DomainError& e) {
    throw ParseError(std::string("non-normal CNF: ") + e.what());
  }
}

Json poly_to_json(const Poly& p) { return qc_list_to_json(p.coeffs()); }

Poly poly_from_json(const Json& j) {
  std::vector<QC> coeffs = qc_list_from_json(j);
  if (!coeffs.empty() && coeffs.back().is_zero())
    throw ParseError("polynomial with zero trailing coefficient");
  return Poly::from_coeffs(std::move(coeffs));
}

Json series_to_json(const NewtonSeries& s) {
  return Json{{"points", qc_list_to_json(s.points.points())},
              {"coeffs", qc_list_to_json(s.coeffs)}};
}

NewtonSeries series_from_json(const Json& j) {
  require_exact_keys(j, {"points", "coeffs"});
  try {
    return NewtonSeries(PointSeq(qc_list_from_json(j.at("points"))),
                        qc_list_from_json(j.at("coeffs")));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid series: ") + e.what());
  }
}

}  // namespace wetzel
