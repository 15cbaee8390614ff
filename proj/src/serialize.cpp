#include "sigmakl/serialize.hpp"

namespace sigmakl {

nlohmann::ordered_json poly_to_json(const LaurentPoly& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (int e = f.min_exp(); !f.is_zero() && e <= f.max_exp(); ++e) {
    const Integer c = f.coeff(e);
    if (c != 0) j[std::to_string(e)] = c.str();
  }
  return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  LaurentPoly f;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw std::invalid_argument("polynomial coefficients must be decimal strings");
    f += LaurentPoly::monomial(Integer(v.get<std::string>()), std::stoi(k));
  }
  return f;
}

std::string poly_to_csv(const LaurentPoly& f) {
  std::string out;
  for (int e = f.min_exp(); !f.is_zero() && e <= f.max_exp(); ++e) {
    const Integer c = f.coeff(e);
    if (c == 0) continue;
    if (!out.empty()) out += ';';
    out += std::to_string(e) + ":" + c.str();
  }
  return out;
}

nlohmann::ordered_json word_to_json(const Word& w) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (int s : w) j.push_back(s);
  return j;
}

nlohmann::ordered_json system_to_json(const CoxeterSystem& sys) {
  nlohmann::ordered_json j;
  j["type"] = sys.type_label();
  j["rank"] = sys.rank();
  j["delta"] = sys.delta();
  j["twisted"] = sys.twisted();
  j["order"] = sys.order();
  j["involutions"] = sys.twisted_involutions().size();
  return j;
}

}  // namespace sigmakl
