#pragma once

#include "sigmakl/coxeter.hpp"
#include "sigmakl/laurent.hpp"

#include <json.hpp>

#include <string>

namespace sigmakl {

/// {"-3":"1","1":"2"} for v^-3 + 2v; exponents are powers of v.
nlohmann::ordered_json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const nlohmann::json& j);

/// "-3:1;1:2"
std::string poly_to_csv(const LaurentPoly& f);

nlohmann::ordered_json word_to_json(const Word& w);
nlohmann::ordered_json system_to_json(const CoxeterSystem& sys);

}  // namespace sigmakl
