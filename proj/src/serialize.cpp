#include "nsg/serialize.hpp"

namespace nsg {

Json to_json(const NumericalSemigroup& s) {
  Json j;
  j["min_gens"] = s.min_gens();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["gaps"] = s.gaps();
  return j;
}

NumericalSemigroup semigroup_from_json(const Json& j) {
  try {
    const auto gens = j.at("min_gens").get<std::vector<Int>>();
    auto s = NumericalSemigroup::from_generators(gens);
    if (s.min_gens() != gens || s.frobenius() != j.at("frobenius").get<Int>() ||
        s.genus() != j.at("genus").get<Int>() || s.gaps() != j.at("gaps").get<std::vector<Int>>()) {
      fail(ErrorCode::ParseError, "semigroup object is inconsistent with its generators");
    }
    return s;
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed semigroup object: ") + e.what());
  }
}

Json to_json(const modular::Fraction& f) { return modular::to_string(f); }

Json to_json(const pres::Relation& r) { return Json::array({r.lhs, r.rhs}); }

std::string_view to_string(ErrorClass c) noexcept {
  switch (c) {
    case ErrorClass::Input: return "input";
    case ErrorClass::Domain: return "domain";
    case ErrorClass::Budget: return "budget";
    case ErrorClass::Internal: return "internal";
  }
  return "internal";
}

Json to_json(const Error& e) {
  Json j;
  j["code"] = std::string(to_string(e.code()));
  j["class"] = std::string(to_string(classify(e.code())));
  j["message"] = e.what();
  j["witness"] = e.witness();
  return j;
}

}  // namespace nsg
