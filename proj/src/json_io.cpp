#include "xoph/json_io.hpp"

#include <stdexcept>

namespace xoph {

using nlohmann::json;

namespace {

Rat rat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw std::invalid_argument("rational must be a [numerator, denominator] string pair");
  }
  const std::string den = j[1].get<std::string>();
  if (!den.empty() && den.front() == '-') throw std::invalid_argument("negative denominator");
  return parse_rat(j[0].get<std::string>() + "/" + den);
}

Poly poly_from_json(const json& j, Var v) {
  if (!j.is_array()) throw std::invalid_argument("coefficient list must be an array");
  std::vector<Rat> cs;
  cs.reserve(j.size());
  for (const auto& c : j) cs.push_back(rat_from_json(c));
  return Poly(v, std::move(cs));
}

template <class Coeff>
json diffop_json(const DiffOp<Coeff>& q) {
  json coeffs = json::array();
  for (const auto& c : q.coeffs()) coeffs.push_back(to_json(c));
  return json{{"coeffs", coeffs}};
}

}  // namespace

json to_json(const Rat& r) { return json::array({r.get_num().get_str(), r.get_den().get_str()}); }

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const RatFun& r) { return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

json to_json(const PolyDiffOp& q) { return diffop_json(q); }
json to_json(const RatDiffOp& q) { return diffop_json(q); }

json to_json(const ShiftOp& q) {
  json terms = json::array();
  for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it) {
    terms.push_back(json{{"offset", it->first}, {"num", to_json(it->second.num())}, {"den", to_json(it->second.den())}});
  }
  return terms;
}

json to_json(const Recurrence& rec) {
  return json{{"partition", rec.partition.parts()}, {"f", json{{"coeffs", to_json(rec.f)}}}, {"terms", to_json(rec.op)}};
}

Recurrence recurrence_from_json(const json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("recurrence must be a JSON object");
    Recurrence rec;
    rec.partition = Partition(j.at("partition").get<std::vector<int>>());
    rec.f = poly_from_json(j.at("f").at("coeffs"), Var::x);
    const json& terms = j.at("terms");
    if (!terms.is_array()) throw std::invalid_argument("terms must be an array");
    for (const auto& t : terms) {
      const int offset = t.at("offset").get<int>();
      Poly den = poly_from_json(t.at("den"), Var::n);
      if (den.is_zero()) throw std::invalid_argument("zero denominator in term");
      if (rec.op.terms().count(offset)) throw std::invalid_argument("duplicate offset " + std::to_string(offset));
      rec.op += ShiftOp::term(offset, RatFun(poly_from_json(t.at("num"), Var::n), std::move(den)));
    }
    return rec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed recurrence JSON: ") + e.what());
  }
}

std::string serialize(const Recurrence& rec) { return to_json(rec).dump(2); }

Recurrence parse_recurrence(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed recurrence JSON: ") + e.what());
  }
  return recurrence_from_json(j);
}

}  // namespace xoph
