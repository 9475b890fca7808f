#include "cubicrank/io.hpp"

#include <fstream>

namespace cubicrank {

static long parse_field_d(const std::string& field) {
  // "Qsqrt:<d>" -> d
  if (field.rfind("Qsqrt:", 0) != 0)
    throw SchemaError("unknown field name: " + field);
  try {
    return std::stol(field.substr(6));
  } catch (const std::exception&) {
    throw SchemaError("bad quadratic discriminant in field: " + field);
  }
}

std::string field_name_of(const CubicForm& f) {
  for (auto& [e, c] : f.poly.t)
    if (c.tag() == FieldElement::Tag::Quadratic)
      return "Qsqrt:" + std::to_string(c.quad_d());
  return "Q";
}

Json field_element_to_json(const FieldElement& x) {
  Json j;
  switch (x.tag()) {
    case FieldElement::Tag::Rational:
      j["num"] = x.rat_part().get_num().get_str();
      j["den"] = x.rat_part().get_den().get_str();
      break;
    case FieldElement::Tag::Quadratic:
      j["num"] = x.rat_part().get_num().get_str();
      j["den"] = x.rat_part().get_den().get_str();
      j["num2"] = x.quad_part().get_num().get_str();
      j["den2"] = x.quad_part().get_den().get_str();
      break;
    default:
      j["re"] = x.to_complex().real();
      j["im"] = x.to_complex().imag();
  }
  return j;
}

static Rat rat_from_json(const Json& j, const char* num_key,
                         const char* den_key) {
  if (!j.contains(num_key) || !j.at(num_key).is_string())
    throw SchemaError(std::string("missing or non-string \"") + num_key + "\"");
  std::string num = j.at(num_key).get<std::string>();
  std::string den = "1";
  if (j.contains(den_key)) {
    if (!j.at(den_key).is_string())
      throw SchemaError(std::string("non-string \"") + den_key + "\"");
    den = j.at(den_key).get<std::string>();
  }
  try {
    Rat r = rat_from_strings(num, den);
    if (r.get_den() == 0) throw SchemaError("zero denominator");
    return r;
  } catch (const std::invalid_argument&) {
    throw SchemaError("non-integer numerator/denominator string");
  }
}

FieldElement field_element_from_json(const Json& j, const std::string& field) {
  if (j.contains("re") || j.contains("im")) {
    if (field != "R" && field != "C")
      throw SchemaError("floating coefficient in exact-field file");
    double re = j.value("re", 0.0), im = j.value("im", 0.0);
    if (field == "R" && im != 0.0)
      throw SchemaError("imaginary part in field R");
    return FieldElement(Cx(re, im));
  }
  Rat a = rat_from_json(j, "num", "den");
  if (j.contains("num2") || j.contains("den2")) {
    if (field == "Q") throw SchemaError("quadratic part in field Q");
    Rat b = rat_from_json(j, "num2", "den2");
    return FieldElement::quad(a, b, parse_field_d(field));
  }
  if (field.rfind("Qsqrt:", 0) == 0)
    return FieldElement::quad(a, Rat(0), parse_field_d(field));
  return FieldElement(a);
}

Json form_to_json(const CubicForm& f) {
  Json j;
  j["n"] = f.n;
  j["degree"] = 3;
  j["field"] = field_name_of(f);
  j["coeffs"] = Json::array();
  for (auto& [e, c] : f.poly.t) {
    Json entry = field_element_to_json(c);
    Json row;
    row["exp"] = e;
    for (auto& [k, v] : entry.items()) row[k] = v;
    j["coeffs"].push_back(row);
  }
  return j;
}

static void check_envelope(const Json& j) {
  if (!j.is_object()) throw SchemaError("top level must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw SchemaError("missing integer \"n\"");
  if (!j.contains("degree") || j.at("degree") != 3)
    throw SchemaError("\"degree\" must be 3");
  if (!j.contains("field") || !j.at("field").is_string())
    throw SchemaError("missing string \"field\"");
}

CubicForm form_from_json(const Json& j) {
  check_envelope(j);
  int n = j.at("n").get<int>();
  if (n < 1 || n > 12) throw SchemaError("n out of range [1, 12]");
  std::string field = j.at("field").get<std::string>();
  if (field != "Q" && field.rfind("Qsqrt:", 0) != 0)
    throw SchemaError("tensor files must be over Q or Qsqrt:<d>");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array())
    throw SchemaError("missing \"coeffs\" array");
  FPoly p(n);
  for (auto& row : j.at("coeffs")) {
    if (!row.contains("exp") || !row.at("exp").is_array() ||
        (int)row.at("exp").size() != n)
      throw SchemaError("coefficient entry needs an \"exp\" array of length n");
    Exp e;
    int total = 0;
    for (auto& v : row.at("exp")) {
      if (!v.is_number_integer() || v.get<int>() < 0)
        throw SchemaError("exponents must be non-negative integers");
      e.push_back(v.get<int>());
      total += v.get<int>();
    }
    if (total != 3) throw SchemaError("exponent vector must have total 3");
    p.add_term(e, field_element_from_json(row, field));
  }
  return CubicForm{p};
}

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["n"] = d.n;
  j["degree"] = 3;
  j["kind"] = d.kind == DecompKind::SymmetricPowers ? "symmetric-powers"
                                                    : "rank-one-triples";
  j["field"] = d.field;
  j["terms"] = Json::array();
  for (auto& t : d.terms) {
    Json term;
    term["coef"] = field_element_to_json(t.coef);
    term["vectors"] = Json::array();
    for (auto& v : t.vectors) {
      Json vec = Json::array();
      for (auto& x : v) vec.push_back(field_element_to_json(x));
      term["vectors"].push_back(vec);
    }
    j["terms"].push_back(term);
  }
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  check_envelope(j);
  Decomposition d;
  d.n = j.at("n").get<int>();
  if (d.n < 1 || d.n > 12) throw SchemaError("n out of range [1, 12]");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw SchemaError("missing string \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "symmetric-powers") d.kind = DecompKind::SymmetricPowers;
  else if (kind == "rank-one-triples") d.kind = DecompKind::RankOneTriples;
  else throw SchemaError("unknown decomposition kind: " + kind);
  d.field = j.at("field").get<std::string>();
  if (d.field != "Q" && d.field != "R" && d.field != "C" &&
      d.field.rfind("Qsqrt:", 0) != 0)
    throw SchemaError("unknown field name: " + d.field);
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw SchemaError("missing \"terms\" array");
  for (auto& row : j.at("terms")) {
    DecompTerm t;
    if (!row.contains("coef")) throw SchemaError("term needs a \"coef\"");
    t.coef = field_element_from_json(row.at("coef"), d.field);
    if (!row.contains("vectors") || !row.at("vectors").is_array())
      throw SchemaError("term needs a \"vectors\" array");
    for (auto& vec : row.at("vectors")) {
      std::vector<FieldElement> v;
      for (auto& x : vec) v.push_back(field_element_from_json(x, d.field));
      t.vectors.push_back(v);
    }
    d.terms.push_back(t);
  }
  try {
    d.validate();
  } catch (const std::invalid_argument& ex) {
    throw SchemaError(ex.what());
  }
  return d;
}

Json qpoly_to_json(const QPoly& p) {
  Json j;
  j["nv"] = p.nv;
  j["terms"] = Json::array();
  for (auto& [e, c] : p.t) {
    Json row;
    row["exp"] = e;
    row["num"] = Rat(c).get_num().get_str();
    if (Rat(c).get_den() != 1) row["den"] = Rat(c).get_den().get_str();
    j["terms"].push_back(row);
  }
  return j;
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nv") || !j.at("nv").is_number_integer())
    throw SchemaError("polynomial needs an integer \"nv\"");
  int nv = j.at("nv").get<int>();
  if (nv < 1 || nv > 64) throw SchemaError("polynomial nv out of range");
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw SchemaError("polynomial needs a \"terms\" array");
  QPoly p(nv);
  for (auto& row : j.at("terms")) {
    if (!row.contains("exp") || !row.at("exp").is_array() ||
        (int)row.at("exp").size() != nv)
      throw SchemaError("polynomial term needs an \"exp\" array of length nv");
    Exp e;
    for (auto& v : row.at("exp")) {
      if (!v.is_number_integer() || v.get<int>() < 0)
        throw SchemaError("exponents must be non-negative integers");
      e.push_back(v.get<int>());
    }
    p.add_term(e, rat_from_json(row, "num", "den"));
  }
  return p;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw SchemaError("JSON parse error in " + path + ": " + ex.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

CubicForm load_form(const std::string& path) {
  return form_from_json(load_json_file(path));
}

Decomposition load_decomposition(const std::string& path) {
  return decomposition_from_json(load_json_file(path));
}

}  // namespace cubicrank
