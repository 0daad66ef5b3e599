#include "ellvb/json_io.hpp"

#include <cmath>

#include "ellvb/errors.hpp"

namespace ellvb {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Complex complex_pair(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + " must be [re, im]");
  return {number(j[0], what), number(j[1], what)};
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
  return terms;
}

Json to_json(const LaurentMatrix& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(to_json(e));
  return {{"n", m.size()}, {"entries", std::move(entries)}};
}

Json to_json(const Torus& t) { return {{"tau", {t.tau().real(), t.tau().imag()}}}; }

Json to_json(const FactorOfAutomorphy& f) {
  return {{"torus", to_json(f.torus())}, {"A", to_json(f.generator())}};
}

Json to_json(const BundleDescriptor& d) {
  return {{"rank", d.rank}, {"degree", d.degree}, {"param", {d.param.real(), d.param.imag()}}};
}

LaurentPoly laurent_poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a Laurent polynomial is a list of terms");
  LaurentPoly::Terms terms;
  for (const auto& term : j) {
    const int k = integer(field(term, "k"), "k");
    if (terms.contains(k)) throw ParseError("duplicate exponent " + std::to_string(k));
    terms.emplace(k, Complex(number(field(term, "re"), "re"), number(field(term, "im"), "im")));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentMatrix laurent_matrix_from_json(const Json& j) {
  const int n = integer(field(j, "n"), "n");
  if (n < 1) throw ParseError("n must be positive");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != static_cast<size_t>(n) * n)
    throw ParseError("entries must hold n*n term lists");
  std::vector<LaurentPoly> polys;
  polys.reserve(entries.size());
  for (const auto& e : entries) polys.push_back(laurent_poly_from_json(e));
  return LaurentMatrix(n, std::move(polys));
}

Torus torus_from_json(const Json& j) { return Torus(complex_pair(field(j, "tau"), "tau")); }

FactorOfAutomorphy factor_from_json(const Json& j) {
  const Json& gen = j.contains("A") ? j.at("A") : field(j, "matrix");
  return FactorOfAutomorphy(torus_from_json(field(j, "torus")), laurent_matrix_from_json(gen));
}

BundleDescriptor descriptor_from_json(const Json& j) {
  BundleDescriptor d;
  d.rank = integer(field(j, "rank"), "rank");
  d.degree = integer(field(j, "degree"), "degree");
  d.param = complex_pair(field(j, "param"), "param");
  return d;
}

FactorOfAutomorphy bundle_from_json(const Json& j) {
  const bool has_matrix = j.is_object() && (j.contains("A") || j.contains("matrix"));
  const bool has_descriptor = j.is_object() && j.contains("descriptor");
  if (has_matrix == has_descriptor)
    throw ParseError("bundle description needs exactly one of \"A\"/\"matrix\" or \"descriptor\"");
  if (has_matrix) return factor_from_json(j);
  const BundleDescriptor d = descriptor_from_json(j.at("descriptor"));
  return normal_form(torus_from_json(field(j, "torus")), d.rank, d.degree, d.param);
}

}  // namespace ellvb
