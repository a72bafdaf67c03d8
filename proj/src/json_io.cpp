#include "azw/json_io.hpp"

#include <fstream>
#include <sstream>

#include "azw/errors.hpp"

namespace azw {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::ParseError, std::string(what) + " must be an integer");
  return j.get<int>();
}

Rational as_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(Errc::ParseError, "rational entries must be \"p/q\" strings or integers");
}

Complex as_complex(const Json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw Error(Errc::ParseError, std::string(what) + " must be a number or [re, im]");
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.lo, e.hi});
  Json j;
  j["n"] = g.vertex_count();
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  const int n = as_int(member(j, "n"), "n");
  const Json& edges = member(j, "edges");
  if (!edges.is_array()) throw Error(Errc::ParseError, "edges must be an array");
  std::vector<std::pair<int, int>> list;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw Error(Errc::ParseError, "each edge must be [u, v]");
    list.emplace_back(as_int(e[0], "vertex"), as_int(e[1], "vertex"));
  }
  return Graph::build(n, list);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "'" + path + "' is not valid JSON");
  return graph_from_json(j);
}

Json matrix_to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) entries.push_back(to_string(m(i, k)));
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j;
}

ExactMatrix matrix_from_json(const Json& j) {
  const int rows = as_int(member(j, "rows"), "rows");
  const int cols = as_int(member(j, "cols"), "cols");
  const Json& entries = member(j, "entries");
  if (rows < 0 || cols < 0 || !entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw Error(Errc::ParseError, "entries must hold rows * cols values");
  }
  ExactMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = as_rational(entries[idx++]);
  return m;
}

Json polynomial_to_json(const ExactPolynomial& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(to_string(c));
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

ExactPolynomial polynomial_from_json(const Json& j) {
  const Json& coeffs = member(j, "coeffs");
  if (!coeffs.is_array()) throw Error(Errc::ParseError, "coeffs must be an array");
  std::vector<Rational> c;
  for (const auto& x : coeffs) c.push_back(as_rational(x));
  return ExactPolynomial(std::move(c));
}

Json rational_function_to_json(const ExactRationalFunction& f) {
  Json j;
  j["num"] = polynomial_to_json(f.numerator());
  j["den"] = polynomial_to_json(f.denominator());
  return j;
}

ExactRationalFunction rational_function_from_json(const Json& j) {
  return ExactRationalFunction(polynomial_from_json(member(j, "num")), polynomial_from_json(member(j, "den")));
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json form_to_json(const CyclotomicForm& c) {
  Json j;
  j["l"] = c.l;
  j["m"] = c.m;
  j["n"] = c.n;
  return j;
}

CyclotomicForm form_from_json(const Json& j) {
  CyclotomicForm c;
  c.l = j.contains("l") ? as_int(j.at("l"), "l") : 0;
  if (j.contains("m")) c.m = int_list(j.at("m"), "m");
  c.n = int_list(member(j, "n"), "n");
  c.validate();
  return c;
}

AbsZetaRequest abszeta_request_from_json(const Json& j) {
  AbsZetaRequest r;
  r.form = form_from_json(member(j, "form"));
  r.w = as_complex(member(j, "w"), "w");
  r.s = as_complex(member(j, "s"), "s");
  if (j.contains("method")) {
    if (!j.at("method").is_string()) throw Error(Errc::ParseError, "method must be a string");
    r.method = parse_method(j.at("method").get<std::string>());
  }
  return r;
}

Json abszeta_request_to_json(const AbsZetaRequest& r) {
  Json j;
  j["form"] = form_to_json(r.form);
  j["w"] = complex_to_json(r.w);
  j["s"] = complex_to_json(r.s);
  j["method"] = std::string(method_name(r.method));
  return j;
}

Json abszeta_value_to_json(const AbsZetaValue& v) {
  Json j;
  j["value"] = complex_to_json(v.value);
  j["err"] = v.error;
  j["method"] = std::string(method_name(v.method));
  return j;
}

Json spectrum_to_json(const SpectrumReport& r) {
  static constexpr const char* kSource[] = {"direct", "konno_sato_mapped", "transition"};
  Json clusters = Json::array();
  for (const auto& c : r.clusters) {
    Json item;
    item["value"] = complex_to_json(c.value);
    item["multiplicity"] = c.multiplicity;
    clusters.push_back(std::move(item));
  }
  Json j;
  j["source"] = kSource[static_cast<int>(r.source)];
  j["tolerance"] = r.tolerance;
  j["total_multiplicity"] = r.total_multiplicity();
  j["clusters"] = std::move(clusters);
  return j;
}

std::string spectrum_to_csv(const SpectrumReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "re,im,multiplicity\n";
  for (const auto& c : r.clusters) out << c.value.real() << ',' << c.value.imag() << ',' << c.multiplicity << '\n';
  return out.str();
}

Json verification_report(const std::string& graph, const std::string& identity, bool ok, Json lhs, Json rhs,
                         Json residual) {
  Json j;
  j["graph"] = graph;
  j["identity"] = identity;
  j["status"] = ok ? "ok" : "verification_failed";
  j["lhs"] = std::move(lhs);
  j["rhs"] = std::move(rhs);
  j["residual"] = std::move(residual);
  return j;
}

}  // namespace azw
