#include "azw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "azw/absolute_zeta.hpp"
#include "azw/errors.hpp"
#include "azw/exact_linalg.hpp"
#include "azw/graph_zeta.hpp"
#include "azw/json_io.hpp"
#include "azw/walk_operators.hpp"

namespace azw::cli {

namespace {

enum class Status { Ok, VerificationFailed, DomainError };

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::VerificationFailed: return "verification_failed";
    case Status::DomainError: return "domain_error";
  }
  return "domain_error";
}

struct Outcome {
  Status status = Status::Ok;
  Json payload;
  std::string csv;  // used instead of JSON when --csv was given
};

struct Options {
  // graph
  std::string family;
  std::vector<int> params;
  std::string out_file;
  std::string graph_file;
  // zeta
  std::string route = "edge";
  // verify
  bool corpus = false;
  int r_max = 6;
  int n = 3;
  double s_scalar = 0.7;
  // abszeta
  int l = 0;
  std::vector<int> m;
  std::vector<int> n_list;
  double w_re = 3.0;
  double w_im = 0.0;
  std::vector<double> s_list;
  double s_im = 0.0;
  std::string method = "structure";
  std::string request_file;
  std::string spectrum_source = "direct";
  bool csv = false;
};

Status status_of(bool ok) { return ok ? Status::Ok : Status::VerificationFailed; }

Json error_json(const Error& e) {
  Json j;
  j["code"] = std::string(errc_name(e.code()));
  j["message"] = e.what();
  return j;
}

bool is_verification_error(Errc code) {
  return code == Errc::VerificationFailed || code == Errc::SpectralMismatch || code == Errc::CertificateFailed ||
         code == Errc::IdentityCheckFailed;
}

std::vector<NamedGraph> inputs(const Options& o) {
  if (o.corpus) return builtin_corpus();
  if (o.graph_file.empty()) throw Error(Errc::InvalidParameter, "a graph FILE or --corpus is required");
  return {{o.graph_file, read_graph_file(o.graph_file)}};
}

Json summary(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["degrees"] = g.degrees();
  j["min_degree"] = g.min_degree();
  j["max_degree"] = g.max_degree();
  j["regular"] = g.is_regular();
  j["betti_number"] = g.betti_number();
  return j;
}

// ---- graph ---------------------------------------------------------------

Outcome graph_gen(const Options& o) {
  const Graph g = generate(parse_family(o.family), o.params);
  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file);
    if (!file) throw Error(Errc::ParseError, "cannot write '" + o.out_file + "'");
    file << graph_to_json(g).dump() << '\n';
  }
  Json payload;
  payload["graph"] = graph_to_json(g);
  payload["summary"] = summary(g);
  return {Status::Ok, std::move(payload), {}};
}

Outcome graph_info(const Options& o) {
  const Graph g = read_graph_file(o.graph_file);
  return {Status::Ok, summary(g), {}};
}

// ---- zeta ----------------------------------------------------------------

Outcome zeta_grover(const Options& o) {
  const Graph g = read_graph_file(o.graph_file);
  Json payload;
  payload["function"] = "grover";
  payload["zeta"] = rational_function_to_json(grover_zeta(g));
  return {Status::Ok, std::move(payload), {}};
}

Outcome zeta_ihara(const Options& o) {
  const Graph g = read_graph_file(o.graph_file);
  IharaRoute route;
  if (o.route == "edge") route = IharaRoute::EdgeMatrix;
  else if (o.route == "bass") route = IharaRoute::Bass;
  else throw Error(Errc::InvalidParameter, "route must be edge or bass");
  Json payload;
  payload["function"] = "ihara";
  payload["zeta"] = rational_function_to_json(ihara_zeta(g, route));
  return {Status::Ok, std::move(payload), {}};
}

// ---- verify --------------------------------------------------------------

Json residual_of(const ExactRationalFunction& difference) {
  if (difference.numerator().is_zero()) return "0";
  return rational_function_to_json(difference);
}

Json check_konno_sato(const NamedGraph& ng) {
  const KonnoSatoReport r = verify_konno_sato(ng.graph);
  return verification_report(ng.name, "konno_sato", r.holds, polynomial_to_json(r.lhs),
                             rational_function_to_json(r.rhs), residual_of(r.difference));
}

Json check_ihara_bass(const NamedGraph& ng) {
  const IharaRoutesReport r = verify_ihara_routes(ng.graph);
  const bool support_ok = r.support_equals_edge_matrix == r.min_degree_at_least_two;
  Json j = verification_report(ng.name, "ihara_bass", r.routes_agree && support_ok,
                               rational_function_to_json(r.edge_route), rational_function_to_json(r.bass_route),
                               residual_of(r.edge_route - r.bass_route));
  j["min_degree_at_least_two"] = r.min_degree_at_least_two;
  j["support_equals_edge_matrix"] = r.support_equals_edge_matrix;
  j["support_route_equals_ihara"] = r.support_route == r.bass_route;
  return j;
}

Json check_ihara_series(const NamedGraph& ng, int r_max) {
  const IharaSeriesReport r = verify_ihara_series(ng.graph, r_max);
  Json counts = Json::array();
  Json coeffs = Json::array();
  for (auto c : r.cycle_counts) counts.push_back(c);
  for (const auto& c : r.log_coefficients) coeffs.push_back(to_string(c));
  Json j = verification_report(ng.name, "ihara_series", r.holds, std::move(counts), std::move(coeffs),
                               to_string(r.max_discrepancy));
  j["rotation_classes"] = r.rotation_classes;
  return j;
}

Json check_automorphic(const NamedGraph& ng) {
  const AutomorphyCertificate cert = automorphic_weight(ng.graph);
  const ExactPolynomial p = reversed_charpoly(grover_matrix(ng.graph));
  const ExactPolynomial mirrored = p.reversed(2 * ng.graph.edge_count()) * Rational(cert.sign);
  Json j = verification_report(ng.name, "automorphic", cert.exact_identity, polynomial_to_json(p),
                               polynomial_to_json(mirrored), cert.max_residual);
  j["C"] = cert.sign;
  j["D"] = cert.weight;
  try {
    const CyclotomicForm form = factor_cyclotomic(grover_zeta(ng.graph));
    const AutomorphicData data = automorphic_data(form);
    Json f = form_to_json(form);
    f["C"] = data.sign;
    f["D"] = data.weight;
    j["cyclotomic_form"] = std::move(f);
  } catch (const Error& e) {
    if (e.code() != Errc::NotCyclotomic) throw;
    j["cyclotomic_form"] = nullptr;
  }
  return j;
}

template <typename Check>
Outcome run_checks(const Options& o, Check check) {
  Json reports = Json::array();
  bool all_ok = true;
  for (const NamedGraph& ng : inputs(o)) {
    Json r;
    try {
      r = check(ng);
    } catch (const Error& e) {
      if (!is_verification_error(e.code()) || !o.corpus) throw;
      r = verification_report(ng.name, "", false, nullptr, nullptr, nullptr);
      r["error"] = error_json(e);
    }
    all_ok = all_ok && r["status"] == "ok";
    reports.push_back(std::move(r));
  }
  if (!o.corpus) {
    Json single = std::move(reports[0]);
    return {status_of(all_ok), std::move(single), {}};
  }
  Json payload;
  payload["total"] = reports.size();
  payload["passed"] = std::count_if(reports.begin(), reports.end(), [](const Json& r) { return r["status"] == "ok"; });
  payload["reports"] = std::move(reports);
  return {status_of(all_ok), std::move(payload), {}};
}

Outcome verify_functional_eq(const Options& o) {
  const FunctionalEquationReport r = verify_functional_equation(o.n, o.s_scalar, PrecisionPolicy::from_env());
  Json j = verification_report("C" + std::to_string(o.n), "functional_equation", r.holds, complex_to_json(r.lhs),
                               complex_to_json(r.rhs), r.residual);
  j["n"] = r.n;
  j["s"] = r.s;
  j["sine"] = complex_to_json(r.sine);
  return {status_of(r.holds), std::move(j), {}};
}

// ---- abszeta -------------------------------------------------------------

CyclotomicForm form_from(const Options& o) {
  CyclotomicForm c{o.l, o.m, o.n_list};
  c.validate();
  c.require_even_l();
  return c;
}

std::string csv_number(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

Outcome abszeta_z(const Options& o) {
  const PrecisionPolicy policy = PrecisionPolicy::from_env();
  std::vector<AbsZetaRequest> requests;
  if (!o.request_file.empty()) {
    std::ifstream in(o.request_file);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + o.request_file + "'");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(Errc::ParseError, "'" + o.request_file + "' is not valid JSON");
    requests.push_back(abszeta_request_from_json(j));
  } else {
    const CyclotomicForm form = form_from(o);
    const std::vector<double> ss = o.s_list.empty() ? std::vector<double>{1.0} : o.s_list;
    for (double s : ss) {
      AbsZetaRequest r;
      r.form = form;
      r.w = {o.w_re, o.w_im};
      r.s = {s, o.s_im};
      if (o.method != "all") r.method = parse_method(o.method);
      requests.push_back(r);
    }
  }
  const bool all = o.request_file.empty() && o.method == "all";
  const std::vector<AbsZetaMethod> methods =
      all ? std::vector<AbsZetaMethod>{AbsZetaMethod::Structure, AbsZetaMethod::Series, AbsZetaMethod::Mellin}
          : std::vector<AbsZetaMethod>{};

  Json rows = Json::array();
  std::ostringstream csv;
  csv << (all ? "s,method,re,im,err\n" : "s,re,im,err\n");
  Status status = Status::Ok;
  for (const AbsZetaRequest& r : requests) {
    Json row = abszeta_request_to_json(r);
    if (!all) {
      const AbsZetaValue v = absolute_hurwitz_Z(r.form, r.w, r.s, r.method, policy);
      row["result"] = abszeta_value_to_json(v);
      csv << csv_number(r.s.real()) << ',' << csv_number(v.value.real()) << ',' << csv_number(v.value.imag()) << ','
          << csv_number(v.error) << '\n';
    } else {
      row.erase("method");
      std::vector<AbsZetaValue> values;
      Json results = Json::array();
      for (AbsZetaMethod m : methods) {
        const AbsZetaValue v = absolute_hurwitz_Z(r.form, r.w, r.s, m, policy);
        results.push_back(abszeta_value_to_json(v));
        values.push_back(v);
        csv << csv_number(r.s.real()) << ',' << method_name(m) << ',' << csv_number(v.value.real()) << ','
            << csv_number(v.value.imag()) << ',' << csv_number(v.error) << '\n';
      }
      Json deltas;
      double worst = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t k = i + 1; k < values.size(); ++k) {
          const double scale = std::max(std::abs(values[i].value), std::abs(values[k].value));
          const double d = std::abs(values[i].value - values[k].value) / std::max(scale, 1e-300);
          deltas[std::string(method_name(values[i].method)) + "-" + std::string(method_name(values[k].method))] = d;
          worst = std::max(worst, d);
        }
      }
      row["results"] = std::move(results);
      row["relative_deltas"] = std::move(deltas);
      row["max_delta"] = worst;
      if (worst > 1e-6) status = Status::VerificationFailed;
    }
    rows.push_back(std::move(row));
  }
  Json payload = rows.size() == 1 ? std::move(rows[0]) : std::move(rows);
  return {status, std::move(payload), csv.str()};
}

Outcome abszeta_zeta(const Options& o) {
  const PrecisionPolicy policy = PrecisionPolicy::from_env();
  const CyclotomicForm form = form_from(o);
  const std::vector<double> ss = o.s_list.empty() ? std::vector<double>{0.5} : o.s_list;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "s,re,im,err\n";
  for (double s : ss) {
    const Complex sc{s, o.s_im};
    const AbsZetaValue v = absolute_zeta(form, sc, policy);
    Json row;
    row["form"] = form_to_json(form);
    row["s"] = complex_to_json(sc);
    row["value"] = complex_to_json(v.value);
    row["err"] = v.error;
    rows.push_back(std::move(row));
    csv << csv_number(s) << ',' << csv_number(v.value.real()) << ',' << csv_number(v.value.imag()) << ','
        << csv_number(v.error) << '\n';
  }
  Json payload = rows.size() == 1 ? std::move(rows[0]) : std::move(rows);
  return {Status::Ok, std::move(payload), csv.str()};
}

Outcome abszeta_spectrum(const Options& o) {
  const Graph g = read_graph_file(o.graph_file);
  SpectrumReport r;
  if (o.spectrum_source == "direct") r = spectrum(g);
  else if (o.spectrum_source == "konno-sato") r = spectrum_via_konno_sato(g);
  else if (o.spectrum_source == "transition") r = transition_spectrum(g);
  else throw Error(Errc::InvalidParameter, "source must be direct, konno-sato or transition");
  return {Status::Ok, spectrum_to_json(r), spectrum_to_csv(r)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grover and Ihara zeta functions, exact identities and absolute zeta functions", "azw"};
  app.require_subcommand(1);
  Options o;
  std::function<Outcome(const Options&)> handler;
  std::string command;

  auto bind = [&](CLI::App* sub, std::string name, Outcome (*fn)(const Options&)) {
    sub->callback([&, name, fn] {
      command = name;
      handler = fn;
    });
  };

  auto* graph = app.add_subcommand("graph", "Build or inspect graphs");
  graph->require_subcommand(1);
  auto* gen = graph->add_subcommand("gen", "Generate a graph family member");
  gen->add_option("family", o.family, "cycle | path | complete | complete_bipartite | star | petersen")->required();
  gen->add_option("params", o.params, "Family parameters");
  gen->add_option("--out", o.out_file, "Also write the Graph JSON to FILE");
  bind(gen, "graph gen", graph_gen);
  auto* info = graph->add_subcommand("info", "Summarize a Graph JSON file");
  info->add_option("file", o.graph_file)->required();
  bind(info, "graph info", graph_info);

  auto* zeta = app.add_subcommand("zeta", "Exact graph zeta functions");
  zeta->require_subcommand(1);
  auto* grover = zeta->add_subcommand("grover", "1 / det(I - uU)");
  grover->add_option("file", o.graph_file)->required();
  bind(grover, "zeta grover", zeta_grover);
  auto* ihara = zeta->add_subcommand("ihara", "Ihara zeta");
  ihara->add_option("file", o.graph_file)->required();
  ihara->add_option("--route", o.route, "edge | bass")->check(CLI::IsMember({"edge", "bass"}));
  bind(ihara, "zeta ihara", zeta_ihara);

  auto* verify = app.add_subcommand("verify", "Check identities");
  verify->require_subcommand(1);
  auto add_graph_check = [&](const char* name, const char* help) {
    auto* sub = verify->add_subcommand(name, help);
    auto* file = sub->add_option("file", o.graph_file);
    auto* corpus = sub->add_flag("--corpus", o.corpus, "Run over the built-in graph list");
    file->excludes(corpus);
    return sub;
  };
  bind(add_graph_check("konno-sato", "det(I - uU) against the transition-matrix side"), "verify konno-sato",
       [](const Options& opt) { return run_checks(opt, check_konno_sato); });
  bind(add_graph_check("ihara-bass", "Edge-matrix route against the vertex determinant"), "verify ihara-bass",
       [](const Options& opt) { return run_checks(opt, check_ihara_bass); });
  auto* series = add_graph_check("ihara-series", "Reduced-cycle counts against log Z");
  series->add_option("--r-max", o.r_max, "Largest cycle length")->check(CLI::Range(1, 8));
  bind(series, "verify ihara-series", [](const Options& opt) {
    return run_checks(opt, [&](const NamedGraph& ng) { return check_ihara_series(ng, opt.r_max); });
  });
  bind(add_graph_check("automorphic", "Automorphy sign and weight"), "verify automorphic",
       [](const Options& opt) { return run_checks(opt, check_automorphic); });
  auto* fe = verify->add_subcommand("functional-eq", "Functional equation of the cycle absolute zeta");
  fe->add_option("--n", o.n, "Cycle length")->required();
  fe->add_option("--s", o.s_scalar, "Real point s")->required();
  bind(fe, "verify functional-eq", verify_functional_eq);

  auto* abs = app.add_subcommand("abszeta", "Absolute zeta functions of cyclotomic forms");
  abs->require_subcommand(1);
  auto add_form = [&](CLI::App* sub) {
    sub->add_option("--l", o.l, "Half-weight exponent (even)");
    sub->add_option("--m", o.m, "Numerator exponents")->delimiter(',');
    sub->add_option("--n", o.n_list, "Denominator exponents")->delimiter(',');
    sub->add_option("--s", o.s_list, "Real part of s (comma list for a sweep)")->delimiter(',');
    sub->add_option("--s-im", o.s_im, "Imaginary part of s");
    sub->add_flag("--csv", o.csv, "Tabular output");
  };
  auto* z = abs->add_subcommand("Z", "Absolute Hurwitz zeta Z_f(w, s)");
  add_form(z);
  z->add_option("--w", o.w_re, "Real part of w");
  z->add_option("--w-im", o.w_im, "Imaginary part of w");
  z->add_option("--method", o.method, "structure | series | mellin | all")
      ->check(CLI::IsMember({"structure", "series", "mellin", "all"}));
  z->add_option("--request", o.request_file, "Evaluation request JSON");
  bind(z, "abszeta Z", abszeta_z);
  auto* zf = abs->add_subcommand("zeta", "Absolute zeta zeta_f(s)");
  add_form(zf);
  bind(zf, "abszeta zeta", abszeta_zeta);
  auto* spec = abs->add_subcommand("spectrum", "Grover spectrum as a multiset");
  spec->add_option("file", o.graph_file)->required();
  spec->add_option("--source", o.spectrum_source, "direct | konno-sato | transition");
  spec->add_flag("--csv", o.csv, "Tabular output");
  bind(spec, "abszeta spectrum", abszeta_spectrum);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = handler(o);
  } catch (const Error& e) {
    outcome.status = is_verification_error(e.code()) ? Status::VerificationFailed : Status::DomainError;
    outcome.payload = Json::object();
    outcome.payload["error"] = error_json(e);
    outcome.csv.clear();
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.csv && !outcome.csv.empty()) {
    out << outcome.csv;
  } else {
    Json doc;
    doc["command"] = command;
    doc["status"] = status_name(outcome.status);
    doc["payload"] = std::move(outcome.payload);
    out << doc.dump(2) << '\n';
  }
  err << "wall_time_ms: " << static_cast<long long>(ms + 0.5) << '\n';

  switch (outcome.status) {
    case Status::Ok: return kOk;
    case Status::VerificationFailed: return kVerificationFailed;
    case Status::DomainError: return kDomainError;
  }
  return kDomainError;
}

}  // namespace azw::cli
