#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "azw/absolute_zeta.hpp"
#include "azw/exact_matrix.hpp"
#include "azw/graph.hpp"
#include "azw/graph_zeta.hpp"
#include "azw/polynomial.hpp"

namespace azw {

/// Insertion-ordered JSON so dumps are byte-stable.
using Json = nlohmann::ordered_json;

/// {"n": 4, "edges": [[0,1], ...]}
Json graph_to_json(const Graph& g);
/// Throws Error(ParseError) on malformed documents and the usual graph
/// errors when the graph itself is invalid.
Graph graph_from_json(const Json& j);
Graph read_graph_file(const std::string& path);

/// {"rows": r, "cols": c, "entries": ["p/q", ...]} row-major.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

/// {"coeffs": ["p/q", ...]} ascending powers.
Json polynomial_to_json(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const Json& j);

/// {"num": {"coeffs": ...}, "den": {"coeffs": ...}}
Json rational_function_to_json(const ExactRationalFunction& f);
ExactRationalFunction rational_function_from_json(const Json& j);

/// [re, im]
Json complex_to_json(Complex z);

Json form_to_json(const CyclotomicForm& c);
CyclotomicForm form_from_json(const Json& j);

struct AbsZetaRequest {
  CyclotomicForm form;
  Complex w;
  Complex s;
  AbsZetaMethod method = AbsZetaMethod::Structure;
};

/// {"form": {"l", "m", "n"}, "w", "s", "method"}; w and s are numbers or [re, im].
AbsZetaRequest abszeta_request_from_json(const Json& j);
Json abszeta_request_to_json(const AbsZetaRequest& r);
/// {"value": [re, im], "err": e, "method": name}
Json abszeta_value_to_json(const AbsZetaValue& v);

Json spectrum_to_json(const SpectrumReport& r);
/// Header "re,im,multiplicity", one cluster per line.
std::string spectrum_to_csv(const SpectrumReport& r);

/// {"graph", "identity", "status", "lhs", "rhs", "residual"}
Json verification_report(const std::string& graph, const std::string& identity, bool ok, Json lhs, Json rhs,
                         Json residual);

}  // namespace azw
