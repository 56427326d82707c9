#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "bsassign/assignmod.hpp"
#include "bsassign/bsgraph.hpp"
#include "bsassign/morse.hpp"
#include "bsassign/polynomial.hpp"
#include "bsassign/ratfun.hpp"

namespace bsassign {

// ordered_json keeps insertion order, so repeated runs are byte-identical.
using Json = nlohmann::ordered_json;

/// [num, den]: JSON integers when both fit in int64, decimal strings
/// otherwise. Parsing accepts either form.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// { "terms": [ { "coef": [n, d], "exp": [e_1, ..., e_r] }, ... ] } with
/// terms in descending grevlex order. Bit-exact round trip.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, int nvars);

/// { "num": Polynomial, "den": [Polynomial, ...] }.
Json to_json(const RationalFunction& f);
RationalFunction ratfun_from_json(const Json& j, int nvars);

Json to_json(const Word& w);
Word word_from_json(const Json& j);

Json graph_to_json(const BSGraph& g);

/// { "type", "word", "values": [Polynomial, ...] } in vertex order.
/// "type" may be omitted in input when `lt` is supplied.
Json assignment_to_json(const Assignment& a);
Assignment assignment_from_json(const Json& j, std::optional<LieType> lt = std::nullopt);

Json basis_to_json(const BasisMatrix& b);

Json coefficients_to_json(const CoefficientVector& c);

Json defect_to_json(const DefectReport& report);

Json morse_to_json(const MorseGeneratorSet& set);

}  // namespace bsassign
