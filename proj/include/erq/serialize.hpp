#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "erq/decompose.hpp"
#include "erq/diophantine.hpp"
#include "erq/expansion.hpp"

namespace erq {

using Json = nlohmann::ordered_json;

// Rationals travel as canonical "p/q" strings ("3", "-1/2"). Readers also
// accept JSON integers. Polynomials travel as parser text; univariate outer
// polynomials are written in t.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(std::span<const Rational> values);
std::vector<Rational> rationals_from_json(const Json& j);

/// {form, variables, f, ...form fields, inner, recomposed}. `names` label
/// the certificate's own variables (one per certificate variable).
Json certificate_to_json(const Certificate& c, std::span<const std::string> names);
/// Rebuilds a certificate from certificate_to_json output. The parts are
/// recomposed and re-verified; a malformed document throws DomainError.
Certificate certificate_from_json(const Json& j);
/// The variable names stored in a certificate document.
std::vector<std::string> certificate_variables(const Json& j);

/// {input, variables, over_Q, over_R, certificate, real_certificate, diagnostics}.
Json verdict_to_json(const ClassificationVerdict& v, const Polynomial& F, std::span<const std::string> names);
Json to_json(const HomogeneousVerdict& v, std::span<const std::string> names);

/// {"ap":{"start":"1","step":"1","count":5}}, {"gp":...}, {"gap":[ap...]},
/// {"ggp":[gp...]}, {"image":{"g":"x^2","var":"x","base":{...}}},
/// {"explicit":["1","1/2"]}, {"even_squares":{...}}.
Json to_json(const SetSpec& s);
SetSpec set_spec_from_json(const Json& j);
/// Accepts one spec object or an array of them.
std::vector<SetSpec> set_specs_from_json(const Json& j);

/// `timing` adds the wall-clock fields (timestamp, runtime_ms).
Json to_json(const ExperimentRecord& r, bool timing);
Json to_json(const WitnessReport& r);
Json to_json(const FiberReport& r);
Json to_json(const GrowthReport& r);
Json to_json(const ExponentVector& v);

}  // namespace erq
