#include "erq/serialize.hpp"

#include <array>

#include "erq/error.hpp"
#include "erq/parser.hpp"

namespace erq {

namespace {

const std::vector<std::string> kOuterVariable{"t"};

template <class Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t count_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw DomainError("count must be a non-negative integer");
  return j.get<std::size_t>();
}

std::string outer_text(const Polynomial& f) { return format_univariate(f, "t"); }

Polynomial outer_from_json(const Json& j) {
  return parse_polynomial(field(j, "f").get<std::string>(), kOuterVariable);
}

Json ap_json(const ApSpec& ap) {
  return Json{{"start", to_json(ap.start)}, {"step", to_json(ap.step)}, {"count", ap.count}};
}

Json gp_json(const GpSpec& gp) {
  return Json{{"start", to_json(gp.start)}, {"ratio", to_json(gp.ratio)}, {"count", gp.count}};
}

ApSpec ap_from(const Json& j) {
  return {rational_from_json(field(j, "start")), rational_from_json(field(j, "step")),
          count_from_json(field(j, "count"))};
}

GpSpec gp_from(const Json& j) {
  return {rational_from_json(field(j, "start")), rational_from_json(field(j, "ratio")),
          count_from_json(field(j, "count"))};
}

const char* homogeneous_form_name(HomogeneousVerdict::Form f) {
  switch (f) {
    case HomogeneousVerdict::Form::LinearPower:
      return "linear_power";
    case HomogeneousVerdict::Form::MonomialPower:
      return "monomial_power";
    default:
      return "none";
  }
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("rational must be a \"p/q\" string or an integer");
}

Json to_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json certificate_to_json(const Certificate& c, std::span<const std::string> names) {
  Json j;
  j["form"] = certificate_kind(c);
  j["variables"] = std::vector<std::string>(names.begin(), names.end());
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        j["f"] = outer_text(r.outer());
        if constexpr (std::is_same_v<R, LinearFormResult>) {
          j["coeffs"] = to_json(std::span<const Rational>(r.coeffs()));
          j["inner"] = format_polynomial(r.inner(), names);
        } else if constexpr (std::is_same_v<R, PowerProductResult>) {
          j["shifts"] = to_json(std::span<const Rational>(r.shifts()));
          j["exponents"] = r.exponents();
          j["inner"] = format_polynomial(r.inner(), names);
        } else if constexpr (std::is_same_v<R, AdditiveFormResult>) {
          Json inners = Json::array();
          Json flags = Json::array();
          for (std::size_t i = 0; i < r.arity(); ++i) {
            inners.push_back(format_univariate(r.inners()[i], names[i]));
            const auto& fl = r.flags()[i];
            flags.push_back(Json{{"degree", fl.degree},
                                 {"distinct_roots", fl.distinct_roots},
                                 {"zero_constant", fl.zero_constant},
                                 {"shifted_pure_power", fl.shifted_pure_power}});
          }
          j["inners"] = std::move(inners);
          j["inner_flags"] = std::move(flags);
          j["inner"] = format_polynomial(r.inner_sum(), names);
        } else {
          Json inners = Json::array();
          for (std::size_t i = 0; i < r.arity(); ++i) inners.push_back(format_univariate(r.inners()[i], names[i]));
          j["inners"] = std::move(inners);
          j["inner"] = format_polynomial(r.inner_product(), names);
        }
        j["recomposed"] = format_polynomial(r.recompose(), names);
      },
      c);
  return j;
}

std::vector<std::string> certificate_variables(const Json& j) {
  return guarded("certificate", [&] {
    std::vector<std::string> names;
    for (const auto& n : field(j, "variables")) names.push_back(n.get<std::string>());
    if (names.empty() || names.size() > Monomial::kMaxArity) throw DomainError("certificate: bad variable list");
    return names;
  });
}

Certificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&]() -> Certificate {
    const auto names = certificate_variables(j);
    const std::size_t n = names.size();
    const std::string form = field(j, "form").get<std::string>();
    const Polynomial f = outer_from_json(j);

    auto univariate_inners = [&] {
      const Json& arr = field(j, "inners");
      if (!arr.is_array() || arr.size() != n) throw DomainError("certificate: one inner per variable expected");
      std::vector<Polynomial> inners;
      for (std::size_t i = 0; i < n; ++i) {
        const std::vector<std::string> one{names[i]};
        inners.push_back(parse_polynomial(arr[i].get<std::string>(), one));
      }
      return inners;
    };

    Polynomial inner(n);
    std::optional<Certificate> out;
    try {
      if (form == "linear") {
        auto coeffs = rationals_from_json(field(j, "coeffs"));
        if (coeffs.size() != n) throw DomainError("certificate: one coefficient per variable expected");
        for (std::size_t i = 0; i < n; ++i) inner += coeffs[i] * Polynomial::variable(n, i);
        const Polynomial F = compose_univariate(f, inner);
        out = LinearFormResult::make(F, f, std::move(coeffs));
      } else if (form == "power_product") {
        auto shifts = rationals_from_json(field(j, "shifts"));
        auto exponents = field(j, "exponents").get<std::vector<std::uint32_t>>();
        if (shifts.size() != n || exponents.size() != n) {
          throw DomainError("certificate: one shift and exponent per variable expected");
        }
        inner = Polynomial(n, Rational(1));
        for (std::size_t i = 0; i < n; ++i) {
          inner *= (Polynomial::variable(n, i) + Polynomial(n, shifts[i])).pow(exponents[i]);
        }
        const Polynomial F = compose_univariate(f, inner);
        out = PowerProductResult::make(F, f, std::move(shifts), std::move(exponents));
      } else if (form == "additive") {
        auto inners = univariate_inners();
        for (std::size_t i = 0; i < n; ++i) inner += embed(inners[i], n, i);
        const Polynomial F = compose_univariate(f, inner);
        out = AdditiveFormResult::make(F, f, std::move(inners));
      } else if (form == "multiplicative") {
        auto inners = univariate_inners();
        inner = Polynomial(n, Rational(1));
        for (std::size_t i = 0; i < n; ++i) inner *= embed(inners[i], n, i);
        const Polynomial F = compose_univariate(f, inner);
        out = MultiplicativeFormResult::make(F, f, std::move(inners));
      } else {
        throw DomainError("certificate: unknown form \"" + form + "\"");
      }
    } catch (const InvariantViolation& e) {
      throw DomainError(std::string("certificate: parts are not in normal form (") + e.what() + ")");
    }
    if (j.contains("recomposed")) {
      const Polynomial stated = parse_polynomial(j.at("recomposed").get<std::string>(), names);
      if (stated != recompose(*out)) throw DomainError("certificate: \"recomposed\" does not match the parts");
    }
    return *out;
  });
}

Json verdict_to_json(const ClassificationVerdict& v, const Polynomial& F, std::span<const std::string> names) {
  std::vector<std::string> sub;
  for (std::size_t i : v.variables) sub.push_back(names[i]);
  Json j;
  j["input"] = format_polynomial(F, names);
  j["variables"] = std::vector<std::string>(names.begin(), names.end());
  j["over_Q"] = to_string(v.over_q);
  j["over_R"] = to_string(v.over_r);
  j["certificate"] = v.q_certificate ? certificate_to_json(*v.q_certificate, sub) : Json(nullptr);
  j["real_certificate"] = v.r_certificate ? certificate_to_json(*v.r_certificate, sub) : Json(nullptr);
  j["diagnostics"] = v.diagnostics;
  return j;
}

Json to_json(const HomogeneousVerdict& v, std::span<const std::string> names) {
  Json j;
  j["form"] = homogeneous_form_name(v.form);
  j["non_expander"] = v.non_expander;
  if (v.form == HomogeneousVerdict::Form::None) return j;
  j["a"] = to_json(v.scale);
  j["alpha"] = v.alpha;
  if (v.form == HomogeneousVerdict::Form::LinearPower) {
    j["coeffs"] = to_json(std::span<const Rational>(v.coeffs));
  } else {
    j["exponents"] = v.exponents;
  }
  j["variables"] = std::vector<std::string>(names.begin(), names.end());
  return j;
}

Json to_json(const SetSpec& s) {
  return std::visit(
      [](const auto& v) -> Json {
        using S = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<S, ApSpec>) {
          return Json{{"ap", ap_json(v)}};
        } else if constexpr (std::is_same_v<S, GpSpec>) {
          return Json{{"gp", gp_json(v)}};
        } else if constexpr (std::is_same_v<S, GapSpec>) {
          Json dims = Json::array();
          for (const auto& d : v.dims) dims.push_back(ap_json(d));
          return Json{{"gap", dims}};
        } else if constexpr (std::is_same_v<S, GgpSpec>) {
          Json dims = Json::array();
          for (const auto& d : v.dims) dims.push_back(gp_json(d));
          return Json{{"ggp", dims}};
        } else if constexpr (std::is_same_v<S, ImageSpec>) {
          return Json{{"image", {{"g", format_univariate(v.g, v.variable)}, {"var", v.variable}, {"base", to_json(*v.base)}}}};
        } else if constexpr (std::is_same_v<S, ExplicitSpec>) {
          return Json{{"explicit", to_json(std::span<const Rational>(v.values))}};
        } else {
          return Json{{"even_squares", to_json(*v.base)}};
        }
      },
      s.value);
}

SetSpec set_spec_from_json(const Json& j) {
  return guarded("set spec", [&]() -> SetSpec {
    if (!j.is_object() || j.size() != 1) throw DomainError("set spec must be an object with exactly one key");
    const auto& [key, body] = *j.items().begin();
    SetSpec out;
    if (key == "ap") {
      out.value = ap_from(body);
    } else if (key == "gp") {
      out.value = gp_from(body);
    } else if (key == "gap" || key == "ggp") {
      if (!body.is_array()) throw DomainError(key + " expects an array of progressions");
      if (key == "gap") {
        GapSpec g;
        for (const auto& d : body) g.dims.push_back(ap_from(d));
        out.value = std::move(g);
      } else {
        GgpSpec g;
        for (const auto& d : body) g.dims.push_back(gp_from(d));
        out.value = std::move(g);
      }
    } else if (key == "image") {
      const std::string var = body.contains("var") ? body.at("var").get<std::string>() : "x";
      const std::vector<std::string> one{var};
      out = SetSpec::image(parse_polynomial(field(body, "g").get<std::string>(), one),
                           set_spec_from_json(field(body, "base")), var);
    } else if (key == "explicit") {
      out = SetSpec::explicit_values(rationals_from_json(body));
    } else if (key == "even_squares") {
      out = SetSpec::even_squares(set_spec_from_json(body));
    } else {
      throw DomainError("unknown set kind \"" + key + "\"");
    }
    out.validate();
    return out;
  });
}

std::vector<SetSpec> set_specs_from_json(const Json& j) {
  std::vector<SetSpec> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(set_spec_from_json(e));
  } else {
    out.push_back(set_spec_from_json(j));
  }
  return out;
}

Json to_json(const ExperimentRecord& r, bool timing) {
  Json j;
  j["record"] = "image_size";
  j["polynomial"] = r.polynomial;
  j["variables"] = r.variables;
  Json sets = Json::array();
  for (const auto& s : r.sets) sets.push_back(to_json(s));
  j["sets"] = std::move(sets);
  j["n"] = r.n;
  j["count"] = r.count;
  j["ratio"] = to_json(r.ratio);
  j["seed"] = r.seed;
  if (timing) {
    j["timestamp"] = r.timestamp;
    j["runtime_ms"] = r.runtime_ms;
  }
  return j;
}

Json to_json(const WitnessReport& r) {
  Json sets = Json::array();
  for (const auto& s : r.sets) sets.push_back(to_json(s));
  return Json{{"form", r.form}, {"n", r.n},         {"sets", sets},          {"measured", r.measured},
              {"bound", r.bound}, {"holds", r.holds}, {"notes", r.notes}};
}

Json to_json(const FiberReport& r) {
  return Json{{"inner_count", r.inner_count}, {"image_count", r.image_count}, {"degree", r.degree}, {"holds", r.holds}};
}

Json to_json(const GrowthReport& r) { return Json{{"ns", r.ns}, {"counts", r.counts}, {"slope", r.slope}}; }

Json to_json(const ExponentVector& v) { return Json{{"sign", v.sign}, {"exponents", v.exponents}}; }

}  // namespace erq
