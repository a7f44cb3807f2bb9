#include "erq/commands.hpp"

#include <algorithm>
#include <random>

#include "erq/algebra.hpp"
#include "erq/error.hpp"
#include "erq/parser.hpp"

namespace erq {

namespace {

Polynomial parse_univariate_arg(std::string_view g) {
  const std::vector<std::string> x{"x"};
  return parse_polynomial(g, x);
}

std::vector<SetSpec> specs_for(const Json& sets, std::size_t arity) {
  auto specs = set_specs_from_json(sets);
  if (specs.size() != arity) {
    throw ArityError("expected " + std::to_string(arity) + " set specs (one per variable), got " +
                     std::to_string(specs.size()));
  }
  return specs;
}

Json specs_json(const std::vector<SetSpec>& specs) {
  Json out = Json::array();
  for (const auto& s : specs) out.push_back(to_json(s));
  return out;
}

Json optional_certificate(const std::optional<Certificate>& c, std::span<const std::string> names) {
  return c ? certificate_to_json(*c, names) : Json(nullptr);
}

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = *it;
}

std::string x_text(const Polynomial& g) { return format_univariate(g, "x"); }

Json probe_doc(const char* probe, Json parameters) {
  Json j;
  j["probe"] = probe;
  j["parameters"] = std::move(parameters);
  return j;
}

}  // namespace

std::vector<std::string> infer_variables(std::string_view text, std::size_t min_arity) {
  std::size_t arity = std::max<std::size_t>(min_arity, 1);
  for (char c : text) {
    if (c == 'x') arity = std::max<std::size_t>(arity, 1);
    if (c == 'y') arity = std::max<std::size_t>(arity, 2);
    if (c == 'z') arity = std::max<std::size_t>(arity, 3);
    if ((std::isalpha(static_cast<unsigned char>(c)) || c == '_') && c != 'x' && c != 'y' && c != 'z') arity = 3;
  }
  auto names = default_variables();
  names.resize(std::min<std::size_t>(arity, names.size()));
  return names;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Json parse_command(std::string_view text, const std::vector<std::string>& names) {
  const Polynomial F = parse_polynomial(text, names);
  Json j;
  j["input"] = format_polynomial(F, names);
  j["variables"] = names;
  j["degree"] = F.degree();
  j["terms"] = F.size();
  std::vector<std::string> support;
  for (std::size_t v : support_variables(F)) support.push_back(names[v]);
  j["depends_on"] = support;
  return j;
}

Json classify_command(std::string_view text, const std::vector<std::string>& names) {
  const Polynomial F = parse_polynomial(text, names);
  Json j = verdict_to_json(classify(F, names), F, names);
  if (F.degree() > 0 && is_homogeneous(F)) j["homogeneous"] = to_json(classify_homogeneous(F), names);
  return j;
}

Json decompose_command(std::string_view text, const std::vector<std::string>& names) {
  const Polynomial F = parse_polynomial(text, names);
  if (F.is_constant()) throw DomainError("decompose: input is constant");
  const auto support = support_variables(F);
  const Polynomial G = compress_variables(F, support);
  std::vector<std::string> sub;
  for (std::size_t v : support) sub.push_back(names[v]);

  Json j;
  j["input"] = format_polynomial(F, names);
  j["variables"] = names;
  j["depends_on"] = sub;
  j["linear"] = optional_certificate(detect_linear_form(G), sub);
  const bool multi = G.arity() >= 2;
  j["power_product"] = multi ? optional_certificate(detect_power_product_form(G), sub) : Json(nullptr);
  j["additive"] = multi ? optional_certificate(detect_additive_form(G), sub) : Json(nullptr);
  j["multiplicative"] = multi ? optional_certificate(detect_multiplicative_form(G), sub) : Json(nullptr);
  return j;
}

Json image_command(std::string_view text, const std::vector<std::string>& names, const Json& sets,
                   const CommandOptions& options) {
  const Polynomial F = parse_polynomial(text, names);
  auto rec = image_size(F, specs_for(sets, F.arity()), names, {options.threads, false});
  rec.seed = options.seed;
  return to_json(rec, true);
}

Json sweep_command(std::string_view text, const std::vector<std::string>& names, const Json& sets,
                   const std::vector<std::size_t>& ns, const CommandOptions& options) {
  const Polynomial F = parse_polynomial(text, names);
  const auto family = specs_for(sets, F.arity());
  const auto report = growth_sweep(F, family, ns, {options.threads, false});
  Json j;
  j["input"] = format_polynomial(F, names);
  j["variables"] = names;
  j["family"] = specs_json(family);
  merge(j, to_json(report));
  return j;
}

Json fiber_command(std::string_view text, const std::vector<std::string>& names, const Json& sets) {
  const Polynomial F = parse_polynomial(text, names);
  const auto specs = specs_for(sets, F.arity());
  std::vector<std::vector<Rational>> values;
  for (const auto& s : specs) values.push_back(gen_set(s));
  Json j;
  j["input"] = format_polynomial(F, names);
  j["variables"] = names;
  j["sets"] = specs_json(specs);
  merge(j, to_json(fiber_inequality_check(F, values)));
  return j;
}

Json chang_command(std::size_t n, const CommandOptions& options) {
  Json j = to_json(chang_check(n, {options.threads, false}));
  j["input"] = "x^2+y^2";
  return j;
}

Json set_op_command(std::string_view op, const Json& sets, std::size_t max_listed) {
  SetOp kind;
  if (op == "sumset") {
    kind = SetOp::Sum;
  } else if (op == "productset") {
    kind = SetOp::Product;
  } else {
    throw DomainError("unknown set operation \"" + std::string(op) + "\"");
  }
  const auto specs = specs_for(sets, 2);
  const auto A = gen_set(specs[0]);
  const auto B = gen_set(specs[1]);
  const auto values = pointwise_set_op(kind, A, B);
  Json j;
  j["op"] = op;
  j["sets"] = specs_json(specs);
  j["sizes"] = {A.size(), B.size()};
  j["count"] = values.size();
  const std::size_t listed = std::min(values.size(), max_listed);
  j["values"] = to_json(std::span<const Rational>(values.data(), listed));
  j["truncated"] = listed < values.size();
  return j;
}

Json witness_command(std::string_view text, const std::vector<std::string>& names, std::size_t n,
                     bool literal_sets, const CommandOptions& options) {
  const Polynomial F = parse_polynomial(text, names);
  const auto verdict = classify(F, names);
  const bool over_q = verdict.over_q == RationalVerdict::NonExpander;
  const auto& cert = over_q ? verdict.q_certificate : verdict.r_certificate;
  if (!cert) throw DomainError("no non-expander certificate over Q or R for this polynomial");
  std::vector<std::string> sub;
  for (std::size_t v : verdict.variables) sub.push_back(names[v]);

  const auto report = witness_for(F, *cert, n, verdict.variables, literal_sets, {options.threads, false});
  Json j;
  j["input"] = format_polynomial(F, names);
  j["variables"] = names;
  j["field"] = over_q ? "Q" : "R";
  j["certificate"] = certificate_to_json(*cert, sub);
  j["literal_sets"] = literal_sets;
  merge(j, to_json(report));
  return j;
}

Json root_probe(const Rational& r, unsigned w) {
  if (w == 0) throw DomainError("root: w must be positive");
  Json j = probe_doc("root", {{"r", to_json(r)}, {"w", w}});
  const auto s = rational_wth_root(r, w);
  j["root"] = s ? to_json(*s) : Json(nullptr);
  return j;
}

Json heights_probe(unsigned long height, std::size_t max_listed) {
  if (height == 0) throw DomainError("heights: height must be positive");
  Json j = probe_doc("heights", {{"height", height}});
  std::uint64_t count = 0;
  Json witnesses = Json::array();
  for_each_rational_by_height(height, [&](const Rational& r) {
    if (count++ < max_listed) witnesses.push_back(to_json(r));
  });
  j["count"] = count;
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json curve_probe(std::string_view g, const Rational& c, unsigned w, unsigned long height) {
  if (c.is_zero()) throw DomainError("curve: c must be nonzero");
  if (w == 0) throw DomainError("curve: w must be positive");
  const Polynomial poly = parse_univariate_arg(g);
  Json j = probe_doc("curve", {{"g", x_text(poly)}, {"c", to_json(c)}, {"w", w}, {"height", height}});
  const auto points = curve_points_bounded_height({poly, c, w}, height);
  j["count"] = points.size();
  Json witnesses = Json::array();
  for (const auto& p : points) witnesses.push_back({{"x", to_json(p.x)}, {"y", to_json(p.y)}});
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json genus_probe(std::string_view g) {
  const Polynomial poly = parse_univariate_arg(g);
  const auto r = choose_exponent_and_genus(poly);
  Json j = probe_doc("genus", {{"g", x_text(poly)}});
  j["w"] = r.w;
  j["genus"] = to_json(r.genus);
  j["distinct_roots"] = r.v;
  j["degree"] = r.degree;
  j["multiplicities"] = r.multiplicities;
  j["faltings"] = r.faltings;
  return j;
}

Json membership_probe(const Rational& r, const std::vector<Rational>& generators) {
  const MultGroupSpec G(generators);
  Json j = probe_doc("membership", {{"r", to_json(r)}, {"generators", to_json(std::span<const Rational>(generators))}});
  const auto e = group_membership(r, G);
  j["member"] = e.has_value();
  j["exponents"] = e ? to_json(*e) : Json(nullptr);
  return j;
}

Json intersection_probe(std::string_view g, const std::vector<Rational>& generators, unsigned long height) {
  const Polynomial poly = parse_univariate_arg(g);
  const MultGroupSpec G(generators);
  const auto r = intersection_count(poly, G, height);
  Json j = probe_doc("intersection", {{"g", x_text(poly)},
                                      {"generators", to_json(std::span<const Rational>(generators))},
                                      {"height", height}});
  j["count"] = r.count;
  j["searched"] = r.searched;
  Json witnesses = Json::array();
  for (const auto& [x, e] : r.witnesses) {
    const Rational one[] = {x};
    witnesses.push_back({{"x", to_json(x)}, {"value", to_json(evaluate(poly, one))}, {"exponents", to_json(e)}});
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json pigeonhole_probe(long w, const std::optional<Json>& vectors, std::size_t random_count, std::size_t dimension,
                      const CommandOptions& options) {
  if (w < 1) throw DomainError("pigeonhole: w must be positive");
  std::vector<std::vector<long>> vs;
  Json params{{"w", w}};
  if (vectors) {
    try {
      vs = vectors->get<std::vector<std::vector<long>>>();
    } catch (const nlohmann::json::exception&) {
      throw DomainError("pigeonhole: vectors must be a JSON array of integer arrays");
    }
  } else {
    if (random_count == 0 || dimension == 0) throw DomainError("pigeonhole: need vectors or a positive random count");
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long> entry(-100, 100);
    vs.assign(random_count, std::vector<long>(dimension));
    for (auto& v : vs) {
      for (auto& e : v) e = entry(rng);
    }
    params["random"] = random_count;
    params["dimension"] = dimension;
    params["seed"] = options.seed;
  }
  const auto r = popular_congruence_class(vs, w);
  Json j = probe_doc("pigeonhole", std::move(params));
  j["size"] = vs.size();
  j["representative"] = r.representative;
  j["count"] = r.count;
  Integer classes(1);
  for (std::size_t k = 0; k < vs.front().size(); ++k) classes *= w;
  j["bound_holds"] = Integer(static_cast<unsigned long>(r.count)) * classes >= Integer(static_cast<unsigned long>(vs.size()));
  return j;
}

Json progression_probe(std::string_view kind, const std::vector<Rational>& values) {
  ProgressionKind k;
  if (kind == "ap") {
    k = ProgressionKind::Arithmetic;
  } else if (kind == "gp") {
    k = ProgressionKind::Geometric;
  } else {
    throw DomainError("progression kind must be ap or gp");
  }
  const auto p = find_longest_progression(k, values);
  Json j = probe_doc("progression", {{"kind", kind}, {"size", values.size()}});
  j["length"] = p.length;
  j["witnesses"] = to_json(std::span<const Rational>(p.witness));
  return j;
}

Json range_probe(std::string_view g, std::string_view domain, unsigned long bound, std::string_view kind,
                 const std::optional<Rational>& shift) {
  RangeDomain d;
  if (domain == "integers") {
    d.kind = RangeDomain::Kind::Integers;
  } else if (domain == "height") {
    d.kind = RangeDomain::Kind::Height;
  } else {
    throw DomainError("range domain must be integers or height");
  }
  d.bound = bound;
  ProgressionKind k;
  if (kind == "ap") {
    k = ProgressionKind::Arithmetic;
  } else if (kind == "gp") {
    k = ProgressionKind::Geometric;
  } else {
    throw DomainError("progression kind must be ap or gp");
  }
  const Polynomial poly = parse_univariate_arg(g);
  const auto r = range_progression_probe(poly, d, k, shift);
  Json params{{"g", x_text(poly)}, {"domain", domain}, {"bound", bound}, {"kind", kind}};
  params["shift"] = shift ? to_json(*shift) : Json(nullptr);
  Json j = probe_doc("range", std::move(params));
  j["probed"] = x_text(r.probed);
  j["domain_size"] = r.domain_size;
  j["range_size"] = r.range_size;
  j["length"] = r.progression.length;
  j["witnesses"] = to_json(std::span<const Rational>(r.progression.witness));
  Json pre = Json::array();
  for (const auto& p : r.preimages) pre.push_back(to_json(std::span<const Rational>(p)));
  j["preimages"] = std::move(pre);
  j["shifted_pure_power"] = r.shifted_pure_power;
  return j;
}

Json squares_probe(unsigned long N) {
  const auto r = squares_no_4ap_check(N);
  Json j = probe_doc("squares", {{"N", N}});
  j["four_term_free"] = r.four_term_free;
  j["three_term_count"] = r.three_term_count;
  j["witnesses"] = r.example;
  return j;
}

}  // namespace erq
