#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "erq/commands.hpp"
#include "erq/error.hpp"
#include "erq/parser.hpp"
#include "erq/run_log.hpp"

namespace erq {

namespace {

struct Globals {
  std::string format = "json";
  std::string log;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool timing = false;
};

// Values of the last parsed subcommand.
struct Args {
  std::string poly;
  std::string vars;
  std::string sets;
  std::string ns;
  std::string r;
  std::string c = "1";
  std::string generators;
  std::string values;
  std::string vectors;
  std::string kind = "ap";
  std::string shift;
  std::size_t n = 0;
  unsigned long height = 0;
  unsigned w = 0;
  std::size_t random = 0;
  std::size_t dim = 0;
  bool literal = false;
};

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto inline_array = [](const Json& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + scalar_text(a[i]);
    return s + "]";
  };
  auto flat = [](const Json& a) { return std::all_of(a.begin(), a.end(), is_scalar); };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = *it;
      if (is_scalar(v)) {
        out << pad << it.key() << ": " << scalar_text(v) << "\n";
      } else if (v.is_array() && flat(v)) {
        out << pad << it.key() << ": " << inline_array(v) << "\n";
      } else {
        out << pad << it.key() << ":\n";
        render_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_scalar(e)) {
        out << pad << "- " << scalar_text(e) << "\n";
      } else if (e.is_array() && flat(e)) {
        out << pad << "- " << inline_array(e) << "\n";
      } else {
        out << pad << "-\n";
        render_text(e, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

Json parse_json_arg(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& r : parse_rational_list(text)) {
    if (!r.is_integer() || r.sign() <= 0 || !r.numerator().fits_ulong_p()) {
      throw DomainError("sizes must be positive integers");
    }
    out.push_back(r.numerator().get_ui());
  }
  return out;
}

std::vector<Rational> parse_values(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return rationals_from_json(parse_json_arg(text, "--values"));
  return parse_rational_list(text);
}

void print_parse_error(std::ostream& err, const ParseError& e, const std::string& text) {
  err << "erq: syntax error at column " << e.column() << ": " << e.reason() << "\n";
  if (!text.empty() && text.find('\n') == std::string::npos) {
    err << "  " << text << "\n  " << std::string(e.column() - 1, ' ') << "^\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify polynomials against non-expander normal forms and run expansion probes.", "erq"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  Args a;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--log", g.log, "Append results to this JSON-lines file (default: $ERQ_LOG)");
  app.add_option("--seed", g.seed, "Seed for randomized inputs");
  app.add_option("--threads", g.threads, "Worker threads for image counting")->check(CLI::Range(1U, 256U));
  app.add_flag("--timing", g.timing, "Include wall-clock fields in the output");

  auto add_poly = [&](CLI::App* s, const char* help) {
    s->add_option("polynomial", a.poly, help)->required();
    s->add_option("--vars", a.vars, "Comma-separated variable names (default x,y,z as needed)");
  };
  auto add_sets = [&](CLI::App* s) {
    s->add_option("--sets", a.sets, "JSON set spec array, one per variable")->required();
  };

  auto* parse = app.add_subcommand("parse", "Parse and print the canonical form");
  add_poly(parse, "Polynomial text");
  auto* classify = app.add_subcommand("classify", "Expander verdicts over Q and R with certificates");
  add_poly(classify, "Polynomial in 2 or 3 variables");
  auto* decompose = app.add_subcommand("decompose", "Run every decomposition detector");
  add_poly(decompose, "Polynomial in 2 or 3 variables");

  auto* expand = app.add_subcommand("expand", "Exact image-size experiments");
  expand->require_subcommand(1);
  auto* image = expand->add_subcommand("image", "|F(A, B, ...)| for given sets");
  add_poly(image, "Polynomial");
  add_sets(image);
  auto* sweep = expand->add_subcommand("sweep", "Image sizes over a family of set sizes");
  add_poly(sweep, "Polynomial");
  add_sets(sweep);
  sweep->add_option("--ns", a.ns, "Comma-separated sizes")->required();
  auto* fiber = expand->add_subcommand("fiber", "Fiber inequality for an additive form");
  add_poly(fiber, "Polynomial");
  add_sets(fiber);
  auto* chang = expand->add_subcommand("chang", "x^2+y^2 over square roots of 1..n");
  chang->add_option("--n", a.n, "Set size")->required();
  auto* sumset = expand->add_subcommand("sumset", "A+B");
  add_sets(sumset);
  auto* productset = expand->add_subcommand("productset", "A*B");
  add_sets(productset);

  auto* witness = app.add_subcommand("witness", "Low-expansion witness sets for a non-expander");
  witness->add_option("--form", a.poly, "Polynomial")->required();
  witness->add_option("--vars", a.vars, "Comma-separated variable names");
  witness->add_option("--n", a.n, "Set size")->required();
  witness->add_flag("--literal-paper-sets", a.literal, "Use sqrt(2^j+1) for the middle set of the three-variable multiplicative example");

  auto* probe = app.add_subcommand("probe", "Rational-point and progression probes");
  probe->require_subcommand(1);
  auto* root = probe->add_subcommand("root", "Rational w-th root");
  root->add_option("--r", a.r, "Rational")->required();
  root->add_option("--w", a.w, "Exponent")->required();
  auto* heights = probe->add_subcommand("heights", "Rationals of bounded height");
  heights->add_option("--height", a.height, "Height bound")->required();
  auto* curve = probe->add_subcommand("curve", "Points of g(x) = c y^w with height(x) <= H");
  curve->add_option("g", a.poly, "Polynomial in x")->required();
  curve->add_option("--c", a.c, "Twist constant");
  curve->add_option("--w", a.w, "Exponent")->required();
  curve->add_option("--height", a.height, "Height bound")->required();
  auto* genus = probe->add_subcommand("genus", "Exponent choice and genus for g(x) = y^w");
  genus->add_option("g", a.poly, "Polynomial in x")->required();
  auto* membership = probe->add_subcommand("membership", "Membership in a multiplicative group");
  membership->add_option("--r", a.r, "Rational")->required();
  membership->add_option("--generators", a.generators, "Comma-separated rationals")->required();
  auto* intersection = probe->add_subcommand("intersection", "x of bounded height with g(x) in the group");
  intersection->add_option("g", a.poly, "Polynomial in x")->required();
  intersection->add_option("--generators", a.generators, "Comma-separated rationals")->required();
  intersection->add_option("--height", a.height, "Height bound")->required();
  auto* pigeonhole = probe->add_subcommand("pigeonhole", "Most popular residue class of exponent vectors");
  pigeonhole->add_option("--w", a.w, "Modulus")->required();
  auto* vectors_opt = pigeonhole->add_option("--vectors", a.vectors, "JSON array of integer vectors");
  pigeonhole->add_option("--random", a.random, "Draw this many random vectors")->excludes(vectors_opt);
  pigeonhole->add_option("--dim", a.dim, "Length of random vectors");
  auto* progression = probe->add_subcommand("progression", "Longest progression in a finite set");
  progression->add_option("--kind", a.kind, "ap or gp")->check(CLI::IsMember({"ap", "gp"}));
  progression->add_option("--values", a.values, "Comma list or JSON array of rationals")->required();
  auto* range = probe->add_subcommand("range", "Longest progression in g(domain)");
  range->add_option("g", a.poly, "Polynomial in x")->required();
  auto* range_n = range->add_option("--n", a.n, "Integer domain [-n, n]");
  range->add_option("--height", a.height, "Rational domain of height <= H")->excludes(range_n);
  range->add_option("--kind", a.kind, "ap or gp")->check(CLI::IsMember({"ap", "gp"}));
  range->add_option("--shift", a.shift, "Probe g(x+a) - g(a)");
  auto* squares = probe->add_subcommand("squares", "3- and 4-term progressions among 1^2..n^2");
  squares->add_option("--n", a.n, "Largest root")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "erq: " << e.what() << "\n";
    return 2;
  }

  if (g.log.empty()) {
    if (const char* env = std::getenv("ERQ_LOG")) g.log = env;
  }
  const CommandOptions options{g.threads, g.seed};

  auto names_for = [&](std::size_t min_arity) {
    return a.vars.empty() ? infer_variables(a.poly, min_arity) : parse_variable_list(a.vars);
  };
  auto sets_json = [&] { return parse_json_arg(a.sets, "--sets"); };

  const auto start = std::chrono::steady_clock::now();
  Json doc;
  bool loggable = true;
  try {
    if (parse->parsed()) {
      doc = parse_command(a.poly, names_for(1));
      loggable = false;
    } else if (classify->parsed()) {
      doc = classify_command(a.poly, names_for(2));
      loggable = false;
    } else if (decompose->parsed()) {
      doc = decompose_command(a.poly, names_for(2));
      loggable = false;
    } else if (image->parsed()) {
      doc = image_command(a.poly, names_for(1), sets_json(), options);
    } else if (sweep->parsed()) {
      doc = sweep_command(a.poly, names_for(1), sets_json(), parse_size_list(a.ns), options);
    } else if (fiber->parsed()) {
      doc = fiber_command(a.poly, names_for(2), sets_json());
    } else if (chang->parsed()) {
      doc = chang_command(a.n, options);
    } else if (sumset->parsed() || productset->parsed()) {
      doc = set_op_command(sumset->parsed() ? "sumset" : "productset", sets_json());
    } else if (witness->parsed()) {
      doc = witness_command(a.poly, names_for(2), a.n, a.literal, options);
    } else if (root->parsed()) {
      doc = root_probe(Rational::parse(a.r), a.w);
    } else if (heights->parsed()) {
      doc = heights_probe(a.height);
    } else if (curve->parsed()) {
      doc = curve_probe(a.poly, Rational::parse(a.c), a.w, a.height);
    } else if (genus->parsed()) {
      doc = genus_probe(a.poly);
    } else if (membership->parsed()) {
      doc = membership_probe(Rational::parse(a.r), parse_rational_list(a.generators));
    } else if (intersection->parsed()) {
      doc = intersection_probe(a.poly, parse_rational_list(a.generators), a.height);
    } else if (pigeonhole->parsed()) {
      std::optional<Json> vectors;
      if (!a.vectors.empty()) vectors = parse_json_arg(a.vectors, "--vectors");
      doc = pigeonhole_probe(a.w, vectors, a.random, a.dim, options);
    } else if (progression->parsed()) {
      doc = progression_probe(a.kind, parse_values(a.values));
    } else if (range->parsed()) {
      if ((a.n == 0) == (a.height == 0)) throw DomainError("range needs exactly one of --n or --height");
      std::optional<Rational> shift;
      if (!a.shift.empty()) shift = Rational::parse(a.shift);
      doc = range_probe(a.poly, a.height ? "height" : "integers", a.height ? a.height : a.n, a.kind, shift);
    } else if (squares->parsed()) {
      doc = squares_probe(a.n);
    } else {
      throw DomainError("no command given");
    }
  } catch (const ParseError& e) {
    print_parse_error(err, e, a.poly);
    return 2;
  } catch (const InvariantViolation& e) {
    err << "erq: internal invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "erq: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "erq: internal error: " << e.what() << "\n";
    return 3;
  }
  const double runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (loggable && !g.log.empty()) {
    Json entry = doc;
    entry["runtime_ms"] = runtime_ms;
    try {
      record_experiment(g.log, entry);
    } catch (const Error& e) {
      err << "erq: " << e.what() << "\n";
      return 2;
    }
  }

  if (g.timing) {
    doc["runtime_ms"] = runtime_ms;
  } else {
    doc.erase("timestamp");
    doc.erase("runtime_ms");
  }
  if (g.format == "text") {
    render_text(doc, out, 0);
  } else {
    out << doc.dump(2) << "\n";
  }
  return 0;
}

}  // namespace erq
