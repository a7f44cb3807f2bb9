#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erq/serialize.hpp"

namespace erq {

// One function per CLI verb. Each validates its arguments (DomainError,
// ParseError, ArityError) and returns the result document. Documents may
// carry top-level "timestamp" / "runtime_ms" keys, the only fields that vary
// between identical invocations.

struct CommandOptions {
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

/// Shortest prefix of x, y, z covering every identifier in `text`, at least
/// `min_arity` long. Texts using other names need an explicit list.
std::vector<std::string> infer_variables(std::string_view text, std::size_t min_arity);

Json parse_command(std::string_view text, const std::vector<std::string>& names);
Json classify_command(std::string_view text, const std::vector<std::string>& names);
Json decompose_command(std::string_view text, const std::vector<std::string>& names);

Json image_command(std::string_view text, const std::vector<std::string>& names, const Json& sets,
                   const CommandOptions& options = {});
Json sweep_command(std::string_view text, const std::vector<std::string>& names, const Json& sets,
                   const std::vector<std::size_t>& ns, const CommandOptions& options = {});
Json fiber_command(std::string_view text, const std::vector<std::string>& names, const Json& sets);
Json chang_command(std::size_t n, const CommandOptions& options = {});
/// op is "sumset" or "productset"; sets holds exactly two specs.
Json set_op_command(std::string_view op, const Json& sets, std::size_t max_listed = 1000);

Json witness_command(std::string_view text, const std::vector<std::string>& names, std::size_t n,
                     bool literal_sets, const CommandOptions& options = {});

Json root_probe(const Rational& r, unsigned w);
Json heights_probe(unsigned long height, std::size_t max_listed = 50);
Json curve_probe(std::string_view g, const Rational& c, unsigned w, unsigned long height);
Json genus_probe(std::string_view g);
Json membership_probe(const Rational& r, const std::vector<Rational>& generators);
Json intersection_probe(std::string_view g, const std::vector<Rational>& generators, unsigned long height);
/// Uses `vectors` when given, else `random_count` random vectors of length
/// `dimension` with entries in [-100, 100] drawn from options.seed.
Json pigeonhole_probe(long w, const std::optional<Json>& vectors, std::size_t random_count, std::size_t dimension,
                      const CommandOptions& options = {});
/// kind is "ap" or "gp".
Json progression_probe(std::string_view kind, const std::vector<Rational>& values);
/// domain is "integers" or "height".
Json range_probe(std::string_view g, std::string_view domain, unsigned long bound, std::string_view kind,
                 const std::optional<Rational>& shift);
Json squares_probe(unsigned long N);

/// Comma-separated rationals ("2,-1/3").
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace erq
