#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "erq/serialize.hpp"

namespace erq {

/// Appends `entry` as one JSON line to the log at `path` (created if
/// missing) and returns its 0-based line index. Appends from threads and
/// processes are serialized by an exclusive file lock and land as single
/// writes; earlier lines are never touched. Throws Error on I/O failure.
std::size_t record_experiment(const std::string& path, const Json& entry);

/// Every line of the log, parsed. Throws DomainError on a malformed line.
std::vector<Json> read_log(const std::string& path);

}  // namespace erq
