#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chores/allocators.hpp"
#include "chores/instance.hpp"

namespace chores {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Canonical JSON text: fixed key order, one matrix row per line, trailing
// newline. parse_instance(serialize_instance(x)) == x and the reverse
// round-trip is byte-identical for canonical input.
std::string serialize_instance(const ChoreInstance& inst);

// Throws ParseError on malformed text and InvalidInstance on a well-formed
// instance that breaks an invariant.
ChoreInstance parse_instance(std::string_view text);

// Solution file: allocator, 1-based bundles and per-agent certificates.
std::string serialize_solution(const ChoreInstance& inst, const SolveResult& result);

// Reads the "bundles" of a solution file (1-based items). The result is not
// checked against an instance; see check_partition.
Allocation parse_allocation(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace chores
