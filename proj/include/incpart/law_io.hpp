#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "incpart/errors.hpp"
#include "incpart/laws.hpp"

namespace incpart {

/// Law file text:
///
///   {
///     "n": 3,
///     "kind": "partition",
///     "entries": [
///       {"composition": [3], "value": "1/3"},
///       ...
///     ]
///   }
///
/// "kind" is "partition" or "increment". Values are "numerator/denominator"
/// strings, reduced on load and written in lowest terms.
struct LawDocument {
  int n = 0;
  std::string kind;
  std::map<Composition, Rational> entries;
};

/// Throws ParseError with the line/column or the offending field.
LawDocument parse_law_document(std::string_view text);

/// Throws ParseError if the kind does not match. Missing compositions throw
/// IncompleteLawError unless `allow_sparse`, which zero-fills them.
PartitionLaw to_partition_law(const LawDocument& doc, bool allow_sparse = false);
IncrementLaw to_increment_law(const LawDocument& doc, bool allow_sparse = false);

/// Entries in all_compositions(n) order, one per line.
std::string format_law(const PartitionLaw& p);
std::string format_law(const IncrementLaw& q);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace incpart
