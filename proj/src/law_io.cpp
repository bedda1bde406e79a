#include "incpart/law_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace incpart {

namespace {

using nlohmann::json;

const json& require_field(const json& object, const char* name, const std::string& where) {
  if (!object.is_object()) throw ParseError(where + ": expected an object");
  auto it = object.find(name);
  if (it == object.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

template <typename Tag>
CompositionLaw<Tag> to_law(const LawDocument& doc, bool allow_sparse) {
  if (doc.kind != Tag::kind) {
    throw ParseError("expected a " + std::string(Tag::kind) + " law, file has kind '" + doc.kind +
                     "'");
  }
  if (allow_sparse) return CompositionLaw<Tag>::zero_filled(doc.n, doc.entries);
  CompositionLaw<Tag> law(doc.n, doc.entries);
  law.require_complete();
  return law;
}

template <typename Tag>
std::string format(const CompositionLaw<Tag>& law) {
  law.require_complete();
  std::ostringstream out;
  out << "{\n  \"n\": " << law.n() << ",\n  \"kind\": \"" << Tag::kind << "\",\n  \"entries\": [\n";
  const auto order = all_compositions(law.n());
  for (std::size_t i = 0; i < order.size(); ++i) {
    out << "    {\"composition\": [";
    const auto& parts = order[i].parts();
    for (std::size_t j = 0; j < parts.size(); ++j) out << (j ? ", " : "") << parts[j];
    out << "], \"value\": \"" << to_string(law.at(order[i])) << "\"}"
        << (i + 1 < order.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

}  // namespace

LawDocument parse_law_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("law file is not valid JSON: ") + e.what());
  }

  LawDocument doc;
  const auto& n = require_field(root, "n", "law");
  if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 64) {
    throw ParseError("law.n: expected an integer in [1, 64]");
  }
  doc.n = n.get<int>();

  const auto& kind = require_field(root, "kind", "law");
  if (!kind.is_string() || (kind != "partition" && kind != "increment")) {
    throw ParseError("law.kind: expected \"partition\" or \"increment\"");
  }
  doc.kind = kind.get<std::string>();

  const auto& entries = require_field(root, "entries", "law");
  if (!entries.is_array()) throw ParseError("law.entries: expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "law.entries[" + std::to_string(i) + "]";
    const auto& composition = require_field(entries[i], "composition", where);
    if (!composition.is_array() || composition.empty()) {
      throw ParseError(where + ".composition: expected a non-empty array of integers");
    }
    std::vector<int> parts;
    int total = 0;
    for (const auto& part : composition) {
      if (!part.is_number_integer() || part.get<long long>() < 1 ||
          part.get<long long>() > doc.n) {
        throw ParseError(where + ".composition: parts must be integers in [1, n]");
      }
      parts.push_back(part.get<int>());
      total += parts.back();
    }
    if (total != doc.n) {
      throw ParseError(where + ".composition: parts sum to " + std::to_string(total) +
                       ", expected n=" + std::to_string(doc.n));
    }
    const auto& value = require_field(entries[i], "value", where);
    if (!value.is_string()) throw ParseError(where + ".value: expected a \"p/q\" string");
    Rational parsed;
    try {
      parsed = parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ".value: " + e.what());
    }
    Composition key(std::move(parts));
    if (!doc.entries.emplace(key, std::move(parsed)).second) {
      throw ParseError(where + ".composition: duplicate entry " + to_string(key));
    }
  }
  return doc;
}

PartitionLaw to_partition_law(const LawDocument& doc, bool allow_sparse) {
  return to_law<PartitionLawTag>(doc, allow_sparse);
}

IncrementLaw to_increment_law(const LawDocument& doc, bool allow_sparse) {
  return to_law<IncrementLawTag>(doc, allow_sparse);
}

std::string format_law(const PartitionLaw& p) { return format(p); }
std::string format_law(const IncrementLaw& q) { return format(q); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace incpart
