#include "hexchain/output.hpp"

#include <ostream>

#include "hexchain/errors.hpp"
#include "json.hpp"

namespace hexchain::cli {

RecordFormat parse_record_format(std::string_view text) {
  if (text == "kv") return RecordFormat::KeyValue;
  if (text == "jsonl") return RecordFormat::JsonLines;
  throw ParseError("unknown format '" + std::string(text) + "' (expected kv or jsonl)",
                   0);
}

OutputRecord::OutputRecord(std::string_view type) {
  fields_.emplace_back("schema", std::int64_t{kSchemaVersion});
  fields_.emplace_back("record", std::string(type));
}

OutputRecord& OutputRecord::add(std::string key, std::int64_t value) {
  fields_.emplace_back(std::move(key), value);
  return *this;
}

OutputRecord& OutputRecord::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

OutputRecord& OutputRecord::add(std::string key, bool value) {
  fields_.emplace_back(std::move(key), value);
  return *this;
}

namespace {

std::string quote_if_needed(const std::string& s) {
  if (!s.empty() && s.find_first_of(" \"=\t") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string OutputRecord::to_key_value() const {
  std::string out;
  for (const auto& [key, value] : fields_) {
    if (!out.empty()) out.push_back(' ');
    out += key;
    out.push_back('=');
    if (const auto* i = std::get_if<std::int64_t>(&value)) {
      out += std::to_string(*i);
    } else if (const auto* b = std::get_if<bool>(&value)) {
      out += *b ? "true" : "false";
    } else {
      out += quote_if_needed(std::get<std::string>(value));
    }
  }
  return out;
}

std::string OutputRecord::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, value] : fields_) {
    std::visit([&, &k = key](const auto& v) { j[k] = v; }, value);
  }
  return j.dump();
}

void OutputRecord::write(std::ostream& out, RecordFormat format) const {
  out << (format == RecordFormat::KeyValue ? to_key_value() : to_json()) << '\n';
}

}  // namespace hexchain::cli
