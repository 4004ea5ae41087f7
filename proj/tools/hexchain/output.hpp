#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hexchain::cli {

// Bumped whenever a record's field set changes.
inline constexpr int kSchemaVersion = 1;

enum class RecordFormat { KeyValue, JsonLines };

RecordFormat parse_record_format(std::string_view text);

// Flat, ordered key-value record. Integers are always printed exactly.
class OutputRecord {
 public:
  using Value = std::variant<std::int64_t, std::string, bool>;

  explicit OutputRecord(std::string_view type);

  OutputRecord& add(std::string key, std::int64_t value);
  OutputRecord& add(std::string key, int value) {
    return add(std::move(key), static_cast<std::int64_t>(value));
  }
  OutputRecord& add(std::string key, std::string value);
  OutputRecord& add(std::string key, const char* value) {
    return add(std::move(key), std::string(value));
  }
  OutputRecord& add(std::string key, bool value);

  const std::vector<std::pair<std::string, Value>>& fields() const noexcept {
    return fields_;
  }

  // key=value pairs separated by spaces; strings containing spaces, quotes
  // or '=' are double-quoted.
  std::string to_key_value() const;
  std::string to_json() const;

  void write(std::ostream& out, RecordFormat format) const;

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

}  // namespace hexchain::cli
