#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kset::cli {

enum class Format { Plain, Csv, Json };

using Value = std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string>;

/// Named value; a field with children renders as a nested JSON object and as
/// dotted keys ("binding_check.bound") in plain text and CSV.
struct Field {
  std::string key;
  Value value;
  std::vector<Field> children;
};

struct Table {
  std::string name;  // JSON array key
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

/// Everything one command prints.
struct Report {
  std::string command;
  std::vector<Field> fields;
  std::optional<Table> table;
  std::vector<std::string> notes;
};

inline constexpr int kSchemaVersion = 1;

std::string render(const Report& report, Format format);

/// Numbers in plain text and CSV carry 6 significant digits.
std::string format_number(const Value& value);

}  // namespace kset::cli
