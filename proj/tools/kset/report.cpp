#include "report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <json.hpp>
#include <sstream>

namespace kset::cli {

namespace {

using Json = nlohmann::ordered_json;

struct FlatField {
  std::string key;
  Value value;
};

void flatten(const std::vector<Field>& fields, const std::string& prefix, std::vector<FlatField>& out) {
  for (const auto& f : fields) {
    const std::string key = prefix.empty() ? f.key : prefix + "." + f.key;
    if (f.children.empty()) {
      out.push_back({key, f.value});
    } else {
      flatten(f.children, key, out);
    }
  }
}

Json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(x)) return nullptr;
          return x;
        } else {
          return x;
        }
      },
      v);
}

Json to_json(const std::vector<Field>& fields) {
  Json obj = Json::object();
  for (const auto& f : fields) {
    obj[f.key] = f.children.empty() ? to_json(f.value) : to_json(f.children);
  }
  return obj;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <typename Range, typename Fn>
std::string join(const Range& range, const char* sep, Fn&& fn) {
  std::string out;
  bool first = true;
  for (const auto& item : range) {
    if (!first) out += sep;
    out += fn(item);
    first = false;
  }
  return out;
}

std::string render_plain(const Report& report) {
  std::vector<FlatField> flat;
  flatten(report.fields, "", flat);
  std::ostringstream out;
  for (const auto& f : flat) out << f.key << ": " << format_number(f.value) << '\n';
  if (report.table) {
    const Table& table = *report.table;
    // Pad columns to the widest cell.
    std::vector<std::size_t> width(table.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t c = 0; c < table.columns.size(); ++c) width[c] = table.columns[c].size();
    for (const auto& row : table.rows) {
      auto& text = cells.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c) {
        text.push_back(format_number(row[c]));
        width[c] = std::max(width[c], text.back().size());
      }
    }
    auto emit = [&](const std::vector<std::string>& row) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += fmt::format("{:<{}}", row[c], c + 1 == row.size() ? 0 : width[c] + 2);
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << '\n';
    };
    emit(table.columns);
    for (const auto& row : cells) emit(row);
  }
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  return out.str();
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  if (report.table) {
    const Table& table = *report.table;
    out << join(table.columns, ",", [](const std::string& s) { return csv_escape(s); }) << '\n';
    for (const auto& row : table.rows) {
      out << join(row, ",", [](const Value& v) { return csv_escape(format_number(v)); }) << '\n';
    }
    return out.str();
  }
  std::vector<FlatField> flat;
  flatten(report.fields, "", flat);
  if (!report.notes.empty()) {
    std::string joined;
    for (const auto& note : report.notes) joined += (joined.empty() ? "" : "; ") + note;
    flat.push_back({"note", joined});
  }
  out << join(flat, ",", [](const FlatField& f) { return csv_escape(f.key); }) << '\n';
  out << join(flat, ",", [](const FlatField& f) { return csv_escape(format_number(f.value)); }) << '\n';
  return out.str();
}

std::string render_json(const Report& report) {
  Json doc = Json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = report.command;
  const Json fields = to_json(report.fields);
  for (const auto& [key, value] : fields.items()) doc[key] = value;
  if (report.table) {
    Json rows = Json::array();
    for (const auto& row : report.table->rows) {
      Json obj = Json::object();
      for (std::size_t c = 0; c < row.size(); ++c) obj[report.table->columns[c]] = to_json(row[c]);
      rows.push_back(std::move(obj));
    }
    doc[report.table->name] = std::move(rows);
  }
  if (!report.notes.empty()) doc["notes"] = report.notes;
  return doc.dump(2) + "\n";
}

}  // namespace

std::string format_number(const Value& value) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return fmt::format("{:.6g}", x);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          return fmt::format("{}", x);
        }
      },
      value);
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Plain:
      return render_plain(report);
    case Format::Csv:
      return render_csv(report);
    case Format::Json:
      return render_json(report);
  }
  return {};
}

}  // namespace kset::cli
