#include <algorithm>
#include <ostream>

#include "nsg/cli.hpp"

namespace nsg::cli {

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const Json& v) {
  std::string text = cell(v);
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void table_rows(const Json& rows, std::ostream& out) {
  if (rows.empty()) {
    out << "(no rows)\n";
    return;
  }
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  std::vector<std::size_t> width;
  for (const auto& k : keys) width.push_back(k.size());
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) width[i] = std::max(width[i], cell(row.at(keys[i])).size());
  }
  auto line = [&](auto&& text_of) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const std::string t = text_of(i);
      out << t;
      if (i + 1 < keys.size()) out << std::string(width[i] - t.size() + 2, ' ');
    }
    out << '\n';
  };
  line([&](std::size_t i) { return keys[i]; });
  line([&](std::size_t i) { return std::string(width[i], '-'); });
  for (const auto& row : rows) line([&](std::size_t i) { return cell(row.at(keys[i])); });
}

}  // namespace

void render(const RunReport& report, Format format, bool timing, std::ostream& out, std::ostream& err) {
  if (format == Format::Json) {
    Json j;
    j["status"] = !report.ok ? "error" : report.exit_code == 0 ? "ok" : "failed_checks";
    j["tool_version"] = report.tool_version;
    if (timing) j["elapsed_ms"] = report.elapsed_ms;
    j[report.ok ? "payload" : "error"] = report.payload;
    out << j.dump(2) << '\n';
    return;
  }
  if (!report.ok) {
    err << "error [" << report.payload.at("code").get<std::string>() << "]: "
        << report.payload.at("message").get<std::string>() << '\n';
    return;
  }
  const Json& p = report.payload;
  if (format == Format::Csv) {
    if (p.contains("rows")) {
      const auto& rows = p.at("rows");
      if (!rows.empty()) {
        bool first = true;
        for (const auto& [k, v] : rows.front().items()) {
          out << (first ? "" : ",") << k;
          first = false;
        }
        out << '\n';
      }
      for (const auto& row : rows) {
        bool first_cell = true;
        for (const auto& [k, v] : row.items()) {
          out << (first_cell ? "" : ",") << csv_cell(v);
          first_cell = false;
        }
        out << '\n';
      }
    } else {
      out << "key,value\n";
      for (const auto& [k, v] : p.items()) out << k << ',' << csv_cell(v) << '\n';
    }
    if (timing) err << "elapsed_ms: " << report.elapsed_ms << '\n';
    return;
  }
  for (const auto& [k, v] : p.items()) {
    if (k != "rows") out << k << ": " << cell(v) << '\n';
  }
  if (p.contains("rows")) table_rows(p.at("rows"), out);
  if (timing) out << "elapsed_ms: " << report.elapsed_ms << '\n';
  out << "version: " << report.tool_version << '\n';
}

}  // namespace nsg::cli
