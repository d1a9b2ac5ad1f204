#include "oird/codec.hpp"

#include <json.hpp>

namespace oird {

std::string encode_grid(const Labeling& f) {
  std::string out;
  out.reserve(f.values.size() + f.spec.rows);
  for (int i = 0; i < f.spec.rows; ++i) {
    for (int j = 0; j < f.spec.cols; ++j)
      out.push_back(static_cast<char>('0' + f.at(i, j)));
    out.push_back('\n');
  }
  return out;
}

Labeling decode_grid(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      pos = text.size();
    } else {
      lines.push_back(text.substr(pos, nl - pos));
      pos = nl + 1;
    }
  }
  if (lines.empty()) throw FormatError("grid: empty input");
  std::size_t m = lines[0].size();
  if (m < 3) throw FormatError("grid: rows must have at least 3 columns");
  if (m > 1000000) throw FormatError("grid: row too long");
  for (const auto& line : lines) {
    if (line.size() != m) throw FormatError("grid: ragged rows");
    for (char c : line)
      if (c != '0' && c != '1' && c != '2')
        throw FormatError(std::string("grid: invalid character '") + c + "'");
  }
  Labeling f(CylinderSpec(static_cast<int>(lines.size()), static_cast<int>(m)));
  for (int i = 0; i < f.spec.rows; ++i)
    for (int j = 0; j < f.spec.cols; ++j)
      f.set(i, j, static_cast<std::uint8_t>(lines[i][j] - '0'));
  return f;
}

std::string encode_record(const Labeling& f) {
  nlohmann::json doc;
  doc["n"] = f.spec.rows;
  doc["m"] = f.spec.cols;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < f.spec.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < f.spec.cols; ++j) row.push_back(static_cast<int>(f.at(i, j)));
    rows.push_back(std::move(row));
  }
  doc["labels"] = std::move(rows);
  return doc.dump();
}

Labeling decode_record(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("record: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") ||
      !doc.contains("labels"))
    throw FormatError("record: expected object with n, m, labels");
  if (!doc["n"].is_number_integer() || !doc["m"].is_number_integer())
    throw FormatError("record: n and m must be integers");
  int n = doc["n"].get<int>();
  int m = doc["m"].get<int>();
  if (n < 1 || m < 3 || n > 1000000 || m > 1000000)
    throw FormatError("record: dimensions out of range");
  const auto& labels = doc["labels"];
  if (!labels.is_array() || labels.size() != static_cast<std::size_t>(n))
    throw FormatError("record: labels must be an array of n rows");
  Labeling f(CylinderSpec(n, m));
  for (int i = 0; i < n; ++i) {
    const auto& row = labels[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(m))
      throw FormatError("record: each row must have m entries");
    for (int j = 0; j < m; ++j) {
      if (!row[j].is_number_integer())
        throw FormatError("record: labels must be integers");
      int v = row[j].get<int>();
      if (v < 0 || v > 2) throw FormatError("record: label out of {0,1,2}");
      f.set(i, j, static_cast<std::uint8_t>(v));
    }
  }
  return f;
}

}  // namespace oird
