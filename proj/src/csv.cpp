#include "pidfair/csv.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pidfair {

namespace {

std::vector<std::vector<std::string>> parse_rfc4180(const std::string& text,
                                                    const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;

  size_t i = 0;
  const size_t n = text.size();
  auto end_field = [&] {
    row.push_back(field);
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  while (i < n) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < n && text[i + 1] == '"') {
          field += '"';
          i += 2;
        } else {
          quoted = false;
          ++i;
        }
      } else {
        field += c;
        ++i;
      }
    } else if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
      ++i;
    } else if (c == ',') {
      end_field();
      ++i;
    } else if (c == '\r' && i + 1 < n && text[i + 1] == '\n') {
      end_row();
      i += 2;
    } else if (c == '\n') {
      end_row();
      ++i;
    } else {
      field += c;
      field_started = true;
      ++i;
    }
  }
  if (quoted) throw IngestError(path + ": unterminated quoted field");
  if (field_started || !row.empty()) end_row();
  return rows;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  auto rows = parse_rfc4180(buf.str(), path);
  if (rows.empty()) throw IngestError(path + ": missing header row");
  CsvTable table;
  table.header = std::move(rows.front());
  rows.erase(rows.begin());
  table.rows = std::move(rows);
  return table;
}

JointDist ingest_csv(const std::string& path, const std::string& z_col,
                     const std::string& y_col, const std::string& yhat_col,
                     double smoothing) {
  const CsvTable table = read_csv(path);
  auto column_index = [&](const std::string& name) {
    const auto it = std::find(table.header.begin(), table.header.end(), name);
    if (it == table.header.end())
      throw IngestError(path + ": missing column '" + name + "'");
    return static_cast<size_t>(it - table.header.begin());
  };
  const size_t zi = column_index(z_col);
  const size_t yi = column_index(y_col);
  const bool dataset_only = yhat_col.empty();
  const size_t ai = dataset_only ? 0 : column_index(yhat_col);

  std::vector<SampleRecord> records;
  records.reserve(table.rows.size());
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    auto cell = [&](size_t col, const std::string& name) {
      if (col >= row.size() || row[col].empty())
        throw IngestError(path + ": row " + std::to_string(r + 2) +
                          " has an empty value in column '" + name + "'");
      return row[col];
    };
    SampleRecord rec;
    rec.z = cell(zi, z_col);
    rec.y = cell(yi, y_col);
    rec.yhat = dataset_only ? "*" : cell(ai, yhat_col);
    records.push_back(std::move(rec));
  }
  if (records.empty() && smoothing <= 0.0)
    throw IngestError(path + ": no data rows and no smoothing prior");
  try {
    return from_samples(records, smoothing);
  } catch (const EstimationError& e) {
    throw IngestError(path + ": " + e.what());
  }
}

}  // namespace pidfair
