#include "fieq/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fieq/json_report.hpp"

namespace fieq {
namespace {

using nlohmann::json;

bool has_csv_extension(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open \"" + path + "\" for reading");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw io_error("malformed JSON in \"" + path + "\": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open \"" + path + "\" for writing");
  out << text;
  if (!out) throw io_error("write failed for \"" + path + "\"");
}

double parse_csv_number(const std::string& cell, const std::string& path, std::size_t row,
                        std::size_t col) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &pos);
  } catch (const std::exception&) {
    throw io_error("\"" + path + "\": bad number at row " + std::to_string(row) + ", column " +
                   std::to_string(col));
  }
  while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
  if (pos != cell.size()) {
    throw io_error("\"" + path + "\": trailing junk at row " + std::to_string(row) + ", column " +
                   std::to_string(col));
  }
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

Kernel load_kernel_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open \"" + path + "\" for reading");
  std::string line;
  if (!std::getline(in, line)) throw io_error("\"" + path + "\": empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> labels = split_csv_line(line);
  if (labels.empty()) throw io_error("\"" + path + "\": missing header row");
  const std::size_t n = labels.size();
  std::vector<double> values;
  values.reserve(n * n);
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && row == n) break;
    auto cells = split_csv_line(line);
    if (cells.size() != n) {
      throw io_error("\"" + path + "\": non-square row " + std::to_string(row + 1) + " has " +
                     std::to_string(cells.size()) + " cells, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const double v = parse_csv_number(cells[c], path, row + 1, c);
      if (!std::isfinite(v)) {
        throw io_error("\"" + path + "\": non-finite entry at row " + std::to_string(row + 1) +
                       ", column " + std::to_string(c));
      }
      values.push_back(v);
    }
    ++row;
  }
  if (row != n) {
    throw io_error("\"" + path + "\": non-square: " + std::to_string(row) + " rows for " +
                   std::to_string(n) + " columns");
  }
  try {
    return Kernel(PointSet(std::move(labels)), std::move(values));
  } catch (const argument_error& e) {
    throw io_error("\"" + path + "\": " + e.what());
  }
}

std::string render_csv_number(double v) { return json(v).dump(); }

void write_kernel_csv(const Kernel& k, const std::string& path) {
  std::ostringstream out;
  const std::size_t n = k.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& label = k.points().label(i);
    if (label.find(',') != std::string::npos || label.find('\n') != std::string::npos) {
      throw io_error("label \"" + label + "\" cannot be written to CSV");
    }
    out << label << (i + 1 < n ? "," : "\n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out << render_csv_number(k(i, j)) << (j + 1 < n ? "," : "\n");
    }
  }
  write_text(path, out.str());
}

std::vector<double> finite_vector(const json& arr, const std::string& path,
                                  const std::string& where) {
  if (!arr.is_array()) throw io_error("\"" + path + "\": " + where + " must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      throw io_error("\"" + path + "\": non-numeric entry at " + where + "[" + std::to_string(i) +
                     "]");
    }
    const double v = arr[i].get<double>();
    if (!std::isfinite(v)) {
      throw io_error("\"" + path + "\": non-finite entry at " + where + "[" + std::to_string(i) +
                     "]");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

Kernel load_kernel(const std::string& path) {
  if (has_csv_extension(path)) return load_kernel_csv(path);
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("points") || !j.contains("values")) {
    throw io_error("\"" + path + "\": expected an object with \"points\" and \"values\"");
  }
  std::vector<std::string> labels;
  for (const auto& p : j.at("points")) {
    if (!p.is_string()) throw io_error("\"" + path + "\": points must be strings");
    labels.push_back(p.get<std::string>());
  }
  const json& rows = j.at("values");
  if (!rows.is_array()) throw io_error("\"" + path + "\": values must be an array of rows");
  const std::size_t n = labels.size();
  if (rows.size() != n) {
    throw io_error("\"" + path + "\": non-square: " + std::to_string(rows.size()) +
                   " rows for " + std::to_string(n) + " points");
  }
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw io_error("\"" + path + "\": non-square: row " + std::to_string(i) + " has " +
                     std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t jj = 0; jj < n; ++jj) {
      if (!rows[i][jj].is_number()) {
        throw io_error("\"" + path + "\": non-numeric entry at values[" + std::to_string(i) +
                       "][" + std::to_string(jj) + "]");
      }
      const double v = rows[i][jj].get<double>();
      if (!std::isfinite(v)) {
        throw io_error("\"" + path + "\": non-finite entry at values[" + std::to_string(i) +
                       "][" + std::to_string(jj) + "]");
      }
      values.push_back(v);
    }
  }
  try {
    return Kernel(PointSet(std::move(labels)), std::move(values));
  } catch (const argument_error& e) {
    throw io_error("\"" + path + "\": " + e.what());
  }
}

void write_kernel(const Kernel& k, const std::string& path) {
  if (has_csv_extension(path)) {
    write_kernel_csv(k, path);
    return;
  }
  write_text(path, kernel_to_json(k).dump(2) + "\n");
}

Potential load_potential(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("points") || !j.contains("values")) {
    throw io_error("\"" + path + "\": expected an object with \"points\" and \"values\"");
  }
  std::vector<std::string> labels;
  for (const auto& p : j.at("points")) labels.push_back(p.get<std::string>());
  auto values = finite_vector(j.at("values"), path, "values");
  try {
    return Potential(PointSet(std::move(labels)), std::move(values));
  } catch (const argument_error& e) {
    throw io_error("\"" + path + "\": " + e.what());
  }
}

void write_potential(const Potential& p, const std::string& path) {
  write_text(path, potential_to_json(p).dump(2) + "\n");
}

PotentialFamily load_family(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("points") || !j.contains("members")) {
    throw io_error("\"" + path + "\": expected an object with \"points\" and \"members\"");
  }
  std::vector<std::string> labels;
  for (const auto& p : j.at("points")) labels.push_back(p.get<std::string>());
  std::vector<std::vector<double>> members;
  for (std::size_t m = 0; m < j.at("members").size(); ++m) {
    members.push_back(
        finite_vector(j.at("members")[m], path, "members[" + std::to_string(m) + "]"));
  }
  try {
    return PotentialFamily(PointSet(std::move(labels)), std::move(members));
  } catch (const argument_error& e) {
    throw io_error("\"" + path + "\": " + e.what());
  }
}

void write_family(const PotentialFamily& f, const std::string& path) {
  write_text(path, family_to_json(f).dump(2) + "\n");
}

FunctionSample load_function_sample(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("values")) {
    throw io_error("\"" + path + "\": expected an object with \"a\", \"b\" and \"values\"");
  }
  FunctionSample s;
  s.a = j.at("a").get<double>();
  s.b = j.at("b").get<double>();
  s.values = finite_vector(j.at("values"), path, "values");
  if (j.contains("bounds") && !j.at("bounds").is_null()) {
    const auto bounds = finite_vector(j.at("bounds"), path, "bounds");
    if (bounds.size() != 2) throw io_error("\"" + path + "\": bounds must be [m, M]");
    s.declared_bounds = std::array<double, 2>{bounds[0], bounds[1]};
  }
  try {
    s.validate();
  } catch (const argument_error& e) {
    throw io_error("\"" + path + "\": " + e.what());
  }
  return s;
}

void write_function_sample(const FunctionSample& s, const std::string& path) {
  json j;
  j["a"] = s.a;
  j["b"] = s.b;
  j["values"] = s.values;
  if (s.declared_bounds) j["bounds"] = *s.declared_bounds;
  write_text(path, j.dump(2) + "\n");
}

}  // namespace fieq
