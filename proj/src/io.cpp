#include "weylkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace weylkit::io {

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  const json& node = doc.at(key);
  if (!node.is_array()) throw std::invalid_argument(std::string("'") + key + "' must be an array");
  std::vector<double> out;
  out.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number()) throw std::invalid_argument(std::string("'") + key + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

double number_or(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const json& node = doc.at(key);
  if (!node.is_number()) throw std::invalid_argument(std::string("'") + key + "' must be a number");
  return node.get<double>();
}

double parse_double(std::string_view text) {
  const std::string s(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return value;
}

std::string trim(std::string_view s) {
  std::size_t lo = 0, hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return std::string(s.substr(lo, hi - lo));
}

}  // namespace

JacobiCoefficients parse_coefficients(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("coefficient file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("coefficient file must hold a JSON object");

  std::optional<int> size;
  if (doc.contains("N")) {
    const json& n = doc.at("N");
    if (!n.is_number_integer() || n.get<long long>() < 1) {
      throw std::invalid_argument("'N' must be a positive integer");
    }
    size = static_cast<int>(n.get<long long>());
  }
  return JacobiCoefficients(number_array(doc, "a"), number_array(doc, "b"),
                            number_or(doc, "tail_a", 1.0), number_or(doc, "tail_b", 0.0), size);
}

JacobiCoefficients load_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coefficient file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_coefficients(buffer.str());
}

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(trim(text)), 0.0};
  return {parse_double(trim(text.substr(0, comma))), parse_double(trim(text.substr(comma + 1)))};
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_wave_field(std::ostream& os, const WaveField& field) {
  os << "n,t,value\n";
  for (int t = 0; t <= field.horizon(); ++t) {
    for (int n = 0; n <= field.row_extent(t); ++n) {
      os << n << ',' << t << ',' << format_number(field.at(n, t)) << '\n';
    }
  }
}

void write_response(std::ostream& os, const ResponseVector& r) {
  os << "t,r\n";
  for (std::size_t t = 0; t < r.size(); ++t) os << t << ',' << format_number(r[t]) << '\n';
}

void write_weyl(std::ostream& os, const std::vector<WeylRow>& rows) {
  os << "lambda_re,lambda_im,m_re,m_im,method,tail_bound\n";
  for (const auto& row : rows) {
    os << format_number(row.lambda.real()) << ',' << format_number(row.lambda.imag()) << ','
       << format_number(row.value.value.real()) << ',' << format_number(row.value.value.imag())
       << ',' << to_string(row.value.method) << ',' << format_number(row.value.tail_bound)
       << '\n';
  }
}

void write_compare(std::ostream& os, const std::vector<CompareRow>& rows) {
  os << "lambda_re,lambda_im,m_resolvent_re,m_resolvent_im,m_series_re,m_series_im,abs_diff,"
        "tail_bound\n";
  for (const auto& row : rows) {
    os << format_number(row.lambda.real()) << ',' << format_number(row.lambda.imag()) << ','
       << format_number(row.m_resolvent.real()) << ',' << format_number(row.m_resolvent.imag())
       << ',' << format_number(row.m_series.real()) << ',' << format_number(row.m_series.imag())
       << ',' << format_number(std::abs(row.m_resolvent - row.m_series)) << ','
       << format_number(row.tail_bound) << '\n';
  }
}

void write_extracted(std::ostream& os, const ExtractedResponse& extracted) {
  os << "t,r,imag_residue\n";
  for (std::size_t t = 0; t < extracted.r.size(); ++t) {
    os << t << ',' << format_number(extracted.r[t]) << ','
       << format_number(extracted.imag_residue[t]) << '\n';
  }
}

std::vector<ContourSample> read_contour_samples(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || trim(line) != "z_re,z_im,m_re,m_im") {
    throw std::invalid_argument("sample file must start with header z_re,z_im,m_re,m_im");
  }
  std::vector<ContourSample> samples;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) fields.push_back(parse_double(trim(cell)));
    if (fields.size() != 4) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 4 fields");
    }
    samples.push_back({{fields[0], fields[1]}, {fields[2], fields[3]}});
  }
  return samples;
}

}  // namespace weylkit::io
