#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/core.hpp"
#include "weylkit/dynamics.hpp"
#include "weylkit/inverse.hpp"
#include "weylkit/spectral.hpp"

namespace weylkit::io {

/// Parses {"a": [...], "b": [...], "tail_a": 1, "tail_b": 0, "N": 5}.
/// All keys are optional; throws std::invalid_argument on malformed input.
JacobiCoefficients parse_coefficients(std::string_view json_text);
JacobiCoefficients load_coefficients(const std::string& path);

/// "re,im" (or a lone real "re").
Complex parse_complex(std::string_view text);

/// %.17g, enough to round-trip any double.
std::string format_number(double value);

void write_wave_field(std::ostream& os, const WaveField& field);
void write_response(std::ostream& os, const ResponseVector& r);

struct WeylRow {
  Complex lambda;
  WeylValue value;
};
void write_weyl(std::ostream& os, const std::vector<WeylRow>& rows);

struct CompareRow {
  Complex lambda;
  Complex m_resolvent;
  Complex m_series;
  double tail_bound = 0.0;
};
void write_compare(std::ostream& os, const std::vector<CompareRow>& rows);

void write_extracted(std::ostream& os, const ExtractedResponse& extracted);

/// CSV with header `z_re,z_im,m_re,m_im`.
std::vector<ContourSample> read_contour_samples(std::istream& is);

}  // namespace weylkit::io
