#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rfmlab::io {

// Shortest round-trip decimal representation (std::to_chars); locale-free,
// byte-stable across runs.
std::string format_double(double v);

std::uint64_t fnv1a64(std::string_view s);
std::string hash_hex(std::uint64_t h);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::vector<std::uint8_t> read_binary_file(const std::string& path);
void write_binary_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Minimal line chart (one polyline per series, log-log axes optional).
std::string svg_line_chart(const std::string& title,
                           const std::string& x_label, const std::string& y_label,
                           const std::vector<SvgSeries>& series,
                           bool log_x = true, bool log_y = true);

}  // namespace rfmlab::io
