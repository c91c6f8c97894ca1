#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "mdirichlet/poly.hpp"

namespace mdirichlet {

/// Shortest round-trip decimal representation; keeps reports byte-stable.
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

namespace detail {

inline double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("polynomial text: bad number '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

inline MultiIndex parse_index(std::string_view s, int nvars) {
  auto parts = split(s, ',');
  if (static_cast<int>(parts.size()) != nvars)
    throw std::invalid_argument("polynomial text: index arity mismatch");
  MultiIndex m;
  for (int j = 0; j < nvars; ++j) {
    int v = 0;
    auto sv = parts[static_cast<std::size_t>(j)];
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc() || ptr != sv.data() + sv.size() || v < 0)
      throw std::invalid_argument("polynomial text: bad exponent '" + std::string(sv) + "'");
    m.set(j, v);
  }
  return m;
}

}  // namespace detail

/// One term per line, "alpha|beta|re|im" with comma-separated exponents,
/// in graded-lex order. Example (n=2): "1,0|0,2|0.5|-1.25".
inline std::string to_text(const ComplexPoly& f) {
  std::string out;
  for (const auto& [k, c] : f.terms()) {
    out += k.alpha.to_string(f.nvars());
    out += '|';
    out += k.beta.to_string(f.nvars());
    out += '|';
    out += format_double(c.real());
    out += '|';
    out += format_double(c.imag());
    out += '\n';
  }
  return out;
}

/// Parses the textual term format; the variable count is taken from the
/// first line. Throws std::invalid_argument on malformed input.
inline ComplexPoly complex_poly_from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : detail::split(text, '\n'))
    if (!line.empty() && line != "\r") lines.push_back(line);
  if (lines.empty()) throw std::invalid_argument("polynomial text: empty input");
  auto first = detail::split(lines[0], '|');
  if (first.size() != 4) throw std::invalid_argument("polynomial text: expected 4 fields");
  int nvars = static_cast<int>(detail::split(first[0], ',').size());
  ComplexPoly f(nvars);
  for (auto line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto fields = detail::split(line, '|');
    if (fields.size() != 4)
      throw std::invalid_argument("polynomial text: expected 4 fields per line");
    MultiIndex a = detail::parse_index(fields[0], nvars);
    MultiIndex b = detail::parse_index(fields[1], nvars);
    f.add_term(a, b, Complex(detail::parse_double(fields[2]), detail::parse_double(fields[3])));
  }
  return f;
}

/// One term per line, "gamma|coeff". Example (n=3): "2,0,1|0.75".
inline std::string to_text(const RealPoly& f) {
  std::string out;
  for (const auto& [k, c] : f.terms()) {
    out += k.to_string(f.nvars());
    out += '|';
    out += format_double(c);
    out += '\n';
  }
  return out;
}

inline RealPoly real_poly_from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : detail::split(text, '\n'))
    if (!line.empty() && line != "\r") lines.push_back(line);
  if (lines.empty()) throw std::invalid_argument("polynomial text: empty input");
  auto first = detail::split(lines[0], '|');
  if (first.size() != 2) throw std::invalid_argument("polynomial text: expected 2 fields");
  int nvars = static_cast<int>(detail::split(first[0], ',').size());
  RealPoly f(nvars);
  for (auto line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto fields = detail::split(line, '|');
    if (fields.size() != 2)
      throw std::invalid_argument("polynomial text: expected 2 fields per line");
    f.add_term(detail::parse_index(fields[0], nvars), detail::parse_double(fields[1]));
  }
  return f;
}

}  // namespace mdirichlet
