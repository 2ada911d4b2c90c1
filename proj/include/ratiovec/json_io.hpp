#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratiovec/error.hpp"

namespace ratiovec::io {

/// 17 significant digits, enough to round-trip any double exactly.
std::string fmt_double(double v);

std::string json_escape(std::string_view s);

/// RFC-4180: quote a field when it contains a comma, quote, or newline.
std::string csv_field(std::string_view s);

struct Instance {
  std::vector<double> roots;
  std::vector<double> mults;
};

/// Parses {"roots": [...], "mults": [...]}; extra keys are ignored so that
/// emitted reports can be fed back in as instances.
Instance parse_instance_json(const std::string& text);
Instance load_instance_file(const std::string& path);

/// Minimal ordered JSON emitter. Reports are written through this (rather
/// than a DOM) so every number is serialized with fmt_double.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double v);
  JsonWriter& value(bool v);
  JsonWriter& value(long long v);
  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
  JsonWriter& value(std::string_view v);
  JsonWriter& value(std::span<const double> v);
  JsonWriter& null();

  /// Appends an already-serialized JSON value verbatim.
  JsonWriter& raw(std::string_view v);

  const std::string& str() const { return out_; }

 private:
  void comma();
  std::string out_;
  std::vector<bool> need_comma_;
  bool after_key_ = false;
};

}  // namespace ratiovec::io
