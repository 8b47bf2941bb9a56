#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "zgap/functional/gap_functional.hpp"

namespace zgap::cli {

enum class Format { json, csv };

/// The report destination could not be written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& text);

/// One optimization or evaluation, together with the amplifier it used.
struct ReportRecord {
  BigRational theta;
  unsigned r = 1;
  unsigned degree = 0;
  std::optional<functional::BoundResult> result;
  std::string error;
};

struct ReportMeta {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  double runtime_ms = 0.0;
  std::string version;
};

/// Real with 12 digits after the leading one (%.13g), so sqrt(6) prints as
/// 2.449489742783.
std::string format_real(double value);

/// JSON number carrying exactly the 12-significant-digit value.
nlohmann::ordered_json json_real(double value);

nlohmann::ordered_json record_json(const ReportRecord& record, const ReportMeta& meta);

/// JSON: one object for a single record, an array otherwise. CSV: header row
/// plus one row per record. Writes to `path`, or to `out` when path is empty.
/// Throws OutputError if the path cannot be written.
void emit_report(std::span<const ReportRecord> records, const ReportMeta& meta, Format format,
                 const std::string& path, std::ostream& out);

/// Writes `text` to `path`, or to `out` when path is empty.
void write_output(const std::string& text, const std::string& path, std::ostream& out);

}  // namespace zgap::cli
