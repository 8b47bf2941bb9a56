#include "zgap/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zgap::cli {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw std::invalid_argument("format must be json or csv");
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.13g", value);
  return buf;
}

nlohmann::ordered_json json_real(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::stod(format_real(value));
}

nlohmann::ordered_json record_json(const ReportRecord& record, const ReportMeta& meta) {
  nlohmann::ordered_json j;
  const auto& res = record.result;
  const nlohmann::ordered_json null;
  j["kappa"] = res ? json_real(res->kappa) : null;
  j["nu"] = res ? json_real(res->nu) : null;
  j["theta"] = to_string(record.theta);
  j["r"] = record.r;
  j["degree"] = record.degree;
  j["coeffs"] = nlohmann::ordered_json::array();
  if (res) {
    for (double b : res->coefficients) j["coeffs"].push_back(json_real(b));
  }
  j["h"] = res ? json_real(res->h) : null;
  j["c0"] = res ? json_real(res->c0) : null;
  j["c1"] = res ? json_real(res->c1) : null;
  if (res && res->kappa_input) j["kappa_input"] = json_real(*res->kappa_input);
  if (!record.error.empty()) j["error"] = record.error;

  nlohmann::ordered_json m;
  if (meta.seed) m["seed"] = *meta.seed;
  if (meta.samples) m["samples"] = *meta.samples;
  m["runtime_ms"] = json_real(meta.runtime_ms);
  m["version"] = meta.version;
  j["meta"] = m;
  return j;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_report(std::span<const ReportRecord> records) {
  std::ostringstream os;
  os << "kappa,nu,theta,r,degree,coeffs,h,c0,c1,kappa_input,error\n";
  for (const auto& rec : records) {
    const auto& res = rec.result;
    auto real = [&](auto getter) { return res ? format_real(getter(*res)) : std::string(); };
    std::string coeffs;
    if (res) {
      for (std::size_t i = 0; i < res->coefficients.size(); ++i) {
        coeffs += (i ? ";" : "") + format_real(res->coefficients[i]);
      }
    }
    os << real([](const auto& r) { return r.kappa; }) << ','
       << real([](const auto& r) { return r.nu; }) << ',' << to_string(rec.theta) << ','
       << rec.r << ',' << rec.degree << ',' << coeffs << ','
       << real([](const auto& r) { return r.h; }) << ','
       << real([](const auto& r) { return r.c0; }) << ','
       << real([](const auto& r) { return r.c1; }) << ','
       << (res && res->kappa_input ? format_real(*res->kappa_input) : std::string()) << ','
       << csv_escape(rec.error) << '\n';
  }
  return os.str();
}

}  // namespace

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot write report to '" + path + "'");
  file << text;
  if (!file) throw OutputError("cannot write report to '" + path + "'");
}

void emit_report(std::span<const ReportRecord> records, const ReportMeta& meta, Format format,
                 const std::string& path, std::ostream& out) {
  std::string text;
  if (format == Format::csv) {
    text = csv_report(records);
  } else {
    nlohmann::ordered_json j;
    if (records.size() == 1) {
      j = record_json(records.front(), meta);
    } else {
      j = nlohmann::ordered_json::array();
      for (const auto& rec : records) j.push_back(record_json(rec, meta));
    }
    text = j.dump(2) + "\n";
  }
  write_output(text, path, out);
}

}  // namespace zgap::cli
