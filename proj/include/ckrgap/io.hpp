#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ckrgap/cuts.hpp"
#include "ckrgap/instances.hpp"

namespace ckrgap {

using Json = nlohmann::ordered_json;

enum class Format { Json, Dimacs };

std::optional<Format> parse_format(std::string_view name);

/// Optional header fields carried alongside the weights.
struct InstanceMeta {
  std::optional<Rational> c;
  std::optional<std::array<Rational, 4>> lambda;
};

struct InstanceFile {
  WeightMap weights;
  InstanceMeta meta;
};

// Instance JSON:
//   {"format": "ckrgap-instance", "version": 1, "tag", "k", "n", ["c"],
//    ["lambda"], "nodes": [[coords]...], "terminals": [...],
//    "edges": [[u, v, "p/q"]...]}
// Node indices are 0-based in colex order; terminals[i-1] is s_i.
//
// DIMACS-like text, 1-based node indices:
//   c ckrgap-instance 1
//   c tag <tag>
//   c k <k>
//   c n <n>
//   c c <p/q>                        (optional)
//   c lambda <p/q> <p/q> <p/q> <p/q> (optional)
//   p mwc <nodes> <edges> <k>
//   t <node> <terminal>
//   e <u> <v> <p/q>
//
// Zero-weight edges are omitted unless `include_zero` is set.
std::string emit_instance(const WeightMap& w, const InstanceMeta& meta, Format format, bool include_zero = false);

/// Detects the format from the first non-blank character. Throws
/// Error("invalid-parameter") on malformed or inconsistent input.
InstanceFile parse_instance(std::string_view text);

/// {"format": "ckrgap-labeling", "version": 1, "k", "n", "labels": [...]}
std::string emit_labeling(const CutLabeling& p);
CutLabeling parse_labeling(std::string_view text);

std::string read_text_file(const std::string& path);
/// "-" writes to stdout.
void write_text_file(const std::string& path, std::string_view content);

/// {"exact": "p/q", "decimal": "x.xxxxxx"}
Json rational_json(const Rational& value);

/// One verified claim in a report.
struct CheckOutcome {
  std::string id;
  std::string anchor;  // what is being verified
  std::string expected;
  std::string computed;
  std::string tolerance;
  std::string provenance;  // formula | enumeration | max-flow | direct-evaluation
  bool pass = false;
  std::string error;  // error code when the check could not run
};

/// Report of one CLI run. Every numeric result names its provenance.
class RunReport {
 public:
  explicit RunReport(std::string command);

  void parameter(const std::string& key, Json value);
  void result(const std::string& name, const Rational& value, const std::string& provenance);
  void result(const std::string& name, Json value, const std::string& provenance);
  void regime(const std::string& key, const std::string& status);
  void check(const CheckOutcome& outcome);
  void timing_ms(double ms);

  bool all_passed() const noexcept { return failed_ == 0; }
  std::size_t failed() const noexcept { return failed_; }
  const Json& json() const noexcept { return doc_; }

  /// JSON text; `with_timing` false drops the timing field.
  std::string to_json(bool with_timing = true) const;
  std::string to_table() const;

 private:
  Json doc_;
  std::size_t failed_ = 0;
};

}  // namespace ckrgap
