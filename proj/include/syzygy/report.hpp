#pragma once

// Verification reports: per-check records with exact recorded values,
// human and machine serialization, and golden-value files that freeze
// derived scalars so later runs can assert they have not drifted.
//
// Determinism contract: the canonical body (machine format with timings
// stripped) is byte-identical across re-runs with the same inputs.  Record
// equality ignores timings for the same reason.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace syz {

enum class CheckStatus { pass, fail, skipped };

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

inline CheckStatus status_from_name(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skipped") return CheckStatus::skipped;
  throw std::invalid_argument("report: unknown status '" + s + "'");
}

// A single named quantity recorded by a check.  `source` is "claimed" when
// the value was transcribed from an external statement and merely verified,
// "derived" when this library computed it; only derived values participate
// in golden-file freezing.
struct RecordedValue {
  std::string name;
  std::string value;   // exact text: integers, fractions, tuples
  std::string source;  // "claimed" | "derived"

  friend bool operator==(const RecordedValue& a, const RecordedValue& b) {
    return a.name == b.name && a.value == b.value && a.source == b.source;
  }
};

struct CheckRecord {
  std::string id;
  CheckStatus status = CheckStatus::skipped;
  std::vector<RecordedValue> values;  // insertion order preserved
  std::vector<std::string> notes;
  std::string error;  // diagnostic, nonempty when status == fail
  long long millis = 0;

  void claim(std::string name, std::string value) {
    values.push_back({std::move(name), std::move(value), "claimed"});
  }
  void derive(std::string name, std::string value) {
    values.push_back({std::move(name), std::move(value), "derived"});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }

  const RecordedValue* find(const std::string& name) const {
    for (const auto& v : values)
      if (v.name == name) return &v;
    return nullptr;
  }

  // Timings are excluded from equality: two runs of the same checks on the
  // same inputs compare equal no matter how long they took.
  friend bool operator==(const CheckRecord& a, const CheckRecord& b) {
    return a.id == b.id && a.status == b.status && a.values == b.values &&
           a.notes == b.notes && a.error == b.error;
  }
};

struct VerificationReport {
  std::vector<CheckRecord> records;  // registry order

  bool all_passed() const {
    return std::none_of(records.begin(), records.end(), [](const CheckRecord& r) {
      return r.status == CheckStatus::fail;
    });
  }
  int exit_code() const { return all_passed() ? 0 : 1; }

  const CheckRecord* find(const std::string& id) const {
    for (const auto& r : records)
      if (r.id == id) return &r;
    return nullptr;
  }

  friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.records == b.records;
  }
};

namespace detail {

inline nlohmann::json record_to_json(const CheckRecord& r, bool with_timings) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : r.values)
    values.push_back({{"name", v.name}, {"value", v.value}, {"source", v.source}});
  nlohmann::json j{{"id", r.id},
                   {"status", status_name(r.status)},
                   {"values", std::move(values)},
                   {"notes", r.notes},
                   {"error", r.error}};
  if (with_timings) j["millis"] = r.millis;
  return j;
}

inline CheckRecord record_from_json(const nlohmann::json& j) {
  CheckRecord r;
  r.id = j.at("id").get<std::string>();
  r.status = status_from_name(j.at("status").get<std::string>());
  for (const auto& v : j.at("values"))
    r.values.push_back({v.at("name").get<std::string>(), v.at("value").get<std::string>(),
                        v.at("source").get<std::string>()});
  for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
  r.error = j.at("error").get<std::string>();
  if (j.contains("millis")) r.millis = j.at("millis").get<long long>();
  return r;
}

inline nlohmann::json report_to_json(const VerificationReport& rep, bool with_timings) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : rep.records) records.push_back(record_to_json(r, with_timings));
  return nlohmann::json{{"report", {{"format", "syzygy-report/1"}, {"records", std::move(records)}}}};
}

}  // namespace detail

// Machine format: stable hierarchical JSON, one record per check, values as
// exact strings.  Round-trips through parse_report into an equal report.
inline std::string machine_format(const VerificationReport& rep) {
  return detail::report_to_json(rep, /*with_timings=*/true).dump(2) + "\n";
}

// Canonical body: machine format with timing keys removed entirely.
// Byte-identical across deterministic re-runs.
inline std::string canonical_body(const VerificationReport& rep) {
  return detail::report_to_json(rep, /*with_timings=*/false).dump(2) + "\n";
}

inline VerificationReport parse_report(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    const nlohmann::json& rep = j.at("report");
    const std::string fmt = rep.at("format").get<std::string>();
    if (fmt != "syzygy-report/1")
      throw std::invalid_argument("report: unsupported format '" + fmt + "'");
    VerificationReport out;
    for (const auto& r : rep.at("records")) out.records.push_back(detail::record_from_json(r));
    return out;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("report: malformed document: ") + e.what());
  }
}

// Human format: aligned table of id / status / headline values, followed by
// indented notes and error diagnostics.
inline std::string human_format(const VerificationReport& rep) {
  std::size_t idw = 5, stw = 6;
  for (const auto& r : rep.records) {
    idw = std::max(idw, r.id.size());
    stw = std::max(stw, status_name(r.status).size());
  }
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  std::string out = pad("check", idw) + "  " + pad("status", stw) + "  values\n";
  out += std::string(idw, '-') + "  " + std::string(stw, '-') + "  " + std::string(6, '-') + "\n";
  for (const auto& r : rep.records) {
    std::string vals;
    for (const auto& v : r.values) {
      if (!vals.empty()) vals += ";  ";
      vals += v.name + " = " + v.value;
    }
    out += pad(r.id, idw) + "  " + pad(status_name(r.status), stw) + "  " + vals + "\n";
    for (const auto& n : r.notes) out += std::string(idw + 2, ' ') + "note: " + n + "\n";
    if (!r.error.empty()) out += std::string(idw + 2, ' ') + "error: " + r.error + "\n";
  }
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : rep.records) {
    if (r.status == CheckStatus::pass) ++passed;
    else if (r.status == CheckStatus::fail) ++failed;
    else ++skipped;
  }
  out += "\n" + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed, " +
         std::to_string(skipped) + " skipped\n";
  return out;
}

// ---------------------------------------------------------------------------
// Golden values: check id -> value name -> exact string, derived values only.

using GoldenMap = std::map<std::string, std::map<std::string, std::string>>;

inline GoldenMap golden_from_report(const VerificationReport& rep) {
  GoldenMap g;
  for (const auto& r : rep.records)
    for (const auto& v : r.values)
      if (v.source == "derived") g[r.id][v.name] = v.value;
  return g;
}

inline std::string golden_format(const GoldenMap& g) {
  nlohmann::json j{{"golden", {{"format", "syzygy-golden/1"}, {"values", g}}}};
  return j.dump(2) + "\n";
}

inline GoldenMap parse_golden(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    const nlohmann::json& g = j.at("golden");
    const std::string fmt = g.at("format").get<std::string>();
    if (fmt != "syzygy-golden/1")
      throw std::invalid_argument("golden: unsupported format '" + fmt + "'");
    return g.at("values").get<GoldenMap>();
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("golden: malformed document: ") + e.what());
  }
}

// Asserts every derived value of `rep` against the golden map: a derived
// value recorded under a different text flips its check to fail.  Values
// missing from the golden map are noted but not failed (new checks may be
// added before the golden file is regenerated).  Returns the mismatch count.
inline int assert_golden(VerificationReport& rep, const GoldenMap& golden) {
  int mismatches = 0;
  for (auto& r : rep.records) {
    auto it = golden.find(r.id);
    for (const auto& v : r.values) {
      if (v.source != "derived") continue;
      if (it == golden.end() || !it->second.count(v.name)) {
        r.note("golden: no recorded value for '" + v.name + "'");
        continue;
      }
      const std::string& want = it->second.at(v.name);
      if (v.value != want) {
        ++mismatches;
        r.status = CheckStatus::fail;
        if (!r.error.empty()) r.error += "; ";
        r.error += "golden mismatch for '" + v.name + "': computed " + v.value +
                   ", recorded " + want;
      }
    }
    if (it == golden.end()) continue;
    for (const auto& [name, value] : it->second) {
      (void)value;
      bool produced = false;
      for (const auto& v : r.values)
        produced = produced || (v.source == "derived" && v.name == name);
      if (!produced) r.note("golden: stale recorded value '" + name + "' (no longer produced)");
    }
  }
  return mismatches;
}

}  // namespace syz
