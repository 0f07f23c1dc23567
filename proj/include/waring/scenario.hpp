#pragma once
// Named verification scenarios and JSON-configured check lists.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "waring/workspace.hpp"

namespace waring {

// basis: "stated" for values quoted from the source text, "derived" for
// values computed by an independent route, "trivial" for immediate facts.
struct CheckRecord {
  std::string scenario, check, group, basis;
  bool pass = false;
  double seconds = 0;
  nlohmann::json detail;
};

enum class ReportFormat { Jsonl, Tsv };
ReportFormat parse_format(const std::string& s);
nlohmann::json to_json(const CheckRecord& r, bool timings = true);
void write_header(std::ostream& out, ReportFormat f);
void write_record(std::ostream& out, ReportFormat f, const CheckRecord& r, bool timings = true);

using RecordSink = std::function<void(const CheckRecord&)>;

class ScenarioContext {
 public:
  ScenarioContext(Workspace& ws, std::string scenario, RecordSink sink)
      : ws_(ws), scenario_(std::move(scenario)), sink_(std::move(sink)) {}
  Workspace& ws() { return ws_; }
  unsigned threads() const { return ws_.options().threads; }
  // Runs body, timing it; an exception marks the check failed with the
  // message in detail["error"].
  void check(const std::string& name, const std::string& group, const std::string& basis,
             const std::function<bool(nlohmann::json&)>& body);
  const std::vector<CheckRecord>& records() const { return records_; }

 private:
  Workspace& ws_;
  std::string scenario_;
  RecordSink sink_;
  std::vector<CheckRecord> records_;
};

struct ScenarioInfo {
  std::string name, summary;
};
const std::vector<ScenarioInfo>& scenario_catalog();

struct ScenarioSummary {
  std::string name;
  size_t passed = 0, failed = 0;
  double seconds = 0;
  bool ok() const { return failed == 0; }
};

// Throws std::invalid_argument for an unknown name.
ScenarioSummary run_scenario(const std::string& name, Workspace& ws, const RecordSink& sink);
// Config layout: {"name": ..., "checks": [{"op": ..., ...}, ...]}; see README.
// Throws std::invalid_argument on a malformed config.
ScenarioSummary run_config(const nlohmann::json& config, Workspace& ws, const RecordSink& sink);

}  // namespace waring
