#ifndef GUMBALL_REPORT_HPP
#define GUMBALL_REPORT_HPP

#include "gumball/lemmas.hpp"
#include "gumball/search.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gumball::report {

using json = nlohmann::json;

// Every rational is emitted as the authoritative exact fraction plus an
// advisory 12-digit decimal.
json rat_json(const Rat& r);
Rat rat_from_json(const json& j);

json config_json(const Config& c);
Config config_from_json(const json& j);

// {"cap": 3, "mass": {"0": "2/3", "3": "1/3"}, "overflow": "0/1"} with
// zero entries omitted from the map.
json pmf_json(const Pmf& p);
Pmf pmf_from_json(const json& j);

json interval_json(const RatInterval& iv);

json search_report_json(const SearchReport& rep);
json scan_report_json(const ScanReport& rep);
json verdict_json(const CertifiedVerdict& v);

// The versioned report envelope written by every subcommand:
// {schema_version, command, params, verdict, values, violations, timing_ms}.
json make_envelope(const std::string& command, json params, const std::string& verdict,
                   json values, json violations, double timing_ms);

// Checkpoint file payload for verify-general:
// {schema_version, n, prune, canonical_prefix, incumbent_value,
//  incumbent_configs, configs_evaluated, configs_pruned}.
struct CheckpointData {
    unsigned n = 0;
    bool prune = true;
    ResumeState state;
};

json checkpoint_json(const CheckpointData& data);
CheckpointData checkpoint_from_json(const json& j);

// Flattened one-verdict-per-row view for spreadsheets.
struct CsvRow {
    std::string item;
    std::string verdict;
    std::string exact;
    std::string decimal;
    std::string detail;
};

std::string render_csv(const std::string& command, const std::vector<CsvRow>& rows);

}  // namespace gumball::report

#endif
