#include "gumball/report.hpp"

#include <sstream>
#include <stdexcept>

namespace gumball::report {

json rat_json(const Rat& r) {
    return json{{"exact", r.to_fraction_string()}, {"decimal", r.to_decimal_string()}};
}

Rat rat_from_json(const json& j) {
    return Rat::parse(j.at("exact").get<std::string>());
}

json config_json(const Config& c) {
    return json{{"n", c.n}, {"ones", c.ones}, {"jays", c.jays}};
}

Config config_from_json(const json& j) {
    Config c;
    c.n = j.at("n").get<unsigned>();
    c.ones = j.at("ones").get<unsigned>();
    c.jays = j.at("jays").get<std::vector<unsigned>>();
    c.validate();
    return c;
}

json pmf_json(const Pmf& p) {
    json mass = json::object();
    for (unsigned v = 0; v <= p.cap(); ++v) {
        if (!p.at(v).is_zero())
            mass[std::to_string(v)] = p.at(v).to_fraction_string();
    }
    return json{{"cap", p.cap()},
                {"mass", std::move(mass)},
                {"overflow", p.overflow().to_fraction_string()}};
}

Pmf pmf_from_json(const json& j) {
    unsigned cap = j.at("cap").get<unsigned>();
    std::vector<Rat> mass(cap + 1, Rat(0));
    for (const auto& [key, value] : j.at("mass").items())
        mass.at(std::stoul(key)) = Rat::parse(value.get<std::string>());
    return Pmf(std::move(mass), Rat::parse(j.at("overflow").get<std::string>()));
}

json interval_json(const RatInterval& iv) {
    return json{{"lo", rat_json(iv.lo)}, {"hi", rat_json(iv.hi)}};
}

json search_report_json(const SearchReport& rep) {
    json argmin = json::array();
    for (const auto& c : rep.argmin)
        argmin.push_back(config_json(c));
    return json{
        {"n", rep.n},
        {"min_value", rat_json(rep.min_value)},
        {"argmin", argmin},
        {"conjecture_value", rat_json(rep.conjecture_value)},
        {"conjecture_holds", rep.conjecture_holds},
        {"argmin_unique_at_conjecture", rep.argmin_unique_at_conjecture},
        {"configs_evaluated", rep.configs_evaluated.get_str()},
        {"configs_pruned", rep.configs_pruned.get_str()},
        {"complete", rep.complete},
    };
}

json scan_report_json(const ScanReport& rep) {
    json violations = json::array();
    for (const auto& v : rep.violations) {
        violations.push_back(json{{"n", v.n},
                                  {"m", v.m},
                                  {"f_m", rat_json(v.f_m)},
                                  {"f_m_plus_1", rat_json(v.f_m1)}});
    }
    json out{{"n_lo", rep.n_lo},
             {"n_hi", rep.n_hi},
             {"m_max", rep.m_max},
             {"stride", rep.stride},
             {"all_pass", rep.all_pass},
             {"violations", violations}};
    if (rep.largest_failing_n)
        out["largest_failing_n"] = *rep.largest_failing_n;
    return out;
}

json verdict_json(const CertifiedVerdict& v) {
    return json{{"status", to_string(v.status)},
                {"lhs", interval_json(v.lhs)},
                {"rhs", rat_json(v.rhs)},
                {"detail", v.detail}};
}

json make_envelope(const std::string& command, json params, const std::string& verdict,
                   json values, json violations, double timing_ms) {
    return json{{"schema_version", 1},
                {"command", command},
                {"params", std::move(params)},
                {"verdict", verdict},
                {"values", std::move(values)},
                {"violations", std::move(violations)},
                {"timing_ms", timing_ms}};
}

json checkpoint_json(const CheckpointData& data) {
    json configs = json::array();
    for (const auto& c : data.state.incumbent_configs)
        configs.push_back(config_json(c));
    return json{{"schema_version", 1},
                {"n", data.n},
                {"prune", data.prune},
                {"canonical_prefix", data.state.completed_prefix},
                {"incumbent_value", data.state.incumbent.to_fraction_string()},
                {"incumbent_configs", configs},
                {"configs_evaluated", data.state.configs_evaluated.get_str()},
                {"configs_pruned", data.state.configs_pruned.get_str()}};
}

CheckpointData checkpoint_from_json(const json& j) {
    if (j.at("schema_version").get<int>() != 1)
        throw std::domain_error("checkpoint: unsupported schema version");
    CheckpointData data;
    data.n = j.at("n").get<unsigned>();
    data.prune = j.at("prune").get<bool>();
    data.state.completed_prefix = j.at("canonical_prefix").get<std::vector<unsigned>>();
    data.state.incumbent = Rat::parse(j.at("incumbent_value").get<std::string>());
    for (const auto& c : j.at("incumbent_configs"))
        data.state.incumbent_configs.push_back(config_from_json(c));
    data.state.configs_evaluated = Int(j.at("configs_evaluated").get<std::string>());
    data.state.configs_pruned = Int(j.at("configs_pruned").get<std::string>());
    return data;
}

namespace {

std::string csv_escape(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string render_csv(const std::string& command, const std::vector<CsvRow>& rows) {
    std::ostringstream os;
    os << "command,item,verdict,exact,decimal,detail\n";
    for (const auto& r : rows) {
        os << csv_escape(command) << ',' << csv_escape(r.item) << ',' << csv_escape(r.verdict)
           << ',' << csv_escape(r.exact) << ',' << csv_escape(r.decimal) << ','
           << csv_escape(r.detail) << '\n';
    }
    return os.str();
}

}  // namespace gumball::report
