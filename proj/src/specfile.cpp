#include "swvote/specfile.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace swvote {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int voter_index(const VotingSystem& sys, const std::string& name) {
    auto it = std::find(sys.voters.begin(), sys.voters.end(), name);
    if (it == sys.voters.end()) throw spec_error("unknown voter name \"" + name + "\"");
    return int(it - sys.voters.begin());
}

std::vector<int> voter_indices(const VotingSystem& sys, const json& names, const char* field) {
    if (!names.is_array()) throw spec_error(std::string(field) + " entries must be name lists");
    std::vector<int> out;
    for (const auto& n : names) {
        if (!n.is_string()) throw spec_error(std::string(field) + " entries must be voter names");
        out.push_back(voter_index(sys, n.get<std::string>()));
    }
    return out;
}

} // namespace

SystemSpec parse_system_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw spec_error(std::string("spec file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw spec_error("spec file must be a JSON object");

    SystemSpec spec;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw spec_error("name must be a string");
        spec.name = doc["name"].get<std::string>();
    }

    if (!doc.contains("voters") || !doc["voters"].is_array() || doc["voters"].empty())
        throw spec_error("voters must be a non-empty array of names");
    for (const auto& v : doc["voters"]) {
        if (!v.is_string()) throw spec_error("voters must be strings");
        spec.system.voters.push_back(v.get<std::string>());
    }

    bool has_rows = doc.contains("rows");
    bool has_mwcs = doc.contains("explicit_mwcs");
    if (has_rows == has_mwcs)
        throw spec_error("spec needs exactly one of rows / explicit_mwcs");

    if (has_rows) {
        if (!doc["rows"].is_array() || doc["rows"].empty())
            throw spec_error("rows must be a non-empty array");
        for (const auto& r : doc["rows"]) {
            WeightRow row;
            if (!r.is_object() || !r.contains("weights") || !r.contains("quota"))
                throw spec_error("each row needs weights and quota");
            if (!r["weights"].is_array()) throw spec_error("weights must be an array");
            for (const auto& w : r["weights"]) {
                if (!w.is_number_integer()) throw spec_error("weights must be integers");
                row.weights.push_back(w.get<long long>());
            }
            if (!r["quota"].is_number_integer()) throw spec_error("quota must be an integer");
            row.quota = r["quota"].get<long long>();
            spec.system.rows.push_back(std::move(row));
        }
    } else {
        if (!doc["explicit_mwcs"].is_array() || doc["explicit_mwcs"].empty())
            throw spec_error("explicit_mwcs must be a non-empty array");
        for (const auto& entry : doc["explicit_mwcs"]) {
            auto members = voter_indices(spec.system, entry, "explicit_mwcs");
            if (members.empty()) throw spec_error("explicit_mwcs entries must name voters");
            std::sort(members.begin(), members.end());
            if (std::adjacent_find(members.begin(), members.end()) != members.end())
                throw spec_error("explicit_mwcs entry repeats a voter");
            spec.system.explicit_mwcs.push_back(Product::of_members(members));
        }
    }

    if (doc.contains("forbidden")) {
        if (!doc["forbidden"].is_array()) throw spec_error("forbidden must be an array");
        for (const auto& entry : doc["forbidden"]) {
            auto members = voter_indices(spec.system, entry, "forbidden");
            try {
                spec.system.forbidden.push_back(make_forbidden(std::move(members)));
            } catch (const std::invalid_argument& e) {
                throw spec_error(e.what());
            }
        }
    }

    try {
        spec.system.validate();
    } catch (const std::invalid_argument& e) {
        throw spec_error(e.what());
    }
    return spec;
}

SystemSpec load_system_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open spec file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    SystemSpec spec = parse_system_spec(buf.str());
    if (spec.name.empty()) {
        auto slash = path.find_last_of('/');
        std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
        auto dot = stem.find_last_of('.');
        spec.name = dot == std::string::npos ? stem : stem.substr(0, dot);
    }
    return spec;
}

ForbiddenCoalition parse_forbidden_names(const VotingSystem& sys, const std::string& csv_names) {
    std::vector<int> members;
    std::stringstream ss(csv_names);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) members.push_back(voter_index(sys, item));
    }
    try {
        return make_forbidden(std::move(members));
    } catch (const std::invalid_argument& e) {
        throw spec_error(e.what());
    }
}

ReportFormat parse_format(const std::string& name) {
    if (name == "plain") return ReportFormat::PlainTable;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "jsonl") return ReportFormat::JsonLines;
    throw spec_error("unknown format \"" + name + "\" (expected plain, csv, or jsonl)");
}

namespace {

std::string decimal6(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", r.to_double());
    return buf;
}

std::string cell(const std::optional<Rational>& r, bool with_decimal) {
    if (!r) return "undefined";
    if (!with_decimal) return r->to_string();
    return r->to_string() + " (" + decimal6(*r) + ")";
}

std::string weights_cell(const std::vector<long long>& w) {
    if (w.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(w[i]);
    }
    return out;
}

const char* const kColumns[] = {"voter", "weights", "tbp",  "pbp", "pii",     "ppi",
                                "sat",   "nsat",    "psat", "pgi", "formula", "restricted"};

std::vector<std::string> row_cells(const VoterIndices& v, bool with_decimal) {
    return {
        v.name,
        weights_cell(v.weights),
        std::to_string(v.tbp),
        cell(v.pbp, with_decimal),
        cell(v.pii, with_decimal),
        cell(v.ppi, with_decimal),
        cell(v.sat, with_decimal),
        cell(v.nsat, with_decimal),
        cell(v.psat, with_decimal),
        std::to_string(v.pgi),
        to_string(v.formula_used),
        v.restricted ? "yes" : "no",
    };
}

TbpFormula formula_from_string(const std::string& s) {
    for (TbpFormula f : kAllTbpFormulas)
        if (s == to_string(f)) return f;
    if (s == to_string(TbpFormula::Auto)) return TbpFormula::Auto;
    throw spec_error("unknown formula name \"" + s + "\"");
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw spec_error("bad rational \"" + s + "\"");
    }
}

} // namespace

std::string render_report(const IndexReport& report, ReportFormat fmt) {
    std::ostringstream out;
    if (fmt == ReportFormat::JsonLines) {
        for (const VoterIndices& v : report.rows) {
            ordered_json line;
            line["voter"] = v.name;
            line["weights"] = v.weights;
            line["tbp"] = v.tbp;
            auto put = [&](const char* key, const std::optional<Rational>& r) {
                if (r)
                    line[key] = r->to_string();
                else
                    line[key] = nullptr;
            };
            line["pbp"] = v.pbp.to_string();
            put("pii", v.pii);
            put("ppi", v.ppi);
            put("sat", v.sat);
            put("nsat", v.nsat);
            put("psat", v.psat);
            line["pgi"] = v.pgi;
            line["formula"] = to_string(v.formula_used);
            line["restricted"] = v.restricted;
            out << line.dump() << "\n";
        }
        return out.str();
    }

    if (fmt == ReportFormat::Csv) {
        for (std::size_t c = 0; c < std::size(kColumns); ++c)
            out << (c ? "," : "") << kColumns[c];
        out << "\n";
        for (const VoterIndices& v : report.rows) {
            auto cells = row_cells(v, true);
            for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
            out << "\n";
        }
        return out.str();
    }

    // plain table
    std::vector<std::vector<std::string>> table;
    table.emplace_back(std::begin(kColumns), std::end(kColumns));
    for (const VoterIndices& v : report.rows) table.push_back(row_cells(v, true));
    std::vector<std::size_t> width(table[0].size(), 0);
    for (const auto& row : table)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : table) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    }
    if (report.restricted)
        out << "note: restricted system; conditioned indices are computed on the zero-filled "
               "map\n";
    return out.str();
}

IndexReport parse_jsonl_report(const std::string& text) {
    IndexReport report;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json doc;
        try {
            doc = json::parse(line);
        } catch (const json::exception& e) {
            throw spec_error(std::string("bad JSON line: ") + e.what());
        }
        VoterIndices v;
        v.name = doc.at("voter").get<std::string>();
        for (const auto& w : doc.at("weights")) v.weights.push_back(w.get<long long>());
        v.tbp = doc.at("tbp").get<long long>();
        v.pbp = rational_from_string(doc.at("pbp").get<std::string>());
        auto take = [&](const char* key) -> std::optional<Rational> {
            if (doc.at(key).is_null()) return std::nullopt;
            return rational_from_string(doc.at(key).get<std::string>());
        };
        v.pii = take("pii");
        v.ppi = take("ppi");
        v.sat = take("sat");
        v.nsat = take("nsat");
        v.psat = take("psat");
        v.pgi = doc.at("pgi").get<long long>();
        v.formula_used = formula_from_string(doc.at("formula").get<std::string>());
        v.restricted = doc.at("restricted").get<bool>();
        report.restricted = report.restricted || v.restricted;
        report.rows.push_back(std::move(v));
    }
    return report;
}

} // namespace swvote
