#pragma once

#include <stdexcept>
#include <string>

#include "swvote/indices.hpp"
#include "swvote/voting.hpp"

namespace swvote {

/// Spec-file parse or validation failure (CLI exit code 2).
class spec_error : public std::runtime_error {
public:
    explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

/// A parsed system spec file: voter names, either weighted-quota rows or
/// an explicit minimal-coalition list, and optional forbidden coalitions
/// given by voter names.
struct SystemSpec {
    std::string name;
    VotingSystem system;
};

SystemSpec parse_system_spec(const std::string& json_text);
SystemSpec load_system_spec(const std::string& path);

/// Resolves a comma-separated voter-name list against the system, e.g. the
/// argument of a --forbid flag.
ForbiddenCoalition parse_forbidden_names(const VotingSystem& sys, const std::string& csv_names);

enum class ReportFormat { PlainTable, Csv, JsonLines };

ReportFormat parse_format(const std::string& name);

/// Deterministic rendering; column order is voter, weight(s), tbp, pbp,
/// pii, ppi, sat, nsat, psat, pgi, formula, restricted. Rationals appear
/// as exact p/q (plain and CSV also carry a 6-place decimal).
std::string render_report(const IndexReport& report, ReportFormat fmt);

/// Re-reads a JSON-lines rendering; inverse of render_report for that
/// format.
IndexReport parse_jsonl_report(const std::string& text);

} // namespace swvote
