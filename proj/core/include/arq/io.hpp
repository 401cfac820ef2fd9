#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arq/dga.hpp"
#include "arq/kt.hpp"

namespace arq {

// First offending line of a malformed document.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A parsed document: an algebra on its own, a DG module bundled with its
// algebra, or a graded module over the loop algebra.
struct InputDocument {
    std::string kind;  // "dga", "dg_module", or "kt_module"
    DgaPtr dga;
    ModulePtr module;
    std::optional<GradedKTModule> kt;
};

// Line-oriented format, version 1.  Statements: format, kind, field, side,
// d, degree, algebra_degree, unit, product, action, differential,
// algebra_differential, t.  '#' starts a comment.
InputDocument parse_input(const std::string& text);

// Reads and parses a file.
InputDocument load_input(const std::string& path);

// Canonical text for a document: parsing it back gives an equal object and
// serializing that gives identical bytes.
std::string serialize(const FinDga& r);
std::string serialize(const DGModule& m);
std::string serialize(const GradedKTModule& m);
std::string serialize(const InputDocument& doc);

// Two-part command report.  The human lines are free-form; the machine
// section is line-oriented key/value and round-trips through parse_report.
struct Report {
    std::string command;
    std::vector<std::string> human;
    std::vector<std::pair<std::string, std::string>> machine;

    void note(const std::string& line) { human.push_back(line); }
    void record(const std::string& key, const std::string& value) {
        machine.push_back({key, value});
    }
    void record(const std::string& key, long long value) {
        machine.push_back({key, std::to_string(value)});
    }
    std::string render() const;
};

// Recovers the command echo, human lines, and machine records from a
// rendered report.
Report parse_report(const std::string& text);

}  // namespace arq
