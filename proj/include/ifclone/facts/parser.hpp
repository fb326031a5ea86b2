#pragma once

#include <string>
#include <vector>

#include "ifclone/facts/types.hpp"

namespace ifclone::facts {

struct ParseOptions {
    /// Extra glob patterns ('*' and '?') matched against simple and qualified
    /// names to mark types as test code, on top of the built-in rules
    /// (package segment "test"/"tests", names Test*/*Test/*Tests).
    std::vector<std::string> test_name_patterns;
};

struct ParseOutcome {
    CodeModel model;
    std::vector<std::string> warnings;
};

/// One source unit, for in-memory parsing in tests and for file contents.
struct SourceUnit {
    std::string path;
    std::string text;
};

/// Parse an in-memory set of source units into a CodeModel.
ParseOutcome parse_source_units(const std::vector<SourceUnit>& units,
                                const ParseOptions& options = {});

/// Walk the roots for *.java files and parse them. Unreadable roots raise
/// IoError; zero discovered files raise NoSourceFoundError; files that fail
/// to parse are skipped and reported as warnings.
ParseOutcome parse_source_tree(const std::vector<std::string>& roots,
                               const ParseOptions& options = {});

/// Built-in + configured test-name detection, exposed for filtering rules.
bool matches_test_name(const std::string& qualified_name,
                       const std::vector<std::string>& package_path,
                       const std::vector<std::string>& extra_patterns);

} // namespace ifclone::facts
