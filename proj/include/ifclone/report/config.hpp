#pragma once

#include <set>
#include <string>
#include <vector>

#include "ifclone/metrics/metrics.hpp"
#include "ifclone/textclone/textclone.hpp"

namespace ifclone::report {

enum class OutputFormat { Json, Csv, Markdown };

struct AnalysisConfig {
    std::vector<std::string> source_roots;
    bool exclude_tests = true;
    std::vector<std::string> test_patterns;
    textclone::CloneParams clone_params;
    std::set<metrics::CorrelationMethod> correlation_methods = {
        metrics::CorrelationMethod::Pearson, metrics::CorrelationMethod::Spearman};
    std::string output_dir = ".";
    std::set<OutputFormat> formats = {OutputFormat::Json, OutputFormat::Csv,
                                      OutputFormat::Markdown};
    std::string dump_model_path; // optional
    bool include_within_interface_clones = false;
    bool strip_line_comments = false;

    /// At least one root, one format, and valid clone parameters.
    bool valid() const {
        return !source_roots.empty() && !formats.empty() && clone_params.valid();
    }
};

} // namespace ifclone::report
