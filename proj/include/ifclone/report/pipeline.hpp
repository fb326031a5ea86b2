#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ifclone/facts/filter.hpp"
#include "ifclone/facts/parser.hpp"
#include "ifclone/metrics/metrics.hpp"
#include "ifclone/report/config.hpp"
#include "ifclone/report/suggestions.hpp"
#include "ifclone/textclone/textclone.hpp"

namespace ifclone::report {

/// One named correlation over the metric rows (e.g. IDM against IUC), with
/// both coefficients when computable and a note when not.
struct CorrelationSummary {
    std::string name;
    int n = 0;
    std::optional<metrics::CorrelationResult> pearson;
    std::optional<metrics::CorrelationResult> spearman;
    std::string note; // "insufficient data" / "degenerate sample" when absent
};

struct ReportBundle {
    int schema_version = 1;
    AnalysisConfig config;
    std::vector<std::string> warnings;
    std::vector<facts::RemovalRecord> removed_interfaces;

    int interface_count = 0;
    int class_count = 0;
    long total_declared_methods = 0;

    long dm = 0;
    std::optional<double> rdm; // absent when the filtered model declares nothing

    std::vector<clones::DuplicateGroup> duplicate_groups;
    std::set<facts::TypeId> duplicate_interfaces;
    std::vector<clones::ClonePairRecord> clone_pairs;

    std::vector<metrics::MetricRow> rows;
    std::vector<CorrelationSummary> correlations;

    textclone::AssociationOutcome associations;
    long cc_total = 0;
    long copied_lc_total = 0;

    std::vector<RefactoringSuggestion> suggestions;
};

/// Parse, filter, detect interface clones, compute metrics, associate code
/// clones and build suggestions. Deterministic for identical inputs and
/// config. Throws NoSourceFoundError / IoError for fatal input problems;
/// partial parse failures become warnings in the bundle.
ReportBundle run_analysis(const AnalysisConfig& config);

/// The same pipeline over an already-built model (used by tests and by the
/// golden corpus checks).
ReportBundle analyze_model(const facts::CodeModel& unfiltered, const AnalysisConfig& config,
                           std::vector<std::string> warnings = {});

} // namespace ifclone::report
