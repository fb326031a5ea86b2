#include "ifclone/report/pipeline.hpp"

#include <map>
#include <stdexcept>

#include "ifclone/errors.hpp"
#include "ifclone/facts/model_json.hpp"

namespace ifclone::report {

namespace {

CorrelationSummary correlate(const std::string& name, const std::vector<double>& xs,
                             const std::vector<double>& ys,
                             const std::set<metrics::CorrelationMethod>& methods) {
    CorrelationSummary summary;
    summary.name = name;
    summary.n = static_cast<int>(xs.size());
    if (xs.size() < 3) {
        summary.note = "insufficient data";
        return summary;
    }
    try {
        if (methods.count(metrics::CorrelationMethod::Pearson)) {
            summary.pearson = metrics::correlation(xs, ys, metrics::CorrelationMethod::Pearson);
        }
        if (methods.count(metrics::CorrelationMethod::Spearman)) {
            summary.spearman = metrics::correlation(xs, ys, metrics::CorrelationMethod::Spearman);
        }
    } catch (const DegenerateSampleError&) {
        summary.pearson.reset();
        summary.spearman.reset();
        summary.note = "degenerate sample";
    }
    return summary;
}

} // namespace

ReportBundle analyze_model(const facts::CodeModel& unfiltered, const AnalysisConfig& config,
                           std::vector<std::string> warnings) {
    ReportBundle bundle;
    bundle.config = config;
    bundle.warnings = std::move(warnings);

    facts::FilterOptions filter_options;
    filter_options.exclude_tests = config.exclude_tests;
    facts::FilterOutcome filtered = facts::filter_model(unfiltered, filter_options);
    bundle.removed_interfaces = filtered.removed;
    const facts::CodeModel& model = filtered.model;

    bundle.interface_count = static_cast<int>(model.interfaces.size());
    bundle.class_count = static_cast<int>(model.classes.size());
    bundle.total_declared_methods = model.total_declared_methods();

    if (model.interfaces.empty()) {
        bundle.warnings.push_back("no interfaces retained after filtering; nothing to analyze");
        return bundle;
    }

    std::map<facts::TypeId, int> idm = clones::compute_idm(model);
    bundle.duplicate_groups = clones::duplicate_groups(model);
    bundle.duplicate_interfaces = clones::duplicate_interfaces(model);
    bundle.clone_pairs = clones::clone_pairs(model);
    bundle.dm = clones::compute_dm(model);
    if (bundle.total_declared_methods > 0) {
        bundle.rdm = clones::compute_rdm(model);
    } else {
        bundle.warnings.push_back("filtered model declares no public interface methods; "
                                  "RDM is undefined");
    }

    bundle.rows = metrics::metric_table(model, idm, bundle.clone_pairs);

    textclone::AssociationOptions assoc_options;
    assoc_options.params = config.clone_params;
    assoc_options.include_within_interface = config.include_within_interface_clones;
    assoc_options.strip_line_comments = config.strip_line_comments;
    bundle.associations = textclone::associate_clones(model, bundle.duplicate_groups,
                                                      assoc_options);
    for (const auto& rec : bundle.associations.records) {
        bundle.cc_total += rec.cc_count;
        bundle.copied_lc_total += rec.copied_lc;
    }

    // per-interface associated clone count, for the Fig. 7 style correlation
    std::map<facts::TypeId, long> cc_by_interface;
    for (const auto& rec : bundle.associations.records) {
        cc_by_interface[rec.interface_a] += rec.cc_count;
        if (rec.interface_b != rec.interface_a) cc_by_interface[rec.interface_b] += rec.cc_count;
    }

    std::vector<double> idm_defined, iuc_defined;
    std::vector<double> sizes, idms, ccs;
    for (const auto& row : bundle.rows) {
        sizes.push_back(row.size);
        idms.push_back(row.idm);
        auto it = cc_by_interface.find(row.interface_id);
        ccs.push_back(it == cc_by_interface.end() ? 0.0 : static_cast<double>(it->second));
        if (row.iuc.has_value()) { // zero-client interfaces stay out of the sample
            idm_defined.push_back(row.idm);
            iuc_defined.push_back(*row.iuc);
        }
    }
    bundle.correlations.push_back(
        correlate("idm_vs_iuc", idm_defined, iuc_defined, config.correlation_methods));
    bundle.correlations.push_back(
        correlate("size_vs_idm", sizes, idms, config.correlation_methods));
    bundle.correlations.push_back(
        correlate("idm_vs_associated_cc", idms, ccs, config.correlation_methods));

    bundle.suggestions =
        suggest_refactorings(model, bundle.duplicate_groups, bundle.duplicate_interfaces);

    return bundle;
}

ReportBundle run_analysis(const AnalysisConfig& config) {
    if (!config.valid()) {
        throw std::invalid_argument("invalid analysis configuration");
    }
    facts::ParseOptions parse_options;
    parse_options.test_name_patterns = config.test_patterns;
    facts::ParseOutcome parsed = facts::parse_source_tree(config.source_roots, parse_options);

    if (!config.dump_model_path.empty()) {
        facts::dump_model_file(parsed.model, config.dump_model_path);
    }
    return analyze_model(parsed.model, config, std::move(parsed.warnings));
}

} // namespace ifclone::report
