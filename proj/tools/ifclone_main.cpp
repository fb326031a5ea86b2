#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ifclone/errors.hpp"
#include "ifclone/report/emit.hpp"
#include "ifclone/report/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;

int run_analyze(const ifclone::report::AnalysisConfig& config) {
    try {
        ifclone::report::ReportBundle bundle = ifclone::report::run_analysis(config);
        std::vector<std::string> written = ifclone::report::emit_reports(bundle, config);
        for (const auto& w : bundle.warnings) std::cerr << "warning: " << w << "\n";
        std::cout << "analyzed " << bundle.interface_count << " interfaces, "
                  << bundle.class_count << " classes";
        if (bundle.rdm) std::cout << "; RDM " << ifclone::report::format_ratio(*bundle.rdm);
        std::cout << "\n";
        for (const auto& path : written) std::cout << "wrote " << path << "\n";
        return kExitOk;
    } catch (const ifclone::NoSourceFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ifclone::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ifclone - interface clone detection and interface quality metrics"};
    app.require_subcommand(1);

    ifclone::report::AnalysisConfig config;
    std::vector<std::string> format_names{"json", "csv", "md"};
    std::string correlation_choice = "both";

    CLI::App* analyze = app.add_subcommand("analyze", "analyze one or more source roots");
    analyze->add_option("roots", config.source_roots, "source roots to scan for .java files")
        ->required();
    analyze->add_flag("--exclude-tests,!--no-exclude-tests,!--include-tests",
                      config.exclude_tests,
                      "drop test interfaces from the analysis (default: on)");
    analyze->add_option("--test-pattern", config.test_patterns,
                        "extra glob marking matching type names as test code (repeatable)");
    analyze->add_option("--clone-min-length", config.clone_params.min_clone_length,
                        "minimum matched lines in a code clone")
        ->default_val(6);
    analyze->add_option("--clone-max-bias", config.clone_params.max_line_bias,
                        "maximum lines between two exact chunks")
        ->default_val(2);
    analyze->add_option("--clone-min-chunk", config.clone_params.min_chunk_size,
                        "minimum lines of an exact chunk")
        ->default_val(3);
    analyze->add_option("--correlation", correlation_choice, "pearson, spearman or both")
        ->check(CLI::IsMember({"pearson", "spearman", "both"}))
        ->default_val("both");
    analyze
        ->add_option("--format", format_names,
                     "report formats to write: json, csv, md (comma separated)")
        ->delimiter(',');
    analyze->add_option("--out", config.output_dir, "output directory")->default_val(".");
    analyze->add_option("--dump-model", config.dump_model_path,
                        "also write the parsed (unfiltered) code model as JSON");
    analyze->add_flag("--within-interface-clones", config.include_within_interface_clones,
                      "also report code clones among one interface's own implementations");
    analyze->add_flag("--strip-line-comments", config.strip_line_comments,
                      "strip // comments before clone detection");

    CLI11_PARSE(app, argc, argv);

    config.formats.clear();
    for (const auto& name : format_names) {
        if (name == "json") config.formats.insert(ifclone::report::OutputFormat::Json);
        else if (name == "csv") config.formats.insert(ifclone::report::OutputFormat::Csv);
        else if (name == "md") config.formats.insert(ifclone::report::OutputFormat::Markdown);
        else {
            std::cerr << "error: unknown format '" << name << "'\n";
            return kExitBadInput;
        }
    }

    config.correlation_methods.clear();
    if (correlation_choice == "pearson" || correlation_choice == "both") {
        config.correlation_methods.insert(ifclone::metrics::CorrelationMethod::Pearson);
    }
    if (correlation_choice == "spearman" || correlation_choice == "both") {
        config.correlation_methods.insert(ifclone::metrics::CorrelationMethod::Spearman);
    }

    if (!config.valid()) {
        std::cerr << "error: invalid configuration (check roots, formats and clone parameters)\n";
        return kExitBadInput;
    }
    return run_analyze(config);
}
