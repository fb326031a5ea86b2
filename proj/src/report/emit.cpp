#include "ifclone/report/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ifclone/errors.hpp"

namespace fs = std::filesystem;

namespace ifclone::report {

using nlohmann::json;

namespace {

json correlation_result_to_json(const metrics::CorrelationResult& r) {
    return json{{"coefficient", r.coefficient},
                {"determination", r.determination},
                {"n", r.n}};
}

json correlation_summary_to_json(const CorrelationSummary& c) {
    json j{{"name", c.name}, {"n", c.n}};
    j["pearson"] = c.pearson ? correlation_result_to_json(*c.pearson) : json(nullptr);
    j["spearman"] = c.spearman ? correlation_result_to_json(*c.spearman) : json(nullptr);
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string format_corr_cell(const std::optional<metrics::CorrelationResult>& r) {
    if (!r) return "-";
    return format_ratio(r->coefficient) + " (r2 " + format_ratio(r->determination) + ")";
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write report file: " + path.string());
    out << content;
    if (!out) throw IoError("failed while writing: " + path.string());
}

} // namespace

std::string format_ratio(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

json bundle_to_json(const ReportBundle& bundle) {
    json removed = json::array();
    for (const auto& r : bundle.removed_interfaces) {
        removed.push_back(json{{"id", r.id}, {"reason", r.reason}});
    }

    json groups = json::array();
    for (const auto& g : bundle.duplicate_groups) {
        groups.push_back(json{{"signature", g.key.canonical},
                              {"interfaces", g.declaring_interfaces}});
    }

    json pairs = json::array();
    for (const auto& p : bundle.clone_pairs) {
        json keys = json::array();
        for (const auto& k : p.shared_keys) keys.push_back(k.canonical);
        pairs.push_back(json{{"interface_a", p.interface_a},
                             {"interface_b", p.interface_b},
                             {"shared_signatures", std::move(keys)}});
    }

    json rows = json::array();
    for (const auto& row : bundle.rows) {
        json r{{"interface", row.interface_id},
               {"qualified_name", row.qualified_name},
               {"size", row.size},
               {"idm", row.idm},
               {"client_count", row.client_count},
               {"clone_pair_degree", row.clone_pair_degree}};
        r["iuc"] = row.iuc ? json(*row.iuc) : json(nullptr);
        rows.push_back(std::move(r));
    }

    json correlations = json::array();
    for (const auto& c : bundle.correlations) correlations.push_back(correlation_summary_to_json(c));

    json associations = json::array();
    for (const auto& a : bundle.associations.records) {
        associations.push_back(json{{"signature", a.group.key.canonical},
                                    {"interface_a", a.interface_a},
                                    {"interface_b", a.interface_b},
                                    {"cc_count", a.cc_count},
                                    {"copied_lc", a.copied_lc}});
    }

    json suggestions = json::array();
    for (const auto& s : bundle.suggestions) {
        json keys = json::array();
        for (const auto& k : s.keys) keys.push_back(k.canonical);
        suggestions.push_back(json{{"kind", to_string(s.kind)},
                                   {"subject_interfaces", s.subject_interfaces},
                                   {"affected_classes", s.affected_classes},
                                   {"signatures", std::move(keys)},
                                   {"declarations_removed", s.declarations_removed},
                                   {"narrative", s.narrative}});
    }

    json clone_params{{"min_clone_length", bundle.config.clone_params.min_clone_length},
                      {"max_line_bias", bundle.config.clone_params.max_line_bias},
                      {"min_chunk_size", bundle.config.clone_params.min_chunk_size}};

    return json{
        {"schema_version", bundle.schema_version},
        {"source_roots", bundle.config.source_roots},
        {"warnings", bundle.warnings},
        {"removed_interfaces", std::move(removed)},
        {"totals",
         json{{"interfaces", bundle.interface_count},
              {"classes", bundle.class_count},
              {"declared_public_methods", bundle.total_declared_methods},
              {"dm", bundle.dm},
              {"rdm", bundle.rdm ? json(*bundle.rdm) : json(nullptr)},
              {"cc_total", bundle.cc_total},
              {"copied_lc_total", bundle.copied_lc_total},
              {"covered_lc_total", bundle.associations.covered_line_total}}},
        {"duplicate_groups", std::move(groups)},
        {"duplicate_interfaces", bundle.duplicate_interfaces},
        {"clone_pairs", std::move(pairs)},
        {"interfaces", std::move(rows)},
        {"correlations", std::move(correlations)},
        {"clone_params", std::move(clone_params)},
        {"associations", std::move(associations)},
        {"suggestions", std::move(suggestions)},
    };
}

std::string render_interfaces_csv(const ReportBundle& bundle) {
    std::string out = "qualified_name,size,idm,iuc,clone_degree\n";
    for (const auto& row : bundle.rows) {
        out += csv_escape(row.qualified_name);
        out += ',' + std::to_string(row.size);
        out += ',' + std::to_string(row.idm);
        out += ',';
        if (row.iuc) out += format_ratio(*row.iuc);
        out += ',' + std::to_string(row.clone_pair_degree);
        out += '\n';
    }
    return out;
}

std::string render_associations_csv(const ReportBundle& bundle) {
    std::string out = "interface_a,interface_b,cc_count,copied_lc\n";
    for (const auto& rec : bundle.associations.records) {
        out += csv_escape(rec.interface_a);
        out += ',' + csv_escape(rec.interface_b);
        out += ',' + std::to_string(rec.cc_count);
        out += ',' + std::to_string(rec.copied_lc);
        out += '\n';
    }
    return out;
}

std::string render_markdown(const ReportBundle& bundle) {
    std::string md;
    md += "# Interface Clone Report\n\n";

    md += "## Totals\n\n";
    md += "- interfaces analyzed: " + std::to_string(bundle.interface_count) + "\n";
    md += "- classes: " + std::to_string(bundle.class_count) + "\n";
    md += "- declared public interface methods: " +
          std::to_string(bundle.total_declared_methods) + "\n";
    md += "- duplicate method declarations (DM): " + std::to_string(bundle.dm) + "\n";
    md += "- ratio of duplicate methods (RDM): " +
          (bundle.rdm ? format_ratio(*bundle.rdm) : std::string("undefined")) + "\n";
    md += "- duplicate interfaces: " + std::to_string(bundle.duplicate_interfaces.size()) + "\n";
    md += "- interface clone pairs: " + std::to_string(bundle.clone_pairs.size()) + "\n";
    md += "- associated code clone pairs (CC): " + std::to_string(bundle.cc_total) + "\n";
    md += "- copied lines in associated clones (CopiedLC): " +
          std::to_string(bundle.copied_lc_total) + "\n";
    md += "- distinct duplicated lines (overlaps deduplicated): " +
          std::to_string(bundle.associations.covered_line_total) + "\n\n";

    if (!bundle.duplicate_interfaces.empty()) {
        md += "## Duplicate interfaces\n\n";
        for (const auto& id : bundle.duplicate_interfaces) md += "- " + id + "\n";
        md += "\n";
    }

    md += "## Correlations\n\n";
    md += "| pair | n | pearson | spearman |\n";
    md += "|---|---|---|---|\n";
    for (const auto& c : bundle.correlations) {
        md += "| " + c.name + " | " + std::to_string(c.n) + " | ";
        if (!c.note.empty()) {
            md += c.note + " | " + c.note + " |\n";
        } else {
            md += format_corr_cell(c.pearson) + " | " + format_corr_cell(c.spearman) + " |\n";
        }
    }
    md += "\n";

    if (!bundle.duplicate_groups.empty()) {
        md += "## Largest duplicate-method groups\n\n";
        std::vector<const clones::DuplicateGroup*> sorted;
        for (const auto& g : bundle.duplicate_groups) sorted.push_back(&g);
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const clones::DuplicateGroup* a, const clones::DuplicateGroup* b) {
                             return a->declaring_interfaces.size() > b->declaring_interfaces.size();
                         });
        size_t shown = 0;
        for (const auto* g : sorted) {
            if (shown++ == 10) break;
            md += "- `" + g->key.canonical + "` declared in " +
                  std::to_string(g->declaring_interfaces.size()) + " interfaces\n";
        }
        md += "\n";
    }

    md += "## Suggestions\n\n";
    if (bundle.suggestions.empty()) {
        md += "No refactoring suggestions; no interface clones were found.\n";
    } else {
        size_t shown = 0;
        for (const auto& s : bundle.suggestions) {
            if (shown++ == 10) break;
            md += "1. **" + to_string(s.kind) + "** (removes " +
                  std::to_string(s.declarations_removed) + " declarations): " + s.narrative + "\n";
        }
    }
    md += "\n";

    if (!bundle.warnings.empty()) {
        md += "## Warnings\n\n";
        for (const auto& w : bundle.warnings) md += "- " + w + "\n";
    }
    return md;
}

std::vector<std::string> emit_reports(const ReportBundle& bundle, const AnalysisConfig& config) {
    fs::path dir(config.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir)) {
        throw IoError("cannot create output directory: " + dir.string());
    }

    std::vector<std::string> written;
    if (config.formats.count(OutputFormat::Json)) {
        fs::path p = dir / "summary.json";
        write_file(p, bundle_to_json(bundle).dump(2) + "\n");
        written.push_back(p.string());
    }
    if (config.formats.count(OutputFormat::Csv)) {
        fs::path interfaces = dir / "interfaces.csv";
        write_file(interfaces, render_interfaces_csv(bundle));
        written.push_back(interfaces.string());
        fs::path associations = dir / "associations.csv";
        write_file(associations, render_associations_csv(bundle));
        written.push_back(associations.string());
    }
    if (config.formats.count(OutputFormat::Markdown)) {
        fs::path p = dir / "report.md";
        write_file(p, render_markdown(bundle));
        written.push_back(p.string());
    }
    return written;
}

} // namespace ifclone::report
