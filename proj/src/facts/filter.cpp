#include "ifclone/facts/filter.hpp"

#include <algorithm>
#include <set>

namespace ifclone::facts {

FilterOutcome filter_model(const CodeModel& model, const FilterOptions& options) {
    FilterOutcome out;
    std::set<TypeId> removed_ids;

    for (const auto& [id, decl] : model.interfaces) {
        std::string reason;
        if (decl.flags.is_library) reason = "library";
        else if (decl.flags.is_marker) reason = "marker";
        else if (options.exclude_tests && decl.flags.is_test) reason = "test";
        if (!reason.empty()) {
            removed_ids.insert(id);
            out.removed.push_back(RemovalRecord{id, reason});
        }
    }

    CodeModel& filtered = out.model;
    filtered.source_roots = model.source_roots;
    filtered.classes = model.classes;

    auto detach_removed = [&](std::vector<TypeEdge>& edges) {
        for (auto& e : edges) {
            if (!e.target_id.empty() && removed_ids.count(e.target_id)) e.external = true;
        }
    };

    for (const auto& [id, decl] : model.interfaces) {
        if (removed_ids.count(id)) continue;
        InterfaceDecl copy = decl;
        detach_removed(copy.extends);
        filtered.interfaces.emplace(id, std::move(copy));
    }
    for (auto& [id, decl] : filtered.classes) {
        detach_removed(decl.implements);
    }

    for (const auto& site : model.invocations) {
        if (!removed_ids.count(site.interface_id)) filtered.invocations.push_back(site);
    }

    return out;
}

} // namespace ifclone::facts
