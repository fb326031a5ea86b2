#include "ifclone/report/suggestions.hpp"

#include <algorithm>
#include <map>

namespace ifclone::report {

using clones::DuplicateGroup;
using clones::SignatureKey;
using facts::CodeModel;
using facts::TypeId;

std::string to_string(SuggestionKind kind) {
    switch (kind) {
        case SuggestionKind::RemoveDuplicateInterface: return "remove_duplicate_interface";
        case SuggestionKind::ExtractSuperInterface: return "extract_super_interface";
        case SuggestionKind::ExtendInsteadOfRedeclare: return "extend_instead_of_redeclare";
    }
    return "unknown";
}

namespace {

std::map<TypeId, std::set<SignatureKey>> public_keys_by_interface(const CodeModel& model) {
    std::map<TypeId, std::set<SignatureKey>> keys;
    for (const auto& [id, decl] : model.interfaces) {
        auto& bucket = keys[id];
        for (const auto& sig : decl.signatures) {
            if (sig.visibility == facts::Visibility::Public) bucket.insert(clones::make_key(sig));
        }
    }
    return keys;
}

std::vector<TypeId> direct_implementers(const CodeModel& model, const TypeId& iface) {
    std::vector<TypeId> out;
    for (const auto& [id, cls] : model.classes) {
        for (const auto& edge : cls.implements) {
            if (edge.target_id == iface) {
                out.push_back(id);
                break;
            }
        }
    }
    return out;
}

std::vector<TypeId> client_classes_of(const CodeModel& model, const TypeId& iface) {
    std::set<TypeId> clients;
    for (const auto& site : model.invocations) {
        if (site.interface_id == iface) clients.insert(site.client_class);
    }
    return {clients.begin(), clients.end()};
}

std::set<TypeId> ancestors_of(const CodeModel& model, const TypeId& iface) {
    std::set<TypeId> seen;
    std::vector<TypeId> work{iface};
    while (!work.empty()) {
        TypeId cur = work.back();
        work.pop_back();
        const facts::InterfaceDecl* decl = model.find_interface(cur);
        if (decl == nullptr) continue;
        for (const auto& edge : decl->extends) {
            if (edge.target_id.empty()) continue;
            if (seen.insert(edge.target_id).second) work.push_back(edge.target_id);
        }
    }
    seen.erase(iface);
    return seen;
}

std::string join_names(const std::vector<TypeId>& ids, size_t limit = 6) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i == limit) {
            out += ", ...";
            break;
        }
        if (i > 0) out += ", ";
        out += ids[i];
    }
    return out;
}

void add_remove_suggestions(const CodeModel& model,
                            const std::map<TypeId, std::set<SignatureKey>>& keys,
                            const std::set<TypeId>& duplicate_ifaces,
                            std::vector<RefactoringSuggestion>& out) {
    for (const auto& subject : duplicate_ifaces) {
        auto subject_keys = keys.find(subject);
        if (subject_keys == keys.end() || subject_keys->second.empty()) continue;

        // redirect to the smallest interface that declares all of the
        // subject's methods, so moved implementers widen their contract least
        const TypeId* target = nullptr;
        size_t target_size = 0;
        for (const auto& [cand, cand_keys] : keys) {
            if (cand == subject) continue;
            if (!std::includes(cand_keys.begin(), cand_keys.end(), subject_keys->second.begin(),
                               subject_keys->second.end())) {
                continue;
            }
            if (target == nullptr || cand_keys.size() < target_size ||
                (cand_keys.size() == target_size && cand < *target)) {
                target = &cand;
                target_size = cand_keys.size();
            }
        }
        if (target == nullptr) continue;

        RefactoringSuggestion s;
        s.kind = SuggestionKind::RemoveDuplicateInterface;
        s.subject_interfaces = {subject, *target};
        std::vector<TypeId> movers = direct_implementers(model, subject);
        std::vector<TypeId> dependents = client_classes_of(model, subject);
        s.affected_classes = movers;
        for (const auto& c : dependents) {
            if (std::find(s.affected_classes.begin(), s.affected_classes.end(), c) ==
                s.affected_classes.end()) {
                s.affected_classes.push_back(c);
            }
        }
        std::sort(s.affected_classes.begin(), s.affected_classes.end());
        s.keys = subject_keys->second;
        s.declarations_removed = static_cast<int>(subject_keys->second.size());
        s.narrative = "Every method of " + subject + " is also declared in " + *target +
                      ". Remove " + subject + " after moving its incoming dependencies to " +
                      *target;
        if (!movers.empty()) {
            s.narrative += ": make " + join_names(movers) + " implement " + *target +
                           " instead of " + subject;
        }
        if (!dependents.empty()) {
            s.narrative += "; retarget references in " + join_names(dependents);
        }
        s.narrative += ". This removes " + std::to_string(s.declarations_removed) +
                       " duplicate declaration(s).";
        out.push_back(std::move(s));
    }
}

void add_extract_suggestions(const std::vector<DuplicateGroup>& groups,
                             std::vector<RefactoringSuggestion>& out) {
    // candidate interface sets: each group's declarer set plus pairwise
    // intersections, closed over the keys shared by the whole set
    std::map<SignatureKey, const std::set<TypeId>*> declarers;
    for (const auto& g : groups) declarers.emplace(g.key, &g.declaring_interfaces);

    std::set<std::set<TypeId>> candidates;
    for (const auto& g : groups) candidates.insert(g.declaring_interfaces);
    constexpr size_t kMaxPairwise = 2000;
    for (size_t i = 0; i < groups.size() && candidates.size() < kMaxPairwise; ++i) {
        for (size_t j = i + 1; j < groups.size() && candidates.size() < kMaxPairwise; ++j) {
            std::set<TypeId> inter;
            std::set_intersection(groups[i].declaring_interfaces.begin(),
                                  groups[i].declaring_interfaces.end(),
                                  groups[j].declaring_interfaces.begin(),
                                  groups[j].declaring_interfaces.end(),
                                  std::inserter(inter, inter.begin()));
            if (inter.size() >= 3) candidates.insert(std::move(inter));
        }
    }

    for (const auto& members : candidates) {
        if (members.size() < 3) continue;
        std::set<SignatureKey> shared;
        for (const auto& [key, set_ptr] : declarers) {
            if (std::includes(set_ptr->begin(), set_ptr->end(), members.begin(), members.end())) {
                shared.insert(key);
            }
        }
        if (shared.size() < 2) continue;

        RefactoringSuggestion s;
        s.kind = SuggestionKind::ExtractSuperInterface;
        s.subject_interfaces.assign(members.begin(), members.end());
        s.keys = shared;
        s.declarations_removed =
            static_cast<int>(shared.size() * (members.size() - 1));
        s.narrative = "Interfaces " + join_names(s.subject_interfaces) + " all declare " +
                      std::to_string(shared.size()) +
                      " identical method(s). Extract them into a shared super-interface "
                      "<NewSharedInterface> (placeholder name, needs a human choice), extend it "
                      "from each, and delete the re-declarations. This removes " +
                      std::to_string(s.declarations_removed) + " duplicate declaration(s).";
        out.push_back(std::move(s));
    }
}

void add_redeclare_suggestions(const CodeModel& model,
                               const std::map<TypeId, std::set<SignatureKey>>& keys,
                               std::vector<RefactoringSuggestion>& out) {
    for (const auto& [iface, own_keys] : keys) {
        for (const auto& ancestor : ancestors_of(model, iface)) {
            auto anc_keys = keys.find(ancestor);
            if (anc_keys == keys.end()) continue;
            std::set<SignatureKey> redeclared;
            std::set_intersection(own_keys.begin(), own_keys.end(), anc_keys->second.begin(),
                                  anc_keys->second.end(),
                                  std::inserter(redeclared, redeclared.begin()));
            if (redeclared.empty()) continue;

            RefactoringSuggestion s;
            s.kind = SuggestionKind::ExtendInsteadOfRedeclare;
            s.subject_interfaces = {iface, ancestor};
            s.keys = redeclared;
            s.declarations_removed = static_cast<int>(redeclared.size());
            s.narrative = iface + " extends " + ancestor + " yet re-declares " +
                          std::to_string(redeclared.size()) +
                          " of its method(s); the re-declarations are inherited anyway and can "
                          "be deleted.";
            out.push_back(std::move(s));
        }
    }
}

} // namespace

std::vector<RefactoringSuggestion> suggest_refactorings(
    const CodeModel& model, const std::vector<DuplicateGroup>& groups,
    const std::set<TypeId>& duplicate_ifaces) {
    std::vector<RefactoringSuggestion> out;
    auto keys = public_keys_by_interface(model);

    add_remove_suggestions(model, keys, duplicate_ifaces, out);
    add_extract_suggestions(groups, out);
    add_redeclare_suggestions(model, keys, out);

    std::stable_sort(out.begin(), out.end(),
                     [](const RefactoringSuggestion& a, const RefactoringSuggestion& b) {
                         if (a.declarations_removed != b.declarations_removed) {
                             return a.declarations_removed > b.declarations_removed;
                         }
                         if (a.kind != b.kind) return a.kind < b.kind;
                         return a.subject_interfaces < b.subject_interfaces;
                     });
    return out;
}

} // namespace ifclone::report
