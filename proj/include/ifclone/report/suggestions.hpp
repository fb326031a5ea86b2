#pragma once

#include <set>
#include <string>
#include <vector>

#include "ifclone/clones/clone_core.hpp"
#include "ifclone/facts/types.hpp"

namespace ifclone::report {

enum class SuggestionKind {
    RemoveDuplicateInterface,
    ExtractSuperInterface,
    ExtendInsteadOfRedeclare,
};

std::string to_string(SuggestionKind kind);

struct RefactoringSuggestion {
    SuggestionKind kind = SuggestionKind::RemoveDuplicateInterface;
    std::vector<facts::TypeId> subject_interfaces;
    std::vector<facts::TypeId> affected_classes;
    std::set<clones::SignatureKey> keys;
    int declarations_removed = 0; // ranking weight
    std::string narrative;

    bool operator==(const RefactoringSuggestion&) const = default;
};

/// Advisory refactorings derived from the clone results:
///  - remove a duplicate interface whose signatures all exist in another
///    interface, redirecting its implementers and clients there;
///  - extract a shared super-interface when >= 3 interfaces share >= 2
///    signatures;
///  - drop re-declarations when an interface redeclares signatures it
///    already inherits.
/// Ranked by declared methods removed. Text only, no rewriting.
std::vector<RefactoringSuggestion> suggest_refactorings(
    const facts::CodeModel& model, const std::vector<clones::DuplicateGroup>& groups,
    const std::set<facts::TypeId>& duplicate_ifaces);

} // namespace ifclone::report
