#pragma once

#include <string>
#include <vector>

#include "ifclone/facts/types.hpp"

namespace ifclone::facts {

struct FilterOptions {
    bool exclude_tests = true;
};

struct RemovalRecord {
    TypeId id;
    std::string reason; // "library", "marker" or "test"

    bool operator==(const RemovalRecord&) const = default;
};

struct FilterOutcome {
    CodeModel model;
    std::vector<RemovalRecord> removed;
};

/// Drop library interfaces, marker interfaces and (when enabled) test
/// interfaces from the model. Classes stay; invocation sites and hierarchy
/// edges pointing at removed interfaces are pruned or marked external.
/// Idempotent.
FilterOutcome filter_model(const CodeModel& model, const FilterOptions& options = {});

} // namespace ifclone::facts
