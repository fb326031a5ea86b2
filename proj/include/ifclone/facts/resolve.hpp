#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ifclone/facts/types.hpp"

namespace ifclone::facts {

/// Lookup table over every type declared in the model, for best-effort
/// resolution without a classpath.
struct NameIndex {
    std::set<std::string> qualified;
    std::map<std::string, std::vector<std::string>> by_simple;

    void add(const std::string& qualified_name);
    bool contains(const std::string& qualified_name) const;

    static NameIndex of(const CodeModel& model);
};

/// Resolve a declared type token sequence against a file's imports, its
/// package, and the model's declared names.
///
/// Resolution order: explicit imports, then the file's own package, then
/// wildcard imports (against in-model names only), then a unique in-model
/// simple name, then well-known java.lang types, else the name as written.
/// Varargs normalize to arrays; generic arguments are kept textually with
/// canonical spacing.
TypeRef resolve_type(const std::string& raw,
                     const std::vector<Import>& imports,
                     const std::vector<std::string>& package,
                     const NameIndex& index);

/// Canonical rendering used by both raw_text and generic argument text:
/// deterministic spacing regardless of source formatting.
std::string canonicalize_type_tokens(const std::string& raw);

} // namespace ifclone::facts
