#pragma once

#include <vector>

#include "ifclone/facts/resolve.hpp"
#include "ifclone/facts/types.hpp"

namespace ifclone::facts {

/// Scan a class's method bodies for `recv.m(a1..ak)` where recv is a field,
/// parameter or local whose declared type resolves to a modeled interface.
/// Duplicates (same class, interface, name, arity) are collapsed. Receivers
/// that cannot be resolved are ignored.
std::vector<InvocationSite> extract_invocations(const ClassDecl& cls,
                                                const CodeModel& model);

/// Same, with a prebuilt name index (used by the model assembly loop).
std::vector<InvocationSite> extract_invocations(const ClassDecl& cls,
                                                const CodeModel& model,
                                                const NameIndex& index);

} // namespace ifclone::facts
