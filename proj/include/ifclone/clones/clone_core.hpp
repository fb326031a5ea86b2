#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ifclone/facts/types.hpp"

namespace ifclone::clones {

/// Canonical identity of a method declaration: resolved return type, name and
/// resolved parameter types. Two signatures are identical exactly when their
/// keys compare equal.
struct SignatureKey {
    std::string canonical;

    bool operator==(const SignatureKey&) const = default;
    auto operator<=>(const SignatureKey&) const = default;
};

SignatureKey make_key(const facts::MethodSignature& sig);

bool signatures_identical(const facts::MethodSignature& a, const facts::MethodSignature& b);

/// One public signature declared in two or more interfaces.
struct DuplicateGroup {
    SignatureKey key;
    std::set<facts::TypeId> declaring_interfaces; // |set| >= 2

    bool operator==(const DuplicateGroup&) const = default;
};

/// An unordered interface pair sharing at least one signature; stored once
/// with interface_a < interface_b.
struct ClonePairRecord {
    facts::TypeId interface_a;
    facts::TypeId interface_b;
    std::set<SignatureKey> shared_keys;

    bool operator==(const ClonePairRecord&) const = default;
};

/// All duplicate signatures, one group per key, sorted by key.
std::vector<DuplicateGroup> duplicate_groups(const facts::CodeModel& model);

/// IDM(i): how many of i's declared public signatures also appear in some
/// other interface.
std::map<facts::TypeId, int> compute_idm(const facts::CodeModel& model);

/// DM = sum of IDM(i); every copy of a duplicated signature counts.
long compute_dm(const facts::CodeModel& model);

/// RDM = DM / sum of size(i). Throws EmptyModelError when the model declares
/// no public interface methods.
double compute_rdm(const facts::CodeModel& model);

/// Interfaces with size >= 1 whose every declared method is re-declared
/// elsewhere (IDM = size).
std::set<facts::TypeId> duplicate_interfaces(const facts::CodeModel& model);

/// One record per unordered pair of interfaces sharing >= 1 key, sorted by
/// (interface_a, interface_b).
std::vector<ClonePairRecord> clone_pairs(const facts::CodeModel& model);

} // namespace ifclone::clones
