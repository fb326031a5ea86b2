#include "ifclone/clones/clone_core.hpp"

#include <algorithm>

#include "ifclone/errors.hpp"

namespace ifclone::clones {

using facts::CodeModel;
using facts::MethodSignature;
using facts::TypeId;
using facts::Visibility;

namespace {

std::string render_type(const facts::TypeRef& t) {
    std::string out = t.resolved_name;
    for (int d = 0; d < t.dimensions; ++d) out += "[]";
    return out;
}

/// key -> set of declaring interfaces, over public signatures only.
/// A signature declared twice in one interface (cannot happen in valid
/// sources) still contributes that interface once.
std::map<SignatureKey, std::set<TypeId>> key_index(const CodeModel& model) {
    std::map<SignatureKey, std::set<TypeId>> index;
    for (const auto& [id, decl] : model.interfaces) {
        for (const auto& sig : decl.signatures) {
            if (sig.visibility != Visibility::Public) continue;
            index[make_key(sig)].insert(id);
        }
    }
    return index;
}

} // namespace

SignatureKey make_key(const MethodSignature& sig) {
    std::string canonical = render_type(sig.return_type);
    canonical += ' ';
    canonical += sig.name;
    canonical += '(';
    for (size_t i = 0; i < sig.param_types.size(); ++i) {
        if (i > 0) canonical += ',';
        canonical += render_type(sig.param_types[i]);
    }
    canonical += ')';
    return SignatureKey{std::move(canonical)};
}

bool signatures_identical(const MethodSignature& a, const MethodSignature& b) {
    return make_key(a) == make_key(b);
}

std::vector<DuplicateGroup> duplicate_groups(const CodeModel& model) {
    std::vector<DuplicateGroup> groups;
    for (auto& [key, declarers] : key_index(model)) {
        if (declarers.size() < 2) continue;
        groups.push_back(DuplicateGroup{key, declarers});
    }
    return groups;
}

std::map<TypeId, int> compute_idm(const CodeModel& model) {
    auto index = key_index(model);
    std::map<TypeId, int> idm;
    for (const auto& [id, decl] : model.interfaces) {
        int count = 0;
        std::set<SignatureKey> seen;
        for (const auto& sig : decl.signatures) {
            if (sig.visibility != Visibility::Public) continue;
            SignatureKey key = make_key(sig);
            if (!seen.insert(key).second) continue;
            auto it = index.find(key);
            if (it != index.end() && it->second.size() >= 2) ++count;
        }
        idm[id] = count;
    }
    return idm;
}

long compute_dm(const CodeModel& model) {
    long dm = 0;
    for (const auto& [id, count] : compute_idm(model)) dm += count;
    return dm;
}

double compute_rdm(const CodeModel& model) {
    long total = model.total_declared_methods();
    if (total == 0) throw EmptyModelError("model declares no public interface methods");
    return static_cast<double>(compute_dm(model)) / static_cast<double>(total);
}

std::set<TypeId> duplicate_interfaces(const CodeModel& model) {
    auto idm = compute_idm(model);
    std::set<TypeId> result;
    for (const auto& [id, decl] : model.interfaces) {
        int size = decl.public_size();
        if (size >= 1 && idm[id] == size) result.insert(id);
    }
    return result;
}

std::vector<ClonePairRecord> clone_pairs(const CodeModel& model) {
    std::map<std::pair<TypeId, TypeId>, std::set<SignatureKey>> shared;
    for (const auto& [key, declarers] : key_index(model)) {
        if (declarers.size() < 2) continue;
        for (auto a = declarers.begin(); a != declarers.end(); ++a) {
            for (auto b = std::next(a); b != declarers.end(); ++b) {
                shared[{*a, *b}].insert(key);
            }
        }
    }
    std::vector<ClonePairRecord> records;
    records.reserve(shared.size());
    for (auto& [pair, keys] : shared) {
        records.push_back(ClonePairRecord{pair.first, pair.second, std::move(keys)});
    }
    return records;
}

} // namespace ifclone::clones
