#include "ifclone/facts/types.hpp"

#include <algorithm>
#include <set>

namespace ifclone::facts {

int InterfaceDecl::public_size() const {
    return static_cast<int>(std::count_if(
        signatures.begin(), signatures.end(),
        [](const MethodSignature& s) { return s.visibility == Visibility::Public; }));
}

const InterfaceDecl* CodeModel::find_interface(const TypeId& id) const {
    auto it = interfaces.find(id);
    return it == interfaces.end() ? nullptr : &it->second;
}

const ClassDecl* CodeModel::find_class(const TypeId& id) const {
    auto it = classes.find(id);
    return it == classes.end() ? nullptr : &it->second;
}

long CodeModel::total_declared_methods() const {
    long total = 0;
    for (const auto& [id, decl] : interfaces) total += decl.public_size();
    return total;
}

std::vector<TypeId> CodeModel::interface_descendants(const TypeId& id) const {
    std::set<TypeId> seen{id};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [cand_id, decl] : interfaces) {
            if (seen.count(cand_id)) continue;
            for (const auto& edge : decl.extends) {
                if (!edge.target_id.empty() && seen.count(edge.target_id)) {
                    seen.insert(cand_id);
                    grew = true;
                    break;
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<TypeId> CodeModel::implementation_closure(const TypeId& id) const {
    std::vector<TypeId> ifaces = interface_descendants(id);
    std::set<TypeId> iface_set(ifaces.begin(), ifaces.end());

    std::set<TypeId> impls;
    for (const auto& [cls_id, decl] : classes) {
        for (const auto& edge : decl.implements) {
            if (!edge.target_id.empty() && iface_set.count(edge.target_id)) {
                impls.insert(cls_id);
                break;
            }
        }
    }
    // subclasses of implementing classes
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [cls_id, decl] : classes) {
            if (impls.count(cls_id)) continue;
            if (!decl.extends.target_id.empty() && impls.count(decl.extends.target_id)) {
                impls.insert(cls_id);
                grew = true;
            }
        }
    }
    return {impls.begin(), impls.end()};
}

} // namespace ifclone::facts
