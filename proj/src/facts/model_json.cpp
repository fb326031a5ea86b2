#include "ifclone/facts/model_json.hpp"

#include <fstream>

#include "ifclone/errors.hpp"

namespace ifclone::facts {

using nlohmann::json;

namespace {

json type_ref_to_json(const TypeRef& t) {
    return json{{"raw", t.raw_text},
                {"resolved", t.resolved_name},
                {"is_array", t.is_array},
                {"dimensions", t.dimensions}};
}

TypeRef type_ref_from_json(const json& j) {
    TypeRef t;
    t.raw_text = j.at("raw").get<std::string>();
    t.resolved_name = j.at("resolved").get<std::string>();
    t.is_array = j.at("is_array").get<bool>();
    t.dimensions = j.at("dimensions").get<int>();
    return t;
}

json signature_to_json(const MethodSignature& s) {
    json params = json::array();
    for (const auto& p : s.param_types) params.push_back(type_ref_to_json(p));
    return json{{"name", s.name},
                {"return", type_ref_to_json(s.return_type)},
                {"params", std::move(params)},
                {"public", s.visibility == Visibility::Public}};
}

MethodSignature signature_from_json(const json& j) {
    MethodSignature s;
    s.name = j.at("name").get<std::string>();
    s.return_type = type_ref_from_json(j.at("return"));
    for (const auto& p : j.at("params")) s.param_types.push_back(type_ref_from_json(p));
    s.visibility = j.at("public").get<bool>() ? Visibility::Public : Visibility::Other;
    return s;
}

json edge_to_json(const TypeEdge& e) {
    return json{{"name", e.name}, {"target", e.target_id}, {"external", e.external}};
}

TypeEdge edge_from_json(const json& j) {
    TypeEdge e;
    e.name = j.at("name").get<std::string>();
    e.target_id = j.at("target").get<std::string>();
    e.external = j.at("external").get<bool>();
    return e;
}

json import_to_json(const Import& i) {
    return json{{"qualified", i.qualified}, {"wildcard", i.wildcard}, {"static", i.is_static}};
}

Import import_from_json(const json& j) {
    Import i;
    i.qualified = j.at("qualified").get<std::string>();
    i.wildcard = j.at("wildcard").get<bool>();
    i.is_static = j.at("static").get<bool>();
    return i;
}

json body_to_json(const MethodBody& b) {
    return json{{"signature", signature_to_json(b.signature)},
                {"param_names", b.param_names},
                {"text", b.body_text},
                {"start_line", b.start_line},
                {"end_line", b.end_line}};
}

MethodBody body_from_json(const json& j) {
    MethodBody b;
    b.signature = signature_from_json(j.at("signature"));
    b.param_names = j.at("param_names").get<std::vector<std::string>>();
    b.body_text = j.at("text").get<std::string>();
    b.start_line = j.at("start_line").get<int>();
    b.end_line = j.at("end_line").get<int>();
    return b;
}

} // namespace

json model_to_json(const CodeModel& model) {
    json interfaces = json::array();
    for (const auto& [id, decl] : model.interfaces) {
        json sigs = json::array();
        for (const auto& s : decl.signatures) sigs.push_back(signature_to_json(s));
        json edges = json::array();
        for (const auto& e : decl.extends) edges.push_back(edge_to_json(e));
        json bodies = json::array();
        for (const auto& b : decl.default_bodies) bodies.push_back(body_to_json(b));
        json imports = json::array();
        for (const auto& i : decl.imports) imports.push_back(import_to_json(i));
        interfaces.push_back(json{{"id", decl.id},
                                  {"qualified_name", decl.qualified_name},
                                  {"package", decl.package_path},
                                  {"signatures", std::move(sigs)},
                                  {"extends", std::move(edges)},
                                  {"is_marker", decl.flags.is_marker},
                                  {"is_test", decl.flags.is_test},
                                  {"is_library", decl.flags.is_library},
                                  {"default_bodies", std::move(bodies)},
                                  {"source_file", decl.source_file},
                                  {"imports", std::move(imports)}});
    }

    json classes = json::array();
    for (const auto& [id, decl] : model.classes) {
        json impls = json::array();
        for (const auto& e : decl.implements) impls.push_back(edge_to_json(e));
        json bodies = json::array();
        for (const auto& b : decl.bodies) bodies.push_back(body_to_json(b));
        json fields = json::array();
        for (const auto& f : decl.fields) {
            fields.push_back(json{{"name", f.name}, {"type", type_ref_to_json(f.type)}});
        }
        json imports = json::array();
        for (const auto& i : decl.imports) imports.push_back(import_to_json(i));
        classes.push_back(json{{"id", decl.id},
                               {"qualified_name", decl.qualified_name},
                               {"package", decl.package_path},
                               {"implements", std::move(impls)},
                               {"extends", edge_to_json(decl.extends)},
                               {"bodies", std::move(bodies)},
                               {"fields", std::move(fields)},
                               {"is_test", decl.is_test},
                               {"is_abstract", decl.is_abstract},
                               {"source_file", decl.source_file},
                               {"imports", std::move(imports)}});
    }

    json invocations = json::array();
    for (const auto& site : model.invocations) {
        invocations.push_back(json{{"client", site.client_class},
                                   {"receiver_type", type_ref_to_json(site.receiver_declared_type)},
                                   {"interface", site.interface_id},
                                   {"method", site.method_name},
                                   {"arg_count", site.arg_count}});
    }

    return json{{"schema_version", kModelSchemaVersion},
                {"source_roots", model.source_roots},
                {"interfaces", std::move(interfaces)},
                {"classes", std::move(classes)},
                {"invocations", std::move(invocations)}};
}

CodeModel model_from_json(const json& doc) {
    CodeModel model;
    model.source_roots = doc.at("source_roots").get<std::vector<std::string>>();
    for (const auto& j : doc.at("interfaces")) {
        InterfaceDecl decl;
        decl.id = j.at("id").get<std::string>();
        decl.qualified_name = j.at("qualified_name").get<std::string>();
        decl.package_path = j.at("package").get<std::vector<std::string>>();
        for (const auto& s : j.at("signatures")) decl.signatures.push_back(signature_from_json(s));
        for (const auto& e : j.at("extends")) decl.extends.push_back(edge_from_json(e));
        decl.flags.is_marker = j.at("is_marker").get<bool>();
        decl.flags.is_test = j.at("is_test").get<bool>();
        decl.flags.is_library = j.at("is_library").get<bool>();
        for (const auto& b : j.at("default_bodies")) decl.default_bodies.push_back(body_from_json(b));
        decl.source_file = j.at("source_file").get<std::string>();
        for (const auto& i : j.at("imports")) decl.imports.push_back(import_from_json(i));
        model.interfaces.emplace(decl.id, std::move(decl));
    }
    for (const auto& j : doc.at("classes")) {
        ClassDecl decl;
        decl.id = j.at("id").get<std::string>();
        decl.qualified_name = j.at("qualified_name").get<std::string>();
        decl.package_path = j.at("package").get<std::vector<std::string>>();
        for (const auto& e : j.at("implements")) decl.implements.push_back(edge_from_json(e));
        decl.extends = edge_from_json(j.at("extends"));
        for (const auto& b : j.at("bodies")) decl.bodies.push_back(body_from_json(b));
        for (const auto& f : j.at("fields")) {
            decl.fields.push_back(FieldDecl{f.at("name").get<std::string>(),
                                            type_ref_from_json(f.at("type"))});
        }
        decl.is_test = j.at("is_test").get<bool>();
        decl.is_abstract = j.at("is_abstract").get<bool>();
        decl.source_file = j.at("source_file").get<std::string>();
        for (const auto& i : j.at("imports")) decl.imports.push_back(import_from_json(i));
        model.classes.emplace(decl.id, std::move(decl));
    }
    for (const auto& j : doc.at("invocations")) {
        InvocationSite site;
        site.client_class = j.at("client").get<std::string>();
        site.receiver_declared_type = type_ref_from_json(j.at("receiver_type"));
        site.interface_id = j.at("interface").get<std::string>();
        site.method_name = j.at("method").get<std::string>();
        site.arg_count = j.at("arg_count").get<int>();
        model.invocations.push_back(std::move(site));
    }
    return model;
}

void dump_model_file(const CodeModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write model dump: " + path);
    out << model_to_json(model).dump(2) << '\n';
}

CodeModel load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read model dump: " + path);
    json doc = json::parse(in);
    return model_from_json(doc);
}

} // namespace ifclone::facts
