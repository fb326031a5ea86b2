#include "ifclone/textclone/textclone.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

namespace ifclone::textclone {

namespace {

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r\f\v");
    if (begin == std::string::npos) return {};
    size_t end = s.find_last_not_of(" \t\r\f\v");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::string strip_line_comment(const std::string& line) {
    bool in_string = false, in_char = false;
    for (size_t i = 0; i + 1 < line.size(); ++i) {
        char c = line[i];
        if (c == '\\' && (in_string || in_char)) { ++i; continue; }
        if (c == '"' && !in_char) in_string = !in_string;
        else if (c == '\'' && !in_string) in_char = !in_char;
        else if (c == '/' && line[i + 1] == '/' && !in_string && !in_char) {
            return line.substr(0, i);
        }
    }
    return line;
}

} // namespace

NormalizedUnit normalize_lines(const std::string& text) {
    return normalize_lines(text, 0);
}

NormalizedUnit normalize_lines(const std::string& text, int first_line) {
    NormalizedUnit unit;
    std::vector<std::string> raw = split_lines(text);
    for (size_t i = 0; i < raw.size(); ++i) {
        std::string t = trim(raw[i]);
        if (t.empty()) continue;
        unit.lines.push_back(std::move(t));
        unit.original_lines.push_back(first_line + static_cast<int>(i));
    }
    return unit;
}

std::vector<ClonePair> detect_clones(const NormalizedUnit& a, const NormalizedUnit& b,
                                     const CloneParams& params, bool allow_self) {
    std::vector<ClonePair> result;
    if (!params.valid()) return result;
    if (!a.origin.empty() && a.origin == b.origin && !allow_self) return result;

    const int na = static_cast<int>(a.lines.size());
    const int nb = static_cast<int>(b.lines.size());
    if (na == 0 || nb == 0) return result;

    // intern line text so diagonal walks compare integers
    std::unordered_map<std::string, int> intern;
    auto id_of = [&](const std::string& s) {
        auto [it, inserted] = intern.emplace(s, static_cast<int>(intern.size()));
        return it->second;
    };
    std::vector<int> ia(na), ib(nb);
    for (int i = 0; i < na; ++i) ia[i] = id_of(a.lines[i]);
    for (int j = 0; j < nb; ++j) ib[j] = id_of(b.lines[j]);

    struct Run {
        int a_start;
        int length;
    };

    auto emit_chain = [&](int diag, const std::vector<Run>& chain) {
        int total = 0;
        for (const Run& r : chain) total += r.length;
        if (total < params.min_clone_length) return;

        ClonePair pair;
        pair.matched_lines = total;
        for (const Run& r : chain) {
            ChunkMatch chunk;
            chunk.a_start = r.a_start;
            chunk.b_start = r.a_start - diag;
            chunk.length = r.length;
            chunk.a_first_line = a.original_lines[chunk.a_start];
            chunk.a_last_line = a.original_lines[chunk.a_start + r.length - 1];
            chunk.b_first_line = b.original_lines[chunk.b_start];
            chunk.b_last_line = b.original_lines[chunk.b_start + r.length - 1];
            pair.chunks.push_back(chunk);
        }
        pair.fragment_a = CloneFragment{a.origin, pair.chunks.front().a_first_line,
                                        pair.chunks.back().a_last_line};
        pair.fragment_b = CloneFragment{b.origin, pair.chunks.front().b_first_line,
                                        pair.chunks.back().b_last_line};
        result.push_back(std::move(pair));
    };

    // diag = i - j; walk each alignment once, chaining chunks across gaps
    for (int diag = -(nb - 1); diag <= na - 1; ++diag) {
        const int i_begin = std::max(0, diag);
        const int i_end = std::min(na, nb + diag); // exclusive

        std::vector<Run> chain;
        int last_end = 0; // one past the previous chunk on this diagonal
        int i = i_begin;
        while (i < i_end) {
            if (ia[i] != ib[i - diag]) {
                ++i;
                continue;
            }
            int start = i;
            while (i < i_end && ia[i] == ib[i - diag]) ++i;
            int length = i - start;
            if (length < params.min_chunk_size) continue;

            if (!chain.empty() && start - last_end > params.max_line_bias) {
                emit_chain(diag, chain);
                chain.clear();
            }
            chain.push_back(Run{start, length});
            last_end = start + length;
        }
        if (!chain.empty()) emit_chain(diag, chain);
    }

    std::sort(result.begin(), result.end(), [](const ClonePair& x, const ClonePair& y) {
        if (x.fragment_a.start_line != y.fragment_a.start_line) {
            return x.fragment_a.start_line < y.fragment_a.start_line;
        }
        return x.fragment_b.start_line < y.fragment_b.start_line;
    });
    return result;
}

namespace {

/// A body gathered for one side of an association, with its normalized unit
/// built once.
struct GatheredBody {
    std::string origin;
    NormalizedUnit unit;
};

/// The group key without the return type: an implementation matches its
/// interface signature by name and parameter types (covariant returns are
/// still implementations). The canonical form is "<return> name(p1,p2)";
/// the name is the identifier right before the first '(' (return types can
/// contain spaces inside generic arguments).
std::string group_match_key(const clones::SignatureKey& key) {
    size_t paren = key.canonical.find('(');
    if (paren == std::string::npos) return key.canonical;
    size_t name_start = paren;
    while (name_start > 0) {
        char c = key.canonical[name_start - 1];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$') --name_start;
        else break;
    }
    return key.canonical.substr(name_start);
}

std::string body_match_key(const facts::MethodSignature& sig) {
    return sig.name + "(" + [&] {
        std::string params;
        for (size_t i = 0; i < sig.param_types.size(); ++i) {
            if (i > 0) params += ',';
            params += sig.param_types[i].resolved_name;
            for (int d = 0; d < sig.param_types[i].dimensions; ++d) params += "[]";
        }
        return params;
    }() + ")";
}

std::vector<GatheredBody> gather_bodies(const facts::CodeModel& model,
                                        const facts::TypeId& interface_id,
                                        const std::string& match_key,
                                        const AssociationOptions& options) {
    std::vector<GatheredBody> gathered;

    auto add_body = [&](const facts::TypeId& holder, const facts::MethodBody& body) {
        if (body_match_key(body.signature) != match_key) return;
        if (body.body_text.empty()) return;
        GatheredBody g;
        g.origin = holder + "::" + match_key + "@" + std::to_string(body.start_line);
        std::string text = body.body_text;
        if (options.strip_line_comments) {
            std::string rebuilt;
            size_t start = 0;
            while (start <= text.size()) {
                size_t nl = text.find('\n', start);
                std::string line = nl == std::string::npos ? text.substr(start)
                                                           : text.substr(start, nl - start);
                rebuilt += strip_line_comment(line);
                if (nl == std::string::npos) break;
                rebuilt += '\n';
                start = nl + 1;
            }
            text = rebuilt;
        }
        g.unit = normalize_lines(text, body.start_line);
        g.unit.origin = g.origin;
        gathered.push_back(std::move(g));
    };

    for (const auto& cls_id : model.implementation_closure(interface_id)) {
        const facts::ClassDecl* cls = model.find_class(cls_id);
        if (cls == nullptr) continue;
        for (const auto& body : cls->bodies) add_body(cls_id, body);
    }
    const facts::InterfaceDecl* decl = model.find_interface(interface_id);
    if (decl != nullptr) {
        for (const auto& body : decl->default_bodies) add_body(interface_id, body);
    }
    std::sort(gathered.begin(), gathered.end(),
              [](const GatheredBody& x, const GatheredBody& y) { return x.origin < y.origin; });
    return gathered;
}

} // namespace

AssociationOutcome associate_clones(const facts::CodeModel& model,
                                    const std::vector<clones::DuplicateGroup>& groups,
                                    const AssociationOptions& options) {
    AssociationOutcome outcome;
    std::map<std::string, std::set<int>> covered; // origin -> matched normalized indices

    auto record_pairs = [&](const std::vector<ClonePair>& pairs, AssociationRecord& rec) {
        for (const auto& pair : pairs) {
            rec.cc_count += 1;
            rec.copied_lc += pair.matched_lines;
            for (const auto& chunk : pair.chunks) {
                for (int k = 0; k < chunk.length; ++k) {
                    covered[pair.fragment_a.origin].insert(chunk.a_start + k);
                    covered[pair.fragment_b.origin].insert(chunk.b_start + k);
                }
            }
        }
    };

    for (const auto& group : groups) {
        const std::string match_key = group_match_key(group.key);

        std::map<facts::TypeId, std::vector<GatheredBody>> sides;
        for (const auto& iface : group.declaring_interfaces) {
            sides.emplace(iface, gather_bodies(model, iface, match_key, options));
        }

        std::vector<facts::TypeId> ifaces(group.declaring_interfaces.begin(),
                                          group.declaring_interfaces.end());
        for (size_t x = 0; x < ifaces.size(); ++x) {
            for (size_t y = x + 1; y < ifaces.size(); ++y) {
                AssociationRecord rec;
                rec.group = group;
                rec.interface_a = ifaces[x];
                rec.interface_b = ifaces[y];
                for (const auto& body_a : sides[ifaces[x]]) {
                    for (const auto& body_b : sides[ifaces[y]]) {
                        record_pairs(detect_clones(body_a.unit, body_b.unit, options.params), rec);
                    }
                }
                outcome.records.push_back(std::move(rec));
            }
            if (options.include_within_interface) {
                AssociationRecord rec;
                rec.group = group;
                rec.interface_a = ifaces[x];
                rec.interface_b = ifaces[x];
                const auto& bodies = sides[ifaces[x]];
                for (size_t p = 0; p < bodies.size(); ++p) {
                    for (size_t q = p + 1; q < bodies.size(); ++q) {
                        record_pairs(detect_clones(bodies[p].unit, bodies[q].unit, options.params),
                                     rec);
                    }
                }
                outcome.records.push_back(std::move(rec));
            }
        }
    }

    for (const auto& [origin, lines] : covered) {
        outcome.covered_line_total += static_cast<long>(lines.size());
    }
    return outcome;
}

} // namespace ifclone::textclone
