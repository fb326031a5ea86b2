#include "ifclone/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "ifclone/errors.hpp"

namespace ifclone::metrics {

using facts::CodeModel;
using facts::TypeId;
using facts::Visibility;

std::vector<TypeId> client_classes(const CodeModel& model, const TypeId& interface_id) {
    std::vector<TypeId> impls = model.implementation_closure(interface_id);
    std::set<TypeId> excluded(impls.begin(), impls.end());

    std::set<TypeId> clients;
    for (const auto& site : model.invocations) {
        if (site.interface_id != interface_id) continue;
        if (excluded.count(site.client_class)) continue;
        clients.insert(site.client_class);
    }
    return {clients.begin(), clients.end()};
}

IucRecord compute_iuc(const CodeModel& model, const TypeId& interface_id) {
    const facts::InterfaceDecl* decl = model.find_interface(interface_id);
    if (decl == nullptr) throw UnknownInterfaceError("unknown interface: " + interface_id);

    IucRecord record;
    record.interface_id = interface_id;

    const int size = decl->public_size();
    std::vector<TypeId> clients = client_classes(model, interface_id);
    record.client_count = static_cast<int>(clients.size());
    if (clients.empty() || size == 0) return record;

    double sum = 0.0;
    for (const auto& client : clients) {
        std::set<std::string> used;
        for (const auto& site : model.invocations) {
            if (site.interface_id != interface_id || site.client_class != client) continue;
            for (const auto& sig : decl->signatures) {
                if (sig.visibility != Visibility::Public) continue;
                if (sig.name == site.method_name &&
                    static_cast<int>(sig.param_types.size()) == site.arg_count) {
                    used.insert(sig.name + "/" + std::to_string(site.arg_count));
                }
            }
        }
        sum += static_cast<double>(used.size()) / static_cast<double>(size);
    }
    record.iuc = sum / static_cast<double>(clients.size());
    return record;
}

namespace {

bool is_constant(const std::vector<double>& v) {
    return std::adjacent_find(v.begin(), v.end(),
                              [](double a, double b) { return a != b; }) == v.end();
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    const size_t n = xs.size();
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

/// Fractional ranks with mid-rank ties: ties share the average of the
/// positions they occupy.
std::vector<double> fractional_ranks(const std::vector<double>& v) {
    const size_t n = v.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });

    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double mid = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
        i = j + 1;
    }
    return ranks;
}

} // namespace

CorrelationResult correlation(const std::vector<double>& xs, const std::vector<double>& ys,
                              CorrelationMethod method) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("correlation: sample sizes differ");
    }
    if (xs.size() < 3) {
        throw std::invalid_argument("correlation: need at least 3 samples");
    }
    if (is_constant(xs) || is_constant(ys)) {
        throw DegenerateSampleError("correlation undefined over a constant vector");
    }

    CorrelationResult result;
    result.method = method;
    result.n = static_cast<int>(xs.size());
    if (method == CorrelationMethod::Pearson) {
        result.coefficient = pearson(xs, ys);
    } else {
        result.coefficient = pearson(fractional_ranks(xs), fractional_ranks(ys));
    }
    result.determination = determination(result.coefficient);
    return result;
}

double determination(double coefficient) {
    return coefficient * coefficient;
}

std::vector<MetricRow> metric_table(const CodeModel& model,
                                    const std::map<TypeId, int>& idm,
                                    const std::vector<clones::ClonePairRecord>& pairs) {
    std::map<TypeId, int> degree;
    for (const auto& rec : pairs) {
        ++degree[rec.interface_a];
        ++degree[rec.interface_b];
    }

    std::vector<MetricRow> rows;
    rows.reserve(model.interfaces.size());
    for (const auto& [id, decl] : model.interfaces) {
        MetricRow row;
        row.interface_id = id;
        row.qualified_name = decl.qualified_name;
        row.size = decl.public_size();
        auto idm_it = idm.find(id);
        row.idm = idm_it == idm.end() ? 0 : idm_it->second;
        IucRecord iuc = compute_iuc(model, id);
        row.client_count = iuc.client_count;
        row.iuc = iuc.iuc;
        auto deg_it = degree.find(id);
        row.clone_pair_degree = deg_it == degree.end() ? 0 : deg_it->second;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace ifclone::metrics
