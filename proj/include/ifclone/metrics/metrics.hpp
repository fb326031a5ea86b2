#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ifclone/clones/clone_core.hpp"
#include "ifclone/facts/types.hpp"

namespace ifclone::metrics {

/// Usage cohesion of one interface: the client-averaged fraction of its
/// declared methods each client class actually calls. Undefined without
/// clients.
struct IucRecord {
    facts::TypeId interface_id;
    int client_count = 0;
    std::optional<double> iuc;

    bool operator==(const IucRecord&) const = default;
};

enum class CorrelationMethod { Pearson, Spearman };

struct CorrelationResult {
    CorrelationMethod method = CorrelationMethod::Pearson;
    double coefficient = 0.0;
    double determination = 0.0; // coefficient squared
    int n = 0;
};

/// Clients of i per the model: classes outside i's implementation closure
/// with at least one invocation site on i.
std::vector<facts::TypeId> client_classes(const facts::CodeModel& model,
                                          const facts::TypeId& interface_id);

/// IUC(i) = mean over clients of |used(c,i)| / size(i), where used(c,i) are
/// i's declared public methods matched by c's invocation sites (name +
/// arity). Throws UnknownInterfaceError for ids not in the model.
IucRecord compute_iuc(const facts::CodeModel& model, const facts::TypeId& interface_id);

/// Pearson product-moment or Spearman (fractional ranks, mid-rank ties).
/// Requires n >= 3; throws DegenerateSampleError when a vector is constant.
CorrelationResult correlation(const std::vector<double>& xs, const std::vector<double>& ys,
                              CorrelationMethod method);

/// The square of a correlation coefficient.
double determination(double coefficient);

/// One row per interface in the (filtered) model.
struct MetricRow {
    facts::TypeId interface_id;
    std::string qualified_name;
    int size = 0;
    int idm = 0;
    int client_count = 0;
    std::optional<double> iuc; // missing, never zero-filled, without clients
    int clone_pair_degree = 0;

    bool operator==(const MetricRow&) const = default;
};

std::vector<MetricRow> metric_table(const facts::CodeModel& model,
                                    const std::map<facts::TypeId, int>& idm,
                                    const std::vector<clones::ClonePairRecord>& pairs);

} // namespace ifclone::metrics
