#pragma once

#include <string>
#include <vector>

#include "alphawidth/graph.hpp"
#include "alphawidth/json_fwd.hpp"

namespace alphawidth {

struct SuiteParams {
    int k = 1;
    int d = 3;
    int l = 4;
};

enum class Status { pass, fail, skip };

struct GraphOutcome {
    std::size_t index = 0;
    std::string graph6;
    Status status = Status::pass;
    std::string detail;
    Json values = Json::object();
};

struct RunReport {
    std::string suite;
    std::vector<GraphOutcome> outcomes;
    /// Stream lines that failed to parse and were skipped.
    std::vector<std::string> warnings;
    double wall_seconds = 0.0;

    std::size_t count(Status s) const;
    std::size_t failures() const { return count(Status::fail); }
    /// Aggregate object; wall time included only on request so reports stay reproducible.
    Json summary(bool with_timing) const;
};

const std::vector<std::string>& suite_names();

/// Worker threads from ALPHAWIDTH_WORKERS (default 1).
int worker_count_from_env();

/// Evaluates the named property on every graph. Results are merged in input order, so
/// the report does not depend on the worker count.
RunReport run_suite(const std::string& name, const std::vector<Graph>& graphs, const SuiteParams& params,
                    int workers = 1);

const char* status_name(Status s);

}  // namespace alphawidth
