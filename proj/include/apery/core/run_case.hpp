#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "apery/core/limits.hpp"
#include "apery/core/registry.hpp"
#include "apery/operator/sequences.hpp"

namespace apery::core {

struct RunOptions {
    /// index of the ratio b_n/a_n; registry default when unset
    std::optional<int> n;
    /// agreement digits for geometric cases; registry default when unset
    std::optional<int> digits;
    Precision prec_bits = 256;
    /// order of the exact q-series certification
    int series_order = 200;
};

struct CaseReport {
    nlohmann::ordered_json json;
    bool pass = false;
};

/// Value of a target expression to `digits` decimal digits.
Real evaluate_target(const std::vector<TargetTerm> &target, const FormRegistry &forms, int digits);

/// Limit estimate per the case's rate model from a finished sequence run.
LimitEstimate estimate_limit(const CaseSpec &c, const op::SequenceRun &run, std::size_t N, const Real &target,
                             Precision wp);

CaseReport run_case(const std::string &id, const RunOptions &opts = {});
CaseReport run_case(const CaseSpec &c, const RunOptions &opts = {});

struct IdentitiesReport {
    nlohmann::ordered_json json;
    bool pass = false;
};

/// which: stabilizer | mod12 | mod16 | all
IdentitiesReport run_identities(const std::string &which, int digits);

} // namespace apery::core
