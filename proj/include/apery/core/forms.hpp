#pragma once

// Small description language for the q-series named in the registry.
//
//   {"kind": "eta", "factors": [[m, e], ...]}
//   {"kind": "periodic_product", "lead": "1", "exponents": [...]}
//   {"kind": "lambert", "shape": ..., "weights": [...], "power": p, "constant": c, "scale": s}
//   {"kind": "eisenstein", "terms": [["E4", m, "coeff"], ...]}
//   {"kind": "triple_product", "multipliers": ["1/8", "7/8"], "scale": s}
//   {"kind": "product", "factors": [form, ...]}       each factor may carry "exponent"
//   {"kind": "rational_in", "of": form, "num": [...], "den": [...]}
//   {"kind": "t_rational", "num": [...], "den": [...]}   rational function of the case's t
//   {"kind": "theta_log_t"}                            (q dt/dq)/t of the case's t
//   {"kind": "A"}                                      the case's A

#include <stdexcept>

#include <json.hpp>

#include "apery/lfunctions/lseries.hpp"
#include "apery/series/qseries.hpp"

namespace apery::core {

using series::QSeries;
using series::Rational;

class RegistryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FormContext {
    const QSeries *t = nullptr;
    const QSeries *A = nullptr;
};

/// Series known through absolute exponent N, leading zeros stripped.
QSeries build_form(const nlohmann::json &form, int N, const FormContext &ctx = {});

/// Integer coefficient generator (entry n = coefficient of q^n).
lfun::CoefficientStream::Generator stream_generator(const nlohmann::json &form);

} // namespace apery::core
