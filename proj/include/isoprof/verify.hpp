#pragma once

#include <cstdint>

#include "isoprof/certificate.hpp"
#include "isoprof/constants.hpp"

namespace isoprof {

struct VerifyOptions {
    double eps = kDefaultEps;
    std::size_t grid_points = 10000;
    double tolerance = 1e-9;
    std::size_t suite_size = 20;
    std::uint64_t suite_seed = 12022011;
};

/// Runs every certificate: constants, thresholds, series, grids, Morgan,
/// chord, the quadrature cross-oracle, the sphere Yamabe cross-check and
/// the random symmetrization suite.  Assumed theorems appear as their own
/// entries so the report separates verified numerics from cited results.
CertificateSet run_full_verification(const VerifyOptions& opt);

}  // namespace isoprof
