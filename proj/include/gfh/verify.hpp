#pragma once

#include <string>
#include <vector>

#include "gfh/classify.hpp"

namespace gfh {

struct SuiteResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    /// Largest n for the exhaustive oracles (automorphism filter over n^4
    /// candidates, classification partition, all-pairs fixed-point and colour checks).
    u64 oracle_max_n = kDefaultOracleDegree;
    unsigned workers = 1;
};

/// Oracle suites for one parameter set: group-aut, classification, genus, fixed-points,
/// color-reversal, r-integrality. A suite beyond the oracle bound is skipped,
/// or run on class lifts only where that still makes sense.
std::vector<SuiteResult> run_verify(const GroupParams& gp, const VerifyOptions& options = {});

/// Brute-force automorphism filter over all (i,j,k,l) in [0,n)^4.
std::vector<GroupAut> brute_force_auts(const GroupParams& gp);

/// r-integrality over p in {3,5,7}, e <= 4, 1 <= f <= e.
SuiteResult verify_r_grid();

/// (p, e, f) sets checked by `verify` when no parameters are given.
std::vector<GroupParams> default_verify_grid();

}  // namespace gfh
