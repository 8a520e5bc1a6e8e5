#pragma once

// End-to-end verification chain: grope parameters -> clasper -> complete
// contraction -> shape check -> hair map -> leading term -> sl2 certificate.

#include "beadweave/contraction.hpp"
#include "beadweave/hairmap.hpp"

#include <string>
#include <vector>

namespace beadweave {

struct VerifyReport {
    int n = 0;

    // stage: clasper construction and complete contraction
    int clasper_trivalent = 0;
    int clasper_leaves = 0;
    size_t contraction_terms = 0;
    ContractionShapeReport contraction_shape;

    // stage: hair map, degrees at or below n must be empty
    bool low_degrees_empty = false;
    std::vector<int> surviving_degrees;

    // stage: leading term in Vassiliev degree n+1
    size_t leading_terms = 0;
    A2hReport a2h;
    bool coeffs_half_integral = false;

    // stage: sl2 certificate on the joined generator
    Int sl2_value = 0;
    Int sl2_expected = 0;  // 3 * 2^n, compared up to sign
    bool sl2_ok = false;
    // consistency: sl2 of the joined leading term, +-(3 * 2^n) / 2
    Rational sl2_joined_leading = 0;
    bool joined_leading_ok = false;

    bool pass = false;
};

// Runs the whole chain for grope class 2n. Throws PreconditionError for
// n < 1 or n > max_n; structural failures in any stage propagate with their
// stage-specific exception.
VerifyReport verify_chain(int n, int max_n = 6);

std::string verify_report_text(const VerifyReport& r);
std::string verify_report_json(const VerifyReport& r);

} // namespace beadweave
