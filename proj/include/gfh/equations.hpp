#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gfh/classify.hpp"

namespace gfh {

using BigInt = boost::multiprecision::cpp_int;

/// r = (q^(p^(e-f)) - 1) / p^e, exact. The p-adic valuation of the numerator
/// is checked to be exactly e and r to be prime to p.
BigInt compute_r(const GroupParams& gp);

/// Superelliptic quotient y^n = beta^u (1-beta)^v.
struct WeilModel {
    u64 n = 0, u = 0, v = 0;
    /// True when the lift came from a rotated triple.
    bool rotated = false;

    friend bool operator==(const WeilModel&, const WeilModel&) = default;
};

/// One factor (x - eta^index)^exponent of equation (3), eta = zeta_m.
struct FactorExponent {
    u64 root_index = 0;
    u64 exponent = 0;

    friend bool operator==(const FactorExponent&, const FactorExponent&) = default;
};

/// Affine model in C^4 (valid when 2f >= e):
///   (1) y^n = beta^u (1-beta)^v
///   (2) x^m = 1 - beta
///   (3) z^(p^f) = x^(-r) prod_{i<m} (x - eta^i)^(a i),  a = p^(2f-e)
/// The exponent of each factor is the product a * i.
struct CurveModel {
    u64 n = 0, u = 0, v = 0;
    u64 m = 0;
    u64 pf = 0;
    BigInt r;
    u64 a = 0;
    std::vector<FactorExponent> factor_exponents;

    friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

/// Throws NoCoprimePair if p divides u or v.
WeilModel weil_quotient(const GroupParams& gp, const Lift& lift);
inline WeilModel weil_quotient(const GroupParams& gp, const CurveClass& c) {
    return weil_quotient(gp, class_lift(gp, c));
}

/// Throws HypothesisFailed when 2f < e; weil_quotient still applies then.
CurveModel full_model(const GroupParams& gp, const Lift& lift);
inline CurveModel full_model(const GroupParams& gp, const CurveClass& c) {
    return full_model(gp, class_lift(gp, c));
}

enum class ModelFormat { Latex, Json, Plain };

std::string render(const WeilModel& model, ModelFormat format);
std::string render(const CurveModel& model, ModelFormat format);

/// Inverse of render(model, ModelFormat::Json).
CurveModel parse_model_json(std::string_view text);

}  // namespace gfh
