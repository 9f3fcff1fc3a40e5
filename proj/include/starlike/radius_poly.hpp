#pragma once

#include <functional>
#include <vector>

#include "starlike/classbounds.hpp"
#include "starlike/regions.hpp"

namespace starlike {

// Real polynomial in ascending-degree coefficient form, degree <= 8,
// trailing zero coefficients trimmed.
struct RealPolynomial {
    std::vector<double> coeffs;

    int degree() const;
    double operator()(double x) const;
    double derivative_at(double x) const;
    double max_abs_coeff() const;
    void trim();
};

enum class RootMethod { Polynomial, MarginOracle };

struct RadiusResult {
    double rho = 0.0;
    double residual = 0.0;
    double bracket_width = 0.0;
    RootMethod method = RootMethod::Polynomial;
};

// Coefficient vector of the radius equation for (class, region), with the
// normalized parameters and the constants e, sqrt(2), sin 1 substituted
// numerically at build time.
RealPolynomial build_polynomial(const ClassSpec& spec, const RegionKind& region);

// Smallest root in (0,1): uniform 4096-cell sign scan (doubled once before
// giving up), bisection to bracket width 1e-14, one guarded Newton polish.
// Throws NoRootError when no sign change is found.
RadiusResult smallest_root_in_unit(const RealPolynomial& poly);

// The same isolator for a generic scalar function on (0, hi]; shared by the
// margin-route oracle. df may be empty (bisection-only polish is skipped).
RadiusResult smallest_root_scan(const std::function<double(double)>& f,
                                const std::function<double(double)>& df,
                                double hi, RootMethod method);

}  // namespace starlike
