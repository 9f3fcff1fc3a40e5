#pragma once

#include <complex>

#include "starlike/classbounds.hpp"
#include "starlike/regions.hpp"

namespace starlike {

// The four explicit extremal functions (all normalized: f(0)=0, f'(0)=1).
//   K1Moebius: z(1+z^2) / ((1-z^2)(1-2biz-z^2))
//   K1Alt:     z(1-2bz+z^2) / (1-z^2)^2
//   K2Moebius: z(1+z^2)^2 / ((1-z^2)(1-2ciz-z^2)(1-(4b-2c)iz-z^2))
//   K2Alt:     z(1-2cz+z^2)(1-(4b-2c)z+z^2) / (1-z^2)^3
enum class ExtremalFamily { K1Moebius, K1Alt, K2Moebius, K2Alt };

struct ExtremalKind {
    ExtremalFamily family = ExtremalFamily::K1Moebius;
    double b = 0.0;
    double c = 0.0;  // unused by the K1 families
};

std::string extremal_name(ExtremalFamily family);

// f(z) itself.
Complex extremal_value(const ExtremalKind& kind, Complex z);

// zf'(z)/f(z) as an exact sum of logarithmic derivatives of the linear and
// quadratic factors; logderiv(.,0) = 1. Throws SingularityError when a factor
// vanishes within 1e-12 of z.
Complex logderiv(const ExtremalKind& kind, Complex z);

// The companion g_{b,c} for the K2 families (membership is defined through
// the pair f/g, g(1-z^2)/z). Throws UnsupportedError for K1 families.
Complex companion_g_value(const ExtremalKind& kind, Complex z);
Complex companion_g_logderiv(const ExtremalKind& kind, Complex z);

enum class TouchDirection { PlusIRho, MinusIRho, PlusRho, MinusRho };

Complex direction_unit(TouchDirection dir);
std::string direction_name(TouchDirection dir);

struct SharpnessPoint {
    TouchDirection direction = TouchDirection::MinusIRho;
    double rho = 0.0;

    Complex z() const { return direction_unit(direction) * rho; }
};

struct SharpnessSelection {
    TouchDirection direction = TouchDirection::MinusIRho;
    ExtremalKind kind;
};

// Which extremal touches the region boundary, and where on |z| = rho.
// Regions whose margin binds on the left of the disc (slope +1) use the
// Moebius extremal at -i rho (b<0) / +i rho (b>0); right-binding regions
// (slope -1: lemniscate, sine, nephroid, sigmoid) use the Alt extremal at
// +rho (b<0) / -rho (b>0). Throws UnsupportedError for K3 and for b = 0.
SharpnessSelection sharpness_point(FunctionClass cls, const RegionKind& region,
                                   double b, double c = 0.0);

struct CertificationReport {
    bool passed = false;
    double residual = 0.0;
    Complex w;      // logderiv value at the touch point
    SharpnessPoint point;
    ExtremalFamily family = ExtremalFamily::K1Moebius;
};

// Evaluates w = zf'/f of the selected extremal at the touch point on
// |z| = rho and checks the region's boundary identity within tol.
CertificationReport certify_sharpness(const ClassSpec& spec, const RegionKind& region,
                                      double rho, double tol);

// Residual of the region-specific boundary identity at w (0 means w sits
// exactly on the boundary touch value).
double boundary_identity_residual(const RegionKind& region, Complex w);

}  // namespace starlike
