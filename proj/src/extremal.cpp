#include "starlike/extremal.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace starlike {

namespace {

constexpr double kSingularityGuard = 1e-12;
constexpr Complex kI{0.0, 1.0};

// f(z) = z * prod (c0 + c1 z + c2 z^2)^exponent
struct Factor {
    Complex c0, c1, c2;
    int exponent;

    Complex at(Complex z) const { return c0 + z * (c1 + z * c2); }
    Complex deriv_at(Complex z) const { return c1 + 2.0 * z * c2; }
};

std::vector<Factor> factors_of(const ExtremalKind& kind) {
    const double b = kind.b, c = kind.c;
    const Complex one{1.0, 0.0};
    switch (kind.family) {
        case ExtremalFamily::K1Moebius:
            return {{one, 0.0, 1.0, +1},
                    {one, 0.0, -1.0, -1},
                    {one, -2.0 * b * kI, -1.0, -1}};
        case ExtremalFamily::K1Alt:
            return {{one, -2.0 * b, 1.0, +1}, {one, 0.0, -1.0, -2}};
        case ExtremalFamily::K2Moebius:
            return {{one, 0.0, 1.0, +2},
                    {one, 0.0, -1.0, -1},
                    {one, -2.0 * c * kI, -1.0, -1},
                    {one, -(4.0 * b - 2.0 * c) * kI, -1.0, -1}};
        case ExtremalFamily::K2Alt:
            return {{one, -2.0 * c, 1.0, +1},
                    {one, -(4.0 * b - 2.0 * c), 1.0, +1},
                    {one, 0.0, -1.0, -3}};
    }
    throw DomainError("factors_of: bad extremal family");
}

std::vector<Factor> companion_factors_of(const ExtremalKind& kind) {
    const double c = kind.c;
    const Complex one{1.0, 0.0};
    switch (kind.family) {
        case ExtremalFamily::K2Moebius:
            return {{one, 0.0, 1.0, +1},
                    {one, 0.0, -1.0, -1},
                    {one, -2.0 * c * kI, -1.0, -1}};
        case ExtremalFamily::K2Alt:
            return {{one, -2.0 * c, 1.0, +1}, {one, 0.0, -1.0, -2}};
        default:
            throw UnsupportedError("companion g is defined for the K2 extremals only");
    }
}

Complex product_value(const std::vector<Factor>& factors, Complex z) {
    Complex acc{1.0, 0.0};
    for (const auto& f : factors) {
        const Complex v = f.at(z);
        const int reps = std::abs(f.exponent);
        for (int k = 0; k < reps; ++k) acc = f.exponent > 0 ? acc * v : acc / v;
    }
    return z * acc;
}

Complex logderiv_of(const std::vector<Factor>& factors, Complex z) {
    Complex acc{1.0, 0.0};
    for (const auto& f : factors) {
        const Complex v = f.at(z);
        if (std::abs(v) < kSingularityGuard) {
            throw SingularityError("extremal factor vanishes within 1e-12 of z");
        }
        acc += static_cast<double>(f.exponent) * z * f.deriv_at(z) / v;
    }
    return acc;
}

void require_k2_extremal_valid(const ExtremalKind& kind) {
    if (kind.family == ExtremalFamily::K2Moebius || kind.family == ExtremalFamily::K2Alt) {
        if (std::abs(2.0 * kind.b - kind.c) > 1.0) {
            throw ParameterError("K2 extremal functions require |2b-c| <= 1");
        }
    }
}

}  // namespace

std::string extremal_name(ExtremalFamily family) {
    switch (family) {
        case ExtremalFamily::K1Moebius: return "K1-moebius";
        case ExtremalFamily::K1Alt:     return "K1-alt";
        case ExtremalFamily::K2Moebius: return "K2-moebius";
        case ExtremalFamily::K2Alt:     return "K2-alt";
    }
    return "?";
}

Complex extremal_value(const ExtremalKind& kind, Complex z) {
    return product_value(factors_of(kind), z);
}

Complex logderiv(const ExtremalKind& kind, Complex z) {
    if (std::abs(z) >= 1.0) throw DomainError("logderiv requires |z| < 1");
    return logderiv_of(factors_of(kind), z);
}

Complex companion_g_value(const ExtremalKind& kind, Complex z) {
    return product_value(companion_factors_of(kind), z);
}

Complex companion_g_logderiv(const ExtremalKind& kind, Complex z) {
    return logderiv_of(companion_factors_of(kind), z);
}

Complex direction_unit(TouchDirection dir) {
    switch (dir) {
        case TouchDirection::PlusIRho:  return {0.0, 1.0};
        case TouchDirection::MinusIRho: return {0.0, -1.0};
        case TouchDirection::PlusRho:   return {1.0, 0.0};
        case TouchDirection::MinusRho:  return {-1.0, 0.0};
    }
    return {0.0, 0.0};
}

std::string direction_name(TouchDirection dir) {
    switch (dir) {
        case TouchDirection::PlusIRho:  return "+i*rho";
        case TouchDirection::MinusIRho: return "-i*rho";
        case TouchDirection::PlusRho:   return "+rho";
        case TouchDirection::MinusRho:  return "-rho";
    }
    return "?";
}

SharpnessSelection sharpness_point(FunctionClass cls, const RegionKind& region,
                                   double b, double c) {
    if (cls == FunctionClass::K3) {
        throw UnsupportedError("no sharpness is established for K3");
    }
    if (b == 0.0) {
        throw UnsupportedError("sharpness points are specified for b != 0 only");
    }
    const bool left_binding = margin_spec(region).slope > 0.0;
    SharpnessSelection sel;
    sel.kind.b = b;
    sel.kind.c = c;
    if (left_binding) {
        sel.direction = b < 0.0 ? TouchDirection::MinusIRho : TouchDirection::PlusIRho;
        sel.kind.family = cls == FunctionClass::K1 ? ExtremalFamily::K1Moebius
                                                   : ExtremalFamily::K2Moebius;
    } else {
        sel.direction = b < 0.0 ? TouchDirection::PlusRho : TouchDirection::MinusRho;
        sel.kind.family = cls == FunctionClass::K1 ? ExtremalFamily::K1Alt
                                                   : ExtremalFamily::K2Alt;
    }
    require_k2_extremal_valid(sel.kind);
    return sel;
}

double boundary_identity_residual(const RegionKind& region, Complex w) {
    static const double kSqrt2 = std::numbers::sqrt2;
    const double sin1 = std::sin(1.0);
    switch (region.tag) {
        case Region::Parabolic:
            return std::abs(w.real() - std::abs(w - 1.0));
        case Region::Order:
            return std::abs(w.real() - region.alpha);
        case Region::Lemniscate:
            return std::abs(std::abs(w * w - 1.0) - 1.0);
        case Region::Exponential:
            return std::abs(std::abs(std::log(w)) - 1.0);
        case Region::Cardioid:
            return std::abs(w - 1.0 / 3.0);
        case Region::Sine:
            return std::abs(w - (1.0 + sin1));
        case Region::Lune:
            return std::abs(std::abs(w * w - 1.0) - 2.0 * std::abs(w));
        case Region::Rational:
            return std::abs(w - (2.0 * kSqrt2 - 2.0));
        case Region::Nephroid:
            return std::abs(std::abs(w) - 5.0 / 3.0);
        case Region::Sigmoid:
            return std::abs(std::abs(std::log(w / (2.0 - w))) - 1.0);
    }
    return std::numeric_limits<double>::infinity();
}

CertificationReport certify_sharpness(const ClassSpec& spec, const RegionKind& region,
                                      double rho, double tol) {
    if (!spec.b.has_value()) {
        throw UnsupportedError("sharpness certification needs the raw signed b");
    }
    if (!(rho > 0.0 && rho < 1.0)) throw DomainError("certify_sharpness requires rho in (0,1)");
    const SharpnessSelection sel =
        sharpness_point(spec.cls, region, *spec.b, spec.c.value_or(0.0));
    CertificationReport report;
    report.point = {sel.direction, rho};
    report.family = sel.kind.family;
    report.w = logderiv(sel.kind, report.point.z());
    report.residual = boundary_identity_residual(region, report.w);
    report.passed = report.residual <= tol;
    return report;
}

}  // namespace starlike
