#include "starlike/radius_poly.hpp"

#include <cmath>
#include <numbers>

namespace starlike {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kE = std::numbers::e;
const double kSin1 = std::sin(1.0);

constexpr int kScanCells = 4096;
constexpr double kBracketWidth = 1e-14;
constexpr double kScanEnd = 1.0 - 1e-12;

std::vector<double> k1_coeffs(Region tag, double nt, double alpha) {
    const double q = kSqrt2, e = kE, s = kSin1;
    switch (tag) {
        case Region::Parabolic:
            return {1.0, -nt, -11.0, -8.0 * nt, -9.0, nt, 3.0};
        case Region::Order:
            return {1.0 - alpha, -alpha * nt, -(5.0 + alpha), -4.0 * nt,
                    -(5.0 - alpha), alpha * nt, 1.0 + alpha};
        case Region::Lemniscate:
            return {1.0 - q, (2.0 - q) * nt, 6.0, (2.0 + q) * nt, 1.0 + q};
        case Region::Exponential:
            return {1.0 - e, nt, 1.0 + 5.0 * e, 4.0 * e * nt, -(1.0 - 5.0 * e), -nt,
                    -(1.0 + e)};
        case Region::Cardioid:
            return {2.0, -nt, -16.0, -12.0 * nt, -14.0, nt, 4.0};
        case Region::Sine:
            return {s, -(nt - nt * s), -(6.0 - s), -4.0 * nt, -(8.0 + s),
                    -(3.0 * nt + nt * s), -(2.0 + s)};
        case Region::Lune:
            return {2.0 - q, (1.0 - q) * nt, -(4.0 + q), -4.0 * nt, -(6.0 - q),
                    -(1.0 - q) * nt, q};
        case Region::Rational:
            return {3.0 - 2.0 * q, (2.0 - 2.0 * q) * nt, -(3.0 + 2.0 * q), -4.0 * nt,
                    -(7.0 - 2.0 * q), -(2.0 - 2.0 * q) * nt, -(1.0 - 2.0 * q)};
        case Region::Nephroid:
            return {2.0, -nt, -16.0, -12.0 * nt, -26.0, -11.0 * nt, -8.0};
        case Region::Sigmoid:
            return {1.0 - e, 2.0 * nt, 7.0 + 5.0 * e, 4.0 * nt * (1.0 + e), 7.0 + 9.0 * e,
                    2.0 * nt * (1.0 + 2.0 * e), 1.0 + 3.0 * e};
    }
    throw DomainError("k1_coeffs: bad region");
}

std::vector<double> k2_coeffs(Region tag, double m, double n, double alpha) {
    const double q = kSqrt2, e = kE, s = kSin1;
    const double mn = m * n, mpn = m + n;
    switch (tag) {
        case Region::Parabolic:
            return {1.0, -mpn, -3.0 * (6.0 + mn), -17.0 * mpn, -12.0 * (3.0 + mn),
                    -15.0 * mpn, -(14.0 + mn), mpn, 3.0};
        case Region::Order:
            return {1.0 - alpha,
                    -alpha * mpn,
                    -(mn + alpha * mn + 8.0 + 2.0 * alpha),
                    -mpn * (8.0 + alpha),
                    -(6.0 * mn + 18.0),
                    -(8.0 - alpha) * mpn,
                    -(mn - alpha * mn + 8.0 - 2.0 * alpha),
                    alpha * mpn,
                    1.0 + alpha};
        case Region::Lemniscate:
            return {1.0 - q,
                    (2.0 - q) * mpn,
                    11.0 - q + 3.0 * mn - q * mn,
                    8.0 * mpn,
                    11.0 + q + 3.0 * mn + q * mn,
                    (2.0 + q) * mpn,
                    1.0 + q};
        case Region::Exponential:
            return {1.0 - e,
                    mpn,
                    2.0 + 8.0 * e + mn + e * mn,
                    (1.0 + 8.0 * e) * mpn,
                    18.0 * e + 6.0 * e * mn,
                    -(1.0 - 8.0 * e) * mpn,
                    -(2.0 - 8.0 * e + mn - e * mn),
                    -mpn,
                    -(1.0 + e)};
        case Region::Cardioid:
            return {2.0, -mpn, -(26.0 + 4.0 * mn), -25.0 * mpn, -(54.0 + 18.0 * mn),
                    -23.0 * mpn, -(22.0 + 2.0 * mn), mpn, 4.0};
        case Region::Sine:
            return {s,
                    -(1.0 - s) * mpn,
                    -(10.0 + 2.0 * mn - 2.0 * s - mn * s),
                    -(9.0 - s) * mpn,
                    -(22.0 + 6.0 * mn),
                    -(11.0 + s) * mpn,
                    -(14.0 + 4.0 * mn + 2.0 * s + mn * s),
                    -(3.0 + s) * mpn,
                    -(2.0 + s)};
        case Region::Lune:
            // Margin-derived coefficients (the printed equation carries a sign
            // slip on the disc-radius part and has no root in (0,1); this form
            // reproduces the reported rho at m=n=2).
            return {2.0 - q,
                    (1.0 - q) * mpn,
                    -(6.0 + 2.0 * q) - q * mn,
                    -(7.0 + q) * mpn,
                    -(18.0 + 6.0 * mn),
                    -(9.0 - q) * mpn,
                    -(10.0 - 2.0 * q) - (2.0 - q) * mn,
                    -(1.0 - q) * mpn,
                    q};
        case Region::Rational:
            return {3.0 - 2.0 * q,
                    (2.0 - 2.0 * q) * mpn,
                    -(4.0 + 4.0 * q - mn + 2.0 * q * mn),
                    -(6.0 + 2.0 * q) * mpn,
                    -(18.0 + 6.0 * mn),
                    -(10.0 - 2.0 * q) * mpn,
                    -(12.0 - 4.0 * q + 3.0 * mn - 2.0 * q * mn),
                    -(2.0 - 2.0 * q) * mpn,
                    -(1.0 - 2.0 * q)};
        case Region::Nephroid:
            return {2.0, -mpn, -(26.0 + 4.0 * mn), -25.0 * mpn, -(66.0 + 18.0 * mn),
                    -35.0 * mpn, -(46.0 + 14.0 * mn), -11.0 * mpn, -8.0};
        case Region::Sigmoid:
            return {1.0 - e,
                    2.0 * mpn,
                    12.0 + 8.0 * e + 3.0 * mn + e * mn,
                    (10.0 + 8.0 * e) * mpn,
                    22.0 + 22.0 * e + 6.0 * mn + 6.0 * e * mn,
                    (10.0 + 12.0 * e) * mpn,
                    12.0 + 16.0 * e + 3.0 * mn + 5.0 * e * mn,
                    (2.0 + 4.0 * e) * mpn,
                    1.0 + 3.0 * e};
    }
    throw DomainError("k2_coeffs: bad region");
}

std::vector<double> k3_coeffs(Region tag, double u, double v, double alpha) {
    const double q = kSqrt2, e = kE, s = kSin1;
    const double uv = u * v;
    switch (tag) {
        case Region::Parabolic:
            return {1.0, -(u + v), -(15.0 + 3.0 * uv), -(17.0 * u + 12.0 * v),
                    -(17.0 + 12.0 * uv), -(15.0 * u + 3.0 * v), -(1.0 + uv), u};
        case Region::Order:
            return {1.0 - alpha,
                    -(u * alpha + v * alpha),
                    -(7.0 + uv + alpha + uv * alpha),
                    -(8.0 * u + 6.0 * v + u * alpha),
                    -(9.0 + 6.0 * uv - alpha),
                    -(8.0 * u + 2.0 * v - u * alpha - v * alpha),
                    -(1.0 + uv - alpha - uv * alpha),
                    alpha * u};
        case Region::Lemniscate:
            return {1.0 - q,
                    (2.0 - q) * (u + v),
                    8.0 + 3.0 * uv - q * uv,
                    8.0 * u + 4.0 * v + q * v,
                    3.0 + q + 3.0 * uv + q * uv,
                    (2.0 + q) * u};
        case Region::Exponential:
            return {1.0 - e,
                    u + v,
                    1.0 + 7.0 * e + uv + e * uv,
                    u + 8.0 * e * u + 6.0 * e * v,
                    -(1.0 - 9.0 * e - 6.0 * e * uv),
                    -(u - 8.0 * e * u + v - 2.0 * e * v),
                    -(1.0 - e + uv - e * uv),
                    -u};
        case Region::Cardioid:
            return {2.0, -(u + v), -(22.0 + 4.0 * uv), -(25.0 * u + 18.0 * v),
                    -(26.0 + 18.0 * uv), -(23.0 * u + 5.0 * v), -(2.0 + 2.0 * uv), u};
        case Region::Sine:
            return {s,
                    -(u + v - u * s - v * s),
                    -(8.0 + 2.0 * uv - s - uv * s),
                    -(9.0 * u + 6.0 * v - u * s),
                    -(12.0 + 6.0 * uv + s),
                    -(11.0 * u + 5.0 * v + u * s + v * s),
                    -(4.0 + 4.0 * uv + s + uv * s),
                    -(3.0 * u + u * s)};
        case Region::Lune:
            return {2.0 - q,
                    (1.0 - q) * (u + v),
                    -(6.0 + q + q * uv),
                    -(7.0 * u + q * u + 6.0 * v),
                    -(10.0 - q + 6.0 * uv),
                    -(9.0 * u - q * u + 3.0 * v - q * v),
                    -(2.0 - q + 2.0 * uv - q * uv),
                    -(u - q * u)};
        case Region::Rational:
            return {3.0 - 2.0 * q,
                    (2.0 - 2.0 * q) * (u + v),
                    -(5.0 + 2.0 * q - uv + 2.0 * q * uv),
                    -(6.0 * u + 2.0 * q * u + 6.0 * v),
                    -(11.0 - 2.0 * q + 6.0 * uv),
                    -(10.0 * u - 2.0 * q * u + 4.0 * v - 2.0 * q * v),
                    -(3.0 - 2.0 * q + 3.0 * uv - 2.0 * q * uv),
                    -(2.0 * u - 2.0 * q * u)};
        case Region::Nephroid:
            return {2.0, -(u + v), -(22.0 + 4.0 * uv), -(25.0 * u + 18.0 * v),
                    -(38.0 + 18.0 * uv), -(35.0 * u + 17.0 * v), -(14.0 + 14.0 * uv),
                    -11.0 * u};
        case Region::Sigmoid:
            return {1.0 - e,
                    2.0 * u + 2.0 * v,
                    9.0 + 7.0 * e + 3.0 * uv + e * uv,
                    10.0 * u + 8.0 * e * u + 6.0 * v + 6.0 * e * v,
                    11.0 + 13.0 * e + 6.0 * uv + 6.0 * e * uv,
                    10.0 * u + 12.0 * e * u + 4.0 * v + 6.0 * e * v,
                    3.0 + 5.0 * e + 3.0 * uv + 5.0 * e * uv,
                    2.0 * u + 4.0 * e * u};
    }
    throw DomainError("k3_coeffs: bad region");
}

}  // namespace

int RealPolynomial::degree() const {
    return coeffs.empty() ? -1 : static_cast<int>(coeffs.size()) - 1;
}

double RealPolynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RealPolynomial::derivative_at(double x) const {
    double acc = 0.0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 1; --i) {
        acc = acc * x + coeffs[static_cast<std::size_t>(i)] * i;
    }
    return acc;
}

double RealPolynomial::max_abs_coeff() const {
    double best = 0.0;
    for (double c : coeffs) best = std::max(best, std::abs(c));
    return best;
}

void RealPolynomial::trim() {
    while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
}

RealPolynomial build_polynomial(const ClassSpec& spec, const RegionKind& region) {
    RealPolynomial poly;
    switch (spec.cls) {
        case FunctionClass::K1:
            poly.coeffs = k1_coeffs(region.tag, spec.p1, region.alpha);
            break;
        case FunctionClass::K2:
            poly.coeffs = k2_coeffs(region.tag, spec.p1, spec.p2, region.alpha);
            break;
        case FunctionClass::K3:
            poly.coeffs = k3_coeffs(region.tag, spec.p1, spec.p2, region.alpha);
            break;
    }
    poly.trim();
    return poly;
}

RadiusResult smallest_root_scan(const std::function<double(double)>& f,
                                const std::function<double(double)>& df,
                                double hi, RootMethod method) {
    if (hi > kScanEnd) hi = kScanEnd;
    for (int cells = kScanCells; cells <= 2 * kScanCells; cells *= 2) {
        double lo = 0.0;
        double flo = f(lo);
        for (int i = 1; i <= cells; ++i) {
            const double x = hi * i / cells;
            const double fx = f(x);
            if (flo == 0.0) {
                // exact zero at the left cell edge; only possible for x > 0
                RadiusResult res;
                res.rho = lo;
                res.residual = 0.0;
                res.bracket_width = 0.0;
                res.method = method;
                if (lo > 0.0) return res;
            } else if (flo * fx < 0.0) {
                double a = lo, b = x, fa = flo;
                while (b - a > kBracketWidth) {
                    const double mid = 0.5 * (a + b);
                    const double fm = f(mid);
                    if (fm == 0.0) {
                        a = b = mid;
                        break;
                    }
                    if (fa * fm < 0.0) {
                        b = mid;
                    } else {
                        a = mid;
                        fa = fm;
                    }
                }
                double root = 0.5 * (a + b);
                if (df) {
                    // one guarded Newton step, kept inside the bracket
                    const double d = df(root);
                    if (d != 0.0) {
                        const double next = root - f(root) / d;
                        if (next > a && next < b) root = next;
                    }
                }
                RadiusResult res;
                res.rho = root;
                res.residual = std::abs(f(root));
                res.bracket_width = b - a;
                res.method = method;
                return res;
            }
            lo = x;
            flo = fx;
        }
    }
    throw NoRootError("no sign change found on (0,1)");
}

RadiusResult smallest_root_in_unit(const RealPolynomial& poly) {
    auto f = [&poly](double x) { return poly(x); };
    auto df = [&poly](double x) { return poly.derivative_at(x); };
    return smallest_root_scan(f, df, kScanEnd, RootMethod::Polynomial);
}

}  // namespace starlike
