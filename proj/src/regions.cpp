#include "starlike/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace starlike {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kE = std::numbers::e;
const double kSin1 = std::sin(1.0);
const double kRationalK = 1.0 + kSqrt2;

// Winding-test resolution: 4096 base samples, doubled while the query sits
// within 1e-6 of the polyline; below 1e-12 the point counts as boundary.
constexpr int kWindingBase = 4096;
constexpr int kWindingMax = 1 << 18;
constexpr double kNearPolyline = 1e-6;
constexpr double kOnBoundary = 1e-12;

Complex phi_map(Region tag, Complex z) {
    switch (tag) {
        case Region::Cardioid:
            return 1.0 + (4.0 / 3.0) * z + (2.0 / 3.0) * z * z;
        case Region::Sine:
            return 1.0 + std::sin(z);
        case Region::Rational:
            return 1.0 + (z / kRationalK) * ((kRationalK + z) / (kRationalK - z));
        case Region::Nephroid:
            return 1.0 + z - z * z * z / 3.0;
        case Region::Sigmoid:
            return 2.0 / (1.0 + std::exp(-z));
        default:
            throw DomainError("phi_map: region has no generating map");
    }
}

// Boundary point at angle theta for every bounded region.
Complex boundary_point(Region tag, double theta) {
    switch (tag) {
        case Region::Cardioid:
        case Region::Sine:
        case Region::Rational:
        case Region::Nephroid:
        case Region::Sigmoid:
            return phi_map(tag, std::polar(1.0, theta));
        case Region::Exponential:
            return std::exp(std::polar(1.0, theta));
        case Region::Lemniscate:
            // right lobe of |w^2-1| = 1, through sqrt(2) (theta=0) and 0 (theta=pi)
            return std::sqrt(1.0 + std::polar(1.0, theta));
        case Region::Lune: {
            // crescent boundary of 2|w| = |w^2-1|, Re w > 0: image of the unit
            // circle under z + sqrt(1+z^2); corners at +-i, vertices sqrt(2)+-1
            const Complex z = std::polar(1.0, theta);
            return z + std::sqrt(1.0 + z * z);
        }
        default:
            throw DomainError("boundary_point: unbounded region");
    }
}

double point_segment_distance(Complex w, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(w - a);
    double t = ((w.real() - a.real()) * ab.real() + (w.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(w - (a + t * ab));
}

double distance_to_polyline(Complex w, std::span<const Complex> pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        best = std::min(best, point_segment_distance(w, pts[i], pts[i + 1]));
    }
    return best;
}

// Closed rings (samples+1 points, last == first) cached per (region, n);
// shared across threads, so guarded.
const std::vector<Complex>& cached_ring(Region tag, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Complex>> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(static_cast<int>(tag), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Complex> ring(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) {
        ring[static_cast<std::size_t>(k)] = boundary_point(tag, 2.0 * kPi * k / n);
    }
    ring[static_cast<std::size_t>(n)] = ring[0];
    return cache.emplace(key, std::move(ring)).first->second;
}

bool winding_contains(Region tag, Complex w) {
    int n = kWindingBase;
    const std::vector<Complex>* ring = &cached_ring(tag, n);
    double dist = distance_to_polyline(w, *ring);
    while (dist < kNearPolyline && n < kWindingMax) {
        n *= 2;
        ring = &cached_ring(tag, n);
        dist = distance_to_polyline(w, *ring);
    }
    if (dist < kOnBoundary) return false;
    return winding_number(w, *ring) != 0;
}

}  // namespace

RegionKind::RegionKind(Region t, double a) : tag(t), alpha(a) {
    if (t == Region::Order) {
        if (!(a >= 0.0 && a < 1.0)) {
            throw ParameterError("order region requires alpha in [0,1), got " + std::to_string(a));
        }
    } else if (a != 0.0) {
        throw ParameterError("alpha parameter is only meaningful for the order region");
    }
}

MarginSpec margin_spec(const RegionKind& region) {
    MarginSpec s;
    switch (region.tag) {
        case Region::Parabolic:
            s = {0.5, 1.5, true, false, +1.0, -0.5};
            break;
        case Region::Order:
            s = {region.alpha, std::numeric_limits<double>::infinity(), true, true,
                 +1.0, -region.alpha};
            break;
        case Region::Lemniscate:
            s = {2.0 * kSqrt2 / 3.0, kSqrt2, false, true, -1.0, kSqrt2};
            break;
        case Region::Exponential:
            s = {1.0 / kE, (kE + 1.0 / kE) / 2.0, true, false, +1.0, -1.0 / kE};
            break;
        case Region::Cardioid:
            s = {1.0 / 3.0, 5.0 / 3.0, true, false, +1.0, -1.0 / 3.0};
            break;
        case Region::Sine:
            s = {1.0 - kSin1, 1.0 + kSin1, true, false, -1.0, 1.0 + kSin1};
            break;
        case Region::Lune:
            s = {kSqrt2 - 1.0, kSqrt2 + 1.0, true, true, +1.0, -(kSqrt2 - 1.0)};
            break;
        case Region::Rational:
            s = {2.0 * kSqrt2 - 2.0, kSqrt2, true, false, +1.0, -(2.0 * kSqrt2 - 2.0)};
            break;
        case Region::Nephroid:
            s = {1.0, 5.0 / 3.0, false, true, -1.0, 5.0 / 3.0};
            break;
        case Region::Sigmoid:
            s = {1.0, 2.0 * kE / (1.0 + kE), false, true, -1.0, 2.0 * kE / (1.0 + kE)};
            break;
    }
    return s;
}

double margin(const RegionKind& region, double a) {
    const MarginSpec s = margin_spec(region);
    const bool below = s.lower_is_strict ? (a <= s.lower_a) : (a < s.lower_a);
    if (below || a > s.upper_a) {
        std::ostringstream os;
        os << region_name(region) << " margin: center a = " << a
           << " outside validity window (" << s.lower_a << ", " << s.upper_a << "]";
        throw ValidityError(os.str());
    }
    return s.margin_at(a);
}

bool contains(const RegionKind& region, Complex w) {
    switch (region.tag) {
        case Region::Parabolic:
            return w.real() > std::abs(w - 1.0);
        case Region::Order:
            return w.real() > region.alpha;
        case Region::Lemniscate:
            return w.real() > 0.0 && std::abs(w * w - 1.0) < 1.0;
        case Region::Exponential:
            return w.real() > 0.0 && std::abs(std::log(w)) < 1.0;
        case Region::Lune:
            return w.real() > 0.0 && 2.0 * std::abs(w) > std::abs(w * w - 1.0);
        case Region::Sigmoid: {
            const Complex den = 2.0 - w;
            if (std::abs(den) < kOnBoundary) return false;
            const Complex x = w / den;
            if (x.imag() == 0.0 && x.real() <= 0.0) return false;
            return std::abs(std::log(x)) < 1.0;
        }
        case Region::Cardioid:
        case Region::Sine:
        case Region::Rational:
        case Region::Nephroid:
            return winding_contains(region.tag, w);
    }
    return false;
}

int winding_number(Complex w, std::span<const Complex> closed_polyline) {
    int wn = 0;
    const double wx = w.real();
    const double wy = w.imag();
    for (std::size_t i = 0; i + 1 < closed_polyline.size(); ++i) {
        const double x1 = closed_polyline[i].real();
        const double y1 = closed_polyline[i].imag();
        const double x2 = closed_polyline[i + 1].real();
        const double y2 = closed_polyline[i + 1].imag();
        const double side = (x2 - x1) * (wy - y1) - (wx - x1) * (y2 - y1);
        if (y1 <= wy) {
            if (y2 > wy && side > 0.0) ++wn;
        } else if (y2 <= wy && side < 0.0) {
            --wn;
        }
    }
    return wn;
}

std::vector<Complex> boundary_curve(const RegionKind& region, int samples) {
    if (samples < 16) throw DomainError("boundary_curve requires samples >= 16");
    const auto n = static_cast<std::size_t>(samples);
    std::vector<Complex> pts;
    pts.reserve(n + 1);

    switch (region.tag) {
        case Region::Parabolic: {
            // Focal parameterization w = 1 + e^{i psi}/(1-cos psi) of
            // Re w = |w-1|, truncated at focal distance 8, closed by the
            // vertical chord at the truncation.
            const double dmax = 8.0;
            const double psi0 = std::acos(1.0 - 1.0 / dmax);
            const int chord = std::max(2, samples / 8);
            const int arc = samples - chord;
            for (int k = 0; k <= arc; ++k) {
                const double psi = psi0 + (2.0 * kPi - 2.0 * psi0) * k / arc;
                pts.push_back(1.0 + std::polar(1.0 / (1.0 - std::cos(psi)), psi));
            }
            const Complex from = pts.back();
            const Complex to = pts.front();
            for (int k = 1; k < chord; ++k) {
                pts.push_back(from + (to - from) * (static_cast<double>(k) / chord));
            }
            pts.push_back(pts.front());
            break;
        }
        case Region::Order: {
            // True boundary is the line Re w = alpha; closed as a rectangle
            // extending 8 into the half-plane.
            const double a = region.alpha;
            const double ext = 8.0;
            const Complex c0{a, -ext}, c1{a, ext}, c2{a + ext, ext}, c3{a + ext, -ext};
            const int left = samples / 2;
            const int top = samples / 6;
            const int right = samples / 6;
            const int bottom = samples - left - top - right;
            auto edge = [&pts](Complex from, Complex to, int steps) {
                for (int k = 0; k < steps; ++k) {
                    pts.push_back(from + (to - from) * (static_cast<double>(k) / steps));
                }
            };
            edge(c0, c1, left);
            edge(c1, c2, top);
            edge(c2, c3, right);
            edge(c3, c0, bottom);
            pts.push_back(pts.front());
            break;
        }
        default: {
            for (int k = 0; k < samples; ++k) {
                pts.push_back(boundary_point(region.tag, 2.0 * kPi * k / samples));
            }
            pts.push_back(pts.front());
            break;
        }
    }
    return pts;
}

std::string region_name(const RegionKind& region) {
    switch (region.tag) {
        case Region::Parabolic:   return "parabolic";
        case Region::Order:       return "order";
        case Region::Lemniscate:  return "lemniscate";
        case Region::Exponential: return "exponential";
        case Region::Cardioid:    return "cardioid";
        case Region::Sine:        return "sine";
        case Region::Lune:        return "lune";
        case Region::Rational:    return "rational";
        case Region::Nephroid:    return "nephroid";
        case Region::Sigmoid:     return "sigmoid";
    }
    return "?";
}

RegionKind region_from_name(const std::string& name, double alpha) {
    static const std::map<std::string, Region> table = {
        {"parabolic", Region::Parabolic},   {"order", Region::Order},
        {"lemniscate", Region::Lemniscate}, {"exponential", Region::Exponential},
        {"cardioid", Region::Cardioid},     {"sine", Region::Sine},
        {"lune", Region::Lune},             {"rational", Region::Rational},
        {"nephroid", Region::Nephroid},     {"sigmoid", Region::Sigmoid},
    };
    auto it = table.find(name);
    if (it == table.end()) throw ParameterError("unknown region name: " + name);
    return RegionKind(it->second, it->second == Region::Order ? alpha : 0.0);
}

std::vector<RegionKind> all_regions(double alpha) {
    return {
        RegionKind(Region::Parabolic),   RegionKind(Region::Order, alpha),
        RegionKind(Region::Lemniscate),  RegionKind(Region::Exponential),
        RegionKind(Region::Cardioid),    RegionKind(Region::Sine),
        RegionKind(Region::Lune),        RegionKind(Region::Rational),
        RegionKind(Region::Nephroid),    RegionKind(Region::Sigmoid),
    };
}

}  // namespace starlike
