#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "starlike/errors.hpp"

namespace starlike {

using Complex = std::complex<double>;

// The ten target regions for zf'(z)/f(z).
enum class Region {
    Parabolic,    // Re w > |w - 1|
    Order,        // Re w > alpha, alpha in [0,1)
    Lemniscate,   // right lobe of |w^2 - 1| < 1
    Exponential,  // |log w| < 1
    Cardioid,     // image of 1 + 4z/3 + 2z^2/3
    Sine,         // image of 1 + sin z
    Lune,         // Re w > 0, 2|w| > |w^2 - 1|
    Rational,     // image of 1 + (z/k)(k+z)/(k-z), k = 1 + sqrt(2)
    Nephroid,     // image of 1 + z - z^3/3
    Sigmoid,      // |log(w/(2-w))| < 1
};

// Region tag plus the order parameter (meaningful only for Region::Order).
struct RegionKind {
    Region tag = Region::Parabolic;
    double alpha = 0.0;

    RegionKind() = default;
    explicit RegionKind(Region t, double a = 0.0);

    static RegionKind order(double alpha) { return RegionKind(Region::Order, alpha); }
};

// Affine margin map a -> slope*a + offset together with its validity window.
// The margin is the radius of the largest disc centered at a the containment
// lemma guarantees inside the region; it vanishes at the binding endpoint
// (lower endpoint when slope = +1, upper endpoint when slope = -1).
struct MarginSpec {
    double lower_a = 0.0;
    double upper_a = 0.0;        // +infinity for Order
    bool lower_is_strict = true;
    bool upper_is_strict = false;
    double slope = 1.0;          // +1 or -1
    double offset = 0.0;

    double margin_at(double a) const { return slope * a + offset; }
};

MarginSpec margin_spec(const RegionKind& region);

// Largest guaranteed inscribed-disc radius at center a. Throws ValidityError
// when a is outside the region's validity window (upper endpoints are
// evaluable and give margin 0 at a binding endpoint).
double margin(const RegionKind& region, double a);

// Strict-interior membership. Total: boundary points report false.
bool contains(const RegionKind& region, Complex w);

// Closed boundary polyline with samples+1 points (last == first). For the
// map-defined regions this is phi(e^{i theta}) at uniform theta; for the
// unbounded Parabolic/Order boundaries the true arc is truncated near |w| ~ 8
// and closed with a chord (plot plumbing; membership never uses it).
std::vector<Complex> boundary_curve(const RegionKind& region, int samples);

// Winding number of a closed polyline (last point == first) around w.
int winding_number(Complex w, std::span<const Complex> closed_polyline);

// Stable lowercase identifiers used on the CLI and in output files.
std::string region_name(const RegionKind& region);
RegionKind region_from_name(const std::string& name, double alpha = 0.0);
std::vector<RegionKind> all_regions(double alpha = 0.0);

}  // namespace starlike
