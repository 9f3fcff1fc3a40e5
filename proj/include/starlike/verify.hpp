#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starlike/extremal.hpp"
#include "starlike/radius_poly.hpp"

namespace starlike {

// Independent radius oracle: solves margin(a(r)) = R(r) directly from the
// disc bound and the region margin, never touching the transcribed
// polynomials. Throws ValidityError if the scan exhausts the margin's
// validity window without a sign change, NoRootError if there is none.
RadiusResult radius_by_margin(const ClassSpec& spec, const RegionKind& region);

// True iff every sampled point of the guaranteed disc boundary at radius r
// lies inside the region (points pulled inward by a relative 1e-9 boundary
// tolerance before testing). samples >= 360.
bool check_containment(const ClassSpec& spec, const RegionKind& region,
                       double r, int samples);

struct LemmaWitness {
    double t = 0.0;
    double phi = 0.0;
    Complex z;
    double excess = 0.0;  // |zp'/p| - bound
};

struct LemmaReport {
    double b = 0.0;
    double alpha = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    double min_slack = 0.0;   // min over samples of bound - |zp'/p|
    int violations = 0;
    std::optional<LemmaWitness> worst;
};

// Monte Carlo soundness check of the derivative bound: builds test functions
// p = alpha + (1-alpha)(1+w)/(1-w) from the Schwarz family
// w(z) = z (t z e^{i phi} + b) / (1 + b t z e^{i phi}) and verifies
// |zp'/p| <= lemma_bound(b, alpha, |z|) + 1e-9 at random z, |z| <= 0.95.
// Deterministic for a fixed seed. Throws ViolationError with the witness on
// any violation (the bound is proved; a violation is an implementation bug).
LemmaReport check_lemma_bound(double b, double alpha, int trials, std::uint64_t seed);

// Test hook: perturb one coefficient of one transcribed polynomial inside a
// verification sweep (fault-injection for the oracle cross-check).
struct TamperSpec {
    FunctionClass cls = FunctionClass::K1;
    Region region_tag = Region::Parabolic;
    int coeff_index = 0;
    double delta = 0.0;
};

TamperSpec parse_tamper(const std::string& text);  // CLASS:REGION:cIDX:DELTA

struct MatrixOptions {
    double tol = 1e-8;              // |rho_poly - rho_margin| threshold
    bool with_containment = true;
    int containment_samples = 720;
    bool with_sharpness = true;
    double sharpness_tol = 1e-6;
    std::optional<TamperSpec> tamper;
};

struct VerificationReport {
    std::string case_id;
    FunctionClass cls = FunctionClass::K1;
    std::optional<double> b, c;
    double p1 = 0.0;
    std::optional<double> p2;
    std::string region;
    std::optional<double> alpha;
    double rho_poly = 0.0;
    double rho_margin = 0.0;
    double abs_diff = 0.0;
    bool agreement_pass = false;
    bool containment_pass = false;
    std::optional<bool> sharpness_pass;
    std::string notes;

    bool passed() const {
        return agreement_pass && containment_pass && sharpness_pass.value_or(true);
    }
};

// Runs every cell x region: both radius routes, |diff| <= tol, containment
// spot-check at 0.995 rho and protrusion in (rho, 1.2 rho], sharpness
// certification where supported. Per-cell failures are collected, never
// thrown. Cells evaluate concurrently; reports come back in cell order.
std::vector<VerificationReport> full_matrix(const std::vector<ClassSpec>& cells,
                                            const std::vector<RegionKind>& regions,
                                            const MatrixOptions& options);

// The default verification grids: K1 ntilde in 9 steps over [0,2], K2 (m,n)
// on a 5x5 grid with m <= 2, K3 (u,v) on a 5x5 grid with u <= 1; raw
// representatives with b <= 0 attached for sharpness.
std::vector<ClassSpec> default_matrix_cells();

// All ten regions, Order expanded over alpha in {0, 0.25, 0.5, 0.75}.
std::vector<RegionKind> default_matrix_regions();

}  // namespace starlike
