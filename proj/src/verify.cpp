#include "starlike/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "starlike/parallel.hpp"

namespace starlike {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kContainmentPullIn = 1e-9;
constexpr double kLemmaSlackTol = 1e-9;

// r such that a(r) = (1+r^4)/(1-r^4) reaches the given center.
double radius_at_center(double a) {
    if (!std::isfinite(a)) return 1.0;
    return std::pow((a - 1.0) / (a + 1.0), 0.25);
}

std::string spec_label(const ClassSpec& spec) {
    std::ostringstream os;
    os << class_name(spec.cls) << "(" << spec.p1;
    if (spec.cls != FunctionClass::K1) os << "," << spec.p2;
    os << ")";
    return os.str();
}

std::string region_label(const RegionKind& region) {
    std::ostringstream os;
    os << region_name(region);
    if (region.tag == Region::Order) os << "@" << region.alpha;
    return os.str();
}

}  // namespace

RadiusResult radius_by_margin(const ClassSpec& spec, const RegionKind& region) {
    const MarginSpec ms = margin_spec(region);
    const double r_hi = std::min(1.0 - 1e-12, radius_at_center(ms.upper_a));
    auto h = [&spec, &region](double r) {
        const DiscBound d = disc_bound(spec, r);
        return margin(region, d.a) - d.radius;
    };
    try {
        return smallest_root_scan(h, {}, r_hi, RootMethod::MarginOracle);
    } catch (const NoRootError&) {
        if (r_hi < 1.0 - 1e-9) {
            std::ostringstream os;
            os << "margin route for " << spec_label(spec) << " x " << region_label(region)
               << ": no crossing before the validity window ends at r = " << r_hi;
            throw ValidityError(os.str());
        }
        throw;
    }
}

bool check_containment(const ClassSpec& spec, const RegionKind& region,
                       double r, int samples) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("check_containment requires 0 < r < 1");
    if (samples < 360) throw DomainError("check_containment requires samples >= 360");
    const DiscBound d = disc_bound(spec, r);
    const double radius = d.radius * (1.0 - kContainmentPullIn);
    for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * kPi * k / samples;
        const Complex w = d.a + std::polar(radius, theta);
        if (!contains(region, w)) return false;
    }
    return true;
}

LemmaReport check_lemma_bound(double b, double alpha, int trials, std::uint64_t seed) {
    if (std::abs(b) > 1.0) throw DomainError("check_lemma_bound requires |b| <= 1");
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw DomainError("check_lemma_bound requires alpha in [0,1)");
    }
    LemmaReport report;
    report.b = b;
    report.alpha = alpha;
    report.trials = trials;
    report.seed = seed;
    report.min_slack = std::numeric_limits<double>::infinity();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni01(0.0, 1.0);

    for (int trial = 0; trial < trials; ++trial) {
        const double t = 2.0 * uni01(rng) - 1.0;
        const double phi = 2.0 * kPi * uni01(rng);
        const double rz = 0.95 * uni01(rng);
        const double psi = 2.0 * kPi * uni01(rng);
        const Complex z = std::polar(rz, psi);

        // Schwarz family w(z) = z (beta z + b) / (1 + b beta z), beta = t e^{i phi}
        const Complex beta = std::polar(t, phi);
        const Complex den = 1.0 + b * beta * z;
        const Complex w = z * (beta * z + b) / den;
        const Complex wp = ((2.0 * beta * z + b) * den -
                            (beta * z * z + b * z) * (b * beta)) / (den * den);
        const Complex p = alpha + (1.0 - alpha) * (1.0 + w) / (1.0 - w);
        const Complex zpp = z * (1.0 - alpha) * 2.0 * wp / ((1.0 - w) * (1.0 - w)) / p;

        const double bound = lemma_bound(b, alpha, rz);
        const double slack = bound - std::abs(zpp);
        if (slack < report.min_slack) report.min_slack = slack;
        if (slack < -kLemmaSlackTol) {
            ++report.violations;
            if (!report.worst || -slack > report.worst->excess) {
                report.worst = LemmaWitness{t, phi, z, -slack};
            }
        }
    }
    if (report.violations > 0) {
        std::ostringstream os;
        os << "derivative bound violated " << report.violations << "x; worst witness t="
           << report.worst->t << " phi=" << report.worst->phi << " z=("
           << report.worst->z.real() << "," << report.worst->z.imag() << ") excess="
           << report.worst->excess;
        throw ViolationError(os.str());
    }
    return report;
}

TamperSpec parse_tamper(const std::string& text) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ':')) parts.push_back(token);
    if (parts.size() != 4 || parts[2].size() < 2 || parts[2][0] != 'c') {
        throw ParameterError("tamper spec must look like CLASS:REGION:cIDX:DELTA, got " + text);
    }
    TamperSpec spec;
    spec.cls = class_from_name(parts[0]);
    spec.region_tag = region_from_name(parts[1]).tag;
    try {
        spec.coeff_index = std::stoi(parts[2].substr(1));
        spec.delta = std::stod(parts[3]);
    } catch (const std::exception&) {
        throw ParameterError("tamper spec must look like CLASS:REGION:cIDX:DELTA, got " + text);
    }
    return spec;
}

std::vector<ClassSpec> default_matrix_cells() {
    std::vector<ClassSpec> cells;
    for (int i = 0; i <= 8; ++i) {
        cells.push_back(normalize(FunctionClass::K1, -0.125 * i));  // ntilde = 0.25*i
    }
    for (int im = 0; im <= 4; ++im) {
        for (int in = 0; in <= 4; ++in) {
            const double m = 0.5 * im, n = 0.5 * in;
            cells.push_back(normalize(FunctionClass::K2, -(m + n) / 4.0, -n / 2.0));
        }
    }
    for (int iu = 0; iu <= 4; ++iu) {
        for (int iv = 0; iv <= 4; ++iv) {
            cells.push_back(from_normalized(FunctionClass::K3, 0.25 * iu, 0.5 * iv));
        }
    }
    return cells;
}

std::vector<RegionKind> default_matrix_regions() {
    std::vector<RegionKind> regions;
    for (const auto& region : all_regions()) {
        if (region.tag == Region::Order) {
            for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
                regions.push_back(RegionKind::order(alpha));
            }
        } else {
            regions.push_back(region);
        }
    }
    return regions;
}

std::vector<VerificationReport> full_matrix(const std::vector<ClassSpec>& cells,
                                            const std::vector<RegionKind>& regions,
                                            const MatrixOptions& options) {
    const std::size_t total = cells.size() * regions.size();
    std::vector<VerificationReport> reports(total);

    parallel_for_index(total, [&](std::size_t idx) {
        const ClassSpec& spec = cells[idx / regions.size()];
        const RegionKind& region = regions[idx % regions.size()];
        VerificationReport& rep = reports[idx];
        rep.case_id = spec_label(spec) + " x " + region_label(region);
        rep.cls = spec.cls;
        rep.b = spec.b;
        rep.c = spec.c;
        rep.p1 = spec.p1;
        if (spec.cls != FunctionClass::K1) rep.p2 = spec.p2;
        rep.region = region_name(region);
        if (region.tag == Region::Order) rep.alpha = region.alpha;

        std::ostringstream notes;
        bool have_poly = false, have_margin = false;
        try {
            RealPolynomial poly = build_polynomial(spec, region);
            if (options.tamper && options.tamper->cls == spec.cls &&
                options.tamper->region_tag == region.tag) {
                const auto cidx = static_cast<std::size_t>(options.tamper->coeff_index);
                if (cidx < poly.coeffs.size()) poly.coeffs[cidx] += options.tamper->delta;
            }
            rep.rho_poly = smallest_root_in_unit(poly).rho;
            have_poly = true;
        } catch (const std::exception& err) {
            notes << "polynomial route: " << err.what() << "; ";
        }
        try {
            rep.rho_margin = radius_by_margin(spec, region).rho;
            have_margin = true;
        } catch (const std::exception& err) {
            notes << "margin route: " << err.what() << "; ";
        }

        if (have_poly && have_margin) {
            rep.abs_diff = std::abs(rep.rho_poly - rep.rho_margin);
            rep.agreement_pass = rep.abs_diff <= options.tol;
            if (!rep.agreement_pass) {
                notes << "route disagreement " << rep.abs_diff << "; ";
            }
        }

        if (have_poly || have_margin) {
            const double rho = have_poly ? rep.rho_poly : rep.rho_margin;
            if (options.with_containment) {
                try {
                    const bool inside = check_containment(spec, region, 0.995 * rho,
                                                          options.containment_samples);
                    bool protrudes = false;
                    for (double factor : {1.005, 1.02, 1.05, 1.1, 1.2}) {
                        const double r = factor * rho;
                        if (r >= 1.0) break;
                        if (!check_containment(spec, region, r, options.containment_samples)) {
                            protrudes = true;
                            break;
                        }
                    }
                    rep.containment_pass = inside && protrudes;
                    if (!inside) notes << "disc leaks at 0.995 rho; ";
                    if (!protrudes) notes << "disc never protrudes up to 1.2 rho; ";
                } catch (const std::exception& err) {
                    notes << "containment: " << err.what() << "; ";
                }
            } else {
                rep.containment_pass = true;  // skipped at the caller's request
            }

            if (options.with_sharpness && spec.cls != FunctionClass::K3 &&
                spec.b.has_value() && *spec.b != 0.0) {
                try {
                    const CertificationReport cert =
                        certify_sharpness(spec, region, rho, options.sharpness_tol);
                    rep.sharpness_pass = cert.passed;
                    if (!cert.passed) {
                        notes << "sharpness residual " << cert.residual << "; ";
                    }
                } catch (const UnsupportedError&) {
                    rep.sharpness_pass.reset();
                } catch (const std::exception& err) {
                    rep.sharpness_pass = false;
                    notes << "sharpness: " << err.what() << "; ";
                }
            }
        }
        rep.notes = notes.str();
    });
    return reports;
}

}  // namespace starlike
