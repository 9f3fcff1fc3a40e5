#include <doctest.h>

#include <cmath>
#include <numbers>

#include "starlike/radius_poly.hpp"

using namespace starlike;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

std::vector<ClassSpec> grid_specs() {
    std::vector<ClassSpec> specs;
    for (double p : {0.0, 0.5, 1.0, 1.5, 2.0}) specs.push_back(from_normalized(FunctionClass::K1, p));
    for (double m : {0.0, 1.0, 2.0})
        for (double n : {0.0, 1.0, 2.0}) specs.push_back(from_normalized(FunctionClass::K2, m, n));
    for (double u : {0.0, 0.5, 1.0})
        for (double v : {0.0, 1.0, 2.0}) specs.push_back(from_normalized(FunctionClass::K3, u, v));
    return specs;
}

std::vector<RegionKind> test_regions() {
    std::vector<RegionKind> regions = all_regions(0.5);
    regions.push_back(RegionKind::order(0.0));
    regions.push_back(RegionKind::order(0.75));
    return regions;
}

}  // namespace

TEST_CASE("transcribed coefficient vectors at reference parameters") {
    const RealPolynomial p1 =
        build_polynomial(from_normalized(FunctionClass::K1, 2.0), RegionKind(Region::Parabolic));
    CHECK(p1.coeffs == std::vector<double>{1.0, -2.0, -11.0, -16.0, -9.0, 2.0, 3.0});

    const RealPolynomial p2 =
        build_polynomial(from_normalized(FunctionClass::K1, 0.0), RegionKind::order(0.0));
    CHECK(p2.coeffs == std::vector<double>{1.0, 0.0, -5.0, 0.0, -5.0, 0.0, 1.0});

    const RealPolynomial p3 = build_polynomial(from_normalized(FunctionClass::K2, 2.0, 2.0),
                                               RegionKind(Region::Parabolic));
    CHECK(p3.coeffs ==
          std::vector<double>{1.0, -4.0, -30.0, -68.0, -84.0, -60.0, -18.0, 4.0, 3.0});

    const RealPolynomial p4 = build_polynomial(from_normalized(FunctionClass::K1, 2.0),
                                               RegionKind(Region::Lemniscate));
    REQUIRE(p4.degree() == 4);
    CHECK(p4.coeffs[0] == doctest::Approx(1.0 - kSqrt2).epsilon(1e-15));
    CHECK(p4.coeffs[1] == doctest::Approx(2.0 * (2.0 - kSqrt2)).epsilon(1e-15));
    CHECK(p4.coeffs[2] == doctest::Approx(6.0));
    CHECK(p4.coeffs[3] == doctest::Approx(2.0 * (2.0 + kSqrt2)).epsilon(1e-15));
    CHECK(p4.coeffs[4] == doctest::Approx(1.0 + kSqrt2).epsilon(1e-15));
}

TEST_CASE("K2 lune coefficients come from the margin identity") {
    // This table is derived from margin(a(r)) = R(r) directly; the naive
    // sign convention flips the disc-radius part and produces a polynomial
    // with no root in (0,1) at all.
    const RealPolynomial poly = build_polynomial(from_normalized(FunctionClass::K2, 2.0, 2.0),
                                                 RegionKind(Region::Lune));
    REQUIRE(poly.degree() == 8);
    const std::vector<double> expected = {
        2.0 - kSqrt2,        4.0 - 4.0 * kSqrt2,  -6.0 - 6.0 * kSqrt2,
        -28.0 - 4.0 * kSqrt2, -42.0,              -36.0 + 4.0 * kSqrt2,
        -18.0 + 6.0 * kSqrt2, -4.0 + 4.0 * kSqrt2, kSqrt2};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(poly.coeffs[i] == doctest::Approx(expected[i]).epsilon(1e-14));
    }
    CHECK(std::abs(smallest_root_in_unit(poly).rho - 0.134992553789304) < 1e-12);
}

TEST_CASE("polynomial degrees match the equations") {
    auto deg = [](FunctionClass cls, double a, double b, Region tag) {
        return build_polynomial(from_normalized(cls, a, b), RegionKind(tag)).degree();
    };
    CHECK(deg(FunctionClass::K1, 2.0, 0.0, Region::Parabolic) == 6);
    CHECK(deg(FunctionClass::K2, 1.0, 1.0, Region::Parabolic) == 8);
    CHECK(deg(FunctionClass::K3, 1.0, 1.0, Region::Parabolic) == 7);
    CHECK(deg(FunctionClass::K3, 0.0, 1.0, Region::Parabolic) == 6);  // u = 0 drops r^7
    CHECK(deg(FunctionClass::K1, 1.0, 0.0, Region::Lemniscate) == 4);
    CHECK(deg(FunctionClass::K2, 1.0, 1.0, Region::Lemniscate) == 6);
    CHECK(deg(FunctionClass::K3, 1.0, 1.0, Region::Lemniscate) == 5);
}

TEST_CASE("smallest root: exact and reference cases") {
    RealPolynomial linear;
    linear.coeffs = {1.0, -2.0};
    CHECK(smallest_root_in_unit(linear).rho == doctest::Approx(0.5).epsilon(1e-14));

    const RadiusResult parab = smallest_root_in_unit(
        build_polynomial(from_normalized(FunctionClass::K1, 2.0), RegionKind(Region::Parabolic)));
    CHECK(std::abs(parab.rho - 0.202134709363014) < 1e-12);
    CHECK(parab.method == RootMethod::Polynomial);

    // exact algebraic roots at ntilde = 2: 3 - 2 sqrt(2) for the lemniscate,
    // 1/4 for the nephroid
    const RadiusResult lemn = smallest_root_in_unit(
        build_polynomial(from_normalized(FunctionClass::K1, 2.0), RegionKind(Region::Lemniscate)));
    CHECK(std::abs(lemn.rho - (3.0 - 2.0 * kSqrt2)) < 1e-12);

    const RadiusResult neph = smallest_root_in_unit(
        build_polynomial(from_normalized(FunctionClass::K1, 2.0), RegionKind(Region::Nephroid)));
    CHECK(std::abs(neph.rho - 0.25) < 1e-12);

    const RadiusResult k3 = smallest_root_in_unit(
        build_polynomial(from_normalized(FunctionClass::K3, 0.0, 0.0), RegionKind::order(0.0)));
    CHECK(std::abs(k3.rho - 0.350864112752588) < 1e-12);
}

TEST_CASE("no sign change raises NoRootError") {
    RealPolynomial poly;
    poly.coeffs = {1.0, 0.0, 1.0};
    CHECK_THROWS_AS(smallest_root_in_unit(poly), NoRootError);
}

TEST_CASE("constant terms carry the margin-at-1 orientation") {
    // Equations derived with a positive scale start at margin(a=1) > 0; the
    // lemniscate/exponential/sigmoid families are printed with the opposite
    // orientation and start negative. Either way poly(0) != 0 and a sign
    // change exists on (0,1).
    for (const auto& spec : grid_specs()) {
        for (const auto& region : test_regions()) {
            const RealPolynomial poly = build_polynomial(spec, region);
            const bool negative_family = region.tag == Region::Lemniscate ||
                                         region.tag == Region::Exponential ||
                                         region.tag == Region::Sigmoid;
            CAPTURE(class_name(spec.cls));
            CAPTURE(region_name(region));
            CHECK(poly(0.0) != 0.0);
            CHECK((poly(0.0) < 0.0) == negative_family);
            CHECK(poly(0.0) * poly(1.0) < 0.0);
        }
    }
}

TEST_CASE("roots exist, are simple, and carry small residuals across the grid") {
    for (const auto& spec : grid_specs()) {
        for (const auto& region : test_regions()) {
            const RealPolynomial poly = build_polynomial(spec, region);
            const RadiusResult res = smallest_root_in_unit(poly);
            CAPTURE(class_name(spec.cls));
            CAPTURE(region_name(region));
            CAPTURE(spec.p1);
            CAPTURE(spec.p2);
            CHECK(res.rho > 0.0);
            CHECK(res.rho < 1.0);
            CHECK(res.residual <= 1e-10 * poly.max_abs_coeff());
            CHECK(std::abs(poly.derivative_at(res.rho)) > 1e-6);
            CHECK(res.bracket_width <= 1e-13);
            // sign change across the bracket
            const double lo = res.rho - 1e-10, hi = res.rho + 1e-10;
            CHECK(poly(lo) * poly(hi) <= 0.0);
        }
    }
}

TEST_CASE("radius is nonincreasing in ntilde for every region") {
    for (const auto& region : test_regions()) {
        double prev = 2.0;
        for (int i = 0; i <= 20; ++i) {
            const double nt = 2.0 * i / 20.0;
            const double rho = smallest_root_in_unit(
                                   build_polynomial(from_normalized(FunctionClass::K1, nt), region))
                                   .rho;
            CAPTURE(region_name(region));
            CAPTURE(nt);
            CHECK(rho <= prev + 1e-12);
            prev = rho;
        }
    }
}
