#pragma once

#include <optional>
#include <string>

#include "starlike/errors.hpp"

namespace starlike {

enum class FunctionClass { K1, K2, K3 };

std::string class_name(FunctionClass cls);
FunctionClass class_from_name(const std::string& name);

// A function class with its normalized parameters:
//   K1: p1 = ntilde = |2b|
//   K2: p1 = m = |4b - 2c|, p2 = n = |2c|
//   K3: p1 = u = |2c - 3b|, p2 = v = |2c|
// b, c keep the raw signed parameters when the instance was built from them
// (needed for extremal-function selection); radius math uses p1/p2 only.
struct ClassSpec {
    FunctionClass cls = FunctionClass::K1;
    double p1 = 0.0;
    double p2 = 0.0;
    std::optional<double> b;
    std::optional<double> c;
};

// Validates the class hypotheses (|b| <= 1, |c| <= 1, m <= 2, u <= 1) and
// derives the normalized parameters. K1 takes b only.
ClassSpec normalize(FunctionClass cls, double b, std::optional<double> c = std::nullopt);

// Builds a spec directly from normalized parameters (range-checked); the raw
// parameters stay unset.
ClassSpec from_normalized(FunctionClass cls, double p1, double p2 = 0.0);

// Guaranteed image disc of zf'/f over |z| <= r: center a = (1+r^4)/(1-r^4)
// and the class-dependent radius.
struct DiscBound {
    double a = 1.0;
    double radius = 0.0;
    double r = 0.0;
};

DiscBound disc_bound(const ClassSpec& spec, double r);

// Derivative bound for p with p(0) = 1, p'(0) = 2b(1-alpha), Re p > alpha:
//   |zp'/p| <= 2(1-alpha)r/(1-r^2) * (|b|r^2 + 2r + |b|)
//              / ((1-2alpha)r^2 + 2|b|(1-alpha)r + 1)   on |z| = r.
double lemma_bound(double b, double alpha, double r);

}  // namespace starlike
