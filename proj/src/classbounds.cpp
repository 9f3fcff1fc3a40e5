#include "starlike/classbounds.hpp"

#include <cmath>
#include <sstream>

namespace starlike {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ParameterError(what);
}

}  // namespace

std::string class_name(FunctionClass cls) {
    switch (cls) {
        case FunctionClass::K1: return "K1";
        case FunctionClass::K2: return "K2";
        case FunctionClass::K3: return "K3";
    }
    return "?";
}

FunctionClass class_from_name(const std::string& name) {
    if (name == "K1" || name == "k1") return FunctionClass::K1;
    if (name == "K2" || name == "k2") return FunctionClass::K2;
    if (name == "K3" || name == "k3") return FunctionClass::K3;
    throw ParameterError("unknown class name: " + name);
}

ClassSpec normalize(FunctionClass cls, double b, std::optional<double> c) {
    ClassSpec spec;
    spec.cls = cls;
    spec.b = b;
    switch (cls) {
        case FunctionClass::K1: {
            require(std::abs(b) <= 1.0, "K1 requires |b| <= 1");
            require(!c.has_value(), "K1 takes no c parameter");
            spec.p1 = std::abs(2.0 * b);
            break;
        }
        case FunctionClass::K2: {
            require(c.has_value(), "K2 requires both b and c");
            require(std::abs(b) <= 1.0, "K2 requires |b| <= 1");
            require(std::abs(*c) <= 1.0, "K2 requires |c| <= 1");
            const double m = std::abs(4.0 * b - 2.0 * *c);
            require(m <= 2.0, "K2 requires m = |4b-2c| <= 2");
            spec.c = *c;
            spec.p1 = m;
            spec.p2 = std::abs(2.0 * *c);
            break;
        }
        case FunctionClass::K3: {
            require(c.has_value(), "K3 requires both b and c");
            require(std::abs(b) <= 1.0, "K3 requires |b| <= 1");
            require(std::abs(*c) <= 1.0, "K3 requires |c| <= 1");
            const double u = std::abs(2.0 * *c - 3.0 * b);
            require(u <= 1.0, "K3 requires u = |2c-3b| <= 1");
            spec.c = *c;
            spec.p1 = u;
            spec.p2 = std::abs(2.0 * *c);
            break;
        }
    }
    return spec;
}

ClassSpec from_normalized(FunctionClass cls, double p1, double p2) {
    ClassSpec spec;
    spec.cls = cls;
    spec.p1 = p1;
    spec.p2 = p2;
    switch (cls) {
        case FunctionClass::K1:
            require(p1 >= 0.0 && p1 <= 2.0, "K1 requires ntilde in [0,2]");
            require(p2 == 0.0, "K1 has a single normalized parameter");
            break;
        case FunctionClass::K2:
            require(p1 >= 0.0 && p1 <= 2.0, "K2 requires m in [0,2]");
            require(p2 >= 0.0 && p2 <= 2.0, "K2 requires n in [0,2]");
            break;
        case FunctionClass::K3:
            require(p1 >= 0.0 && p1 <= 1.0, "K3 requires u in [0,1]");
            require(p2 >= 0.0 && p2 <= 2.0, "K3 requires v in [0,2]");
            break;
    }
    return spec;
}

DiscBound disc_bound(const ClassSpec& spec, double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        std::ostringstream os;
        os << "disc_bound requires 0 <= r < 1, got " << r;
        throw DomainError(os.str());
    }
    const double r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r, r6 = r4 * r2,
                 r7 = r6 * r;
    DiscBound d;
    d.r = r;
    d.a = (1.0 + r4) / (1.0 - r4);
    switch (spec.cls) {
        case FunctionClass::K1: {
            const double nt = spec.p1;
            d.radius = (nt * r + 6.0 * r2 + 4.0 * nt * r3 + 6.0 * r4 + nt * r5) /
                       ((1.0 + nt * r + r2) * (1.0 - r4));
            break;
        }
        case FunctionClass::K2: {
            const double m = spec.p1, n = spec.p2, mn = m * n;
            const double num = (m + n) * r + (10.0 + 2.0 * mn) * r2 + 9.0 * (m + n) * r3 +
                               (20.0 + 6.0 * mn) * r4 + 9.0 * (m + n) * r5 +
                               (10.0 + 2.0 * mn) * r6 + (m + n) * r7;
            d.radius = num / ((1.0 + m * r + r2) * (1.0 + n * r + r2) * (1.0 - r4));
            break;
        }
        case FunctionClass::K3: {
            const double u = spec.p1, v = spec.p2, uv = u * v;
            const double num = (u + v) * r + (8.0 + 2.0 * uv) * r2 +
                               (9.0 * u + 6.0 * v) * r3 + (10.0 + 6.0 * uv) * r4 +
                               (9.0 * u + 3.0 * v) * r5 + (2.0 + 2.0 * uv) * r6 + u * r7;
            d.radius = num / ((1.0 + r * u) * (1.0 + r2 + r * v) * (1.0 - r4));
            break;
        }
    }
    return d;
}

double lemma_bound(double b, double alpha, double r) {
    if (std::abs(b) > 1.0) throw DomainError("lemma_bound requires |b| <= 1");
    if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("lemma_bound requires alpha in [0,1)");
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("lemma_bound requires 0 <= r < 1");
    const double ab = std::abs(b);
    return 2.0 * (1.0 - alpha) * r / (1.0 - r * r) * (ab * r * r + 2.0 * r + ab) /
           ((1.0 - 2.0 * alpha) * r * r + 2.0 * ab * (1.0 - alpha) * r + 1.0);
}

}  // namespace starlike
