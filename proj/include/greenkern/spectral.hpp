#pragma once

// Core domain types: spatial points, spectral parameters and the tagged
// union of exemplar operators.

#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <string>
#include <variant>

#include "greenkern/errors.hpp"
#include "greenkern/numeric.hpp"

namespace greenkern {

struct Point {
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};
    int dim = 3;

    Point() = default;
    Point(std::initializer_list<double> v) {
        if (v.size() < 1 || v.size() > 4) throw DomainError("Point: dimension must be 1..4");
        dim = static_cast<int>(v.size());
        int i = 0;
        for (double x : v) {
            if (!std::isfinite(x)) throw DomainError("Point: non-finite coordinate");
            c[i++] = x;
        }
    }

    double operator[](int i) const { return c[i]; }
    double& operator[](int i) { return c[i]; }

    double norm2() const {
        double s = 0.0;
        for (int i = 0; i < dim; ++i) s += c[i] * c[i];
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }
};

inline Point operator-(const Point& a, const Point& b) {
    if (a.dim != b.dim) throw DomainError("Point: dimension mismatch");
    Point r;
    r.dim = a.dim;
    for (int i = 0; i < a.dim; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

inline Point operator+(const Point& a, const Point& b) {
    if (a.dim != b.dim) throw DomainError("Point: dimension mismatch");
    Point r;
    r.dim = a.dim;
    for (int i = 0; i < a.dim; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

inline double distance(const Point& a, const Point& b) { return (a - b).norm(); }

// Spectral parameter zeta with its principal square root kappa = sqrt(-zeta),
// Re kappa > 0 off the positive half-axis.
struct SpectralPoint {
    Cplx zeta{-1.0, 0.0};
    Cplx kappa{1.0, 0.0};

    static SpectralPoint from_zeta(Cplx z) {
        require_finite(z, "SpectralPoint");
        SpectralPoint s;
        s.zeta = z;
        s.kappa = std::sqrt(-z);
        return s;
    }
};

inline bool on_positive_halfaxis(const Cplx& zeta) {
    return zeta.imag() == 0.0 && zeta.real() >= 0.0;
}

struct Free {
    int dim = 3;  // 1..4
};
struct Coulomb3D {
    double q = 0.0;
};
struct Landau3D {
    double xi = 1.0;  // magnetic flux density, != 0
};
struct InvOsc1D {
    double omega = 1.0;  // > 0
};

using GreenModel = std::variant<Free, Coulomb3D, Landau3D, InvOsc1D>;

inline int model_dimension(const GreenModel& m) {
    if (const Free* f = std::get_if<Free>(&m)) return f->dim;
    if (std::holds_alternative<InvOsc1D>(m)) return 1;
    return 3;
}

inline std::string model_name(const GreenModel& m) {
    if (const Free* f = std::get_if<Free>(&m)) return "free" + std::to_string(f->dim) + "d";
    if (std::holds_alternative<Coulomb3D>(m)) return "coulomb3d";
    if (std::holds_alternative<Landau3D>(m)) return "landau3d";
    return "invosc1d";
}

inline void validate_model(const GreenModel& m) {
    if (const Free* f = std::get_if<Free>(&m)) {
        if (f->dim < 1 || f->dim > 4) throw DomainError("Free: dim must be 1..4");
    } else if (const Landau3D* l = std::get_if<Landau3D>(&m)) {
        if (l->xi == 0.0 || !std::isfinite(l->xi)) throw DomainError("Landau3D: xi must be nonzero");
    } else if (const InvOsc1D* o = std::get_if<InvOsc1D>(&m)) {
        if (!(o->omega > 0.0)) throw DomainError("InvOsc1D: omega must be positive");
    }
}

enum class Method { closed_form, series, quadrature };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::series: return "series";
        case Method::quadrature: return "quadrature";
    }
    return "?";
}

struct EvalResult {
    Cplx value{0.0, 0.0};
    double abs_error = 0.0;  // 0 only for closed_form
    Method method = Method::closed_form;
};

}  // namespace greenkern
