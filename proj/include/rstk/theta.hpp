#pragma once

#include "rstk/qcalc.hpp"

namespace rstk {

// Point z = -q^{-1/2} e^{i phi} on the orthogonality circle, phi wrapped into [-pi, pi).
class CirclePoint {
public:
    CirclePoint(double phi, const QParameter& q);

    double phi() const noexcept { return phi_; }
    const QParameter& q() const noexcept { return q_; }
    cplx z() const noexcept { return z_; }
    // arg z = phi + pi; fixes the branch of z^{s} used by the Laurent forms
    double arg_z() const noexcept { return phi_ + pi; }
    double log_abs_z() const noexcept { return -0.5 * q_.log(); }

private:
    double phi_;
    QParameter q_;
    cplx z_;
};

// 1 + 2 sum nome^{l^2} cos(2 l x)
SeriesValue theta3(double x, double nome, const TruncationPolicy& policy = {});
// 2 sum (-1)^l nome^{(l+1/2)^2} sin((2l+1) x)
SeriesValue theta1(double x, double nome, const TruncationPolicy& policy = {});

// theta3(phi/2 | q^{1/2}), the orthogonality weight of the polynomials on the circle
double szego_measure(const CirclePoint& p);

// theta3(0)^{-3/2} [theta3^2(phi/4) + i theta1^2(phi/4)], nome q^{1/2}; |.|^2 is the measure
cplx measure_decomposition(const CirclePoint& p);

// sum_l a^{l(l+1)/2} b^{l(l-1)/2}, |ab| < 1. With a or b zero the vanishing powers
// are dropped and 0^0 = 1, so f(0, b) = 1 + b.
SeriesValue ramanujan_f(cplx a, cplx b, const TruncationPolicy& policy = {});

}  // namespace rstk
