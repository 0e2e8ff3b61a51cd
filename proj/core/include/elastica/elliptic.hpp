#pragma once

namespace elastica {

// Jacobi elliptic functions in the PARAMETER convention: m is the factor of
// sin^2 inside the square root,
//
//     F(phi, m) = integral_0^phi dpsi / sqrt(1 - m sin^2 psi),
//
// so m equals k^2 of the modulus convention. This matters: the reference
// curves use m = 2, which has no meaning as a modulus. Values m > 1 are
// evaluated through the reciprocal-parameter transformation
//     sn(u, m) = m^{-1/2} sn(sqrt(m) u, 1/m),
//     cn(u, m) = dn(sqrt(m) u, 1/m),
//     dn(u, m) = cn(sqrt(m) u, 1/m),
// which makes dn signed (it crosses zero), exactly what the orbitlike
// curvature needs. m < 0 is rejected.

// Complete elliptic integral of the first kind, K(m) = F(pi/2, m).
// Requires 0 <= m < 1.
double complete_elliptic_k(double m);

// Incomplete integral F(phi, m). Odd in phi; for m < 1 it satisfies
// F(phi + pi, m) = F(phi, m) + 2 K(m). For m > 1 the integrand is real only
// while |sin phi| <= 1/sqrt(m); outside that range DomainError is thrown.
double incomplete_elliptic_f(double phi, double m);

// Jacobi amplitude am(u, m), the inverse of phi -> F(phi, m), continuous in
// u. Monotone increasing for m <= 1; for m > 1 it oscillates inside
// (-asin(1/sqrt(m)), +asin(1/sqrt(m))).
double jacobi_am(double u, double m);

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

// sn = sin(am), cn = cos(am), dn = d(am)/du. Computed by the
// arithmetic-geometric mean (descending Landen) iteration.
JacobiTriple jacobi_sn_cn_dn(double u, double m);

} // namespace elastica
