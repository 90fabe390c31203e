#ifndef LAGRANGEKIT_KERNELS_HPP
#define LAGRANGEKIT_KERNELS_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lagrangekit/errors.hpp"

namespace lagrangekit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace detail {

// Temme's Gamma ratios: gam1 = (1/G(1-mu) - 1/G(1+mu))/(2 mu),
// gam2 = (1/G(1-mu) + 1/G(1+mu))/2, plus the reciprocals themselves.
// Taylor fallback near mu = 0 where the quotient cancels.
template <typename Scalar>
void temme_gammas(Scalar mu, Scalar& gam1, Scalar& gam2, Scalar& gpl, Scalar& gmi) {
  if (std::abs(mu) < Scalar(1e-3)) {
    constexpr Scalar euler = Scalar(0.57721566490153286060651209L);
    constexpr Scalar pi2_6 = Scalar(1.64493406684822643647241517L);
    constexpr Scalar zeta3 = Scalar(1.20205690315959428539973816L);
    // 1/Gamma(1+mu) = 1 + a1 mu + a2 mu^2 + a3 mu^3 + ...
    const Scalar a2 = (euler * euler - pi2_6) / Scalar(2);
    const Scalar a3 =
        euler * euler * euler / Scalar(6) - euler * pi2_6 / Scalar(2) + zeta3 / Scalar(3);
    gam1 = -(euler + a3 * mu * mu);
    gam2 = Scalar(1) + a2 * mu * mu;
  } else {
    gpl = Scalar(1) / std::tgamma(Scalar(1) + mu);
    gmi = Scalar(1) / std::tgamma(Scalar(1) - mu);
    gam1 = (gmi - gpl) / (Scalar(2) * mu);
    gam2 = (gmi + gpl) / Scalar(2);
  }
  gpl = gam2 - mu * gam1;
  gmi = gam2 + mu * gam1;
}

// K_mu(x), K_{mu+1}(x) by Temme's series; requires |mu| <= 1/2 and x <= 2.
template <typename Scalar>
void bessel_k_temme(Scalar mu, Scalar x, Scalar& kmu, Scalar& kmu1) {
  constexpr Scalar eps = std::numeric_limits<Scalar>::epsilon();
  constexpr int max_iter = 300;
  const Scalar pi = Scalar(3.14159265358979323846264338L);

  const Scalar x2 = x / Scalar(2);
  const Scalar pimu = pi * mu;
  const Scalar fact = (std::abs(pimu) < Scalar(1e-14)) ? Scalar(1) : pimu / std::sin(pimu);
  Scalar d = -std::log(x2);
  Scalar e = mu * d;
  const Scalar fact2 = (std::abs(e) < Scalar(1e-14)) ? Scalar(1) : std::sinh(e) / e;
  Scalar gam1, gam2, gpl, gmi;
  temme_gammas(mu, gam1, gam2, gpl, gmi);
  Scalar ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
  Scalar sum = ff;
  e = std::exp(e);
  Scalar p = e / (Scalar(2) * gpl);
  Scalar q = Scalar(1) / (Scalar(2) * e * gmi);
  Scalar c = Scalar(1);
  d = x2 * x2;
  Scalar sum1 = p;
  const Scalar mu2 = mu * mu;
  for (int i = 1; i <= max_iter; ++i) {
    ff = (Scalar(i) * ff + p + q) / (Scalar(i) * Scalar(i) - mu2);
    c *= d / Scalar(i);
    p /= (Scalar(i) - mu);
    q /= (Scalar(i) + mu);
    const Scalar del = c * ff;
    sum += del;
    sum1 += c * (p - Scalar(i) * ff);
    if (std::abs(del) < std::abs(sum) * eps) break;
  }
  kmu = sum;
  kmu1 = sum1 * (Scalar(2) / x);
}

// K_mu(x), K_{mu+1}(x) by the Thompson-Barnett continued fraction (CF2);
// requires |mu| <= 1/2 and x >= 2.
template <typename Scalar>
void bessel_k_cf2(Scalar mu, Scalar x, Scalar& kmu, Scalar& kmu1) {
  constexpr Scalar eps = std::numeric_limits<Scalar>::epsilon();
  constexpr int max_iter = 10000;
  const Scalar pi = Scalar(3.14159265358979323846264338L);

  const Scalar mu2 = mu * mu;
  Scalar b = Scalar(2) * (Scalar(1) + x);
  Scalar d = Scalar(1) / b;
  Scalar h = d;
  Scalar delh = d;
  Scalar q1 = Scalar(0);
  Scalar q2 = Scalar(1);
  const Scalar a1 = Scalar(0.25) - mu2;
  Scalar q = a1;
  Scalar c = a1;
  Scalar a = -a1;
  Scalar s = Scalar(1) + q * delh;
  for (int i = 2; i <= max_iter; ++i) {
    a -= Scalar(2 * (i - 1));
    c = -a * c / Scalar(i);
    const Scalar qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += Scalar(2);
    d = Scalar(1) / (b + a * d);
    delh = (b * d - Scalar(1)) * delh;
    h += delh;
    const Scalar dels = q * delh;
    s += dels;
    if (std::abs(dels / s) <= eps) break;
  }
  h = a1 * h;
  kmu = std::sqrt(pi / (Scalar(2) * x)) * std::exp(-x) / s;
  kmu1 = kmu * (mu + x + Scalar(0.5) - h) / x;
}

// Two-regime evaluation for arbitrary non-negative order: Temme's series below
// x = 2, CF2 above, then upward recurrence from mu in [-1/2, 1/2].
template <typename Scalar>
Scalar bessel_k_general(Scalar nu, Scalar x) {
  const int nl = static_cast<int>(nu + Scalar(0.5));
  const Scalar mu = nu - Scalar(nl);
  Scalar kmu, kmu1;
  if (x <= Scalar(2)) {
    bessel_k_temme(mu, x, kmu, kmu1);
  } else {
    bessel_k_cf2(mu, x, kmu, kmu1);
  }
  for (int i = 1; i <= nl; ++i) {
    const Scalar knext = kmu + (Scalar(2) * (mu + Scalar(i)) / x) * kmu1;
    kmu = kmu1;
    kmu1 = knext;
  }
  return kmu;
}

// Closed form for half-integer orders, K_{1/2}(x) = sqrt(pi/2x) e^{-x}
// plus the three-term recurrence upward.
template <typename Scalar>
Scalar bessel_k_half_integer(int twice_nu, Scalar x) {
  const Scalar pi = Scalar(3.14159265358979323846264338L);
  const Scalar base = std::sqrt(pi / (Scalar(2) * x)) * std::exp(-x);
  if (twice_nu == 1) return base;
  Scalar km = base;                              // K_{1/2}
  Scalar k = base * (Scalar(1) + Scalar(1) / x);  // K_{3/2}
  for (int t = 3; t < twice_nu; t += 2) {
    const Scalar knext = km + (Scalar(t) / x) * k;
    km = k;
    k = knext;
  }
  return k;
}

}  // namespace detail

// Modified Bessel function of the second kind K_nu(x), x > 0. Symmetric in
// nu. Half-integer orders dispatch to the closed forms.
template <typename Scalar>
Scalar bessel_k(Scalar nu, Scalar x) {
  if (!(x > Scalar(0))) throw std::domain_error("bessel_k: requires x > 0");
  nu = std::abs(nu);
  const Scalar twice = Scalar(2) * nu;
  const Scalar twice_rounded = std::round(twice);
  if (std::abs(twice - twice_rounded) < Scalar(1e-12) &&
      static_cast<std::int64_t>(twice_rounded) % 2 == 1) {
    return detail::bessel_k_half_integer(static_cast<int>(twice_rounded), x);
  }
  return detail::bessel_k_general(nu, x);
}

enum class KernelFamily { kMatern, kSurfaceSpline };

// Radial kernel description. The normalization fixes kernel(0) = 1 for
// Matern; for surface splines it is the sign (+1/-1) that makes the
// constrained quadratic form positive, probed at construction.
struct KernelSpec {
  KernelFamily family = KernelFamily::kMatern;
  int m = 2;
  int d = 2;
  double normalization = 1.0;

  // Degree of the auxiliary polynomial space, -1 when there is none.
  int cpd_degree() const {
    return family == KernelFamily::kSurfaceSpline ? m - 1 : -1;
  }

  static KernelSpec matern(int m, int d);
  static KernelSpec surface_spline(int m, int d);
};

double kernel_radial(const KernelSpec& spec, double r);
double kernel_eval(const KernelSpec& spec, const Eigen::Ref<const Vector>& x,
                   const Eigen::Ref<const Vector>& y);

// Kernel values from squared distances (vectorized hot path for grid sweeps).
Eigen::ArrayXd kernel_from_sq(const KernelSpec& spec, const Eigen::ArrayXd& r2);

// Collocation matrix K_{ij} = k(x_i, y_j) for row-major point blocks.
Matrix collocation_matrix(const KernelSpec& spec, const Eigen::Ref<const Matrix>& x,
                          const Eigen::Ref<const Matrix>& y);

// Monomial basis of total degree <= degree in d variables, graded
// lexicographic (grade ascending, descending lex within a grade, so
// d = 2, degree 1 enumerates 1, x1, x2).
struct PolynomialBasis {
  int degree = -1;
  int d = 0;
  std::vector<std::vector<int>> exponents;

  int size() const { return static_cast<int>(exponents.size()); }

  static PolynomialBasis make(int degree, int d);
  static PolynomialBasis for_spec(const KernelSpec& spec) {
    return make(spec.cpd_degree(), spec.d);
  }
};

double poly_eval(const PolynomialBasis& basis, int j, const Eigen::Ref<const Vector>& x);

// Vandermonde block Phi_{ij} = phi_j(x_i).
Matrix vandermonde(const PolynomialBasis& basis, const Eigen::Ref<const Matrix>& pts);

// Midpoint-rule / central-difference estimate of ||k(.,0)||_{W_p^sigma(B(0,R))}.
// Discretization error is O(1/grid); intended for boundedness and growth
// diagnostics only.
double kernel_sobolev_norm_estimate(const KernelSpec& spec, int sigma, double p,
                                    double R, int grid);

}  // namespace lagrangekit

#endif
