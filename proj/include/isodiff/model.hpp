#pragma once

// Steady-state thermal-neutron diffusion around an infinite line source in an
// infinite medium. Lengths are in any consistent unit; no unit system is
// enforced at runtime.

namespace isodiff::model {

/// Diffusing material. Construction validates lambda_s > 0, sigma_a > 0, A >= 1.
class Medium {
 public:
  Medium(double lambda_s, double atomic_number, double sigma_a);

  double lambda_s() const { return lambda_s_; }
  double atomic_number() const { return atomic_number_; }
  double sigma_a() const { return sigma_a_; }

 private:
  double lambda_s_;
  double atomic_number_;
  double sigma_a_;
};

/// Source strength in neutrons per unit length per unit time.
class LineSource {
 public:
  explicit LineSource(double s0);
  double s0() const { return s0_; }

 private:
  double s0_;
};

/// Coefficients of a1 I0(k rho) + a2 K0(k rho). Both must be >= 0 and not
/// both zero, which keeps the combination strictly positive on (0, inf).
class Superposition {
 public:
  Superposition(double a1, double a2);

  static Superposition physical() { return {0.0, 1.0}; }

  double a1() const { return a1_; }
  double a2() const { return a2_; }

 private:
  double a1_;
  double a2_;
};

/// D = lambda_s / (3 (1 - 2/(3A))).
double diffusion_constant(const Medium& m);

/// k = sqrt(sigma_a / D), the inverse diffusion length.
double inverse_diffusion_length(const Medium& m);

/// S0 / (2 pi D) * K0(k rho).
double flux_physical(double rho, const Medium& m, const LineSource& s);

/// a1 I0(k rho) + a2 K0(k rho) and its first two rho-derivatives, all in
/// closed form through I1 and K1.
double flux_general(double rho, double k, const Superposition& c);
double flux_general_prime(double rho, double k, const Superposition& c);
double flux_general_second(double rho, double k, const Superposition& c);

/// Net diffusive outflow through a cylinder of radius rho and unit height,
/// 2 pi rho D (-d phi / d rho), for the physical flux. Equals S0 (k rho) K1(k rho).
double pillbox_flow(double rho, const Medium& m, const LineSource& s);

}  // namespace isodiff::model
