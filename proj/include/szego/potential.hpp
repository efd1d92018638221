#pragma once
//
// The measure mu_r on Gamma_r (the pullback of d theta / 2 pi under phi), its logarithmic
// potential, the balayage and Robin identities, and a weighted Leja realization of the
// equilibrium problem in the field ext_field(z) = (ln|z| + Re z) / 2.
//

#include "szego/apfloat.hpp"
#include "szego/geometry.hpp"
#include "szego/roots.hpp"

#include <string>
#include <vector>

namespace szego {

struct ExternalField {
  bool active = true;  ///< false gives the zero field (weight 1)

  static ExternalField szego() { return {}; }
  static ExternalField none() { return {false}; }

  /// (ln|z| + Re z) / 2
  [[nodiscard]] ApReal value(const ApComplex& z) const;
  /// e^{-value(z)}
  [[nodiscard]] ApReal weight(const ApComplex& z) const;
};

/// How the angle variable is sampled.
///  Uniform: theta_j = 2 pi j / M, weights 1/M.
///  Graded:  theta_j = s_j - sin s_j with s_j = 2 pi j / M, weights (1 - cos s_j) / M. Clusters nodes at
///           theta = 0 where Gamma_r has a corner (r = 0) or very high curvature (small r).
///  Auto:    Graded when r M < 40, Uniform otherwise.
enum class MuRule { Auto, Uniform, Graded };

struct MuDiscretization {
  LevelCurve curve;
  DiscreteMeasure measure;
  bool graded = false;
};

/// mu_r sampled by M nodes; r = infinity gives delta_0 with an empty curve.
MuDiscretization discretize(const ApReal& r, unsigned nodes, MuRule rule = MuRule::Auto);

DiscreteMeasure discretize_mu_r(const ApReal& r, unsigned nodes, MuRule rule = MuRule::Auto);

/// -sum w_i ln|z - x_i|, pairwise-summed. Atoms of zero weight are skipped.
/// Throws SingularEvaluation if z is within 1e-30 of a weighted atom.
ApReal log_potential(const DiscreteMeasure& mu, const ApComplex& z);

/// Density of mu_r against d theta at a curve point, Re[(1/2 pi i) (1 - z)/z z'(theta)] with
/// z'(theta) = i phi(z) / phi'(z); at the corner z = 1 the limit 1/(2 pi) is returned.
ApReal pullback_density(const ApComplex& z);

struct IdentityCheck {
  ApComplex point;
  std::string identity;
  ApReal lhs;
  ApReal rhs;
  ApReal abs_error;
  double tolerance = 0.0;

  [[nodiscard]] bool passed() const { return abs_error.to_double() <= tolerance; }
};

struct BalayageReport {
  ApReal r;
  unsigned nodes = 0;
  std::vector<IdentityCheck> checks;

  [[nodiscard]] bool all_passed() const;
};

struct BalayageOptions {
  double tolerance = 1e-8;          ///< interior, exterior and near-curve identities
  double origin_tolerance = 1e-10;  ///< V(0) = r + 1
  double offset_spacings = 8.0;     ///< near-curve points sit this many local node spacings off the curve
};

/// Checks V + Re z = r+1 at interior points, V + ln|z| = 0 at exterior points, V(0) = r+1, and
/// V + ext_field = (r+1)/2 through interior and exterior points offset from Gamma_r at
/// theta = pi/2, pi, 3 pi/2. Throws InvalidTestPoint if a supplied point is on the wrong side.
BalayageReport verify_balayage(const ApReal& r, unsigned nodes, const std::vector<ApComplex>& interior,
                               const std::vector<ApComplex>& exterior, BalayageOptions opts = {});

struct EnergyReport {
  ApReal energy;      ///< I = -sum_{i != j} w_i w_j ln|x_i - x_j| + 2 sum w_i Q(x_i)
  ApReal robin_hat;   ///< I - sum w_i Q(x_i)
};

/// Discrete weighted energy with the diagonal excluded. Requires at least two weighted atoms.
EnergyReport weighted_energy(const DiscreteMeasure& mu, const ExternalField& field);

struct LejaResult {
  DiscreteMeasure measure;
  std::vector<unsigned> grid_index;  ///< chosen grid nodes in selection order
  std::vector<double> theta;         ///< angles of the chosen nodes
  double log_t_hat = 0.0;            ///< ln max_grid w^N prod |z - z_j|
  double robin_estimate = 0.0;       ///< -log_t_hat / N
};

/// Greedy weighted Leja points on a grid of Gamma_r (angles sampled as in MuRule::Auto).
/// Requires N >= 1, grid_nodes >= 8N.
LejaResult weighted_leja(const ApReal& r, unsigned count, unsigned grid_nodes);

inline constexpr unsigned kDefaultLejaGridFactor = 16;

/// Kolmogorov-Smirnov distance between angles in [0, 2 pi) and the uniform law.
double ks_uniform_angles(std::vector<double> angles);

}  // namespace szego
