#pragma once

// Jacobians of seminorms: Busemann, mass* (Gromov) and inscribed Riemannian.

#include "gmt/seminorm.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace gmt {

enum class JacobianKind { Busemann, MassStar, InscribedRiemannian };

/// "b", "mstar", "ir"
std::string_view to_string(JacobianKind kind);
/// Accepts the short tags above and the long names (busemann, mass-star, ...).
JacobianKind parse_jacobian_kind(std::string_view tag);

struct JohnOptions {
  double gap_tolerance = 1e-11;  // on log det
  long max_newton_steps = 100000;
};

struct JohnResult {
  Ellipsoid ellipsoid;
  double gap = 0.0;  // certified bound on log det(optimal) - log det(returned)
  long newton_steps = 0;
};

/// Maximal-volume centered ellipsoid inside {v : max_i |G_i v| <= 1}.
/// Throws NonConvergence (message carries the gap) when the step cap is hit.
JohnResult john_ellipsoid(const GaugeBlocks& body, const JohnOptions& opts = {});
JohnResult john_ellipsoid(const SymmetricPolytope& body, const JohnOptions& opts = {});
/// Returns the input.
JohnResult john_ellipsoid(const Ellipsoid& body);
JohnResult john_ellipsoid(const UnitBall& body, const JohnOptions& opts = {});

double jac_busemann(const Seminorm& s);
/// Exact for polytopal and ellipsoidal unit balls; multi-start coordinate
/// ascent for mixed gauges (k <= 3, otherwise Unsupported).
double jac_mass_star(const Seminorm& s);
double jac_inscribed_riemannian(const Seminorm& s, const JohnOptions& opts = {});

double jacobian(const Seminorm& s, JacobianKind kind);

}  // namespace gmt
