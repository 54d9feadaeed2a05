#pragma once

#include <span>
#include <vector>

#include "weylbrane/weyl/frame.hpp"
#include "weylbrane/weyl/report.hpp"

namespace weylbrane {

// Bulk field equations of 5D integrable Weyl gravity, evaluated on a
// supplied candidate (metric, phi, xi). Each equation is returned as its
// geometric side and its source side; the residual is their difference.
//
// Equation ids:
//   eq7   G^W_ab + phi_{a;b} - (2xi-1) phi_a phi_b + xi g_ab phi_c phi^c = 0
//   eq8   phi^a_{;a} + 2 phi_a phi^a = 0
//   eq10  G_ab = 1/2 (6-5xi) [phi_a phi_b - 1/2 g_ab phi_c phi^c]
//   eq11  box phi = 0                               (Levi-Civita)
//   eq13  G_ab = 1/2 (6-5xi) [phi_a phi_b - 1/2 g_ab (phi_c phi^c - Phi^-2 phi_l^2)]
//   eq14  G_al = 1/2 (6-5xi) phi_a phi_l
//   eq15  G_ll = 1/4 (6-5xi) [phi_l^2 + Phi^2 phi_c phi^c]
// and, when phi depends on l only:
//   eq16  G_ab = 1/4 (6-5xi) Phi^-2 g_ab phi_l^2
//   eq17  G_al = 0
//   eq18  G_ll = 1/4 (6-5xi) phi_l^2
//   eq19          d_l [sqrt|g| Phi^-2 phi_l^2] = 0
//   eq19_variant  d_l [sqrt|g| Phi^-2 phi_l]   = 0
// Greek indices run over the first dim-1 coordinates; l is the last one.
// In eq13-eq15, phi_c phi^c is the 4D contraction with g^{ab}.

std::vector<EquationTerms> bulk_terms_weyl(const WeylFrame& frame, std::span<const double> point);
std::vector<EquationTerms> bulk_terms_riemann(const WeylFrame& frame,
                                              std::span<const double> point);

/// Requires the block form g_al = 0 and Phi^2 = -g_ll at the point;
/// otherwise throws FoliationError.
std::vector<EquationTerms> split_terms(const WeylFrame& frame, const LapseModel& lapse,
                                       std::span<const double> point);

ResidualReport bulk_residuals_weyl(const WeylFrame& frame, std::span<const double> point);
ResidualReport bulk_residuals_riemann(const WeylFrame& frame, std::span<const double> point);
ResidualReport split_residuals(const WeylFrame& frame, const LapseModel& lapse,
                               std::span<const double> point);

/// Finds the entry with the given id; throws std::out_of_range if absent.
const EquationTerms& find_terms(const std::vector<EquationTerms>& terms, std::string_view id);

}  // namespace weylbrane
