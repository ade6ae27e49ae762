#pragma once

// Smooth transition cutoff
//
//   phi_kappa(u) = (1 - tanh(kappa (u - 1))) / 2 = 1 / (1 + e^{2 kappa (u-1)}),
//
// evaluated through the logistic form so that both phi and 1 - phi stay
// fully accurate in the far tails (the tanh form cancels catastrophically
// in the complement). phi_kappa(1) = 1/2 exactly for every kappa.

namespace fejer {

// phi_kappa(u) in (0,1); monotone decreasing in u. Requires kappa > 0.
double phi(double u, double kappa);

// 1 - phi_kappa(u) without cancellation; satisfies
// 1 - phi <= e^{2 kappa (u-1)} for u < 1.
double phi_complement(double u, double kappa);

// phi_kappa(num/den) from the exact offset (num - den)/den. Forming the
// quotient num/den first loses the last bits of u - 1, which shows up as
// ~kappa * eps noise in the deep tails; integer divisor sums need better.
double phi_ratio(double num, double den, double kappa);

}  // namespace fejer
