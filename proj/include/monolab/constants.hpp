// Calibrated constants. Everything here is an empirical default standing in
// for an existential constant; nothing below is a derived closed form.
#ifndef MONOLAB_CONSTANTS_HPP
#define MONOLAB_CONSTANTS_HPP

namespace monolab::constants {

// Version tag for the calibration set; bump when any default changes.
inline constexpr const char* kVersion = "calib-1";

// Envelope base used by the post-choice-of-y intermediate in the master
// bound trend probe. Calibrated so the envelope dominates observed sums on
// the x <= 1e6 grid while keeping the decay trend visible.
inline constexpr double kKqEnvelopeC = 1.2;

// Reciprocal-sum slack for the prime weight sequence (the klog analogue has
// the concrete c = 1/q_1 + 1/q_2 + 1/q_3). Empirical default.
inline constexpr double kPrimesSizeLemmaC = 1.0;

// Per-degree constant reported with the Landau-type family-size bound;
// boundedness is only reported, never asserted.
inline constexpr double kLandauCm = 1.0;

}  // namespace monolab::constants

#endif  // MONOLAB_CONSTANTS_HPP
