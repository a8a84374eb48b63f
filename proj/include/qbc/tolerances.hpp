#pragma once

namespace qbc::tol {

// Default tolerance tiers. Structural invariants are the tightest,
// derived-quantity comparisons one order looser, end-to-end verdicts
// configurable per call (every function taking a tolerance defaults to
// these but accepts an override).
inline constexpr double structural = 1e-10;
inline constexpr double derived = 1e-9;
inline constexpr double distribution = 1e-12;
inline constexpr double conceal = 1e-9;
inline constexpr double attack = 1e-9;

}  // namespace qbc::tol
