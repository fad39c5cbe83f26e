#pragma once

namespace hermsym::tol {

// Relative thresholds for the floating-point backend.
inline constexpr double kRank = 1e-10;           // numerical rank cutoff
inline constexpr double kSpectralMerge = 1e-8;   // singular values closer than this merge
inline constexpr double kTripotent = 1e-12;      // ‖Q_e ē − e‖ / (1+‖e‖)
inline constexpr double kSpectralRecon = 1e-10;  // ‖x − Σ σ c‖ / ‖x‖
inline constexpr double kMomentAgree = 1e-9;     // cross-formula operator agreement
inline constexpr double kEquivariance = 1e-9;
inline constexpr double kAntiHermitian = 1e-10;
inline constexpr double kChamberRound = 1e-9;    // ν snapping at the chamber walls
inline constexpr double kFibreEqual = 1e-10;
inline constexpr double kFibreSeparate = 1e-6;

}  // namespace hermsym::tol
