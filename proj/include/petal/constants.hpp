#pragma once

namespace petal {

// Central tolerance table. Everything that compares floating-point values
// anywhere in the library pulls its threshold from here, so the knobs are
// in one place.
namespace tol {
inline constexpr double algebra   = 1e-12;  // series arithmetic, exact identities
inline constexpr double derived   = 1e-9;   // quantities assembled through several ops
inline constexpr double eig_band  = 1e-9;   // Toeplitz boundary classification band
inline constexpr double audit     = 1e-6;   // sampled-bound slack
inline constexpr double witness   = 1e-3;   // required witness-to-bound proximity
inline constexpr double root      = 1e-10;  // polynomial root polish target
inline constexpr double grad_zero = 1e-6;   // interior critical-point gradient norm
} // namespace tol

inline constexpr int default_order = 12;    // a2..a7 plus guard terms
inline constexpr int membership_order = 64; // deep-radius membership sampling

// Reference constants under verification, as quoted by the source
// statements. Exact fractions are kept as numerator/denominator pairs
// where the source gives one.
namespace ref {
inline constexpr double a2_bound  = 1.0;
inline constexpr double a3_bound  = 0.5;
inline constexpr double a4_bound  = 1.0 / 3.0;
inline constexpr double a5_bound  = 907.0 / 1632.0;   // = 0.55575980...
inline constexpr double a6_bound  = 146.0 / 225.0;    // = 0.64888888...
inline constexpr double a7_chain  = 1791448.0 / 2073600.0;  // derivation-chain total
inline constexpr double a7_stated = 1031.0 / 1080.0;  // quoted headline value (differs; see verify)
inline constexpr double h22_bound = 0.25;
inline constexpr double h31_bound = 1.0 / 9.0;
inline constexpr double h23_quoted = 0.146048;        // quoted without derivation
inline constexpr double h41_quoted = 0.428001;        // quoted; not reproducible from its own chain
inline constexpr double omega1_quoted = 0.820011;
inline constexpr double omega2_quoted = 0.360465;
inline constexpr double omega3_quoted = 0.606922;
// Cuboid-analysis landmarks.
inline constexpr double face_p2       = 25.0 / 1296.0;
inline constexpr double face_p0x1     = 1.0 / 16.0;
inline constexpr double r1_max        = 0.0342145;
inline constexpr double r1_argmax     = 1.51933;
inline constexpr double r3_max        = 0.0914236;
inline constexpr double r3_argmax     = 1.32162;
inline constexpr double r5_max        = 0.0481125;
inline constexpr double critpoly_root = 1.20623;
inline constexpr double window_p_low  = 1.48422;
inline constexpr double window_x_high = 17.0 / 54.0;
} // namespace ref

} // namespace petal
