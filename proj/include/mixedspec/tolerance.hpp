#ifndef MIXEDSPEC_TOLERANCE_HPP
#define MIXEDSPEC_TOLERANCE_HPP

namespace mixedspec::tolerance {

/// Circular distance (in turns) under which two inexact phases are equal.
inline constexpr double phase = 1e-9;
/// Eigenpair residual bound is this times n.
inline constexpr double eigen_residual_per_vertex = 1e-9;
/// Characteristic-polynomial coefficient agreement and imaginary residue.
inline constexpr double coefficient = 1e-8;
/// Default gap for calling two spectra equal.
inline constexpr double spectra = 1e-8;
/// Residual accepted for eigenvectors produced by transfer.
inline constexpr double transfer_residual = 1e-8;

}  // namespace mixedspec::tolerance

#endif  // MIXEDSPEC_TOLERANCE_HPP
