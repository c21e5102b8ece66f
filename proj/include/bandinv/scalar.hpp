#pragma once

#include "bandinv/bandmat.hpp"
#include "bandinv/spectral.hpp"

namespace bandinv::scalar {

/// Classical n = 1 reconstruction: the discretized Stieltjes procedure on the
/// weights alpha_k^2, written independently of the vector machinery so it can
/// serve as a reference. Throws InvalidArgument unless sigma.n() == 1.
BandMatrix jacobi_from_spectrum(const SpectralFunction& sigma);

}  // namespace bandinv::scalar
