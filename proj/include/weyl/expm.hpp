#pragma once

#include "weyl/matrix.hpp"

namespace weyl {

// Matrix exponential by scaling and squaring around a truncated Taylor core.
// Diagonal input short-circuits to elementwise exp. Throws NormTooLarge when
// the Frobenius norm exceeds the supported range.
ComplexMatrix matrix_exp(const ComplexMatrix& a);

}  // namespace weyl
