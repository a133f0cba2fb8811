#pragma once

#include <complex>

namespace qha {

// In-place DFT of length n on contiguous data.
//   sign = -1: forward transform  sum_j x[j] e^{-2πi jk/n}   (no scaling)
//   sign = +1: inverse transform (1/n) sum_j x[j] e^{+2πi jk/n}
// Plans are cached per (n, sign) and reused; execution is single-threaded
// and deterministic.
void dft_inplace(std::complex<double>* data, int n, int sign);

}  // namespace qha
