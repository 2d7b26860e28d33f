#pragma once

#include <complex>
#include <vector>

namespace snakelab {

/// In-place iterative radix-2 FFT.  Size must be a power of two.
/// inverse=true applies the unnormalised inverse transform; divide by n
/// yourself if you need the unitary convention.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

} // namespace snakelab
