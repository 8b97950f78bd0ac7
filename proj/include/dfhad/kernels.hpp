#pragma once

// Data-parallel inner loops.  Every kernel has a serial reference in
// `kernels::serial` (kept for testing and benchmarking) and an OpenMP
// version in `kernels::parallel`, which the library calls.  The two paths
// use different loop orders so agreement between them is a real check.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dfhad/group.hpp"

namespace dfhad::kernels {

/// Bit-packed +-1 rows: bit set means -1.  `words` 64-bit words per row.
struct PackedRows {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t words = 0;
    std::span<const std::uint64_t> bits;

    std::span<const std::uint64_t> row(std::size_t i) const { return bits.subspan(i * words, words); }
};

/// <row_i(a), row_j(b)> for two packed matrices with the same column count.
std::int64_t row_dot(const PackedRows& a, std::size_t i, const PackedRows& b, std::size_t j);

namespace serial {

/// out[z] = sum_{x+y=z} a[x] b[y].  Returns false on 64-bit overflow.
bool convolve(const GroupSpec& g, std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out);

/// True iff all distinct rows are orthogonal (H H^T = n I for square +-1 H).
bool rows_orthogonal(const PackedRows& h);

/// sum_k sign_k * A_k B_k^T, dense row-major result.
std::vector<std::int64_t> signed_gram_sum(std::span<const PackedRows> left, std::span<const PackedRows> right,
                                          std::span<const int> signs);

/// psi_a(S) for every character a of g (index order), psi_a(x) = exp(2 pi i sum_j a_j x_j / n_j).
std::vector<std::complex<double>> character_sums(const GroupSpec& g, std::span<const ElementIndex> set);

}  // namespace serial

namespace parallel {

bool convolve(const GroupSpec& g, std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out);
bool rows_orthogonal(const PackedRows& h);
std::vector<std::int64_t> signed_gram_sum(std::span<const PackedRows> left, std::span<const PackedRows> right,
                                          std::span<const int> signs);
std::vector<std::complex<double>> character_sums(const GroupSpec& g, std::span<const ElementIndex> set);

}  // namespace parallel

}  // namespace dfhad::kernels
