#pragma once

// +-1 matrices from difference families and the four Hadamard arrays
// (Goethals-Seidel, Wallis-Whiteman, Szekeres, Kharaghani).
//
// Developed matrices are indexed by group element index.  Bordered blocks
// have order |G|+1 with the border in row and column 0:
//
//     X = [ a   b e^T ]
//         [ c e   M   ]
//
// and the reversal R' = diag(1, R).  Every emitted matrix has passed either
// the full H H^T = nI check or, above a size threshold, the equivalent
// block-level check (family Gram identity plus the scalar border equations).

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dfhad/families.hpp"
#include "dfhad/kernels.hpp"

namespace dfhad {

/// Square +-1 matrix, bit-packed by rows (bit set means -1).
class SignMatrix {
public:
    SignMatrix() = default;
    /// All +1.
    explicit SignMatrix(std::size_t n);
    static SignMatrix from_function(std::size_t n, const std::function<int(std::size_t, std::size_t)>& f);

    std::size_t order() const noexcept { return n_; }
    int at(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U ? -1 : 1;
    }
    void set(std::size_t i, std::size_t j, int sign);
    kernels::PackedRows rows() const noexcept { return {n_, n_, words_, bits_}; }
    SignMatrix transposed() const;

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// M[x,y] = -1 iff y - x in s.
SignMatrix develop_sign_matrix(const Subset& s);

/// The permutation x -> -x; R[x,y] = 1 iff x + y = 0.
std::vector<ElementIndex> reversal(const GroupSpec& g);
/// (M P)[x,y] = M[x, perm[y]] for the permutation matrix P of `perm`.
SignMatrix times_permutation(const SignMatrix& m, const std::vector<ElementIndex>& perm);

/// Exact H H^T = nI over bit-packed rows.
bool is_hadamard(const SignMatrix& h);

/// sum_{i<4} (M_{2i} M_{2i+1}^T - M_{2i+1} M_{2i}^T) == 0.  Throws OrderMismatch.
bool amicability_check(const std::array<SignMatrix, 8>& ms);

enum class CellOp : std::uint8_t { Plain, Transpose, Reverse, TransposeReverse };

struct Cell {
    std::uint8_t block;
    std::int8_t sign;
    CellOp op;
};

/// s x s grid; each block index appears once per row and once per column.
struct ArrayTemplate {
    std::string name;
    std::size_t size;
    std::vector<Cell> cells;  // row-major

    const Cell& at(std::size_t p, std::size_t q) const { return cells[p * size + q]; }
    /// Throws ArrayRealizationFailed unless the grid is a Latin square.
    void validate() const;
};

const ArrayTemplate& goethals_seidel_template();
const ArrayTemplate& szekeres_template();
const ArrayTemplate& kharaghani_template();

/// Per-block border signs (corner, row, column) relative to the sign of the
/// block's row sum r_i = |G| - 2|B_i| (r_i = 0 counts as positive).
struct BorderSigns {
    std::int8_t corner, row, column;
    friend bool operator==(const BorderSigns&, const BorderSigns&) = default;
};
using BorderPattern = std::vector<BorderSigns>;

/// Frozen border patterns found by border_search at orders 56, 28 and 368.
const BorderPattern& frozen_border(const ArrayTemplate& t);

/// Scalar equations that, together with the family Gram identity, are
/// equivalent to the bordered assembly being Hadamard.
bool border_equations_hold(const ArrayTemplate& t, std::int64_t v, const std::vector<int>& row_sums,
                           const BorderPattern& pattern);

/// First pattern (in mask order, bit set = -1) satisfying border_equations_hold.
std::optional<BorderPattern> border_search(const ArrayTemplate& t, std::int64_t v, const std::vector<int>& row_sums);

/// Every pattern passing border_equations_hold, in mask order.
std::vector<BorderPattern> border_candidates(const ArrayTemplate& t, std::int64_t v,
                                             const std::vector<int>& row_sums);

/// sum_i f_i f_i^(-1) for f_i = G - 2 B_i.
GroupRingElement gram_sum(const DifferenceFamily& family);

/// Plugs blocks into a template; bordered when `border` is non-empty.
SignMatrix assemble(const ArrayTemplate& t, const DifferenceFamily& family, const BorderPattern& border);

struct ArrayOptions {
    bool full_check = false;                // force H H^T = nI above the threshold
    std::size_t full_check_threshold = 1200;
};

struct HadamardResult {
    SignMatrix matrix;
    std::string scheme;
    BorderPattern border;     // empty for Goethals-Seidel
    bool frozen_border = true;  // false when the per-instance search was needed
    bool full_check = false;    // true when H H^T = nI was evaluated
};

/// Type H -> order 4|G|.
HadamardResult goethals_seidel(const DifferenceFamily& family, const ArrayOptions& opt = {});
/// Type H4star -> order 4(|G|+1).
HadamardResult wallis_whiteman(const DifferenceFamily& family, const ArrayOptions& opt = {});
/// Type H2star -> order 2(|G|+1).
HadamardResult szekeres(const DifferenceFamily& family, const ArrayOptions& opt = {});
/// Type H8star with amicable developed blocks -> order 8(|G|+1).
HadamardResult kharaghani(const DifferenceFamily& family, const ArrayOptions& opt = {});

/// Picks the array matching the family's kind (H, H4star, H2star, H8star).
HadamardResult hadamard_from_family(const DifferenceFamily& family, const ArrayOptions& opt = {});

}  // namespace dfhad
