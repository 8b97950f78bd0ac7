#pragma once

// GF(p^n) with a deterministic choice of modulus and primitive element.
//
// An element is the residue class of c_0 + c_1 x + ... + c_{n-1} x^{n-1};
// its code is sum_j c_j p^{n-1-j}, so numeric order on codes is
// lexicographic order on (c_0, ..., c_{n-1}).  The additive group is
// Z_p^n with residues (c_0, ..., c_{n-1}), which makes the group index of
// an element equal to its code.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dfhad/group.hpp"

namespace dfhad {

struct FieldElement {
    std::uint64_t code = 0;
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

class FieldSpec {
public:
    std::uint64_t p() const noexcept { return p_; }
    int degree() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return q_; }
    /// Monic modulus, low to high, length degree()+1.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    FieldElement omega() const noexcept { return omega_; }

    std::vector<std::uint64_t> coefficients(FieldElement a) const;
    FieldElement from_coefficients(std::span<const std::uint64_t> c) const;

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const;
    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    /// omega^k
    FieldElement omega_pow(std::uint64_t k) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t order_of(FieldElement a) const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.modulus_ == b.modulus_ && a.omega_ == b.omega_;
    }

private:
    friend FieldSpec make_field(std::uint64_t p, int n);
    FieldElement mul_poly(FieldElement a, FieldElement b) const;

    std::uint64_t p_ = 2;
    int n_ = 1;
    std::uint64_t q_ = 2;
    std::vector<std::uint64_t> modulus_;
    FieldElement omega_{1};
    // exp_[k] = code of omega^k, log_[code] = k; built when q is table-sized.
    std::shared_ptr<const std::vector<std::uint32_t>> exp_;
    std::shared_ptr<const std::vector<std::uint32_t>> log_;
};

/// Largest field for which discrete-log tables are built.
inline constexpr std::uint64_t kFieldTableLimit = 1ULL << 20;

/// Throws NotPrime, DegreeTooLarge (p^n > 2^32 or n < 1).
FieldSpec make_field(std::uint64_t p, int n);

/// Additive group Z_p^n; group index == element code.
GroupSpec additive_group(const FieldSpec& f);
inline ElementIndex to_index(FieldElement a) { return static_cast<ElementIndex>(a.code); }
inline FieldElement to_element(ElementIndex x) { return {static_cast<std::uint64_t>(x)}; }

/// omega^i <omega^N> as a subset of the additive group.  N must divide q-1
/// (BadDivisor); i is reduced mod N.
Subset cyclotomic_class(const FieldSpec& f, std::uint64_t N, std::uint64_t i);

/// Image of a subset under x -> c*x.
Subset scale(const FieldSpec& f, const Subset& s, FieldElement c);

/// Monic irreducibility over GF(p) (Rabin's test), coefficients low to high.
bool is_irreducible(std::span<const std::uint64_t> poly, std::uint64_t p);

}  // namespace dfhad
