#pragma once

// Finite abelian groups Z_{n_1} x ... x Z_{n_r}, their integral group rings,
// and subsets.  Elements are addressed by a mixed-radix index in
// [0, order): the first factor is the most significant digit and index 0 is
// the identity.  All values are immutable after construction.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace dfhad {

using ElementIndex = std::size_t;

struct GroupElement {
    std::vector<int> residues;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class GroupSpec {
public:
    /// Trivial group (order 1).
    GroupSpec();

    const std::vector<int>& factors() const noexcept { return factors_; }
    std::size_t order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return factors_.size(); }

    GroupElement element(ElementIndex index) const;
    ElementIndex index_of(const GroupElement& element) const;
    int residue(ElementIndex index, std::size_t digit) const {
        return (*residues_)[index * factors_.size() + digit];
    }

    ElementIndex add(ElementIndex a, ElementIndex b) const;
    ElementIndex sub(ElementIndex a, ElementIndex b) const;
    ElementIndex neg(ElementIndex a) const { return (*negation_)[a]; }

    /// G x H with the factors of G first, so (g, h) has index g*|H| + h.
    static GroupSpec product(const GroupSpec& g, const GroupSpec& h);
    ElementIndex pair_index(ElementIndex g, ElementIndex h, const GroupSpec& right) const {
        return g * right.order() + h;
    }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors_ == b.factors_; }

private:
    friend GroupSpec make_group(std::vector<int> factors);
    explicit GroupSpec(std::vector<int> factors);

    std::vector<int> factors_;
    std::vector<std::size_t> strides_;
    std::size_t order_ = 1;
    std::shared_ptr<const std::vector<int>> residues_;
    std::shared_ptr<const std::vector<ElementIndex>> negation_;
};

/// Throws FactorOutOfRange if a factor is < 2.  The empty list is the trivial group.
GroupSpec make_group(std::vector<int> factors);

class Subset;

/// Integer-valued function on a group: sum_x c_x x in Z[G].
class GroupRingElement {
public:
    explicit GroupRingElement(GroupSpec group);
    GroupRingElement(GroupSpec group, std::vector<std::int64_t> coeffs);

    /// lambda * 0_G
    static GroupRingElement identity(const GroupSpec& group, std::int64_t lambda = 1);
    /// G: every coefficient one.
    static GroupRingElement all(const GroupSpec& group, std::int64_t lambda = 1);
    /// G*: every coefficient one except at 0_G.
    static GroupRingElement star(const GroupSpec& group, std::int64_t lambda = 1);

    const GroupSpec& group() const noexcept { return group_; }
    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
    std::int64_t operator[](ElementIndex x) const { return coeffs_[x]; }
    std::int64_t total() const;
    std::vector<ElementIndex> support() const;

    GroupRingElement& operator+=(const GroupRingElement& other);
    GroupRingElement& operator-=(const GroupRingElement& other);
    GroupRingElement& operator*=(std::int64_t scalar);

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator-(GroupRingElement a) { return a *= -1; }
    friend GroupRingElement operator*(std::int64_t s, GroupRingElement a) { return a *= s; }
    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
    }

private:
    GroupSpec group_;
    std::vector<std::int64_t> coeffs_;
};

/// (a*b)[z] = sum_{x+y=z} a[x] b[y], exact.  Throws GroupMismatch, CoefficientOverflow.
GroupRingElement gr_convolve(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

/// result[x] = a[-x]
GroupRingElement gr_involution(const GroupRingElement& a);

struct LambdaForm {
    std::int64_t lambda;
    std::int64_t mu;
    friend bool operator==(const LambdaForm&, const LambdaForm&) = default;
};

/// Recognizes a = lambda*G + mu*0_G.  On the trivial group lambda is reported as 0.
std::optional<LambdaForm> gr_match_lambda_form(const GroupRingElement& a);

/// A subset of a group, held as a sorted duplicate-free list of indices.
class Subset {
public:
    Subset() = default;
    explicit Subset(GroupSpec group);
    Subset(GroupSpec group, std::vector<ElementIndex> members);

    static Subset whole(const GroupSpec& group);
    static Subset star(const GroupSpec& group);

    const GroupSpec& group() const noexcept { return group_; }
    const std::vector<ElementIndex>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(ElementIndex x) const;

    GroupRingElement ring() const;

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.group_ == b.group_ && a.members_ == b.members_;
    }

private:
    GroupSpec group_;
    std::vector<ElementIndex> members_;
};

enum class ComplementMode { Full, Star };

bool is_symmetric(const Subset& s);
/// Full: G \ s.  Star: G* \ s, which requires 0_G not in s (IdentityInStarComplement).
Subset complement(const Subset& s, ComplementMode mode);
Subset negate(const Subset& s);
Subset translate(const Subset& s, ElementIndex by);
Subset unite(const Subset& a, const Subset& b);
Subset intersect(const Subset& a, const Subset& b);
bool disjoint(const Subset& a, const Subset& b);

/// Union of pieces that must be pairwise disjoint; throws PostVerifyFailed
/// naming `what` if two pieces overlap.
Subset disjoint_union(std::span<const Subset> pieces, const char* what);

/// X x Y inside product = GroupSpec::product(X.group(), Y.group()).
Subset cross(const Subset& x, const Subset& y, const GroupSpec& product);

}  // namespace dfhad
