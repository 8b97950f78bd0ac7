#include "dfhad/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dfhad/error.hpp"
#include "dfhad/kernels.hpp"

namespace dfhad {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::CoefficientOverflow, "addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::CoefficientOverflow, "multiplication");
    return r;
}

void require_same_group(const GroupSpec& a, const GroupSpec& b) {
    if (!(a == b)) throw Error(ErrorCode::GroupMismatch, "operands live in different groups");
}

}  // namespace

GroupSpec::GroupSpec() : GroupSpec(std::vector<int>{}) {}

GroupSpec::GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
    const std::size_t r = factors_.size();
    strides_.assign(r, 1);
    order_ = 1;
    for (std::size_t j = r; j-- > 0;) {
        strides_[j] = order_;
        order_ *= static_cast<std::size_t>(factors_[j]);
    }
    auto residues = std::make_shared<std::vector<int>>(order_ * r);
    auto negation = std::make_shared<std::vector<ElementIndex>>(order_);
    for (std::size_t x = 0; x < order_; ++x) {
        std::size_t rest = x;
        ElementIndex neg = 0;
        for (std::size_t j = 0; j < r; ++j) {
            const int digit = static_cast<int>(rest / strides_[j]);
            rest %= strides_[j];
            (*residues)[x * r + j] = digit;
            neg += static_cast<std::size_t>((factors_[j] - digit) % factors_[j]) * strides_[j];
        }
        (*negation)[x] = neg;
    }
    residues_ = std::move(residues);
    negation_ = std::move(negation);
}

GroupSpec make_group(std::vector<int> factors) {
    for (int f : factors) {
        if (f < 2) throw Error(ErrorCode::FactorOutOfRange, "factor " + std::to_string(f) + " < 2");
    }
    return GroupSpec(std::move(factors));
}

GroupElement GroupSpec::element(ElementIndex index) const {
    GroupElement e;
    e.residues.resize(rank());
    for (std::size_t j = 0; j < rank(); ++j) e.residues[j] = residue(index, j);
    return e;
}

ElementIndex GroupSpec::index_of(const GroupElement& element) const {
    if (element.residues.size() != rank()) {
        throw Error(ErrorCode::GroupMismatch, "element has " + std::to_string(element.residues.size()) +
                                                  " residues, group has rank " + std::to_string(rank()));
    }
    ElementIndex idx = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
        const int r = element.residues[j];
        if (r < 0 || r >= factors_[j]) {
            throw Error(ErrorCode::GroupMismatch, "residue " + std::to_string(r) + " out of range for Z_" +
                                                      std::to_string(factors_[j]));
        }
        idx += static_cast<std::size_t>(r) * strides_[j];
    }
    return idx;
}

ElementIndex GroupSpec::add(ElementIndex a, ElementIndex b) const {
    ElementIndex out = 0;
    const std::size_t r = rank();
    const int* ra = residues_->data() + a * r;
    const int* rb = residues_->data() + b * r;
    for (std::size_t j = 0; j < r; ++j) {
        int d = ra[j] + rb[j];
        if (d >= factors_[j]) d -= factors_[j];
        out += static_cast<std::size_t>(d) * strides_[j];
    }
    return out;
}

ElementIndex GroupSpec::sub(ElementIndex a, ElementIndex b) const {
    ElementIndex out = 0;
    const std::size_t r = rank();
    const int* ra = residues_->data() + a * r;
    const int* rb = residues_->data() + b * r;
    for (std::size_t j = 0; j < r; ++j) {
        int d = ra[j] - rb[j];
        if (d < 0) d += factors_[j];
        out += static_cast<std::size_t>(d) * strides_[j];
    }
    return out;
}

GroupSpec GroupSpec::product(const GroupSpec& g, const GroupSpec& h) {
    std::vector<int> f = g.factors_;
    f.insert(f.end(), h.factors_.begin(), h.factors_.end());
    return GroupSpec(std::move(f));
}

// ---------------------------------------------------------------------------

GroupRingElement::GroupRingElement(GroupSpec group)
    : group_(std::move(group)), coeffs_(group_.order(), 0) {}

GroupRingElement::GroupRingElement(GroupSpec group, std::vector<std::int64_t> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_.order()) {
        throw Error(ErrorCode::GroupMismatch, "coefficient vector length " + std::to_string(coeffs_.size()) +
                                                  " != group order " + std::to_string(group_.order()));
    }
}

GroupRingElement GroupRingElement::identity(const GroupSpec& group, std::int64_t lambda) {
    GroupRingElement e(group);
    e.coeffs_[0] = lambda;
    return e;
}

GroupRingElement GroupRingElement::all(const GroupSpec& group, std::int64_t lambda) {
    return GroupRingElement(group, std::vector<std::int64_t>(group.order(), lambda));
}

GroupRingElement GroupRingElement::star(const GroupSpec& group, std::int64_t lambda) {
    auto e = all(group, lambda);
    e.coeffs_[0] = 0;
    return e;
}

std::int64_t GroupRingElement::total() const {
    std::int64_t t = 0;
    for (auto c : coeffs_) t = checked_add(t, c);
    return t;
}

std::vector<ElementIndex> GroupRingElement::support() const {
    std::vector<ElementIndex> s;
    for (std::size_t x = 0; x < coeffs_.size(); ++x)
        if (coeffs_[x] != 0) s.push_back(x);
    return s;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
    require_same_group(group_, other.group_);
    for (std::size_t x = 0; x < coeffs_.size(); ++x) coeffs_[x] = checked_add(coeffs_[x], other.coeffs_[x]);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
    require_same_group(group_, other.group_);
    for (std::size_t x = 0; x < coeffs_.size(); ++x) {
        std::int64_t r;
        if (__builtin_sub_overflow(coeffs_[x], other.coeffs_[x], &r))
            throw Error(ErrorCode::CoefficientOverflow, "subtraction");
        coeffs_[x] = r;
    }
    return *this;
}

GroupRingElement& GroupRingElement::operator*=(std::int64_t scalar) {
    for (auto& c : coeffs_) c = checked_mul(c, scalar);
    return *this;
}

GroupRingElement gr_convolve(const GroupRingElement& a, const GroupRingElement& b) {
    require_same_group(a.group(), b.group());
    std::vector<std::int64_t> out(a.group().order(), 0);
    if (!kernels::parallel::convolve(a.group(), a.coeffs(), b.coeffs(), out))
        throw Error(ErrorCode::CoefficientOverflow, "convolution");
    return GroupRingElement(a.group(), std::move(out));
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return gr_convolve(a, b); }

GroupRingElement gr_involution(const GroupRingElement& a) {
    const auto& g = a.group();
    std::vector<std::int64_t> out(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) out[x] = a[g.neg(x)];
    return GroupRingElement(g, std::move(out));
}

std::optional<LambdaForm> gr_match_lambda_form(const GroupRingElement& a) {
    const auto c = a.coeffs();
    if (c.size() == 1) return LambdaForm{0, c[0]};
    const std::int64_t lambda = c[1];
    for (std::size_t x = 2; x < c.size(); ++x)
        if (c[x] != lambda) return std::nullopt;
    return LambdaForm{lambda, c[0] - lambda};
}

// ---------------------------------------------------------------------------

Subset::Subset(GroupSpec group) : group_(std::move(group)) {}

Subset::Subset(GroupSpec group, std::vector<ElementIndex> members)
    : group_(std::move(group)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= group_.order()) {
        throw Error(ErrorCode::GroupMismatch, "element index " + std::to_string(members_.back()) +
                                                  " outside group of order " + std::to_string(group_.order()));
    }
}

Subset Subset::whole(const GroupSpec& group) {
    std::vector<ElementIndex> m(group.order());
    std::iota(m.begin(), m.end(), ElementIndex{0});
    return Subset(group, std::move(m));
}

Subset Subset::star(const GroupSpec& group) {
    std::vector<ElementIndex> m(group.order() - 1);
    std::iota(m.begin(), m.end(), ElementIndex{1});
    return Subset(group, std::move(m));
}

bool Subset::contains(ElementIndex x) const { return std::binary_search(members_.begin(), members_.end(), x); }

GroupRingElement Subset::ring() const {
    std::vector<std::int64_t> c(group_.order(), 0);
    for (auto x : members_) c[x] = 1;
    return GroupRingElement(group_, std::move(c));
}

bool is_symmetric(const Subset& s) {
    for (auto x : s.members())
        if (!s.contains(s.group().neg(x))) return false;
    return true;
}

Subset complement(const Subset& s, ComplementMode mode) {
    if (mode == ComplementMode::Star && s.contains(0))
        throw Error(ErrorCode::IdentityInStarComplement, "0_G lies in the set", 0);
    std::vector<ElementIndex> out;
    const std::size_t start = mode == ComplementMode::Star ? 1 : 0;
    for (std::size_t x = start; x < s.group().order(); ++x)
        if (!s.contains(x)) out.push_back(x);
    return Subset(s.group(), std::move(out));
}

Subset negate(const Subset& s) {
    std::vector<ElementIndex> out;
    out.reserve(s.size());
    for (auto x : s.members()) out.push_back(s.group().neg(x));
    return Subset(s.group(), std::move(out));
}

Subset translate(const Subset& s, ElementIndex by) {
    std::vector<ElementIndex> out;
    out.reserve(s.size());
    for (auto x : s.members()) out.push_back(s.group().add(x, by));
    return Subset(s.group(), std::move(out));
}

Subset unite(const Subset& a, const Subset& b) {
    require_same_group(a.group(), b.group());
    std::vector<ElementIndex> out;
    std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                   std::back_inserter(out));
    return Subset(a.group(), std::move(out));
}

Subset intersect(const Subset& a, const Subset& b) {
    require_same_group(a.group(), b.group());
    std::vector<ElementIndex> out;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                          std::back_inserter(out));
    return Subset(a.group(), std::move(out));
}

bool disjoint(const Subset& a, const Subset& b) { return intersect(a, b).empty(); }

Subset disjoint_union(std::span<const Subset> pieces, const char* what) {
    if (pieces.empty()) throw Error(ErrorCode::PostVerifyFailed, std::string(what) + ": no pieces");
    const auto& g = pieces.front().group();
    std::vector<ElementIndex> all;
    std::size_t expected = 0;
    for (const auto& p : pieces) {
        require_same_group(g, p.group());
        all.insert(all.end(), p.members().begin(), p.members().end());
        expected += p.size();
    }
    Subset u(g, std::move(all));
    if (u.size() != expected) throw Error(ErrorCode::PostVerifyFailed, std::string(what) + ": pieces overlap");
    return u;
}

Subset cross(const Subset& x, const Subset& y, const GroupSpec& product) {
    std::vector<int> f = x.group().factors();
    f.insert(f.end(), y.group().factors().begin(), y.group().factors().end());
    if (product.factors() != f)
        throw Error(ErrorCode::GroupMismatch, "cross: product group does not match factors");
    std::vector<ElementIndex> out;
    out.reserve(x.size() * y.size());
    for (auto a : x.members())
        for (auto b : y.members()) out.push_back(x.group().pair_index(a, b, y.group()));
    return Subset(product, std::move(out));
}

}  // namespace dfhad
