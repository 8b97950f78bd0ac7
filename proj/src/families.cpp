#include "dfhad/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dfhad/error.hpp"
#include "dfhad/kernels.hpp"

namespace dfhad {

std::string_view to_string(Kind k) noexcept {
    switch (k) {
        case Kind::H: return "H";
        case Kind::H2star: return "H2star";
        case Kind::H4star: return "H4star";
        case Kind::H8star: return "H8star";
    }
    return "?";
}

std::optional<Kind> parse_kind(std::string_view s) noexcept {
    for (Kind k : {Kind::H, Kind::H2star, Kind::H4star, Kind::H8star})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

std::string_view to_string(Condition c) noexcept {
    switch (c) {
        case Condition::C1: return "c1";
        case Condition::C2: return "c2";
        case Condition::C3: return "c3";
        case Condition::C4: return "c4";
        case Condition::C5: return "c5";
        case Condition::D1: return "d1";
        case Condition::D2: return "d2";
        case Condition::D3: return "d3";
        case Condition::D4: return "d4";
        case Condition::D5: return "d5";
        case Condition::A1: return "a1";
        case Condition::A2: return "a2";
        case Condition::A3: return "a3";
        case Condition::A4: return "a4";
        case Condition::I: return "i";
        case Condition::II: return "ii";
        case Condition::III: return "iii";
    }
    return "?";
}

std::optional<Condition> parse_condition(std::string_view s) noexcept {
    for (int c = 0; c <= static_cast<int>(Condition::III); ++c) {
        const auto cond = static_cast<Condition>(c);
        if (to_string(cond) == s) return cond;
    }
    return std::nullopt;
}

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::NotApplicable: return "n/a";
    }
    return "?";
}

bool ConditionReport::holds(Condition c) const {
    const auto it = verdicts.find(c);
    return it != verdicts.end() && it->second.holds();
}

bool ConditionReport::all_hold() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second.holds(); });
}

namespace {

Verdict holds() { return {Status::Holds, std::nullopt, {}}; }
Verdict fails(std::optional<std::size_t> witness = std::nullopt, std::string note = {}) {
    return {Status::Fails, witness, std::move(note)};
}

/// First element whose coefficient differs from `target`.
std::optional<ElementIndex> deviation(const GroupRingElement& a, const GroupRingElement& target) {
    for (std::size_t x = 0; x < a.group().order(); ++x)
        if (a[x] != target[x]) return x;
    return std::nullopt;
}

Verdict equals(const GroupRingElement& a, const GroupRingElement& target) {
    if (auto w = deviation(a, target)) return fails(*w, "coefficient " + std::to_string(a[*w]) + ", expected " +
                                                            std::to_string(target[*w]));
    return holds();
}

GroupRingElement square_sum(const std::vector<Subset>& blocks, const GroupSpec& g) {
    GroupRingElement s(g);
    for (const auto& b : blocks) {
        const auto r = b.ring();
        s += r * gr_involution(r);
    }
    return s;
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

DfVerdict verify_df(const GroupSpec& group, const std::vector<Subset>& blocks) {
    if (blocks.empty()) throw Error(ErrorCode::NotADifferenceFamily, "no blocks");
    std::int64_t k_sum = 0;
    for (const auto& b : blocks) {
        if (!(b.group() == group)) throw Error(ErrorCode::GroupMismatch, "block outside the family's group");
        k_sum += as_int(b.size());
    }
    const auto s = square_sum(blocks, group);
    const auto form = gr_match_lambda_form(s);
    if (!form) {
        for (std::size_t x = 2; x < group.order(); ++x) {
            if (s[x] != s[1]) {
                throw Error(ErrorCode::NotADifferenceFamily,
                            "element represented " + std::to_string(s[x]) + " times, element 1 represented " +
                                std::to_string(s[1]) + " times",
                            x);
            }
        }
    }
    DfVerdict v;
    v.lambda = form->lambda;
    const auto order = as_int(group.order());
    const auto ell = as_int(blocks.size());
    if (ell == 4 && k_sum - order == v.lambda) v.kinds.push_back(Kind::H);
    const auto star_kind = [&](std::int64_t l, Kind k) {
        if (ell == l && (l * (order + 1)) % 4 == 0 && k_sum - l * (order + 1) / 4 == v.lambda) v.kinds.push_back(k);
    };
    star_kind(2, Kind::H2star);
    star_kind(4, Kind::H4star);
    star_kind(8, Kind::H8star);
    return v;
}

DifferenceFamily::DifferenceFamily(GroupSpec group, std::vector<Subset> blocks)
    : group_(std::move(group)), blocks_(std::move(blocks)), verdict_(verify_df(group_, blocks_)) {}

bool DifferenceFamily::has_kind(Kind k) const noexcept {
    return std::find(verdict_.kinds.begin(), verdict_.kinds.end(), k) != verdict_.kinds.end();
}

bool DifferenceFamily::symmetric() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Subset& b) { return is_symmetric(b); });
}

std::size_t DifferenceFamily::total_block_size() const {
    std::size_t t = 0;
    for (const auto& b : blocks_) t += b.size();
    return t;
}

GroupRingElement pair_sum(const Subset& a, const Subset& b) {
    const auto ra = a.ring();
    const auto rb = b.ring();
    return ra * gr_involution(rb) + rb * gr_involution(ra);
}

EPair extract_E(const DifferenceFamily& family) {
    if (family.size() != 4) throw Error(ErrorCode::WrongBlockCount, "need four blocks");
    const auto& g = family.group();
    const auto d0 = family.block(0).ring(), d1 = family.block(1).ring();
    const auto d2 = family.block(2).ring(), d3 = family.block(3).ring();
    const auto x0 = d0 + d1 - d2 - d3;
    const auto x1 = d0 + d3 - d1 - d2;
    std::vector<ElementIndex> e0, e1;
    for (std::size_t x = 0; x < g.order(); ++x) {
        for (const auto* xi : {&x0, &x1}) {
            const auto c = (*xi)[x];
            const bool ok = x == 0 ? c == 0 : (c == 1 || c == -1);
            if (!ok) {
                throw Error(ErrorCode::CoefficientOutOfRange,
                            std::string(xi == &x0 ? "X0" : "X1") + " has coefficient " + std::to_string(c), x);
            }
        }
        if (x == 0) continue;
        if (x0[x] == 1) e0.push_back(x);
        if (x1[x] == 1) e1.push_back(x);
    }
    EPair p{Subset(g, std::move(e0)), Subset(g, std::move(e1)), Subset(g), Subset(g)};
    p.e0_bar = complement(p.e0, ComplementMode::Star);
    p.e1_bar = complement(p.e1, ComplementMode::Star);
    return p;
}

ConditionReport check_conditions(const DifferenceFamily& family, std::span<const Condition> which) {
    if (family.size() != 4) throw Error(ErrorCode::WrongBlockCount, "conditions (c*)/(d*) need four blocks");
    const auto& g = family.group();
    const auto& D = family.blocks();
    const auto order = as_int(g.order());
    const auto k_sum = as_int(family.total_block_size());
    const auto G = GroupRingElement::all(g);

    std::optional<GroupRingElement> cross02_13;
    const auto cross_sum = [&]() -> const GroupRingElement& {
        if (!cross02_13) cross02_13 = pair_sum(D[0], D[2]) + pair_sum(D[1], D[3]);
        return *cross02_13;
    };
    const auto block_sum = [&] {
        GroupRingElement s(g);
        for (const auto& b : D) s += b.ring();
        return s;
    };
    const bool symmetric = family.symmetric();

    ConditionReport report;
    for (Condition c : which) {
        Verdict v;
        switch (c) {
            case Condition::C1: v = equals(cross_sum(), (k_sum - order) * G); break;
            case Condition::C2:
                v = symmetric ? equals(cross_sum(), (k_sum - order) * G) : fails(std::nullopt, "not symmetric");
                break;
            case Condition::C3: {
                if (!symmetric) {
                    v = fails(std::nullopt, "not symmetric");
                    break;
                }
                const std::array<std::array<int, 4>, 3> pairings = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
                v = holds();
                for (const auto& p : pairings) {
                    v = equals(pair_sum(D[p[0]], D[p[1]]) + pair_sum(D[p[2]], D[p[3]]), (k_sum - order) * G);
                    if (!v.holds()) {
                        v.note = "pairing " + std::to_string(p[0]) + std::to_string(p[1]) + "|" +
                                 std::to_string(p[2]) + std::to_string(p[3]) + ": " + v.note;
                        break;
                    }
                }
                break;
            }
            case Condition::C4: {
                const auto s = block_sum();
                v = holds();
                for (std::size_t x = 0; x < g.order(); ++x) {
                    if (s[x] % 2 != 0) {
                        v = fails(x, "odd coefficient " + std::to_string(s[x]));
                        break;
                    }
                }
                break;
            }
            case Condition::C5: {
                const auto r0 = D[0].ring(), r1 = D[1].ring(), r2 = D[2].ring(), r3 = D[3].ring();
                v = equals(r0 * gr_involution(r2), r2 * gr_involution(r0));
                if (v.holds()) v = equals(r1 * gr_involution(r3), r3 * gr_involution(r1));
                break;
            }
            case Condition::D1: {
                v = holds();
                for (std::size_t i = 0; i < 4; ++i) {
                    if (D[i].contains(0)) {
                        v = fails(0, "0_G lies in block " + std::to_string(i));
                        break;
                    }
                }
                break;
            }
            case Condition::D2: {
                try {
                    const auto e = extract_E(family);
                    const auto verdict = verify_df(g, {e.e0, e.e1, e.e0_bar, e.e1_bar});
                    if (std::find(verdict.kinds.begin(), verdict.kinds.end(), Kind::H4star) != verdict.kinds.end())
                        v = holds();
                    else
                        v = fails(std::nullopt, "E0, E1 and complements are not of type H4star");
                } catch (const Error& err) {
                    v = fails(err.witness(), err.detail());
                }
                break;
            }
            case Condition::D3: v = equals(cross_sum(), (k_sum - order + 1) * G); break;
            case Condition::D4: {
                const auto s = block_sum();
                v = holds();
                for (std::size_t x = 1; x < g.order(); ++x) {
                    if (s[x] != 1 && s[x] != 3) {
                        v = fails(x, "coefficient " + std::to_string(s[x]) + " on G*");
                        break;
                    }
                }
                std::array<int, 4> z{};
                for (std::size_t i = 0; i < 4; ++i) z[i] = D[i].contains(0) ? 1 : 0;
                const std::array<int, 4> pair0 = {z[0] + z[1], z[2] + z[3], z[0] + z[3], z[1] + z[2]};
                const int c0 = z[0] + z[1] + z[2] + z[3];
                const auto twos = std::count(pair0.begin(), pair0.end(), 2);
                const bool zero_ok = c0 % 2 == 0 && !(c0 == 2 && twos == 1);
                if (v.holds() && !zero_ok) v = fails(0, "coefficient " + std::to_string(c0) + " at 0_G");
                const auto even_not_two =
                    std::count_if(pair0.begin(), pair0.end(), [](int c) { return c % 2 == 0 && c != 2; });
                if (!v.witness.value_or(0) && (even_not_two == 1) != zero_ok) {
                    v.note += std::string(v.note.empty() ? "" : "; ") +
                              "reading 'exactly one pair sum even and != 2 at 0_G' disagrees";
                }
                break;
            }
            case Condition::D5:
                v = D[0].size() + D[3].size() == D[1].size() + D[2].size()
                        ? holds()
                        : fails(std::nullopt, "|D0|+|D3| != |D1|+|D2|");
                break;
            default: v = Verdict{}; break;
        }
        report.verdicts[c] = std::move(v);
    }
    return report;
}

namespace {

GroupRingElement t_term(const GroupRingElement& G, const GroupRingElement& a, const GroupRingElement& b,
                        const Subset& e, const Subset& e_bar) {
    return (G + a - b) * e.ring() + (G - a + b) * e_bar.ring();
}

}  // namespace

DerivedQuantities derived_quantities(const DifferenceFamily& family) {
    if (family.size() != 4) throw Error(ErrorCode::WrongBlockCount, "need four blocks");
    if (!family.symmetric()) throw Error(ErrorCode::PreconditionFailed, "symmetry");
    const std::array<Condition, 1> d2{Condition::D2};
    if (!check_conditions(family, d2).holds(Condition::D2)) throw Error(ErrorCode::PreconditionFailed, "d2");

    const auto& g = family.group();
    const auto G = GroupRingElement::all(g);
    const auto d0 = family.block(0).ring(), d1 = family.block(1).ring();
    const auto d2r = family.block(2).ring(), d3 = family.block(3).ring();
    const auto e = extract_E(family);
    return DerivedQuantities{
        d0 * d2r + d1 * d3,
        d0 + d1 - d2r - d3,
        d0 + d3 - d1 - d2r,
        t_term(G, d2r, d0, e.e0, e.e0_bar) + t_term(G, d1, d3, e.e1, e.e1_bar),
        t_term(G, d3, d1, e.e0, e.e0_bar) + t_term(G, d2r, d0, e.e1, e.e1_bar),
        t_term(G, d0, d2r, e.e0, e.e0_bar) + t_term(G, d3, d1, e.e1, e.e1_bar),
        t_term(G, d1, d3, e.e0, e.e0_bar) + t_term(G, d0, d2r, e.e1, e.e1_bar),
        std::nullopt,
    };
}

BuildingFamily::BuildingFamily(GroupSpec group, std::array<Subset, 8> parts)
    : group_(std::move(group)), parts_(std::move(parts)) {
    for (std::size_t i = 0; i < 8; ++i) {
        if (!(parts_[i].group() == group_)) throw Error(ErrorCode::GroupMismatch, "part outside the group");
        if (!is_symmetric(parts_[i]))
            throw Error(ErrorCode::PreconditionFailed, "symmetry (part A" + std::to_string(i) + ")");
    }
}

namespace {

Subset union_of(const BuildingFamily& b, std::initializer_list<int> idx) {
    Subset u(b.group());
    for (int i : idx) u = unite(u, b.part(static_cast<std::size_t>(i)));
    return u;
}

// D_i = A_{i+4} u (A_0..A_3 without A_i).  Duplicated here rather than
// depending on the constructions module.
std::vector<Subset> associated_blocks(const BuildingFamily& b) {
    std::vector<Subset> d;
    for (int i = 0; i < 4; ++i) {
        Subset u = b.part(static_cast<std::size_t>(i + 4));
        for (int j = 0; j < 4; ++j)
            if (j != i) u = unite(u, b.part(static_cast<std::size_t>(j)));
        d.push_back(std::move(u));
    }
    return d;
}

}  // namespace

DerivedQuantities derived_quantities(const BuildingFamily& building) {
    DifferenceFamily family(building.group(), associated_blocks(building));
    auto q = derived_quantities(family);
    const auto& A = building.parts();
    const auto r = [&](std::size_t i) { return A[i].ring(); };
    q.U = (r(0) - r(4)) * (r(6) - r(2)) + (r(1) - r(5)) * (r(7) - r(3));
    return q;
}

ConditionReport check_building(const BuildingFamily& b) {
    const auto& g = b.group();
    const auto& A = b.parts();
    ConditionReport report;

    Verdict a1 = holds();
    std::vector<int> owner(g.order(), -1);
    for (std::size_t i = 0; i < 8 && a1.holds(); ++i) {
        for (auto x : A[i].members()) {
            if (owner[x] >= 0) {
                a1 = fails(x, "in A" + std::to_string(owner[x]) + " and A" + std::to_string(i));
                break;
            }
            owner[x] = static_cast<int>(i);
        }
    }
    report.verdicts[Condition::A1] = a1;

    Verdict a2 = holds();
    if (owner[0] >= 0) a2 = fails(0, "0_G is covered");
    for (std::size_t x = 1; x < g.order() && a2.holds(); ++x)
        if (owner[x] < 0) a2 = fails(x, "not covered");
    report.verdicts[Condition::A2] = a2;

    Verdict a3;
    try {
        const auto v = verify_df(g, {union_of(b, {0, 1, 6, 7}), union_of(b, {2, 3, 4, 5}), union_of(b, {0, 3, 5, 6}),
                                     union_of(b, {1, 2, 4, 7})});
        a3 = std::find(v.kinds.begin(), v.kinds.end(), Kind::H4star) != v.kinds.end()
                 ? holds()
                 : fails(std::nullopt, "unions form a family with lambda " + std::to_string(v.lambda) +
                                           " that is not of type H4star");
    } catch (const Error& err) {
        a3 = fails(err.witness(), err.detail());
    }
    report.verdicts[Condition::A3] = a3;

    GroupRingElement lhs(g), rhs = GroupRingElement::identity(g, static_cast<std::int64_t>(g.order()) - 1);
    for (std::size_t i = 0; i < 8; ++i) {
        const auto ri = A[i].ring();
        lhs += ri * ri;
        lhs -= ri * A[(i + 4) % 8].ring();
        if (i < 4)
            rhs += ri;
        else
            rhs -= ri;
    }
    report.verdicts[Condition::A4] = equals(lhs, rhs);
    return report;
}

SpreadReport check_spread(const DifferenceFamily& family) {
    if (family.size() != 4) throw Error(ErrorCode::WrongBlockCount, "spread conditions need four blocks");
    const auto& g = family.group();
    const auto v = g.order();
    const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v))));
    if (root * root != v) throw Error(ErrorCode::NotPerfectSquareOrder, "|G| = " + std::to_string(v));
    const auto& D = family.blocks();

    SpreadReport rep;
    rep.tolerance = 1e-6 * static_cast<double>(v);

    rep.i = holds();
    for (std::size_t k = 0; k < 4; ++k) {
        if (D[k].size() * 2 != v - root) {
            rep.i = fails(std::nullopt, "|D" + std::to_string(k) + "| = " + std::to_string(D[k].size()) +
                                            ", expected " + std::to_string((v - root) / 2));
            break;
        }
    }

    std::array<std::vector<std::complex<double>>, 4> psi;
    for (std::size_t k = 0; k < 4; ++k) psi[k] = kernels::parallel::character_sums(g, D[k].members());
    const double sqrt_v = static_cast<double>(root);
    rep.ii = holds();
    for (std::size_t a = 1; a < v; ++a) {
        std::optional<std::size_t> which;
        int count = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            if (std::abs(psi[k][a]) > rep.tolerance) {
                ++count;
                which = k;
            }
        }
        if (count != 1) {
            rep.ii = fails(a, std::to_string(count) + " blocks with nonzero character value");
            break;
        }
        const auto val = psi[*which][a];
        if (std::abs(val - sqrt_v) > rep.tolerance && std::abs(val + sqrt_v) > rep.tolerance) {
            rep.ii = fails(a, "nonzero value is not +-sqrt|G|");
            break;
        }
        rep.nonzero_values.push_back({a, *which, val});
    }
    if (!rep.ii.holds()) rep.nonzero_values.clear();

    const auto c = [](const Subset& s) { return complement(s, ComplementMode::Full); };
    rep.H = {intersect(D[0], D[1]), intersect(c(D[0]), c(D[1])), intersect(D[0], c(D[1])), intersect(c(D[0]), D[1]),
             intersect(D[2], D[3]), intersect(c(D[2]), c(D[3])), intersect(D[2], c(D[3])), intersect(c(D[2]), D[3])};
    rep.zero_in_all = std::all_of(D.begin(), D.end(), [](const Subset& s) { return s.contains(0); });
    rep.zero_in_none = std::none_of(D.begin(), D.end(), [](const Subset& s) { return s.contains(0); });
    const auto sum = rep.H[0].ring() + rep.H[1].ring() + rep.H[4].ring() + rep.H[5].ring();
    rep.iii = equals(sum, GroupRingElement::all(g) + GroupRingElement::identity(g));
    if (rep.iii.holds() && !rep.zero_in_all && !rep.zero_in_none)
        rep.iii = fails(0, "0_G lies in some but not all blocks");
    return rep;
}

}  // namespace dfhad
