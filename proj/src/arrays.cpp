#include "dfhad/arrays.hpp"

#include <sstream>
#include <string>

#include "dfhad/error.hpp"

namespace dfhad {

SignMatrix::SignMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

SignMatrix SignMatrix::from_function(std::size_t n, const std::function<int(std::size_t, std::size_t)>& f) {
    SignMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, f(i, j));
    return m;
}

void SignMatrix::set(std::size_t i, std::size_t j, int sign) {
    auto& w = bits_[i * words_ + j / 64];
    const auto bit = std::uint64_t{1} << (j % 64);
    if (sign < 0)
        w |= bit;
    else
        w &= ~bit;
}

SignMatrix SignMatrix::transposed() const {
    return from_function(n_, [&](std::size_t i, std::size_t j) { return at(j, i); });
}

SignMatrix develop_sign_matrix(const Subset& s) {
    const auto& g = s.group();
    SignMatrix m(g.order());
    for (ElementIndex x = 0; x < g.order(); ++x)
        for (auto d : s.members()) m.set(x, g.add(x, d), -1);
    return m;
}

std::vector<ElementIndex> reversal(const GroupSpec& g) {
    std::vector<ElementIndex> perm(g.order());
    for (ElementIndex x = 0; x < g.order(); ++x) perm[x] = g.neg(x);
    return perm;
}

SignMatrix times_permutation(const SignMatrix& m, const std::vector<ElementIndex>& perm) {
    return SignMatrix::from_function(m.order(), [&](std::size_t i, std::size_t j) { return m.at(i, perm[j]); });
}

bool is_hadamard(const SignMatrix& h) { return kernels::parallel::rows_orthogonal(h.rows()); }

bool amicability_check(const std::array<SignMatrix, 8>& ms) {
    for (const auto& m : ms)
        if (m.order() != ms[0].order()) throw Error(ErrorCode::OrderMismatch, "matrices of different orders");
    std::vector<kernels::PackedRows> left, right;
    std::vector<int> signs;
    for (std::size_t i = 0; i < 4; ++i) {
        left.push_back(ms[2 * i].rows());
        right.push_back(ms[2 * i + 1].rows());
        signs.push_back(1);
        left.push_back(ms[2 * i + 1].rows());
        right.push_back(ms[2 * i].rows());
        signs.push_back(-1);
    }
    const auto sum = kernels::parallel::signed_gram_sum(left, right, signs);
    return std::all_of(sum.begin(), sum.end(), [](std::int64_t x) { return x == 0; });
}

void ArrayTemplate::validate() const {
    const auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ArrayRealizationFailed, "template " + name + ": " + why);
    };
    if (cells.size() != size * size) fail("wrong cell count");
    for (std::size_t p = 0; p < size; ++p) {
        std::vector<bool> in_row(size), in_col(size);
        for (std::size_t q = 0; q < size; ++q) {
            const auto br = at(p, q).block, bc = at(q, p).block;
            if (br >= size || bc >= size || in_row[br] || in_col[bc]) fail("not a Latin square");
            in_row[br] = in_col[bc] = true;
        }
    }
}

namespace {

// Rows separated by '/', cells like "-A3tR": sign, block (1-based),
// optional transpose, optional reversal.
ArrayTemplate parse_template(std::string name, const std::string& text) {
    ArrayTemplate t{std::move(name), 0, {}};
    std::istringstream rows(text);
    std::string row;
    while (std::getline(rows, row, '/')) {
        std::istringstream cells(row);
        std::string tok;
        std::size_t count = 0;
        while (cells >> tok) {
            Cell c{0, 1, CellOp::Plain};
            std::size_t k = 0;
            if (tok[k] == '-') {
                c.sign = -1;
                ++k;
            }
            ++k;  // 'A'
            std::size_t digits = 0;
            c.block = static_cast<std::uint8_t>(std::stoi(tok.substr(k), &digits) - 1);
            k += digits;
            const bool tr = k < tok.size() && tok[k] == 't';
            const bool rev = tok.back() == 'R';
            c.op = tr ? (rev ? CellOp::TransposeReverse : CellOp::Transpose) : (rev ? CellOp::Reverse : CellOp::Plain);
            t.cells.push_back(c);
            ++count;
        }
        t.size = count;
    }
    t.validate();
    return t;
}

bool transposed(CellOp op) { return op == CellOp::Transpose || op == CellOp::TransposeReverse; }
bool reversed(CellOp op) { return op == CellOp::Reverse || op == CellOp::TransposeReverse; }

}  // namespace

const ArrayTemplate& goethals_seidel_template() {
    static const ArrayTemplate t = parse_template("goethals-seidel",
                                                  " A1   A2R  A3R  A4R  /"
                                                  "-A2R  A1   A4tR -A3tR/"
                                                  "-A3R -A4tR A1   A2tR /"
                                                  "-A4R  A3tR -A2tR A1");
    return t;
}

const ArrayTemplate& szekeres_template() {
    static const ArrayTemplate t = parse_template("szekeres", "A1 A2 / -A2t A1t");
    return t;
}

const ArrayTemplate& kharaghani_template() {
    static const ArrayTemplate t = parse_template("kharaghani",
                                                  " A1   A2   A4R  A3R  A6R  A5R  A8R  A7R /"
                                                  " A2  -A1  -A3R  A4R -A5R  A6R -A7R  A8R /"
                                                  "-A4R -A3R  A1   A2   A8tR -A7tR -A6tR A5tR/"
                                                  "-A3R  A4R -A2   A1  -A7tR -A8tR A5tR  A6tR/"
                                                  " A6R  A5R  A8tR -A7tR -A1  -A2  -A4tR A3tR/"
                                                  " A5R -A6R -A7tR -A8tR A2  -A1   A3tR  A4tR/"
                                                  "-A8R -A7R  A6tR -A5tR -A4tR A3tR  A1   A2 /"
                                                  "-A7R  A8R -A5tR -A6tR A3tR  A4tR -A2   A1");
    return t;
}

const BorderPattern& frozen_border(const ArrayTemplate& t) {
    // (corner, row, column) per block, relative to the block row sum.
    static const BorderPattern ww = {{1, -1, -1}, {1, -1, -1}, {1, 1, 1}, {1, 1, 1}};
    static const BorderPattern sz = {{1, -1, -1}, {1, 1, 1}};
    static const BorderPattern kh = {{1, -1, -1}, {1, -1, -1}, {1, -1, -1}, {1, -1, -1},
                                     {1, 1, 1},   {1, 1, 1},   {1, 1, 1},   {1, 1, 1}};
    if (t.size == 2) return sz;
    if (t.size == 8) return kh;
    return ww;
}

namespace {

struct CellBorder {
    std::int64_t sigma, a, beta, gamma, r;
};

std::vector<CellBorder> cell_borders(const ArrayTemplate& t, const std::vector<int>& r, const BorderPattern& pat) {
    std::vector<CellBorder> out;
    out.reserve(t.cells.size());
    for (const auto& c : t.cells) {
        const std::int64_t ri = r[c.block];
        const std::int64_t eps = ri < 0 ? -1 : 1;
        const auto& s = pat[c.block];
        const std::int64_t a = eps * s.corner, b = eps * s.row, col = eps * s.column;
        const bool tr = transposed(c.op);
        out.push_back({c.sign, a, tr ? col : b, tr ? b : col, ri});
    }
    return out;
}

bool equations_hold(const std::vector<CellBorder>& cb, std::size_t s, std::int64_t v) {
    for (std::size_t p = 0; p < s; ++p) {
        std::int64_t top = 0;
        for (std::size_t q = 0; q < s; ++q) {
            const auto& x = cb[p * s + q];
            top += x.a * x.gamma + x.beta * x.r;
        }
        if (top != 0) return false;
    }
    for (std::size_t p = 0; p < s; ++p) {
        for (std::size_t pp = p + 1; pp < s; ++pp) {
            std::int64_t corner = 0, top = 0, left = 0, j = 0;
            for (std::size_t q = 0; q < s; ++q) {
                const auto& x = cb[p * s + q];
                const auto& y = cb[pp * s + q];
                const auto ss = x.sigma * y.sigma;
                corner += ss * (x.a * y.a + v * x.beta * y.beta);
                top += ss * (x.a * y.gamma + x.beta * y.r);
                left += ss * (x.gamma * y.a + x.r * y.beta);
                j += ss * x.gamma * y.gamma;
            }
            if (corner || top || left || j) return false;
        }
    }
    return true;
}

BorderPattern pattern_from_mask(std::uint64_t mask, std::size_t blocks) {
    BorderPattern p(blocks);
    const auto sg = [&](std::size_t bit) -> std::int8_t { return (mask >> bit) & 1U ? -1 : 1; };
    for (std::size_t i = 0; i < blocks; ++i) p[i] = {sg(3 * i), sg(3 * i + 1), sg(3 * i + 2)};
    return p;
}

std::vector<int> row_sums(const DifferenceFamily& f) {
    std::vector<int> r;
    for (const auto& b : f.blocks())
        r.push_back(static_cast<int>(f.group().order()) - 2 * static_cast<int>(b.size()));
    return r;
}

}  // namespace

bool border_equations_hold(const ArrayTemplate& t, std::int64_t v, const std::vector<int>& r,
                           const BorderPattern& pattern) {
    if (pattern.size() != t.size || r.size() != t.size) return false;
    return equations_hold(cell_borders(t, r, pattern), t.size, v);
}

std::vector<BorderPattern> border_candidates(const ArrayTemplate& t, std::int64_t v, const std::vector<int>& r) {
    std::vector<BorderPattern> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (3 * t.size)); ++mask) {
        auto p = pattern_from_mask(mask, t.size);
        if (border_equations_hold(t, v, r, p)) out.push_back(std::move(p));
    }
    return out;
}

std::optional<BorderPattern> border_search(const ArrayTemplate& t, std::int64_t v, const std::vector<int>& r) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (3 * t.size)); ++mask) {
        auto p = pattern_from_mask(mask, t.size);
        if (border_equations_hold(t, v, r, p)) return p;
    }
    return std::nullopt;
}

GroupRingElement gram_sum(const DifferenceFamily& family) {
    const auto& g = family.group();
    GroupRingElement s(g);
    for (const auto& b : family.blocks()) {
        const auto f = GroupRingElement::all(g) - 2 * b.ring();
        s += f * gr_involution(f);
    }
    return s;
}

SignMatrix assemble(const ArrayTemplate& t, const DifferenceFamily& family, const BorderPattern& border) {
    if (family.size() != t.size) throw Error(ErrorCode::WrongBlockCount, "template " + t.name + " needs " +
                                                                            std::to_string(t.size) + " blocks");
    const auto& g = family.group();
    const std::size_t v = g.order();
    const bool bordered = !border.empty();
    const std::size_t m = bordered ? v + 1 : v;
    const std::size_t n = t.size * m;

    std::vector<std::vector<char>> member(t.size, std::vector<char>(v, 0));
    for (std::size_t i = 0; i < t.size; ++i)
        for (auto x : family.block(i).members()) member[i][x] = 1;
    std::vector<int> eps;
    for (int r : row_sums(family)) eps.push_back(r < 0 ? -1 : 1);

    // Entry (row, col) of bordered or plain block i.
    const auto block_entry = [&](std::size_t i, std::size_t row, std::size_t col) -> int {
        if (!bordered) return member[i][g.sub(col, row)] ? -1 : 1;
        if (row == 0 && col == 0) return eps[i] * border[i].corner;
        if (row == 0) return eps[i] * border[i].row;
        if (col == 0) return eps[i] * border[i].column;
        return member[i][g.sub(col - 1, row - 1)] ? -1 : 1;
    };
    const auto rho = [&](std::size_t j) -> std::size_t {
        if (!bordered) return g.neg(j);
        return j == 0 ? 0 : 1 + g.neg(j - 1);
    };

    SignMatrix h(n);
    const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t ii = 0; ii < rows; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const std::size_t p = i / m, li = i % m;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t q = j / m, lj = j % m;
            const auto& c = t.at(p, q);
            const std::size_t col = reversed(c.op) ? rho(lj) : lj;
            const int e = transposed(c.op) ? block_entry(c.block, col, li) : block_entry(c.block, li, col);
            if (e * c.sign < 0) h.set(i, j, -1);
        }
    }
    return h;
}

namespace {

void require_kind(const DifferenceFamily& f, Kind k) {
    if (!f.has_kind(k)) throw Error(ErrorCode::PreconditionFailed, "kind " + std::string(to_string(k)));
}

void realization_failed(const std::string& scheme, const std::string& why) {
    throw Error(ErrorCode::ArrayRealizationFailed, scheme + ": " + why);
}

// Decisive check, or the block-level equivalent above the threshold.
bool final_check(HadamardResult& res, const ArrayOptions& opt) {
    if (opt.full_check || res.matrix.order() <= opt.full_check_threshold) {
        res.full_check = true;
        return is_hadamard(res.matrix);
    }
    return true;
}

HadamardResult bordered(const ArrayTemplate& t, const DifferenceFamily& family, const ArrayOptions& opt,
                        const char* scheme) {
    const auto& g = family.group();
    const auto v = static_cast<std::int64_t>(g.order());
    const auto ell = static_cast<std::int64_t>(t.size);
    if (gram_sum(family) != GroupRingElement::identity(g, ell * (v + 1)) - GroupRingElement::all(g, ell))
        realization_failed(scheme, "Gram identity sum M_i M_i^T = l(v+1)I - lJ fails");

    const auto r = row_sums(family);
    HadamardResult res{SignMatrix{}, scheme, frozen_border(t), true, false};
    if (!border_equations_hold(t, v, r, res.border)) {
        auto found = border_search(t, v, r);
        if (!found) realization_failed(scheme, "no border pattern satisfies the scalar equations");
        res.border = std::move(*found);
        res.frozen_border = false;
    }
    res.matrix = assemble(t, family, res.border);
    if (!final_check(res, opt)) realization_failed(scheme, "assembled matrix is not Hadamard");
    return res;
}

}  // namespace

HadamardResult goethals_seidel(const DifferenceFamily& family, const ArrayOptions& opt) {
    require_kind(family, Kind::H);
    const auto& g = family.group();
    if (gram_sum(family) != GroupRingElement::identity(g, 4 * static_cast<std::int64_t>(g.order())))
        realization_failed("goethals-seidel", "Gram identity sum M_i M_i^T = 4vI fails");
    HadamardResult res{assemble(goethals_seidel_template(), family, {}), "goethals-seidel", {}, true, false};
    if (!final_check(res, opt)) realization_failed("goethals-seidel", "assembled matrix is not Hadamard");
    return res;
}

HadamardResult wallis_whiteman(const DifferenceFamily& family, const ArrayOptions& opt) {
    require_kind(family, Kind::H4star);
    return bordered(goethals_seidel_template(), family, opt, "wallis-whiteman");
}

HadamardResult szekeres(const DifferenceFamily& family, const ArrayOptions& opt) {
    require_kind(family, Kind::H2star);
    return bordered(szekeres_template(), family, opt, "szekeres");
}

HadamardResult kharaghani(const DifferenceFamily& family, const ArrayOptions& opt) {
    require_kind(family, Kind::H8star);
    if (!family.symmetric()) {
        std::array<SignMatrix, 8> ms;
        for (std::size_t i = 0; i < 8; ++i) ms[i] = develop_sign_matrix(family.block(i));
        if (!amicability_check(ms)) throw Error(ErrorCode::PreconditionFailed, "amicability");
    }
    return bordered(kharaghani_template(), family, opt, "kharaghani");
}

HadamardResult hadamard_from_family(const DifferenceFamily& family, const ArrayOptions& opt) {
    if (family.has_kind(Kind::H)) return goethals_seidel(family, opt);
    if (family.has_kind(Kind::H4star)) return wallis_whiteman(family, opt);
    if (family.has_kind(Kind::H2star)) return szekeres(family, opt);
    if (family.has_kind(Kind::H8star)) return kharaghani(family, opt);
    throw Error(ErrorCode::PreconditionFailed, "family has no kind with a Hadamard array");
}

}  // namespace dfhad
