#include "dfhad/kernels.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

namespace dfhad::kernels {

std::int64_t row_dot(const PackedRows& a, std::size_t i, const PackedRows& b, std::size_t j) {
    const auto ra = a.row(i);
    const auto rb = b.row(j);
    std::int64_t differ = 0;
    for (std::size_t w = 0; w < a.words; ++w) differ += std::popcount(ra[w] ^ rb[w]);
    return static_cast<std::int64_t>(a.cols) - 2 * differ;
}

namespace {

// Character table index: psi_a(x) = zeta_L^{phase(a, x)}, L = lcm of factors.
struct CharacterPhases {
    std::size_t lcm = 1;
    std::vector<std::size_t> scale;  // L / n_j
    std::vector<std::complex<double>> roots;

    explicit CharacterPhases(const GroupSpec& g) {
        for (int f : g.factors()) lcm = std::lcm(lcm, static_cast<std::size_t>(f));
        for (int f : g.factors()) scale.push_back(lcm / static_cast<std::size_t>(f));
        roots.resize(lcm);
        for (std::size_t k = 0; k < lcm; ++k) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(lcm);
            roots[k] = {std::cos(t), std::sin(t)};
        }
    }

    std::size_t phase(const GroupSpec& g, ElementIndex a, ElementIndex x) const {
        std::size_t p = 0;
        for (std::size_t j = 0; j < g.rank(); ++j)
            p += static_cast<std::size_t>(g.residue(a, j)) * static_cast<std::size_t>(g.residue(x, j)) * scale[j];
        return p % lcm;
    }
};

}  // namespace

namespace serial {

bool convolve(const GroupSpec& g, std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (a[x] == 0) continue;
        for (std::size_t y = 0; y < g.order(); ++y) {
            if (b[y] == 0) continue;
            std::int64_t prod;
            auto& slot = out[g.add(x, y)];
            if (__builtin_mul_overflow(a[x], b[y], &prod) || __builtin_add_overflow(slot, prod, &slot)) return false;
        }
    }
    return true;
}

bool rows_orthogonal(const PackedRows& h) {
    for (std::size_t i = 0; i < h.rows; ++i)
        for (std::size_t j = i + 1; j < h.rows; ++j)
            if (row_dot(h, i, h, j) != 0) return false;
    return true;
}

std::vector<std::int64_t> signed_gram_sum(std::span<const PackedRows> left, std::span<const PackedRows> right,
                                          std::span<const int> signs) {
    const std::size_t n = left.empty() ? 0 : left.front().rows;
    std::vector<std::int64_t> out(n * n, 0);
    for (std::size_t k = 0; k < left.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += signs[k] * row_dot(left[k], i, right[k], j);
    return out;
}

std::vector<std::complex<double>> character_sums(const GroupSpec& g, std::span<const ElementIndex> set) {
    const CharacterPhases ph(g);
    std::vector<std::complex<double>> out(g.order());
    for (std::size_t a = 0; a < g.order(); ++a) {
        std::complex<double> s = 0.0;
        for (auto x : set) s += ph.roots[ph.phase(g, a, x)];
        out[a] = s;
    }
    return out;
}

}  // namespace serial

namespace parallel {

bool convolve(const GroupSpec& g, std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out) {
    std::vector<ElementIndex> support;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (a[x] != 0) support.push_back(x);
    const auto n = static_cast<std::ptrdiff_t>(g.order());
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t z = 0; z < n; ++z) {
        std::int64_t acc = 0;
        bool good = true;
        for (auto x : support) {
            const std::int64_t bv = b[g.sub(static_cast<ElementIndex>(z), x)];
            if (bv == 0) continue;
            std::int64_t prod;
            if (__builtin_mul_overflow(a[x], bv, &prod) || __builtin_add_overflow(acc, prod, &acc)) {
                good = false;
                break;
            }
        }
        if (!good) ok.store(false, std::memory_order_relaxed);
        out[static_cast<std::size_t>(z)] = acc;
    }
    return ok.load();
}

bool rows_orthogonal(const PackedRows& h) {
    const auto n = static_cast<std::ptrdiff_t>(h.rows);
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < h.rows; ++j) {
            if (row_dot(h, static_cast<std::size_t>(i), h, j) != 0) {
                ok.store(false, std::memory_order_relaxed);
                break;
            }
        }
    }
    return ok.load();
}

std::vector<std::int64_t> signed_gram_sum(std::span<const PackedRows> left, std::span<const PackedRows> right,
                                          std::span<const int> signs) {
    const std::size_t n = left.empty() ? 0 : left.front().rows;
    std::vector<std::int64_t> out(n * n, 0);
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < left.size(); ++k)
                acc += signs[k] * row_dot(left[k], static_cast<std::size_t>(i), right[k], j);
            out[static_cast<std::size_t>(i) * n + j] = acc;
        }
    }
    return out;
}

std::vector<std::complex<double>> character_sums(const GroupSpec& g, std::span<const ElementIndex> set) {
    const CharacterPhases ph(g);
    // Histogram of phases per character, then one weighted sum over roots.
    std::vector<std::complex<double>> out(g.order());
    const auto n = static_cast<std::ptrdiff_t>(g.order());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t a = 0; a < n; ++a) {
        std::vector<std::size_t> hist(ph.lcm, 0);
        for (auto x : set) ++hist[ph.phase(g, static_cast<ElementIndex>(a), x)];
        std::complex<double> s = 0.0;
        for (std::size_t k = 0; k < ph.lcm; ++k)
            if (hist[k]) s += static_cast<double>(hist[k]) * ph.roots[k];
        out[static_cast<std::size_t>(a)] = s;
    }
    return out;
}

}  // namespace parallel

}  // namespace dfhad::kernels
