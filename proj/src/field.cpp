#include "dfhad/field.hpp"

#include <string>

#include "dfhad/error.hpp"
#include "dfhad/numtheory.hpp"

namespace dfhad {

namespace {

using Poly = std::vector<std::uint64_t>;  // low to high

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m, m monic or with invertible leading coefficient.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t inv_lead = powmod(m.back(), p - 2, p);
    while (a.size() > dm) {
        const std::uint64_t coef = mulmod(a.back(), inv_lead, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t k = 0; k <= dm; ++k) {
            a[shift + k] = (a[shift + k] + p - mulmod(coef, m[k], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^{p^k} mod m
Poly frobenius_power(std::size_t k, const Poly& m, std::uint64_t p) {
    Poly x = poly_mod(Poly{0, 1}, m, p);
    for (std::size_t i = 0; i < k; ++i) x = poly_powmod(x, p, m, p);
    return x;
}

Poly sub_x(Poly a, std::uint64_t p) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
}

}  // namespace

bool is_irreducible(std::span<const std::uint64_t> poly, std::uint64_t p) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    if (!sub_x(frobenius_power(n, f, p), p).empty()) return false;
    for (auto l : prime_divisors(n)) {
        Poly g = poly_gcd(f, sub_x(frobenius_power(n / l, f, p), p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> FieldSpec::coefficients(FieldElement a) const {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n_));
    std::uint64_t rest = a.code;
    for (int j = n_ - 1; j >= 0; --j) {
        c[static_cast<std::size_t>(j)] = rest % p_;
        rest /= p_;
    }
    return c;
}

FieldElement FieldSpec::from_coefficients(std::span<const std::uint64_t> c) const {
    std::uint64_t code = 0;
    for (int j = 0; j < n_; ++j) {
        const std::uint64_t cj = static_cast<std::size_t>(j) < c.size() ? c[static_cast<std::size_t>(j)] % p_ : 0;
        code = code * p_ + cj;
    }
    return {code};
}

FieldElement FieldSpec::one() const {
    std::vector<std::uint64_t> c{1};
    return from_coefficients(c);
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
    auto ca = coefficients(a);
    const auto cb = coefficients(b);
    for (std::size_t j = 0; j < ca.size(); ++j) ca[j] = (ca[j] + cb[j]) % p_;
    return from_coefficients(ca);
}

FieldElement FieldSpec::neg(FieldElement a) const {
    auto ca = coefficients(a);
    for (auto& c : ca) c = (p_ - c) % p_;
    return from_coefficients(ca);
}

FieldElement FieldSpec::mul_poly(FieldElement a, FieldElement b) const {
    const auto r = poly_mulmod(coefficients(a), coefficients(b), modulus_, p_);
    return from_coefficients(r);
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
    if (a.code == 0 || b.code == 0) return zero();
    if (exp_) {
        const std::uint64_t k = (static_cast<std::uint64_t>((*log_)[a.code]) + (*log_)[b.code]) % (q_ - 1);
        return {(*exp_)[k]};
    }
    return mul_poly(a, b);
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
    if (a.code == 0) return e == 0 ? one() : zero();
    if (exp_) {
        const auto k = static_cast<u128>((*log_)[a.code]) * e % (q_ - 1);
        return {(*exp_)[static_cast<std::size_t>(k)]};
    }
    FieldElement r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldElement FieldSpec::omega_pow(std::uint64_t k) const {
    k %= (q_ - 1);
    if (exp_) return {(*exp_)[k]};
    return pow(omega_, k);
}

std::uint64_t FieldSpec::order_of(FieldElement a) const {
    if (a.code == 0) throw Error(ErrorCode::BadParameter, "zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (auto l : prime_divisors(q_ - 1)) {
        while (ord % l == 0 && pow(a, ord / l) == one()) ord /= l;
    }
    return ord;
}

FieldSpec make_field(std::uint64_t p, int n) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) throw Error(ErrorCode::DegreeTooLarge, "degree must be >= 1");
    u128 q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > (static_cast<u128>(1) << 32))
            throw Error(ErrorCode::DegreeTooLarge,
                        std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^32");
    }
    FieldSpec f;
    f.p_ = p;
    f.n_ = n;
    f.q_ = static_cast<std::uint64_t>(q);

    // Lexicographically smallest (m_0, ..., m_{n-1}) with x^n + ... irreducible.
    Poly m(static_cast<std::size_t>(n) + 1, 0);
    m.back() = 1;
    for (std::uint64_t t = 0;; ++t) {
        std::uint64_t rest = t;
        for (int j = n - 1; j >= 0; --j) {
            m[static_cast<std::size_t>(j)] = rest % p;
            rest /= p;
        }
        if (is_irreducible(m, p)) break;
    }
    f.modulus_ = m;

    // Smallest code whose multiplicative order is q-1.
    const auto divisors = prime_divisors(f.q_ - 1);
    const FieldElement one = f.one();
    for (std::uint64_t code = 1; code < f.q_; ++code) {
        const FieldElement g{code};
        bool generator = true;
        for (auto l : divisors) {
            FieldElement r = one, b = g;
            for (std::uint64_t e = (f.q_ - 1) / l; e; e >>= 1) {
                if (e & 1) r = f.mul_poly(r, b);
                b = f.mul_poly(b, b);
            }
            if (r == one) {
                generator = false;
                break;
            }
        }
        if (generator) {
            f.omega_ = g;
            break;
        }
    }

    if (f.q_ <= kFieldTableLimit) {
        auto exp = std::make_shared<std::vector<std::uint32_t>>(f.q_ - 1);
        auto log = std::make_shared<std::vector<std::uint32_t>>(f.q_, 0);
        FieldElement cur = one;
        for (std::uint64_t k = 0; k + 1 < f.q_; ++k) {
            (*exp)[k] = static_cast<std::uint32_t>(cur.code);
            (*log)[cur.code] = static_cast<std::uint32_t>(k);
            cur = f.mul_poly(cur, f.omega_);
        }
        f.exp_ = std::move(exp);
        f.log_ = std::move(log);
    }
    return f;
}

GroupSpec additive_group(const FieldSpec& f) {
    return make_group(std::vector<int>(static_cast<std::size_t>(f.degree()), static_cast<int>(f.p())));
}

Subset cyclotomic_class(const FieldSpec& f, std::uint64_t N, std::uint64_t i) {
    const std::uint64_t q1 = f.size() - 1;
    if (N == 0 || q1 % N != 0)
        throw Error(ErrorCode::BadDivisor, std::to_string(N) + " does not divide " + std::to_string(q1));
    i %= N;
    std::vector<ElementIndex> members;
    members.reserve(q1 / N);
    FieldElement cur = f.omega_pow(i);
    const FieldElement step = f.omega_pow(N);
    for (std::uint64_t t = 0; t < q1 / N; ++t) {
        members.push_back(to_index(cur));
        cur = f.mul(cur, step);
    }
    return Subset(additive_group(f), std::move(members));
}

Subset scale(const FieldSpec& f, const Subset& s, FieldElement c) {
    std::vector<ElementIndex> out;
    out.reserve(s.size());
    for (auto x : s.members()) out.push_back(to_index(f.mul(to_element(x), c)));
    return Subset(s.group(), std::move(out));
}

}  // namespace dfhad
