#include "lpc/finite_field.hpp"

#include <string>

#include "lpc/errors.hpp"

namespace lpc {

namespace {

thread_local std::uint64_t g_mul_count = 0;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t v, std::uint32_t p, std::uint32_t k) {
    Digits d(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

// Remainder of a modulo a monic b over GF(p); both lowest degree first.
Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        }
        a.pop_back();
    }
    return a;
}

bool is_irreducible(const Digits& f, std::uint32_t p) {
    const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
    if (k <= 1) return true;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (std::uint32_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Digits g = to_digits(static_cast<std::uint32_t>(low), p, d);
            g.push_back(1);
            Digits r = poly_mod(f, g, p);
            bool zero = true;
            for (auto c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

// Schoolbook product modulo the field modulus; only used while building tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t k,
                       const Digits& modulus) {
    const Digits da = to_digits(a, p, k);
    const Digits db = to_digits(b, p, k);
    Digits prod(2 * k - 1, 0);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    Digits r = poly_mod(prod, modulus, p);
    r.resize(k, 0);
    return from_digits(r, p);
}

}  // namespace

PrimePower factor_prime_power(std::uint64_t q) {
    if (q < 2) return {};
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {static_cast<std::uint32_t>(q), 1};
    if (!is_prime(p)) return {};
    std::uint32_t k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return {};
    return {static_cast<std::uint32_t>(p), k};
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p) || k == 0) throw ParameterError("least_irreducible: need prime p and k >= 1");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
        Digits f = to_digits(static_cast<std::uint32_t>(low), p, k);
        f.push_back(1);
        if (k == 1 || (f[0] != 0 && is_irreducible(f, p))) return f;
    }
    throw ParameterError("no irreducible polynomial found");  // unreachable for prime p
}

struct GaloisField::Tables {
    Digits modulus;
    Elem primitive = 0;
    std::vector<Elem> exp;            // exp[i] = g^i, 0 <= i < 2(q-1)
    std::vector<std::uint32_t> log;   // log[a] for a != 0
};

GaloisField::GaloisField(std::uint32_t q) : q_(q) {
    const PrimePower pp = factor_prime_power(q);
    if (pp.prime == 0) throw ParameterError("field order " + std::to_string(q) + " is not a prime power");
    if (q > kMaxFieldOrder)
        throw ParameterError("field order " + std::to_string(q) + " exceeds the 2^16 cap");
    p_ = pp.prime;
    k_ = pp.exponent;

    auto t = std::make_shared<Tables>();
    t->modulus = least_irreducible(p_, k_);
    if (k_ == 1) t->modulus = {0, 1};  // x; arithmetic mod p is handled directly

    auto mul_slow = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
        return slow_mul(a, b, p_, k_, t->modulus);
    };
    auto pow_slow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    };

    const std::uint32_t group = q - 1;
    std::vector<std::uint32_t> prime_factors;
    {
        std::uint32_t m = group;
        for (std::uint32_t d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) prime_factors.push_back(m);
    }
    Elem g = 1;
    if (q > 2) {
        for (g = 2; g < q; ++g) {
            bool generator = true;
            for (auto r : prime_factors) generator = generator && pow_slow(g, group / r) != 1;
            if (generator) break;
        }
    }
    t->primitive = g;
    t->exp.resize(2 * static_cast<std::size_t>(group) + 1);
    t->log.assign(q, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        t->exp[i] = x;
        t->log[x] = i;
        x = mul_slow(x, g);
    }
    for (std::uint32_t i = group; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - group];
    tables_ = std::move(t);
}

const std::vector<std::uint32_t>& GaloisField::modulus() const noexcept { return tables_->modulus; }
Elem GaloisField::primitive() const noexcept { return tables_->primitive; }

Elem GaloisField::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) return (a + b) % p_;
    Elem r = 0;
    Elem scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem GaloisField::neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    if (k_ == 1) return (p_ - a) % p_;
    Elem r = 0;
    Elem scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem GaloisField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem GaloisField::mul(Elem a, Elem b) const noexcept {
    ++g_mul_count;
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
}

Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw ParameterError("inverse of zero");
    ++g_mul_count;
    return tables_->exp[(q_ - 1 - tables_->log[a]) % (q_ - 1)];
}

Elem GaloisField::div(Elem a, Elem b) const {
    if (b == 0) throw ParameterError("division by zero");
    ++g_mul_count;
    if (a == 0) return 0;
    return tables_->exp[tables_->log[a] + (q_ - 1) - tables_->log[b]];
}

Elem GaloisField::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = (std::uint64_t{tables_->log[a]} * (e % (q_ - 1))) % (q_ - 1);
    return tables_->exp[l];
}

MulCounter::MulCounter() noexcept : start_(g_mul_count) {}
std::uint64_t MulCounter::count() const noexcept { return g_mul_count - start_; }

std::vector<Elem> field_elements(std::uint32_t first, std::uint32_t count) {
    std::vector<Elem> out(count);
    for (std::uint32_t i = 0; i < count; ++i) out[i] = first + i;
    return out;
}

std::uint64_t sigma_to_index(std::span<const Elem> sigma, std::uint32_t q) {
    std::uint64_t idx = 0;
    for (std::size_t i = sigma.size(); i-- > 0;) {
        if (sigma[i] >= q) throw ParameterError("sigma symbol outside the field");
        idx = idx * q + sigma[i];
    }
    return idx;
}

std::vector<Elem> index_to_sigma(std::uint64_t index, std::uint32_t q, std::size_t length) {
    std::vector<Elem> sigma(length);
    for (std::size_t i = 0; i < length; ++i) {
        sigma[i] = static_cast<Elem>(index % q);
        index /= q;
    }
    if (index != 0) throw ParameterError("codeset index out of range");
    return sigma;
}

std::uint64_t checked_power(std::uint64_t q, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > (std::uint64_t{1} << 63) / q) throw ParameterError("code size exceeds 2^63");
        r *= q;
    }
    return r;
}

}  // namespace lpc
