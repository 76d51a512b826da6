#include "lchi/characters.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace lchi {

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    // m <= 1e5 so products stay far below int64 overflow.
    std::int64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int a = 0;
            while (n % p == 0) { n /= p; ++a; }
            f.emplace_back(p, a);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

// Distinct prime divisors of n (n small here: a prime power's totient).
std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (auto& [p, a] : factor(n)) { (void)a; ps.push_back(p); }
    return ps;
}

std::int64_t smallest_primitive_root(std::int64_t m, std::int64_t phi) {
    auto ps = prime_divisors(phi);
    for (std::int64_t g = 2; g < m; ++g) {
        if (std::gcd(g, m) != 1) continue;
        bool ok = true;
        for (std::int64_t p : ps) {
            if (pow_mod(g, phi / p, m) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root mod " + std::to_string(m));
}

// One cyclic factor of (Z/q)* restricted to what a real character needs:
// the parity of the discrete log of each unit mod m along this factor.
struct CyclicFactorParity {
    std::int64_t m = 1;
    std::vector<std::uint8_t> parity;
};

// Cyclic factors of (Z/p^a)* with even order, in a fixed deterministic
// order. Odd-order factors are dropped (a sign homomorphism is trivial on
// them); for the moduli handled here every factor has even order except
// the trivial group mod 2.
void append_factors(std::int64_t p, int a, std::vector<CyclicFactorParity>& out) {
    std::int64_t m = 1;
    for (int i = 0; i < a; ++i) m *= p;

    if (p == 2) {
        if (a == 1) return; // trivial unit group
        if (a == 2) {
            CyclicFactorParity f;
            f.m = 4;
            f.parity.assign(4, 0);
            f.parity[3] = 1;
            out.push_back(std::move(f));
            return;
        }
        // (Z/2^a)* = <-1> x <5>
        CyclicFactorParity fneg, ffive;
        fneg.m = ffive.m = m;
        fneg.parity.assign(static_cast<std::size_t>(m), 0);
        ffive.parity.assign(static_cast<std::size_t>(m), 0);
        std::int64_t half_order = m / 4; // order of 5 mod 2^a
        std::int64_t x = 1;
        for (std::int64_t j = 0; j < half_order; ++j) {
            ffive.parity[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(j & 1);
            ffive.parity[static_cast<std::size_t>(m - x)] = static_cast<std::uint8_t>(j & 1);
            fneg.parity[static_cast<std::size_t>(m - x)] = 1;
            x = x * 5 % m;
        }
        out.push_back(std::move(fneg));
        out.push_back(std::move(ffive));
        return;
    }

    std::int64_t phi = m / p * (p - 1);
    if (phi % 2 != 0) return; // cannot happen for odd p, kept as a guard
    CyclicFactorParity f;
    f.m = m;
    f.parity.assign(static_cast<std::size_t>(m), 0);
    std::int64_t g = smallest_primitive_root(m, phi);
    std::int64_t x = 1;
    for (std::int64_t j = 0; j < phi; ++j) {
        f.parity[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(j & 1);
        x = x * g % m;
    }
    out.push_back(std::move(f));
}

} // namespace

std::vector<DirichletCharacter> enumerate_real_nonprincipal(std::int64_t q) {
    if (q < 1 || q > kModulusCap)
        throw std::invalid_argument("modulus out of range [1, " + std::to_string(kModulusCap) + "]");
    std::vector<DirichletCharacter> chars;
    if (q <= 2) return chars;

    std::vector<CyclicFactorParity> factors;
    for (auto& [p, a] : factor(q)) append_factors(p, a, factors);
    const int t = static_cast<int>(factors.size());

    for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
        DirichletCharacter chi;
        chi.modulus = q;
        chi.principal = false;
        chi.values.assign(static_cast<std::size_t>(q), 0);
        std::int64_t sum = 0;
        for (std::int64_t r = 0; r < q; ++r) {
            if (std::gcd(r, q) != 1) continue;
            int v = 1;
            for (int b = 0; b < t; ++b) {
                if (!(mask & (1u << b))) continue;
                if (factors[b].parity[static_cast<std::size_t>(r % factors[b].m)]) v = -v;
            }
            chi.values[static_cast<std::size_t>(r)] = static_cast<std::int8_t>(v);
            sum += v;
        }
        if (sum != 0)
            throw std::logic_error("character mod " + std::to_string(q) +
                                   " does not sum to zero over a period (construction bug)");
        chars.push_back(std::move(chi));
    }
    return chars;
}

DirichletCharacter principal_character(std::int64_t q) {
    if (q < 1 || q > kModulusCap)
        throw std::invalid_argument("modulus out of range [1, " + std::to_string(kModulusCap) + "]");
    DirichletCharacter chi;
    chi.modulus = q;
    chi.principal = true;
    chi.values.assign(static_cast<std::size_t>(q), 0);
    for (std::int64_t r = 0; r < q; ++r)
        if (std::gcd(r, q) == 1) chi.values[static_cast<std::size_t>(r)] = 1;
    if (q == 1) chi.values[0] = 1;
    return chi;
}

int jacobi_symbol(std::int64_t a, std::int64_t n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi_symbol requires odd positive n");
    int s = 1;
    if (a < 0) {
        a = -a;
        if (n % 4 == 3) s = -s;
    }
    a %= n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) s = -s;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) s = -s;
        a %= n;
    }
    return n == 1 ? s : 0;
}

} // namespace lchi
