#pragma once

#include <cstdint>
#include <vector>

namespace lchi {

// Memory guard: value tables are dense arrays of length q.
inline constexpr std::int64_t kModulusCap = 100000;

/// A real Dirichlet character mod q stored as one full period of values.
///
/// values[r] = chi(r) for 0 <= r < q, each entry in {-1, 0, +1}, and
/// values[r] = 0 exactly when gcd(r, q) > 1. For q > 1 index 0 holds
/// chi(q) = chi(0) = 0. Evaluation at any n reduces n mod q.
///
/// Instances are immutable after construction; all member functions are
/// const and safe to call concurrently.
struct DirichletCharacter {
    std::int64_t modulus = 1;
    std::vector<std::int8_t> values;
    bool principal = false;

    int value(std::uint64_t n) const {
        return values[static_cast<std::size_t>(n % static_cast<std::uint64_t>(modulus))];
    }
};

/// All real non-principal characters mod q, each exactly once.
///
/// Construction decomposes (Z/q)* into cyclic factors (CRT over the prime
/// powers dividing q; smallest primitive root for odd prime powers, the
/// {-1, 5} generator pair for 2^k with k >= 3) and enumerates the sign
/// assignments on the even-order factors, skipping the principal one.
/// The list is deterministic: factors are ordered by increasing prime
/// (for 2^k, k >= 3 the -1 factor precedes the 5 factor), and characters
/// appear in increasing order of the sign mask over those factors.
///
/// Every returned character is checked to sum to zero over a full period;
/// a violation aborts construction. Throws std::invalid_argument for
/// q < 1 or q > kModulusCap. q = 1, 2 yield an empty list.
std::vector<DirichletCharacter> enumerate_real_nonprincipal(std::int64_t q);

/// The principal character mod q (1 on units, 0 elsewhere).
DirichletCharacter principal_character(std::int64_t q);

/// Jacobi symbol (a|n) for odd n >= 1, via the reciprocity recursion.
/// Throws std::invalid_argument when n is even or nonpositive.
int jacobi_symbol(std::int64_t a, std::int64_t n);

} // namespace lchi
