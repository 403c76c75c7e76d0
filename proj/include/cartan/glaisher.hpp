#pragma once

/* The part-splitting bijection between p-regular and p-class-regular
 * partitions of n, together with the invariants attached to it: the
 * length-difference divisor exponent, its closed form over the p-power
 * decomposition of the parts, and the centralizer-order valuation that
 * provides an independent route to the same number.
 */

#include <cassert>

#include "cartan/partitions.hpp"

namespace cartan {

/* part = p^exponent * cofactor with p not dividing cofactor */
struct prime_power_split {
    unsigned exponent;
    unsigned cofactor;
    bool operator==(const prime_power_split&) const = default;
};

inline prime_power_split split_part(unsigned part, unsigned p) {
    unsigned a = 0;
    while (part % p == 0) {
        part /= p;
        ++a;
    }
    return {a, part};
}

inline std::vector<prime_power_split> split_parts(const partition& lam, unsigned p) {
    require_prime(p);
    std::vector<prime_power_split> out;
    out.reserve(lam.length());
    for (unsigned part : lam.parts())
        out.push_back(split_part(part, p));
    return out;
}

/* Each part p^a * q turns into p^a copies of q; the result is sorted and
 * is p-class regular. */
inline partition glaisher_map(const partition& lam, unsigned p) {
    require_prime(p);
    if (!is_p_regular(lam, p))
        throw std::invalid_argument("glaisher_map needs a p-regular partition");
    std::vector<unsigned> out;
    for (unsigned part : lam.parts()) {
        const auto [a, q] = split_part(part, p);
        unsigned copies = 1;
        for (unsigned i = 0; i < a; ++i)
            copies *= p;
        out.insert(out.end(), copies, q);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return partition(std::move(out));
}

/* Inverse construction: expand the multiplicity of each part value in
 * base p and emit one block of p^i-scaled copies per digit. */
inline partition glaisher_inverse(const partition& mu, unsigned p) {
    require_prime(p);
    if (!is_p_class_regular(mu, p))
        throw std::invalid_argument("glaisher_inverse needs a p-class-regular partition");
    std::vector<unsigned> out;
    for (const auto& [value, mult] : to_multiplicities(mu)) {
        unsigned rest = mult;
        unsigned power = 1;
        while (rest) {
            const unsigned digit = rest % p;
            out.insert(out.end(), digit, power * value);
            rest /= p;
            power *= p;
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return partition(std::move(out));
}

/* Base-p digits of m, least significant first; empty for m = 0. */
inline std::vector<unsigned> base_p_digits(std::uint64_t m, unsigned p) {
    std::vector<unsigned> digits;
    while (m) {
        digits.push_back(unsigned(m % p));
        m /= p;
    }
    return digits;
}

inline std::uint64_t base_p_digit_sum(std::uint64_t m, unsigned p) {
    std::uint64_t s = 0;
    for (; m; m /= p)
        s += m % p;
    return s;
}

/* v_p(m!) = sum of floor(m / p^i) over i >= 1. */
inline std::uint64_t legendre_valuation(std::uint64_t m, unsigned p) {
    require_prime(p);
    std::uint64_t s = 0;
    for (std::uint64_t q = m / p; q; q /= p)
        s += q;
    return s;
}

/* The exponent of the elementary divisor attached to a p-regular lambda:
 * (length of image - length of lambda) / (p - 1).  The difference is a
 * sum of p^a - 1 terms, so the division is exact. */
inline std::uint64_t divisor_exponent(const partition& lam, unsigned p) {
    const partition image = glaisher_map(lam, p);
    const std::uint64_t diff = image.length() - lam.length();
    assert(diff % (p - 1) == 0);
    return diff / (p - 1);
}

/* p-adic valuation of the centralizer order of a permutation whose cycle
 * type is the p-class-regular mu: no part value is divisible by p, so
 * only the multiplicity factorials contribute. */
inline std::uint64_t centralizer_p_exponent(const partition& mu, unsigned p) {
    require_prime(p);
    if (!is_p_class_regular(mu, p))
        throw std::invalid_argument("centralizer_p_exponent needs a p-class-regular partition");
    std::uint64_t s = 0;
    for (const auto& [value, mult] : to_multiplicities(mu))
        s += legendre_valuation(mult, p);
    return s;
}

/* Sum over the parts p^a * q of 1 + p + ... + p^a; equals the divisor
 * exponent of the partition with every part multiplied by p. */
inline std::uint64_t e_invariant(const partition& lam, unsigned p) {
    require_prime(p);
    if (!is_p_regular(lam, p))
        throw std::invalid_argument("e_invariant needs a p-regular partition");
    std::uint64_t s = 0;
    for (unsigned part : lam.parts()) {
        const auto [a, q] = split_part(part, p);
        std::uint64_t geometric = 0;
        std::uint64_t power = 1;
        for (unsigned i = 0; i <= a; ++i) {
            geometric += power;
            power *= p;
        }
        s += geometric;
    }
    return s;
}

}  // namespace cartan
