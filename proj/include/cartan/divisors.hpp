#pragma once

/* Elementary-divisor multisets of the p-Cartan matrix of the symmetric
 * group S_n.  Two independent computations: over p-regular partitions by
 * length differences, and over p-class-regular partitions by centralizer
 * valuations.  Divisors are kept as exponents; the expanded powers p^i
 * are never materialized.
 */

#include "cartan/glaisher.hpp"

namespace cartan {

class divisor_multiset {
  public:
    using map_type = std::map<std::uint64_t, std::uint64_t>;  // exponent -> multiplicity

    divisor_multiset() = default;

    void add(std::uint64_t exponent, std::uint64_t count = 1) {
        if (count)
            mult_[exponent] += count;
    }

    std::uint64_t multiplicity(std::uint64_t exponent) const {
        const auto it = mult_.find(exponent);
        return it == mult_.end() ? 0 : it->second;
    }

    /* Number of divisors counted with multiplicity; the size of the
     * Cartan matrix. */
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [e, m] : mult_)
            t += m;
        return t;
    }

    /* det C = p^(this): the sum of all exponents. */
    std::uint64_t determinant_exponent() const {
        std::uint64_t t = 0;
        for (const auto& [e, m] : mult_)
            t += e * m;
        return t;
    }

    const map_type& entries() const { return mult_; }
    bool empty() const { return mult_.empty(); }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (const auto& [e, m] : mult_) {
            if (!first)
                out += ", ";
            first = false;
            out += std::to_string(e) + ":" + std::to_string(m);
        }
        return out + "}";
    }

    bool operator==(const divisor_multiset&) const = default;

  private:
    map_type mult_;
};

inline divisor_multiset cartan_divisors(std::uint64_t n, unsigned p) {
    require_prime(p);
    divisor_multiset out;
    for_each_partition(n, restriction::p_regular, p,
                       [&](const partition& lam) { out.add(divisor_exponent(lam, p)); });
    return out;
}

inline divisor_multiset oracle_divisors(std::uint64_t n, unsigned p) {
    require_prime(p);
    divisor_multiset out;
    for_each_partition(n, restriction::p_class_regular, p,
                       [&](const partition& mu) { out.add(centralizer_p_exponent(mu, p)); });
    return out;
}

inline std::uint64_t determinant_exponent(std::uint64_t n, unsigned p) {
    return cartan_divisors(n, p).determinant_exponent();
}

}  // namespace cartan
