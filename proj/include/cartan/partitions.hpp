#pragma once

/* Integer partitions: the canonical weakly-decreasing representation,
 * enumeration of restricted classes (p-regular, p-class-regular, strict,
 * odd), multiplicity encoding, and exact counting of p(n) and q(n).
 *
 * Enumeration order is reverse-lexicographic on the part lists, so (n)
 * comes first and (1,...,1) last.  Counting uses arbitrary-precision
 * integers throughout; p(500) already exceeds 64 bits.
 */

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cartan {

using big_int = boost::multiprecision::cpp_int;

class partition {
  public:
    partition() = default;

    explicit partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            sum_ += parts_[i];
        }
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    std::uint64_t sum() const { return sum_; }
    bool empty() const { return parts_.empty(); }

    partition conjugate() const {
        if (parts_.empty())
            return {};
        std::vector<unsigned> conj(parts_.front(), 0);
        for (unsigned part : parts_)
            for (unsigned c = 0; c < part; ++c)
                ++conj[c];
        return partition(std::move(conj));
    }

    std::string to_string() const {
        if (parts_.empty())
            return "()";
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    auto operator<=>(const partition&) const = default;

  private:
    std::vector<unsigned> parts_;
    std::uint64_t sum_ = 0;
};

/* Comma-separated decreasing parts, e.g. "9,5,3,2".  The empty string
 * denotes the empty partition.  Unsorted input is rejected, not sorted. */
inline partition parse_partition(std::string_view text) {
    std::vector<unsigned> parts;
    while (!text.empty()) {
        const std::size_t comma = text.find(',');
        const std::string_view piece = text.substr(0, comma);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || ptr != piece.data() + piece.size())
            throw std::invalid_argument("bad partition syntax: '" + std::string(text) + "'");
        parts.push_back(value);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    return partition(std::move(parts));
}

inline bool is_prime(unsigned p) {
    if (p < 2)
        return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline void require_prime(unsigned p) {
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

/* No p equal parts. */
inline bool is_p_regular(const partition& lam, unsigned p) {
    require_prime(p);
    const auto& parts = lam.parts();
    std::size_t run = 1;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        run = parts[i] == parts[i - 1] ? run + 1 : 1;
        if (run >= p)
            return false;
    }
    return true;
}

/* No part divisible by p. */
inline bool is_p_class_regular(const partition& lam, unsigned p) {
    require_prime(p);
    for (unsigned part : lam.parts())
        if (part % p == 0)
            return false;
    return true;
}

inline bool is_strict(const partition& lam) { return is_p_regular(lam, 2); }
inline bool has_only_odd_parts(const partition& lam) { return is_p_class_regular(lam, 2); }

inline partition scale(const partition& lam, unsigned factor) {
    if (factor == 0)
        throw std::invalid_argument("scale factor must be positive");
    std::vector<unsigned> parts;
    parts.reserve(lam.length());
    for (unsigned part : lam.parts())
        parts.push_back(part * factor);
    return partition(std::move(parts));
}

enum class restriction { none, p_regular, p_class_regular, strict, odd };

namespace detail {

enum class part_rule { none, bounded_multiplicity, coprime_value };

/* Largest sum reachable with parts <= max under the multiplicity bound;
 * used to cut dead branches. */
inline bool can_reach(std::uint64_t remaining, unsigned max_part, part_rule rule, unsigned p) {
    if (rule != part_rule::bounded_multiplicity)
        return true;  // a part of size 1 is always available
    const std::uint64_t tri = std::uint64_t(max_part) * (max_part + 1) / 2;
    return tri * (p - 1) >= remaining;
}

template <class Emit>
void emit_partitions(std::vector<unsigned>& buf, std::uint64_t remaining, unsigned max_part,
                     part_rule rule, unsigned p, Emit&& emit) {
    if (remaining == 0) {
        emit(partition(buf));
        return;
    }
    if (!can_reach(remaining, max_part, rule, p))
        return;
    const unsigned hi = remaining < max_part ? unsigned(remaining) : max_part;
    for (unsigned v = hi; v >= 1; --v) {
        if (rule == part_rule::coprime_value && v % p == 0)
            continue;
        if (rule == part_rule::bounded_multiplicity && !buf.empty() && buf.back() == v) {
            unsigned run = 0;
            for (auto it = buf.rbegin(); it != buf.rend() && *it == v && run < p - 1; ++it)
                ++run;
            if (run == p - 1)
                continue;
        }
        buf.push_back(v);
        emit_partitions(buf, remaining - v, v, rule, p, emit);
        buf.pop_back();
    }
}

}  // namespace detail

/* Calls emit(const partition&) for every qualifying partition of n, in
 * reverse-lexicographic order.  p is required (and must be prime) for the
 * p_regular and p_class_regular restrictions and ignored otherwise. */
template <class Emit>
void for_each_partition(std::uint64_t n, restriction r, unsigned p, Emit&& emit) {
    detail::part_rule rule = detail::part_rule::none;
    switch (r) {
    case restriction::none:
        break;
    case restriction::strict:
        rule = detail::part_rule::bounded_multiplicity;
        p = 2;
        break;
    case restriction::odd:
        rule = detail::part_rule::coprime_value;
        p = 2;
        break;
    case restriction::p_regular:
        require_prime(p);
        rule = detail::part_rule::bounded_multiplicity;
        break;
    case restriction::p_class_regular:
        require_prime(p);
        rule = detail::part_rule::coprime_value;
        break;
    }
    if (n > std::numeric_limits<unsigned>::max())
        throw std::invalid_argument("n too large to enumerate");
    std::vector<unsigned> buf;
    detail::emit_partitions(buf, n, unsigned(n), rule, p, emit);
}

inline std::vector<partition> enumerate(std::uint64_t n, restriction r, unsigned p = 0) {
    std::vector<partition> out;
    for_each_partition(n, r, p, [&](const partition& lam) { out.push_back(lam); });
    return out;
}

/* Exponential notation: part value -> multiplicity. */
using multiplicity_map = std::map<unsigned, unsigned>;

inline multiplicity_map to_multiplicities(const partition& lam) {
    multiplicity_map m;
    for (unsigned part : lam.parts())
        ++m[part];
    return m;
}

inline partition from_multiplicities(const multiplicity_map& m) {
    std::vector<unsigned> parts;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (it->first == 0)
            throw std::invalid_argument("part value must be positive");
        if (it->second == 0)
            throw std::invalid_argument("zero multiplicity entry");
        parts.insert(parts.end(), it->second, it->first);
    }
    return partition(std::move(parts));
}

/* p(0..max_n) by the pentagonal-number recurrence. */
inline std::vector<big_int> partition_numbers(std::uint64_t max_n) {
    std::vector<big_int> p(max_n + 1);
    p[0] = 1;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        big_int acc = 0;
        for (std::uint64_t k = 1;; ++k) {
            const std::uint64_t g1 = k * (3 * k - 1) / 2;
            const std::uint64_t g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            big_int term = p[n - g1];
            if (g2 <= n)
                term += p[n - g2];
            if (k % 2)
                acc += term;
            else
                acc -= term;
        }
        p[n] = std::move(acc);
    }
    return p;
}

/* q(0..max_n): each part used at most once. */
inline std::vector<big_int> strict_partition_numbers(std::uint64_t max_n) {
    std::vector<big_int> q(max_n + 1);
    q[0] = 1;
    for (std::uint64_t part = 1; part <= max_n; ++part)
        for (std::uint64_t t = max_n; t >= part; --t)
            q[t] += q[t - part];
    return q;
}

/* Number of partitions of 0..max_n with no part divisible by p; equals
 * the number with no part repeated p times. */
inline std::vector<big_int> p_class_regular_partition_numbers(std::uint64_t max_n, unsigned p) {
    require_prime(p);
    std::vector<big_int> q(max_n + 1);
    q[0] = 1;
    for (std::uint64_t part = 1; part <= max_n; ++part) {
        if (part % p == 0)
            continue;
        for (std::uint64_t t = part; t <= max_n; ++t)
            q[t] += q[t - part];
    }
    return q;
}

inline big_int count_partitions(std::uint64_t n) { return partition_numbers(n).back(); }
inline big_int count_strict(std::uint64_t n) { return strict_partition_numbers(n).back(); }

}  // namespace cartan
