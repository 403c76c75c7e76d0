/* Divisor multisets of S_n for small n, at p = 2 whole and blockwise,
 * then at p = 3. */

#include <iostream>

#include "cartan/cartan.hpp"

int main() {
    using namespace cartan;

    for (unsigned p : {2u, 3u}) {
        std::cout << "p = " << p << "\n";
        for (std::uint64_t n = 0; n <= 12; ++n) {
            const divisor_multiset d = cartan_divisors(n, p);
            std::cout << "  S_" << n << "  " << d.to_string() << "  det " << p << "^"
                      << d.determinant_exponent() << "\n";
        }
    }

    std::cout << "\n2-blocks of S_7\n";
    for (const block_label& label : block_labels(7)) {
        const divisor_multiset d = block_divisors(7, label.index);
        std::cout << "  r=" << label.nodes << " w=" << label.weight << "  2-core ("
                  << label.core_2().to_string() << ")  H-core (" << label.core_h().to_string()
                  << ")  " << d.to_string() << "\n";
    }
    return 0;
}
