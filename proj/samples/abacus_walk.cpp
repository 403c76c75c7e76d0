/* Step-by-step abacus reduction of one strict partition, rendering the
 * bead layout after every move. */

#include <iostream>

#include "cartan/cartan.hpp"

int main(int argc, char** argv) {
    using namespace cartan;

    const partition lam = parse_partition(argc > 1 ? argv[1] : "9,5,3,2");
    abacus_state state = abacus_state::from_partition(lam);
    std::cout << "start: " << lam.to_string() << "\n" << render_abacus(state);

    std::uint64_t weight = 0;
    for (const h_move& mv : h_core(lam).trace) {
        state = apply_move(state, mv);
        weight += mv.weight();
        std::cout << "\n" << to_string(mv.kind) << " at position " << mv.position << ", weight "
                  << mv.weight() << "\n"
                  << render_abacus(state);
    }
    std::cout << "\nH-core " << state.to_partition().to_string() << ", H-weight " << weight
              << "\n";
    return 0;
}
