#pragma once

/* Bead play for strict partitions on a three-runner abacus.  The parts
 * of a strict partition occupy distinct positions; positions are laid
 * out with the even numbers on the left runner and the numbers 1 mod 4
 * and 3 mod 4 on the two others:
 *
 *        1   3
 *    2
 *    4   5   7
 *    6
 *    8   9  11
 *    ...
 *
 * Four moves reduce a state:
 *   (1) slide an even bead from 2k (k >= 2) up to 2k-2 if vacant, weight 1;
 *   (2) remove the bead at position 2, weight 1;
 *   (3) slide an odd bead from m >= 5 up to m-4 if vacant, weight 2;
 *   (4) remove the beads at 1 and 3 together, weight 2.
 * A bead at position 2 only leaves through (2); there is no position 0.
 * Every move removes 2 * weight nodes from the partition.  Exhaustive
 * play reaches a stalemate; the library applies moves in the fixed order
 * (kind, then position) so the reduction is reproducible, and the
 * stalemate's independence of the order is checked by tests rather than
 * assumed.
 */

#include <set>

#include "cartan/partitions.hpp"

namespace cartan {

class abacus_state {
  public:
    abacus_state() = default;

    explicit abacus_state(std::set<unsigned> beads) : beads_(std::move(beads)) {
        if (!beads_.empty() && *beads_.begin() == 0)
            throw std::invalid_argument("bead positions start at 1");
    }

    static abacus_state from_partition(const partition& lam) {
        if (!is_strict(lam))
            throw std::invalid_argument("the abacus represents strict partitions only");
        return abacus_state(std::set<unsigned>(lam.parts().begin(), lam.parts().end()));
    }

    partition to_partition() const {
        return partition(std::vector<unsigned>(beads_.rbegin(), beads_.rend()));
    }

    bool occupied(unsigned pos) const { return beads_.count(pos) != 0; }
    const std::set<unsigned>& beads() const { return beads_; }
    std::size_t bead_count() const { return beads_.size(); }
    bool operator==(const abacus_state&) const = default;

  private:
    std::set<unsigned> beads_;
};

enum class move_kind : unsigned char { up_even, remove_2, up_odd, remove_1_3 };

inline const char* to_string(move_kind k) {
    switch (k) {
    case move_kind::up_even: return "up_even";
    case move_kind::remove_2: return "remove_2";
    case move_kind::up_odd: return "up_odd";
    case move_kind::remove_1_3: return "remove_1_3";
    }
    return "?";
}

struct h_move {
    move_kind kind;
    unsigned position;  // the bead acted on; canonically 1 for remove_1_3

    unsigned weight() const {
        return kind == move_kind::up_even || kind == move_kind::remove_2 ? 1 : 2;
    }
    bool operator==(const h_move&) const = default;
};

/* All currently legal moves, ordered by kind then by position. */
inline std::vector<h_move> legal_moves(const abacus_state& s) {
    std::vector<h_move> moves;
    for (unsigned b : s.beads())
        if (b % 2 == 0 && b >= 4 && !s.occupied(b - 2))
            moves.push_back({move_kind::up_even, b});
    if (s.occupied(2))
        moves.push_back({move_kind::remove_2, 2});
    for (unsigned b : s.beads())
        if (b % 2 == 1 && b >= 5 && !s.occupied(b - 4))
            moves.push_back({move_kind::up_odd, b});
    if (s.occupied(1) && s.occupied(3))
        moves.push_back({move_kind::remove_1_3, 1});
    return moves;
}

inline abacus_state apply_move(const abacus_state& s, const h_move& m) {
    const auto illegal = [] { return std::invalid_argument("illegal abacus move"); };
    std::set<unsigned> beads = s.beads();
    switch (m.kind) {
    case move_kind::up_even:
        if (m.position % 2 != 0 || m.position < 4 || !s.occupied(m.position) ||
            s.occupied(m.position - 2))
            throw illegal();
        beads.erase(m.position);
        beads.insert(m.position - 2);
        break;
    case move_kind::remove_2:
        if (m.position != 2 || !s.occupied(2))
            throw illegal();
        beads.erase(2);
        break;
    case move_kind::up_odd:
        if (m.position % 2 != 1 || m.position < 5 || !s.occupied(m.position) ||
            s.occupied(m.position - 4))
            throw illegal();
        beads.erase(m.position);
        beads.insert(m.position - 4);
        break;
    case move_kind::remove_1_3:
        if (!s.occupied(1) || !s.occupied(3))
            throw illegal();
        beads.erase(1);
        beads.erase(3);
        break;
    }
    return abacus_state(std::move(beads));
}

struct h_core_result {
    partition core;
    std::uint64_t weight = 0;
    std::vector<h_move> trace;
};

/* Reduce to the stalemate, always taking the first legal move. */
inline h_core_result h_core(const partition& lam) {
    abacus_state s = abacus_state::from_partition(lam);
    h_core_result res;
    for (;;) {
        const auto moves = legal_moves(s);
        if (moves.empty())
            break;
        s = apply_move(s, moves.front());
        res.weight += moves.front().weight();
        res.trace.push_back(moves.front());
    }
    res.core = s.to_partition();
    return res;
}

/* The stalemates form three families: empty, runs ending at 1, and runs
 * ending at 3, each descending in steps of 4. */
inline bool matches_stalemate_form(const partition& lam) {
    if (lam.empty())
        return true;
    const auto& parts = lam.parts();
    if (parts.back() != 1 && parts.back() != 3)
        return false;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] != parts[i + 1] + 4)
            return false;
    return true;
}

inline bool is_h_core(const partition& lam) {
    if (!is_strict(lam))
        return false;
    return legal_moves(abacus_state::from_partition(lam)).empty();
}

/* All stalemate partitions with at most `bound` nodes, by node count. */
inline std::vector<partition> hc_members(std::uint64_t bound) {
    std::vector<partition> out{partition{}};
    for (unsigned low : {1u, 3u}) {
        std::vector<unsigned> run;
        std::uint64_t nodes = 0;
        for (unsigned top = low;; top += 4) {
            nodes += top;
            if (nodes > bound)
                break;
            run.insert(run.begin(), top);
            out.push_back(partition(run));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const partition& a, const partition& b) { return a.sum() < b.sum(); });
    return out;
}

/* Hook lengths of the main diagonal of the Young diagram; a strict
 * partition with as many parts as the Durfee square is wide. */
inline partition unfold(const partition& lam) {
    const partition conj = lam.conjugate();
    std::vector<unsigned> hooks;
    for (std::size_t i = 0; i < lam.length() && lam.parts()[i] >= i + 1; ++i)
        hooks.push_back(lam.parts()[i] + conj.parts()[i] - 2 * unsigned(i + 1) + 1);
    return partition(std::move(hooks));
}

inline partition staircase(unsigned m) {
    std::vector<unsigned> parts;
    parts.reserve(m);
    for (unsigned v = m; v >= 1; --v)
        parts.push_back(v);
    return partition(std::move(parts));
}

/* Fixed-width text rendering of the runner layout above: `(k)` for an
 * occupied position, ` k ` for a vacant one.  Rows run through the one
 * holding the highest bead, and at least through position 2. */
inline std::string render_abacus(const abacus_state& s) {
    // row 2k lists {4k, 4k+1, 4k+3} (no left cell when k = 0); row 2k+1 lists {4k+2}
    const auto row_of = [](unsigned pos) -> unsigned {
        switch (pos % 4) {
        case 0: return 2 * (pos / 4);
        case 1: return 2 * ((pos - 1) / 4);
        case 2: return 2 * ((pos - 2) / 4) + 1;
        default: return 2 * ((pos - 3) / 4);
        }
    };
    unsigned last_row = 1;
    for (unsigned b : s.beads())
        last_row = std::max(last_row, row_of(b));
    const unsigned widest = last_row % 2 == 0 ? 2 * last_row + 3 : 2 * last_row + 1;
    const unsigned digits = unsigned(std::to_string(widest).size());

    const auto cell = [&](unsigned pos) {
        std::string num = std::to_string(pos);
        num.insert(num.begin(), digits - num.size(), ' ');
        return s.occupied(pos) ? "(" + num + ")" : " " + num + " ";
    };
    std::string out;
    for (unsigned row = 0; row <= last_row; ++row) {
        std::string line;
        if (row % 2 == 0) {
            const unsigned k = row / 2;
            line = k == 0 ? std::string(digits + 2, ' ') : cell(4 * k);
            line += " " + cell(4 * k + 1) + " " + cell(4 * k + 3);
        } else {
            line = cell(4 * (row / 2) + 2);
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace cartan
