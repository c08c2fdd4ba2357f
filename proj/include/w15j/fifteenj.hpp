#pragma once

#include "w15j/algebraic.hpp"
#include "w15j/half_int.hpp"
#include "w15j/symbol_cache.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace w15j {

// Index into the 3x5 label array:
//   row 1: j1 j2 j12 j125 j1256
//   row 2: j3 j4 j34 j135 j1356
//   row 3: j13 j24 j5 j6 j7
enum class Label15 : int {
    J1, J2, J12, J125, J1256,
    J3, J4, J34, J135, J1356,
    J13, J24, J5, J6, J7,
};

constexpr int kNumLabels15 = 15;
const char* label15_name(Label15 l);
Label15 label15_from_name(const std::string& name);  // throws on unknown name

// The fifteen labels of the first-kind symbol plus a small/large flag per slot.
struct FifteenJLabels {
    std::array<HalfInt, kNumLabels15> j{};
    std::array<bool, kNumLabels15> small{};

    HalfInt& operator[](Label15 l) { return j[static_cast<int>(l)]; }
    HalfInt operator[](Label15 l) const { return j[static_cast<int>(l)]; }
    bool is_small(Label15 l) const { return small[static_cast<int>(l)]; }
};

// The ten triads of the Moebius network (coupling trees of the defining
// inner product <b|a>):
//   a-tree: (j1 j2 j12) (j12 j5 j125) (j125 j6 j1256) (j3 j4 j34) (j1256 j34 j7)
//   b-tree: (j1 j3 j13) (j13 j5 j135) (j135 j6 j1356) (j2 j4 j24) (j1356 j24 j7)
std::array<std::array<Label15, 3>, 10> fifteenj_triads();

bool admissible(const FifteenJLabels& l);
// Name of the first violated triad, empty if admissible.
std::string first_triad_violation(const FifteenJLabels& l);

// Brute-force oracle: contracts the ten coupling vertices of the Moebius
// network over all magnetic indices, exactly. Cost guard: every label <= 3.
struct OracleSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
AlgebraicNumber contract_moebius_oracle(const FifteenJLabels& l);

// Fast path: single sum over the internal label x of (2x+1), an alternating
// phase, and five 6j symbols (ladder reduction of the Moebius strip). Equals
// the oracle exactly on every admissible label set (verified exhaustively for
// labels <= 2 by the acceptance suite). Returns zero when inadmissible.
AlgebraicNumber wigner_15j_first(const FifteenJLabels& l, SymbolCache& cache);

} // namespace w15j
