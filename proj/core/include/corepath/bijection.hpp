#pragma once

#include <optional>

#include "corepath/path.hpp"

namespace corepath {

/// First step that ends on the boundary line of the width-k strip, reading the
/// word from its forced free start.  Defined only for k > 1; the step is an up
/// step when the boundary is the upper line (odd k) and a down step otherwise.
int special_step_index(const PathWord& word, int k);

/// Last vertex index lying on the given horizontal line.
int turning_point_index(const PathWord& word, int start_height, int line_height);

/// First step at or after the turning point of the width-k boundary that
/// starts at height 0 heading away from the boundary (down for odd k, up for
/// even k).  Empty when the word never does so.
std::optional<int> break_step_index(const PathWord& word, int k);

/// Last vertex at height 0 that is not after the turning point of the line
/// y = k, for a Motzkin prefix of maximum height k.
int critical_point_index(const PathWord& word, int k);

/// Split of a free word of width index k > 1 around its special step.
/// Reassembly: head + flats(alpha) + special + flats(beta) + <middle> +
/// flats(gamma) == word, where <middle> is b_part without a break step and
/// b_head + flats(delta) + break + b_tail with one.  In the mixed-parity case
/// head further splits as a_head + pivot + a_tail around the first step
/// leaving the start axis toward the boundary.
struct PhiDecomposition {
    int k = 0;
    bool same_parity = false; ///< non-flat count and k agree mod 2
    PathWord head;            ///< everything before flats(alpha) + special
    int alpha = 0;
    int special_index = 0;
    int beta = 0;
    PathWord b_part; ///< between the special step's trailing flats and flats(gamma)
    int gamma = 0;

    std::optional<int> break_index;
    int delta = 0;
    PathWord b_head, b_tail;

    std::optional<int> pivot_index;
    PathWord a_head, a_tail;
};

PhiDecomposition phi_decomposition(const PathWord& word);

/// Split of a Motzkin prefix of maximum height k > 1 around its distinguished
/// rise step (the first up step from height floor((k+1)/2) not before the
/// critical point).  When the word does not end on its ceiling, drop_index is
/// the last down step leaving height k and tail is everything after it.
/// Reassembly: flats(gamma) + b_part + flats(alpha) + rise + a_part +
/// flats(beta) [+ drop + tail] == word.
struct PsiDecomposition {
    int k = 0;
    bool ends_on_ceiling = false;
    int gamma = 0;
    PathWord b_part;
    int alpha = 0;
    int rise_index = 0;
    PathWord a_part;
    int beta = 0;
    std::optional<int> drop_index;
    PathWord tail;
};

PsiDecomposition psi_decomposition(const PathWord& word);

/// Dispatch-fault injections for the verifier's mutation checks.  Each mutant
/// corrupts exactly one routing decision of the forward map; the verify
/// suites must fail under every one of them.
enum class PhiMutation {
    None,
    WidenMirrorCutoff,     ///< mirror shortcut fires for k <= 2 instead of k <= 1
    FlipParityDispatch,    ///< same-parity and mixed-parity cases swapped
    IgnoreBreakInCase1,    ///< same-parity assembly never uses the break step
    IgnoreBreakInCase2,    ///< mixed-parity assembly never uses the break step
    SkipMirrorOnEvenWidth, ///< even-k assembly skips the final complement
};

/// Width-preserving bijection from free words onto Motzkin prefixes with the
/// same non-flat count, flat count and width index.
PathWord phi(const PathWord& word);
PathWord phi_variant(const PathWord& word, PhiMutation mutation);

/// Inverse of phi.
PathWord psi(const PathWord& word);

/// run_count(phi(word)) - run_count(word).  Always 0 or -1: the run count
/// drops by one exactly when the first run direction disagrees with the
/// non-flat parity (downward start with even count, upward start with odd).
int run_delta(const PathWord& word);

enum class PathSide { Free, Prefix };

/// Refinement class of a word within its family.  On the prefix side the
/// index is the plain run count.  On the free side it is determined by the
/// count of downward runs (odd non-flat parity) or upward runs (even parity),
/// with the index parity fixed by the final run direction; phi preserves the
/// index.  Words with no runs get index 0 and no direction.
struct RunClass {
    int index = 0;
    std::optional<RunDirection> end_direction;

    friend bool operator==(const RunClass&, const RunClass&) = default;
};

RunClass run_class(const PathWord& word, PathSide side);

} // namespace corepath
