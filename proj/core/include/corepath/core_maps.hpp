#pragma once

#include <string>

#include "corepath/bijection.hpp"
#include "corepath/partition.hpp"
#include "corepath/path.hpp"

#include <nlohmann/json.hpp>

namespace corepath {

/// Cornerless Motzkin path whose t-1 flat steps sit at the column heights of
/// the unsigned sequence, joined by monotone runs and closed back to 0.
PathWord sequence_to_cornerless_path(const BeadSequence& seq);

/// Inverse: read the flat heights of a cornerless Motzkin path with t-1 flats.
BeadSequence cornerless_path_to_sequence(const PathWord& word, int t);

PathWord tcore_to_path(const Partition& p, int t);
Partition path_to_tcore(const PathWord& word, int t);

/// Cornerless free word for a signed sequence: starts at (corner count mod 2),
/// places the floor(t/2) flats at the signed column heights, and returns to 0.
/// The expected corner count is cross-checked (SumMismatch).
PathWord sc_sequence_to_free_path(const BeadSequence& seq, int corners);
PathWord sc_sequence_to_free_path(const BeadSequence& seq);

BeadSequence free_path_to_sc_sequence(const PathWord& word, int t);

/// phi restricted to the cornerless free family (checked in and out).
PathWord free_path_to_prefix(const PathWord& word);
/// psi restricted to the cornerless prefix family (checked in and out).
PathWord prefix_to_free_path(const PathWord& word);

/// Double a cornerless prefix with floor(t/2) flats (the last step must be
/// flat) into a symmetric cornerless Motzkin path with t-1 flats: odd t
/// mirrors the whole prefix, even t shares the final flat.
PathWord prefix_to_symmetric(const PathWord& word, int t);
PathWord symmetric_to_prefix(const PathWord& word, int t);

PathWord sc_tcore_to_symmetric_path(const Partition& p, int t);
Partition symmetric_path_to_sc_tcore(const PathWord& word, int t);

/// Every station of a conversion, for CLI output.  For the self-conjugate
/// chain all fields are set; the plain chain leaves free_path, prefix and
/// symmetric_path empty and stores the Motzkin path in motzkin_path.
struct ConversionRecord {
    int t = 1;
    bool self_conjugate = false;
    Partition partition;
    BeadSequence sequence;
    PathWord motzkin_path;
    PathWord free_path;
    PathWord prefix;
    PathWord symmetric_path;
    int corners = 0;
    int k_min = 0; ///< smallest width index whose strip admits the path

    nlohmann::json to_json() const;
};

ConversionRecord convert_partition(const Partition& p, int t, bool self_conjugate);
ConversionRecord convert_from_path(const PathWord& word, int t, bool self_conjugate);

} // namespace corepath
