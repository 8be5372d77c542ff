#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "corepath/error.hpp"

namespace corepath {

/// Integer partition with weakly decreasing positive parts.  Parts are
/// 1-indexed through part(); the empty partition is allowed everywhere.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    /// Parse the canonical comma-separated text form, e.g. "4,4,2,2".
    /// Whitespace around parts is accepted; "" denotes the empty partition.
    static Partition parse(std::string_view text);
    std::string to_string() const;

    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long part(int i) const; ///< 1-indexed; parts beyond the length are 0
    const std::vector<long long>& parts() const { return parts_; }
    long long weight() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<long long> parts_;
};

Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);

/// Hook length of cell (i, j), both 1-indexed.
long long hook_length(const Partition& p, int i, int j);

/// Number of corners: cells whose removal leaves a partition, equivalently the
/// number of distinct part sizes.
int corner_count(const Partition& p);

/// First-column hook lengths at exactly length() beads: part(i) + length() - i.
/// Strictly decreasing, all positive for nonempty partitions.
std::vector<long long> beta_set(const Partition& p);

/// Inverse of beta_set for any strictly decreasing list of non-negative
/// values (beads added below the partition's own rows are tolerated).
Partition beta_set_to_partition(std::vector<long long> beta);

/// True when no cell has hook length exactly t.  Evaluated through the
/// beta-set criterion and cross-checked against a direct hook scan.
bool is_t_core(const Partition& p, int t);

/// Direct scan: does any cell have hook length exactly t?
bool has_hook_of_length(const Partition& p, long long t);

/// Side length of the largest square contained in the diagram.
int durfee_length(const Partition& p);

/// Main-diagonal hook lengths h(i, i), strictly decreasing, all odd for
/// self-conjugate partitions (which this refuses to compute for other input).
std::vector<long long> md_set(const Partition& p);

/// Inverse of md_set: a strictly decreasing list of distinct odd positives.
Partition md_set_to_partition(std::vector<long long> diagonal_hooks);

/// Bead positions of the partition on the t-runner abacus, using exactly
/// length() beads (the beta-set labels).
struct Abacus {
    int t = 1;
    std::vector<long long> beads; ///< sorted ascending labels

    friend bool operator==(const Abacus&, const Abacus&) = default;
};

Abacus abacus_place(const Partition& p, int t);

/// Column counts of an abacus, signed or not.  Unsigned sequences have t
/// non-negative entries with the first always 0; signed sequences have
/// floor(t/2) integer entries.
struct BeadSequence {
    int t = 1;
    bool is_signed = false;
    std::vector<long long> values;

    friend bool operator==(const BeadSequence&, const BeadSequence&) = default;
};

std::string to_string(const BeadSequence& seq);
/// Parse the canonical "[0,0,2,2]" text form.
BeadSequence parse_bead_sequence(std::string_view text, int t, bool is_signed);

/// Column bead counts of a t-core.  Refuses non-cores (a column with a gap or
/// a bead on the first runner).
BeadSequence abacus_encode(const Partition& p, int t);
Partition abacus_decode(const BeadSequence& seq);

/// Signed column counts of a self-conjugate t-core on the doubled abacus
/// (columns hold the odd labels 2(t*i + j) + 1 in absolute value; the sign of
/// an entry says whether its beads sit on non-negative or negative rows).
BeadSequence doubled_abacus_encode(const Partition& p, int t);
Partition doubled_abacus_decode(const BeadSequence& seq);

/// Main-diagonal hook labels encoded by a signed sequence, sorted descending.
std::vector<long long> doubled_abacus_labels(const BeadSequence& seq);

} // namespace corepath
