#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corepath/error.hpp"

namespace corepath {

/// One lattice step.  The enumerator values are the canonical text characters,
/// chosen so that the natural char order d < f < u is also the enumeration
/// order of path words.
enum class Step : char { Up = 'u', Down = 'd', Flat = 'f' };

constexpr int displacement(Step s) {
    return s == Step::Up ? 1 : (s == Step::Down ? -1 : 0);
}

constexpr Step complement(Step s) {
    return s == Step::Up ? Step::Down : (s == Step::Down ? Step::Up : Step::Flat);
}

/// A word over {u, d, f}.  Stored as its canonical text form; construction
/// validates every character.
class PathWord {
  public:
    PathWord() = default;
    explicit PathWord(std::string text);

    static PathWord parse(std::string_view text) { return PathWord(std::string(text)); }
    /// n consecutive flat steps.
    static PathWord flats(std::size_t n) { return PathWord(std::string(n, 'f')); }

    std::size_t size() const { return text_.size(); }
    bool empty() const { return text_.empty(); }
    Step step(std::size_t i) const { return static_cast<Step>(text_[i]); }
    const std::string& text() const { return text_; }

    int nonflat_count() const;
    int flat_count() const;

    PathWord& append(Step s) {
        text_.push_back(static_cast<char>(s));
        return *this;
    }
    PathWord& append(const PathWord& other) {
        text_ += other.text_;
        return *this;
    }
    /// Subword of steps [first, first + count).
    PathWord slice(std::size_t first, std::size_t count) const;

    friend PathWord operator+(PathWord lhs, const PathWord& rhs) {
        lhs.append(rhs);
        return lhs;
    }
    friend bool operator==(const PathWord&, const PathWord&) = default;
    friend auto operator<=>(const PathWord& a, const PathWord& b) { return a.text_ <=> b.text_; }

  private:
    std::string text_;
};

PathWord complement(const PathWord& word);
PathWord reverse_complement(const PathWord& word);

/// Direction of a maximal run of non-flat steps.
enum class RunDirection { Upward, Downward };

/// Geometry of a word read from a given start height.
struct PathProfile {
    int start_height = 0;
    std::vector<int> heights; ///< size() + 1 vertex heights, heights[0] == start_height
    int max_height = 0;       ///< over all vertices, start included
    int min_height = 0;
    int nonflat_count = 0;
    int flat_count = 0;
    /// Number of maximal blocks of equal-direction steps once flats are erased.
    int run_count = 0;
    std::optional<RunDirection> first_run_direction;
    std::optional<RunDirection> last_run_direction;
    /// Adjacent ud / du step pairs (peaks and valleys).
    int corner_count = 0;

    int end_height() const { return heights.back(); }
    bool touches(int line) const;
};

PathProfile profile(const PathWord& word, int start_height);

/// Start height forced on a word with m non-flat steps when both endpoints of
/// the vertical axis are free: m mod 2.
int free_start_height(int nonflat_count);
inline int free_start_height(const PathWord& word) { return free_start_height(word.nonflat_count()); }

/// The boundary line of the two-sided strip of width index k: the upper line
/// floor((k+1)/2) for odd k, the lower line -floor(k/2) for even k.
int boundary_line(int k);

/// Smallest k whose two-sided strip contains the word; equivalently the index
/// of the unique tight two-sided family the word belongs to.  The word must
/// return to height 0 from its forced start.
int width_index_free(const PathWord& word);

/// Maximum height of a Motzkin prefix (start 0, never below 0).
int width_index_prefix(const PathWord& word);

/// The six path families the library speaks about.  "Tight" families are keyed
/// by (m, r, k) and contain exactly the words of width index k; the cornerless
/// Motzkin families are keyed by length and flat count alone.
enum class Family {
    FreeMotzkinTight,
    MotzkinPrefixTight,
    CornerlessFreeTight,
    CornerlessPrefixTight,
    CornerlessMotzkin,
    SymmetricCornerlessMotzkin,
};

const char* family_name(Family family);

struct FamilySpec {
    Family family = Family::FreeMotzkinTight;
    int m = 0; ///< non-flat step count
    int r = 0; ///< flat step count
    int k = 0; ///< width index; ignored by the two untight cornerless families

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

bool is_member(const PathWord& word, const FamilySpec& spec);

/// True when the word has no adjacent ud or du pair.
bool is_cornerless(const PathWord& word);

/// Run count of the word (flats erased, maximal same-direction blocks).
int run_count(const PathWord& word);

} // namespace corepath
