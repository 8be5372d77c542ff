#include "corepath/path.hpp"

#include <algorithm>

namespace corepath {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::InvalidCharacter: return "InvalidCharacter";
        case Errc::NotFreeMotzkin: return "NotFreeMotzkin";
        case Errc::NotMotzkinPrefix: return "NotMotzkinPrefix";
        case Errc::NotMotzkinPath: return "NotMotzkinPath";
        case Errc::NoSpecialStep: return "NoSpecialStep";
        case Errc::LineNotTouched: return "LineNotTouched";
        case Errc::NotCornerless: return "NotCornerless";
        case Errc::NotCornerlessFree: return "NotCornerlessFree";
        case Errc::NotCornerlessPrefix: return "NotCornerlessPrefix";
        case Errc::NotSymmetricPath: return "NotSymmetricPath";
        case Errc::LengthParityMismatch: return "LengthParityMismatch";
        case Errc::WrongFlatCount: return "WrongFlatCount";
        case Errc::MalformedPartition: return "MalformedPartition";
        case Errc::NotDecreasing: return "NotDecreasing";
        case Errc::NotOddDistinct: return "NotOddDistinct";
        case Errc::OutOfDiagram: return "OutOfDiagram";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::NotTCore: return "NotTCore";
        case Errc::NotSelfConjugate: return "NotSelfConjugate";
        case Errc::NotSelfConjugateTCore: return "NotSelfConjugateTCore";
        case Errc::MalformedAbacus: return "MalformedAbacus";
        case Errc::MalformedDoubledAbacus: return "MalformedDoubledAbacus";
        case Errc::MalformedSequence: return "MalformedSequence";
        case Errc::SumMismatch: return "SumMismatch";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::InternalInconsistency: return "InternalInconsistency";
    }
    return "UnknownError";
}

PathWord::PathWord(std::string text) : text_(std::move(text)) {
    for (std::size_t i = 0; i < text_.size(); ++i) {
        char c = text_[i];
        if (c != 'u' && c != 'd' && c != 'f')
            throw Error(Errc::InvalidCharacter,
                        std::string("unexpected character '") + c + "' in path word", i);
    }
}

int PathWord::nonflat_count() const {
    return static_cast<int>(text_.size()) - flat_count();
}

int PathWord::flat_count() const {
    return static_cast<int>(std::count(text_.begin(), text_.end(), 'f'));
}

PathWord PathWord::slice(std::size_t first, std::size_t count) const {
    PathWord out;
    out.text_ = text_.substr(first, count);
    return out;
}

PathWord complement(const PathWord& word) {
    std::string text = word.text();
    for (char& c : text) {
        if (c == 'u')
            c = 'd';
        else if (c == 'd')
            c = 'u';
    }
    return PathWord(std::move(text));
}

PathWord reverse_complement(const PathWord& word) {
    std::string text = word.text();
    std::reverse(text.begin(), text.end());
    for (char& c : text) {
        if (c == 'u')
            c = 'd';
        else if (c == 'd')
            c = 'u';
    }
    return PathWord(std::move(text));
}

bool PathProfile::touches(int line) const {
    return std::find(heights.begin(), heights.end(), line) != heights.end();
}

PathProfile profile(const PathWord& word, int start_height) {
    PathProfile p;
    p.start_height = start_height;
    p.heights.reserve(word.size() + 1);
    p.heights.push_back(start_height);
    p.max_height = start_height;
    p.min_height = start_height;

    int h = start_height;
    std::optional<RunDirection> current;
    Step prev = Step::Flat;
    for (std::size_t i = 0; i < word.size(); ++i) {
        Step s = word.step(i);
        if (s == Step::Flat) {
            ++p.flat_count;
        } else {
            ++p.nonflat_count;
            RunDirection dir = s == Step::Up ? RunDirection::Upward : RunDirection::Downward;
            if (current != dir) {
                ++p.run_count;
                current = dir;
                if (!p.first_run_direction)
                    p.first_run_direction = dir;
            }
            p.last_run_direction = dir;
            if (i > 0 && prev != Step::Flat && prev != s)
                ++p.corner_count;
        }
        prev = s;
        h += displacement(s);
        p.heights.push_back(h);
        p.max_height = std::max(p.max_height, h);
        p.min_height = std::min(p.min_height, h);
    }
    return p;
}

int free_start_height(int nonflat_count) {
    return nonflat_count & 1;
}

int boundary_line(int k) {
    return (k & 1) ? (k + 1) / 2 : -(k / 2);
}

int width_index_free(const PathWord& word) {
    PathProfile p = profile(word, free_start_height(word));
    if (p.end_height() != 0)
        throw Error(Errc::NotFreeMotzkin, "word does not return to height 0 from start " +
                                              std::to_string(p.start_height));
    int high = p.max_height;
    int low = p.min_height;
    return high > -low ? 2 * high - 1 : -2 * low;
}

int width_index_prefix(const PathWord& word) {
    PathProfile p = profile(word, 0);
    if (p.min_height < 0)
        throw Error(Errc::NotMotzkinPrefix, "word dips below height 0");
    return p.max_height;
}

const char* family_name(Family family) {
    switch (family) {
        case Family::FreeMotzkinTight: return "free";
        case Family::MotzkinPrefixTight: return "prefix";
        case Family::CornerlessFreeTight: return "free-cornerless";
        case Family::CornerlessPrefixTight: return "prefix-cornerless";
        case Family::CornerlessMotzkin: return "cornerless";
        case Family::SymmetricCornerlessMotzkin: return "symmetric";
    }
    return "unknown";
}

bool is_cornerless(const PathWord& word) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        Step a = word.step(i), b = word.step(i + 1);
        if (a != Step::Flat && b != Step::Flat && a != b)
            return false;
    }
    return true;
}

int run_count(const PathWord& word) {
    return profile(word, 0).run_count;
}

namespace {

bool free_side_member(const PathProfile& p, const FamilySpec& spec) {
    if (p.end_height() != 0)
        return false;
    int lo = -(spec.k / 2), hi = (spec.k + 1) / 2;
    if (p.min_height < lo || p.max_height > hi)
        return false;
    return p.touches(boundary_line(spec.k));
}

bool prefix_side_member(const PathProfile& p, const FamilySpec& spec) {
    return p.min_height >= 0 && p.max_height == spec.k;
}

/// Start-step restriction of the cornerless free family: words with an odd
/// non-flat count never open downward, words with an even count never open
/// upward.
bool cornerless_free_start_ok(const PathWord& word) {
    if (word.empty())
        return true;
    Step banned = (word.nonflat_count() & 1) ? Step::Down : Step::Up;
    return word.step(0) != banned;
}

} // namespace

bool is_member(const PathWord& word, const FamilySpec& spec) {
    if (word.nonflat_count() != spec.m || word.flat_count() != spec.r)
        return false;
    switch (spec.family) {
        case Family::FreeMotzkinTight:
            return free_side_member(profile(word, free_start_height(spec.m)), spec);
        case Family::MotzkinPrefixTight:
            return prefix_side_member(profile(word, 0), spec);
        case Family::CornerlessFreeTight:
            return free_side_member(profile(word, free_start_height(spec.m)), spec) &&
                   is_cornerless(word) && cornerless_free_start_ok(word);
        case Family::CornerlessPrefixTight:
            return prefix_side_member(profile(word, 0), spec) && is_cornerless(word) &&
                   (word.empty() || word.step(word.size() - 1) == Step::Flat);
        case Family::CornerlessMotzkin:
        case Family::SymmetricCornerlessMotzkin: {
            PathProfile p = profile(word, 0);
            if (p.min_height < 0 || p.end_height() != 0 || !is_cornerless(word))
                return false;
            if (spec.family == Family::SymmetricCornerlessMotzkin &&
                word != reverse_complement(word))
                return false;
            return true;
        }
    }
    return false;
}

} // namespace corepath
