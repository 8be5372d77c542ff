#include "corepath/core_maps.hpp"

#include <algorithm>
#include <cstdlib>

namespace corepath {

namespace {

PathWord monotone_run(long long from, long long to) {
    PathWord run;
    Step step = to > from ? Step::Up : Step::Down;
    for (long long i = 0; i < std::llabs(to - from); ++i)
        run.append(step);
    return run;
}

void require_positive_t(int t) {
    if (t < 1)
        throw Error(Errc::OutOfRange, "t must be positive, got " + std::to_string(t));
}

void require_cornerless_free(const PathWord& word) {
    PathProfile prof = profile(word, free_start_height(word));
    if (prof.end_height() != 0)
        throw Error(Errc::NotFreeMotzkin, "word does not return to height 0: " + word.text());
    if (prof.corner_count != 0)
        throw Error(Errc::NotCornerless, "word has a corner: " + word.text());
    if (!word.empty()) {
        bool odd = (prof.nonflat_count & 1) != 0;
        Step first = word.step(0);
        if ((odd && first == Step::Down) || (!odd && first == Step::Up))
            throw Error(Errc::NotCornerlessFree,
                        "first step contradicts the start height: " + word.text());
    }
}

void require_cornerless_prefix(const PathWord& word) {
    PathProfile prof = profile(word, 0);
    if (prof.min_height < 0)
        throw Error(Errc::NotMotzkinPrefix, "word dips below height 0: " + word.text());
    if (prof.corner_count != 0)
        throw Error(Errc::NotCornerless, "word has a corner: " + word.text());
    if (!word.empty() && word.step(word.size() - 1) != Step::Flat)
        throw Error(Errc::NotCornerlessPrefix, "word does not end with a flat: " + word.text());
}

std::vector<long long> flat_heights(const PathWord& word, int start_height) {
    std::vector<long long> heights;
    long long h = start_height;
    for (std::size_t i = 0; i < word.size(); ++i) {
        Step s = word.step(i);
        if (s == Step::Flat)
            heights.push_back(h);
        h += displacement(s);
    }
    return heights;
}

} // namespace

PathWord sequence_to_cornerless_path(const BeadSequence& seq) {
    if (seq.is_signed || seq.t < 1 || seq.values.size() != static_cast<std::size_t>(seq.t))
        throw Error(Errc::MalformedSequence,
                    "expected an unsigned sequence with t entries: " + to_string(seq));
    if (seq.values.front() != 0)
        throw Error(Errc::MalformedSequence, "first column must be 0: " + to_string(seq));
    for (long long v : seq.values)
        if (v < 0)
            throw Error(Errc::MalformedSequence, "negative column count: " + to_string(seq));
    PathWord word;
    long long prev = 0;
    for (std::size_t j = 1; j < seq.values.size(); ++j) {
        word.append(monotone_run(prev, seq.values[j]));
        word.append(Step::Flat);
        prev = seq.values[j];
    }
    word.append(monotone_run(prev, 0));
    return word;
}

BeadSequence cornerless_path_to_sequence(const PathWord& word, int t) {
    require_positive_t(t);
    PathProfile prof = profile(word, 0);
    if (prof.min_height < 0 || prof.end_height() != 0)
        throw Error(Errc::NotMotzkinPath, "word is not a Motzkin path: " + word.text());
    if (prof.corner_count != 0)
        throw Error(Errc::NotCornerless, "word has a corner: " + word.text());
    if (prof.flat_count != t - 1)
        throw Error(Errc::WrongFlatCount, "expected " + std::to_string(t - 1) + " flats, got " +
                                              std::to_string(prof.flat_count));
    std::vector<long long> values{0};
    for (long long h : flat_heights(word, 0))
        values.push_back(h);
    return BeadSequence{t, false, std::move(values)};
}

PathWord tcore_to_path(const Partition& p, int t) {
    return sequence_to_cornerless_path(abacus_encode(p, t));
}

Partition path_to_tcore(const PathWord& word, int t) {
    return abacus_decode(cornerless_path_to_sequence(word, t));
}

PathWord sc_sequence_to_free_path(const BeadSequence& seq, int corners) {
    if (!seq.is_signed || seq.t < 1 || seq.values.size() != static_cast<std::size_t>(seq.t / 2))
        throw Error(Errc::MalformedSequence,
                    "expected a signed sequence with floor(t/2) entries: " + to_string(seq));
    long long variation = 0, prev = 0;
    for (long long v : seq.values) {
        variation += std::llabs(v - prev);
        prev = v;
    }
    variation += std::llabs(prev);
    long long derived = variation - (!seq.values.empty() && seq.values.front() > 0 ? 1 : 0);
    if (derived != corners)
        throw Error(Errc::SumMismatch, "sequence " + to_string(seq) + " encodes " +
                                           std::to_string(derived) + " corners, expected " +
                                           std::to_string(corners));
    PathWord word;
    long long h = derived & 1;
    for (long long v : seq.values) {
        word.append(monotone_run(h, v));
        word.append(Step::Flat);
        h = v;
    }
    word.append(monotone_run(h, 0));
    return word;
}

PathWord sc_sequence_to_free_path(const BeadSequence& seq) {
    if (!seq.is_signed || seq.t < 1 || seq.values.size() != static_cast<std::size_t>(seq.t / 2))
        throw Error(Errc::MalformedSequence,
                    "expected a signed sequence with floor(t/2) entries: " + to_string(seq));
    long long variation = 0, prev = 0;
    for (long long v : seq.values) {
        variation += std::llabs(v - prev);
        prev = v;
    }
    variation += std::llabs(prev);
    int derived = static_cast<int>(variation - (!seq.values.empty() && seq.values.front() > 0 ? 1 : 0));
    return sc_sequence_to_free_path(seq, derived);
}

BeadSequence free_path_to_sc_sequence(const PathWord& word, int t) {
    require_positive_t(t);
    require_cornerless_free(word);
    if (word.flat_count() != t / 2)
        throw Error(Errc::WrongFlatCount, "expected " + std::to_string(t / 2) + " flats, got " +
                                              std::to_string(word.flat_count()));
    return BeadSequence{t, true, flat_heights(word, free_start_height(word))};
}

PathWord free_path_to_prefix(const PathWord& word) {
    require_cornerless_free(word);
    PathWord image = phi(word);
    try {
        require_cornerless_prefix(image);
    } catch (const Error&) {
        throw Error(Errc::InternalInconsistency,
                    "image of " + word.text() + " left the cornerless prefix family");
    }
    return image;
}

PathWord prefix_to_free_path(const PathWord& word) {
    require_cornerless_prefix(word);
    PathWord pre = psi(word);
    try {
        require_cornerless_free(pre);
    } catch (const Error&) {
        throw Error(Errc::InternalInconsistency,
                    "preimage of " + word.text() + " left the cornerless free family");
    }
    return pre;
}

PathWord prefix_to_symmetric(const PathWord& word, int t) {
    require_positive_t(t);
    require_cornerless_prefix(word);
    if (word.flat_count() != t / 2)
        throw Error(Errc::WrongFlatCount, "expected " + std::to_string(t / 2) + " flats, got " +
                                              std::to_string(word.flat_count()));
    if (t % 2 == 1)
        return word + reverse_complement(word);
    return word + reverse_complement(word.slice(0, word.size() - 1));
}

PathWord symmetric_to_prefix(const PathWord& word, int t) {
    require_positive_t(t);
    PathProfile prof = profile(word, 0);
    if (prof.min_height < 0 || prof.end_height() != 0)
        throw Error(Errc::NotMotzkinPath, "word is not a Motzkin path: " + word.text());
    if (prof.corner_count != 0)
        throw Error(Errc::NotCornerless, "word has a corner: " + word.text());
    if (word != reverse_complement(word))
        throw Error(Errc::NotSymmetricPath,
                    "word is not its own reverse complement: " + word.text());
    std::size_t len = word.size();
    if (len + 1 < static_cast<std::size_t>(t) || (len - (t - 1)) % 2 != 0)
        throw Error(Errc::LengthParityMismatch,
                    "length " + std::to_string(len) + " cannot split over t = " + std::to_string(t));
    if (prof.flat_count != t - 1)
        throw Error(Errc::WrongFlatCount, "expected " + std::to_string(t - 1) + " flats, got " +
                                              std::to_string(prof.flat_count));
    std::size_t half = t % 2 == 1 ? len / 2 : (len + 1) / 2;
    PathWord s = word.slice(0, half);
    if (!s.empty() && s.step(half - 1) != Step::Flat)
        throw Error(Errc::InternalInconsistency, "half of " + word.text() + " does not end flat");
    return s;
}

PathWord sc_tcore_to_symmetric_path(const Partition& p, int t) {
    BeadSequence seq = doubled_abacus_encode(p, t);
    PathWord free_word;
    try {
        free_word = sc_sequence_to_free_path(seq, corner_count(p));
    } catch (const Error& e) {
        if (e.code() == Errc::SumMismatch)
            throw Error(Errc::InternalInconsistency,
                        "column variation of " + p.to_string() + " missed the corner count");
        throw;
    }
    return prefix_to_symmetric(free_path_to_prefix(free_word), t);
}

Partition symmetric_path_to_sc_tcore(const PathWord& word, int t) {
    PathWord prefix = symmetric_to_prefix(word, t);
    PathWord free_word = prefix_to_free_path(prefix);
    return doubled_abacus_decode(free_path_to_sc_sequence(free_word, t));
}

nlohmann::json ConversionRecord::to_json() const {
    nlohmann::json j{
        {"t", t},
        {"self_conjugate", self_conjugate},
        {"partition", partition.to_string()},
        {"sequence", sequence.values},
        {"corners", corners},
        {"k_min", k_min},
    };
    if (self_conjugate) {
        j["free_path"] = free_path.text();
        j["prefix"] = prefix.text();
        j["symmetric_path"] = symmetric_path.text();
    } else {
        j["motzkin_path"] = motzkin_path.text();
    }
    return j;
}

ConversionRecord convert_partition(const Partition& p, int t, bool self_conjugate) {
    ConversionRecord rec;
    rec.t = t;
    rec.self_conjugate = self_conjugate;
    rec.partition = p;
    rec.corners = corner_count(p);
    if (!self_conjugate) {
        rec.sequence = abacus_encode(p, t);
        rec.motzkin_path = sequence_to_cornerless_path(rec.sequence);
        long long peak = 0;
        for (long long v : rec.sequence.values)
            peak = std::max(peak, v);
        rec.k_min = static_cast<int>(peak);
    } else {
        rec.sequence = doubled_abacus_encode(p, t);
        try {
            rec.free_path = sc_sequence_to_free_path(rec.sequence, rec.corners);
        } catch (const Error& e) {
            if (e.code() == Errc::SumMismatch)
                throw Error(Errc::InternalInconsistency,
                            "column variation of " + p.to_string() + " missed the corner count");
            throw;
        }
        rec.prefix = free_path_to_prefix(rec.free_path);
        rec.symmetric_path = prefix_to_symmetric(rec.prefix, t);
        rec.k_min = width_index_free(rec.free_path);
    }
    return rec;
}

ConversionRecord convert_from_path(const PathWord& word, int t, bool self_conjugate) {
    Partition core =
        self_conjugate ? symmetric_path_to_sc_tcore(word, t) : path_to_tcore(word, t);
    ConversionRecord rec = convert_partition(core, t, self_conjugate);
    const PathWord& expected = self_conjugate ? rec.symmetric_path : rec.motzkin_path;
    if (expected != word)
        throw Error(Errc::InternalInconsistency,
                    "conversion did not reproduce the input path " + word.text());
    return rec;
}

} // namespace corepath
