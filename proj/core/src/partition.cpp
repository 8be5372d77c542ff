#include "corepath/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace corepath {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw Error(Errc::MalformedPartition, "parts must be positive", i);
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error(Errc::MalformedPartition, "parts must be weakly decreasing", i);
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<long long> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
        if (pos >= text.size())
            break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc())
            throw Error(Errc::MalformedPartition, "expected an integer part", pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw Error(Errc::MalformedPartition, "expected ',' between parts", pos);
            ++pos;
        }
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

long long Partition::part(int i) const {
    if (i < 1)
        throw Error(Errc::OutOfRange, "part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition conjugate(const Partition& p) {
    std::vector<long long> parts;
    if (!p.empty()) {
        parts.resize(static_cast<std::size_t>(p.part(1)));
        for (std::size_t j = 0; j < parts.size(); ++j) {
            long long count = 0;
            for (long long part : p.parts())
                count += part > static_cast<long long>(j);
            parts[j] = count;
        }
    }
    return Partition(std::move(parts));
}

bool is_self_conjugate(const Partition& p) {
    return p == conjugate(p);
}

long long hook_length(const Partition& p, int i, int j) {
    if (i < 1 || j < 1 || i > p.length() || j > p.part(i))
        throw Error(Errc::OutOfDiagram, "cell (" + std::to_string(i) + ", " + std::to_string(j) +
                                            ") is outside the diagram");
    long long col = 0;
    for (long long part : p.parts())
        col += part >= j;
    return p.part(i) - j + col - i + 1;
}

int corner_count(const Partition& p) {
    int corners = 0;
    for (int i = 1; i <= p.length(); ++i)
        if (p.part(i) != p.part(i + 1))
            ++corners;
    return corners;
}

std::vector<long long> beta_set(const Partition& p) {
    std::vector<long long> beta;
    beta.reserve(static_cast<std::size_t>(p.length()));
    for (int i = 1; i <= p.length(); ++i)
        beta.push_back(p.part(i) + p.length() - i);
    return beta;
}

Partition beta_set_to_partition(std::vector<long long> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < 0)
            throw Error(Errc::NotDecreasing, "beta values must be non-negative", i);
        if (i > 0 && beta[i] == beta[i - 1])
            throw Error(Errc::NotDecreasing, "beta values must be distinct", i);
    }
    std::vector<long long> parts;
    long long count = static_cast<long long>(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) {
        long long part = beta[i] - (count - 1 - static_cast<long long>(i));
        if (part < 0)
            throw Error(Errc::NotDecreasing, "beta values collide", i);
        if (part > 0)
            parts.push_back(part);
    }
    return Partition(std::move(parts));
}

bool has_hook_of_length(const Partition& p, long long t) {
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if (hook_length(p, i, j) == t)
                return true;
    return false;
}

bool is_t_core(const Partition& p, int t) {
    if (t < 1)
        throw Error(Errc::OutOfRange, "t must be positive");
    std::vector<long long> beta = beta_set(p);
    bool core = true;
    for (long long b : beta) {
        if (b < t)
            continue;
        if (std::find(beta.begin(), beta.end(), b - t) == beta.end()) {
            core = false;
            break;
        }
    }
    if (core == has_hook_of_length(p, t))
        throw Error(Errc::InternalInconsistency, "beta-set and hook-scan core tests disagree");
    return core;
}

int durfee_length(const Partition& p) {
    int d = 0;
    while (d + 1 <= p.length() && p.part(d + 1) >= d + 1)
        ++d;
    return d;
}

std::vector<long long> md_set(const Partition& p) {
    if (!is_self_conjugate(p))
        throw Error(Errc::NotSelfConjugate, "main-diagonal hook set requires a self-conjugate partition");
    std::vector<long long> hooks;
    int d = durfee_length(p);
    hooks.reserve(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
        hooks.push_back(hook_length(p, i, i));
    return hooks;
}

Partition md_set_to_partition(std::vector<long long> diagonal_hooks) {
    std::sort(diagonal_hooks.begin(), diagonal_hooks.end(), std::greater<>());
    for (std::size_t i = 0; i < diagonal_hooks.size(); ++i) {
        long long h = diagonal_hooks[i];
        if (h <= 0 || h % 2 == 0)
            throw Error(Errc::NotOddDistinct, "diagonal hooks must be odd and positive", i);
        if (i > 0 && h == diagonal_hooks[i - 1])
            throw Error(Errc::NotOddDistinct, "diagonal hooks must be distinct", i);
    }
    int d = static_cast<int>(diagonal_hooks.size());
    std::vector<long long> parts(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
        parts[static_cast<std::size_t>(i - 1)] = (diagonal_hooks[static_cast<std::size_t>(i - 1)] - 1) / 2 + i;
    // Rows below the Durfee square mirror the columns of the square's rows.
    long long max_extra = d > 0 ? parts[0] : 0;
    for (long long j = d + 1; j <= max_extra; ++j) {
        long long count = 0;
        for (int i = 0; i < d; ++i)
            count += parts[static_cast<std::size_t>(i)] >= j;
        if (count > 0)
            parts.push_back(count);
    }
    Partition out(std::move(parts));
    if (!is_self_conjugate(out))
        throw Error(Errc::InternalInconsistency, "diagonal hook reconstruction is not self-conjugate");
    return out;
}

Abacus abacus_place(const Partition& p, int t) {
    if (t < 1)
        throw Error(Errc::OutOfRange, "t must be positive");
    Abacus a;
    a.t = t;
    a.beads = beta_set(p);
    std::sort(a.beads.begin(), a.beads.end());
    return a;
}

std::string to_string(const BeadSequence& seq) {
    std::string out = "[";
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(seq.values[i]);
    }
    return out + "]";
}

BeadSequence parse_bead_sequence(std::string_view text, int t, bool is_signed) {
    BeadSequence seq;
    seq.t = t;
    seq.is_signed = is_signed;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
    };
    skip_space();
    bool bracketed = pos < text.size() && text[pos] == '[';
    if (bracketed)
        ++pos;
    while (pos < text.size()) {
        skip_space();
        if (bracketed && pos < text.size() && text[pos] == ']') {
            ++pos;
            break;
        }
        if (pos >= text.size())
            break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc())
            throw Error(Errc::MalformedSequence, "expected an integer", pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        seq.values.push_back(value);
        skip_space();
        if (pos < text.size() && text[pos] == ',')
            ++pos;
    }
    skip_space();
    if (pos != text.size())
        throw Error(Errc::MalformedSequence, "trailing characters after sequence", pos);
    std::size_t expected = is_signed ? static_cast<std::size_t>(t / 2) : static_cast<std::size_t>(t);
    if (seq.values.size() != expected)
        throw Error(Errc::MalformedSequence, "expected " + std::to_string(expected) + " entries, got " +
                                                 std::to_string(seq.values.size()));
    return seq;
}

BeadSequence abacus_encode(const Partition& p, int t) {
    Abacus a = abacus_place(p, t);
    BeadSequence seq;
    seq.t = t;
    seq.values.assign(static_cast<std::size_t>(t), 0);
    std::vector<std::vector<long long>> columns(static_cast<std::size_t>(t));
    for (long long bead : a.beads)
        columns[static_cast<std::size_t>(bead % t)].push_back(bead / t);
    for (int j = 0; j < t; ++j) {
        auto& rows = columns[static_cast<std::size_t>(j)];
        std::sort(rows.begin(), rows.end());
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i] != static_cast<long long>(i))
                throw Error(Errc::NotTCore, "abacus column " + std::to_string(j) + " has a gap");
        seq.values[static_cast<std::size_t>(j)] = static_cast<long long>(rows.size());
    }
    if (seq.values[0] != 0)
        throw Error(Errc::NotTCore, "abacus has a bead on the first runner");
    return seq;
}

Partition abacus_decode(const BeadSequence& seq) {
    if (seq.is_signed)
        throw Error(Errc::MalformedAbacus, "expected an unsigned sequence");
    if (seq.t < 1 || seq.values.size() != static_cast<std::size_t>(seq.t))
        throw Error(Errc::MalformedAbacus, "sequence length must equal t");
    if (!seq.values.empty() && seq.values[0] != 0)
        throw Error(Errc::MalformedAbacus, "first entry must be 0");
    std::vector<long long> beta;
    for (int j = 0; j < seq.t; ++j) {
        long long count = seq.values[static_cast<std::size_t>(j)];
        if (count < 0)
            throw Error(Errc::MalformedAbacus, "entries must be non-negative",
                        static_cast<std::size_t>(j));
        for (long long i = 0; i < count; ++i)
            beta.push_back(i * seq.t + j);
    }
    return beta_set_to_partition(std::move(beta));
}

BeadSequence doubled_abacus_encode(const Partition& p, int t) {
    if (t < 1)
        throw Error(Errc::OutOfRange, "t must be positive");
    std::vector<long long> hooks = md_set(p); // refuses non-self-conjugate input
    int q = t / 2;
    BeadSequence seq;
    seq.t = t;
    seq.is_signed = true;
    seq.values.assign(static_cast<std::size_t>(q), 0);
    std::vector<std::vector<long long>> pos_rows(static_cast<std::size_t>(q));
    std::vector<std::vector<long long>> neg_rows(static_cast<std::size_t>(q));
    for (long long h : hooks) {
        long long rem = h % (2 * t);
        if (rem % 2 == 0)
            throw Error(Errc::InternalInconsistency, "main-diagonal hook is even");
        if (rem < t && rem % 2 == 1) { // rem = 2j + 1 with j < floor(t/2)
            long long j = (rem - 1) / 2;
            if (j >= q)
                throw Error(Errc::NotSelfConjugateTCore,
                            "diagonal hook " + std::to_string(h) + " sits on the excluded runner");
            pos_rows[static_cast<std::size_t>(j)].push_back((h - 2 * j - 1) / (2 * t));
        } else { // rem = 2t - 2j - 1 with j < floor(t/2)
            long long j = (2 * t - rem - 1) / 2;
            if (j >= q)
                throw Error(Errc::NotSelfConjugateTCore,
                            "diagonal hook " + std::to_string(h) + " sits on the excluded runner");
            neg_rows[static_cast<std::size_t>(j)].push_back((h + 2 * j + 1) / (2 * t));
        }
    }
    for (int j = 0; j < q; ++j) {
        auto& pos = pos_rows[static_cast<std::size_t>(j)];
        auto& neg = neg_rows[static_cast<std::size_t>(j)];
        if (!pos.empty() && !neg.empty())
            throw Error(Errc::NotSelfConjugateTCore,
                        "column " + std::to_string(j) + " mixes signs");
        std::sort(pos.begin(), pos.end());
        std::sort(neg.begin(), neg.end());
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (pos[i] != static_cast<long long>(i))
                throw Error(Errc::NotSelfConjugateTCore,
                            "column " + std::to_string(j) + " has a gap");
        for (std::size_t i = 0; i < neg.size(); ++i)
            if (neg[i] != static_cast<long long>(i + 1))
                throw Error(Errc::NotSelfConjugateTCore,
                            "column " + std::to_string(j) + " has a gap below the axis");
        seq.values[static_cast<std::size_t>(j)] =
            pos.empty() ? -static_cast<long long>(neg.size()) : static_cast<long long>(pos.size());
    }
    return seq;
}

std::vector<long long> doubled_abacus_labels(const BeadSequence& seq) {
    if (!seq.is_signed)
        throw Error(Errc::MalformedDoubledAbacus, "expected a signed sequence");
    if (seq.t < 1 || seq.values.size() != static_cast<std::size_t>(seq.t / 2))
        throw Error(Errc::MalformedDoubledAbacus, "sequence length must equal floor(t/2)");
    std::vector<long long> labels;
    for (int j = 0; j < seq.t / 2; ++j) {
        long long count = seq.values[static_cast<std::size_t>(j)];
        for (long long i = 0; i < count; ++i)
            labels.push_back(2 * (i * seq.t + j) + 1);
        for (long long i = 1; i <= -count; ++i)
            labels.push_back(2 * (i * seq.t - j) - 1);
    }
    std::sort(labels.begin(), labels.end(), std::greater<>());
    return labels;
}

Partition doubled_abacus_decode(const BeadSequence& seq) {
    return md_set_to_partition(doubled_abacus_labels(seq));
}

} // namespace corepath
