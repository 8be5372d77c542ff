#pragma once

// Reference implementations for tests: exhaustive scans and direct geometry
// on raw strings, written without the library's enumeration machinery.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

struct Shape {
    int end = 0, lo = 0, hi = 0;
    int flats = 0, nonflats = 0, corners = 0, runs = 0;
    char first_nonflat = 0;
};

inline Shape shape(const std::string& w, int start) {
    Shape s;
    s.end = s.lo = s.hi = start;
    int h = start;
    char prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        char c = w[i];
        if (c == 'f') {
            ++s.flats;
        } else {
            ++s.nonflats;
            if (!s.first_nonflat)
                s.first_nonflat = c;
            if (prev != c)
                ++s.runs;
            if (i > 0 && w[i - 1] != 'f' && w[i - 1] != c)
                ++s.corners;
            prev = c;
            h += c == 'u' ? 1 : -1;
        }
        s.lo = std::min(s.lo, h);
        s.hi = std::max(s.hi, h);
    }
    s.end = h;
    return s;
}

inline bool touches(const std::string& w, int start, int line) {
    int h = start;
    if (h == line)
        return true;
    for (char c : w) {
        h += c == 'u' ? 1 : (c == 'd' ? -1 : 0);
        if (h == line)
            return true;
    }
    return false;
}

inline std::string reverse_complement(const std::string& w) {
    std::string out(w.rbegin(), w.rend());
    for (char& c : out)
        c = c == 'u' ? 'd' : (c == 'd' ? 'u' : 'f');
    return out;
}

/// All words over {d, f, u} of length n, ascending lexicographic order.
inline void for_each_word(int n, const std::function<void(const std::string&)>& fn) {
    std::string w(static_cast<std::size_t>(n), 'd');
    while (true) {
        fn(w);
        int pos = n - 1;
        while (pos >= 0 && w[static_cast<std::size_t>(pos)] == 'u') {
            w[static_cast<std::size_t>(pos)] = 'd';
            --pos;
        }
        if (pos < 0)
            return;
        char& c = w[static_cast<std::size_t>(pos)];
        c = c == 'd' ? 'f' : 'u';
    }
}

/// All flat-free words over {d, u} of length n.
inline void for_each_updown_word(int n, const std::function<void(const std::string&)>& fn) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        std::string w(static_cast<std::size_t>(n), 'd');
        for (int i = 0; i < n; ++i)
            if (bits & (1u << i))
                w[static_cast<std::size_t>(i)] = 'u';
        fn(w);
    }
}

inline int strip_lo(int k) { return -(k / 2); }
inline int strip_hi(int k) { return (k + 1) / 2; }
inline int boundary(int k) { return k % 2 ? (k + 1) / 2 : -(k / 2); }

inline bool free_tight_member(const std::string& w, int m, int r, int k) {
    int start = m & 1;
    Shape s = shape(w, start);
    return s.nonflats == m && s.flats == r && s.end == 0 && s.lo >= strip_lo(k) &&
           s.hi <= strip_hi(k) && touches(w, start, boundary(k));
}

inline bool prefix_tight_member(const std::string& w, int m, int r, int k) {
    Shape s = shape(w, 0);
    return s.nonflats == m && s.flats == r && s.lo >= 0 && s.hi == k;
}

inline bool cornerless_free_member(const std::string& w, int m, int r, int k) {
    if (!free_tight_member(w, m, r, k))
        return false;
    Shape s = shape(w, m & 1);
    if (s.corners != 0)
        return false;
    if (!w.empty() && w[0] == ((m & 1) ? 'd' : 'u'))
        return false;
    return true;
}

inline bool cornerless_prefix_member(const std::string& w, int m, int r, int k) {
    if (!prefix_tight_member(w, m, r, k))
        return false;
    Shape s = shape(w, 0);
    return s.corners == 0 && (w.empty() || w.back() == 'f');
}

inline bool cornerless_motzkin_member(const std::string& w, int len, int flats) {
    if (static_cast<int>(w.size()) != len)
        return false;
    Shape s = shape(w, 0);
    return s.lo >= 0 && s.end == 0 && s.corners == 0 && s.flats == flats;
}

inline bool symmetric_member(const std::string& w, int len, int flats) {
    return cornerless_motzkin_member(w, len, flats) && w == reverse_complement(w);
}

/// Flat-free words of length n inside the two-sided strip of width index k
/// (no tightness, no touch requirement), free side.
inline long long strip_free_count(int n, int k) {
    long long total = 0;
    for_each_updown_word(n, [&](const std::string& w) {
        Shape s = shape(w, n & 1);
        if (s.end == 0 && s.lo >= strip_lo(k) && s.hi <= strip_hi(k))
            ++total;
    });
    return total;
}

/// Prefix side: start 0, stay in [0, k].
inline long long strip_prefix_count(int n, int k) {
    long long total = 0;
    for_each_updown_word(n, [&](const std::string& w) {
        Shape s = shape(w, 0);
        if (s.lo >= 0 && s.hi <= k)
            ++total;
    });
    return total;
}

/// Transfer-matrix count of cornerless Motzkin paths: position by position,
/// state = (height, previous step class, flats used).  A different algorithm
/// from the library's pruned search on purpose.
inline long long cornerless_motzkin_count(int len, int flats_needed) {
    if (flats_needed < 0 || flats_needed > len)
        return 0;
    const int kFlatPrev = 0, kUpPrev = 1, kDownPrev = 2;
    auto idx = [&](int h, int prev, int f) {
        return (h * 3 + prev) * (flats_needed + 1) + f;
    };
    std::vector<long long> dp(static_cast<std::size_t>((len + 1) * 3 * (flats_needed + 1)), 0);
    dp[static_cast<std::size_t>(idx(0, kFlatPrev, 0))] = 1;
    for (int pos = 0; pos < len; ++pos) {
        std::vector<long long> next(dp.size(), 0);
        for (int h = 0; h <= len; ++h)
            for (int prev = 0; prev < 3; ++prev)
                for (int f = 0; f <= flats_needed; ++f) {
                    long long ways = dp[static_cast<std::size_t>(idx(h, prev, f))];
                    if (ways == 0)
                        continue;
                    if (f < flats_needed)
                        next[static_cast<std::size_t>(idx(h, kFlatPrev, f + 1))] += ways;
                    if (h + 1 <= len && prev != kDownPrev)
                        next[static_cast<std::size_t>(idx(h + 1, kUpPrev, f))] += ways;
                    if (h - 1 >= 0 && prev != kUpPrev)
                        next[static_cast<std::size_t>(idx(h - 1, kDownPrev, f))] += ways;
                }
        dp.swap(next);
    }
    long long total = 0;
    for (int prev = 0; prev < 3; ++prev)
        total += dp[static_cast<std::size_t>(idx(0, prev, flats_needed))];
    return total;
}

/// Symmetric count by scanning half-words only: a palindromic word is its
/// first half plus (for odd length) a forced middle flat plus the mirror.
inline long long symmetric_cornerless_motzkin_count(int len, int flats_needed) {
    long long total = 0;
    for_each_word(len / 2, [&](const std::string& h) {
        std::string w = h;
        if (len % 2)
            w += 'f';
        w += reverse_complement(h);
        if (symmetric_member(w, len, flats_needed))
            ++total;
    });
    return total;
}

inline void for_each_partition_impl(int left, int cap, std::vector<long long>& stack,
                                    const std::function<void(const std::vector<long long>&)>& fn) {
    if (left == 0) {
        fn(stack);
        return;
    }
    for (long long part = std::min<long long>(cap, left); part >= 1; --part) {
        stack.push_back(part);
        for_each_partition_impl(left - static_cast<int>(part), static_cast<int>(part), stack, fn);
        stack.pop_back();
    }
}

inline void for_each_partition(int n, const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> stack;
    for_each_partition_impl(n, n, stack, fn);
}

inline std::vector<long long> transpose(const std::vector<long long>& parts) {
    std::vector<long long> t;
    if (parts.empty())
        return t;
    t.resize(static_cast<std::size_t>(parts[0]), 0);
    for (long long p : parts)
        for (long long j = 0; j < p; ++j)
            ++t[static_cast<std::size_t>(j)];
    return t;
}

inline long long hook(const std::vector<long long>& parts, const std::vector<long long>& trans,
                      int i, int j) {
    return parts[static_cast<std::size_t>(i)] - (j + 1) + trans[static_cast<std::size_t>(j)] -
           (i + 1) + 1;
}

inline bool has_hook(const std::vector<long long>& parts, long long t) {
    std::vector<long long> trans = transpose(parts);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (long long j = 0; j < parts[i]; ++j)
            if (hook(parts, trans, static_cast<int>(i), static_cast<int>(j)) == t)
                return true;
    return false;
}

inline bool is_t_core(const std::vector<long long>& parts, long long t) {
    return !has_hook(parts, t);
}

inline bool self_conjugate(const std::vector<long long>& parts) {
    return parts == transpose(parts);
}

inline int corner_count(const std::vector<long long>& parts) {
    int distinct = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i == 0 || parts[i] != parts[i - 1])
            ++distinct;
    return distinct;
}

inline void for_each_dyck_impl(std::string& w, int ups, int downs, int m,
                               const std::function<void(const std::string&)>& fn) {
    if (ups == m && downs == m) {
        fn(w);
        return;
    }
    if (ups < m) {
        w.push_back('u');
        for_each_dyck_impl(w, ups + 1, downs, m, fn);
        w.pop_back();
    }
    if (downs < ups) {
        w.push_back('d');
        for_each_dyck_impl(w, ups, downs + 1, m, fn);
        w.pop_back();
    }
}

inline void for_each_dyck(int m, const std::function<void(const std::string&)>& fn) {
    std::string w;
    for_each_dyck_impl(w, 0, 0, m, fn);
}

inline int peak_count(const std::string& w) {
    int peaks = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 'u' && w[i + 1] == 'd')
            ++peaks;
    return peaks;
}

} // namespace oracle
