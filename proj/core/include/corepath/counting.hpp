#pragma once

#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "corepath/path.hpp"

namespace corepath {

/// Exact arbitrary-precision count.
using BigCount = boost::multiprecision::cpp_int;

BigCount binomial(long long n, long long k);
/// Narayana number: paths of semilength m with i peaks.  1 <= i <= m.
BigCount narayana(int m, int i);
BigCount catalan(int m);

/// Cornerless Motzkin paths of length 2m + t - 1 with t - 1 flats,
/// equivalently t-cores with exactly m corners.
BigCount cc(int t, int m);

/// The self-conjugate analogue: symmetric cornerless Motzkin paths of length
/// 2m + t - 1 with t - 1 flats, equivalently self-conjugate t-cores with m
/// corners.  Invariant: scc(2j, m) == scc(2j + 1, m).
BigCount scc(int t, int m);

/// Signed binomial sum counting the flat-free words of length n confined to a
/// strip of width k (equal on the free and prefix sides).
BigCount cigler_count(int n, int k);

/// Symmetric Dyck paths of semilength m with exactly i peaks.
BigCount symmetric_dyck_peak_count(int m, int i);

/// Visit every member of the family in lexicographic text order (d < f < u).
/// The visitor returns false to stop early; the function returns false when
/// stopped.  Streaming: nothing is materialized beyond the current word.
bool enumerate_family(const FamilySpec& spec,
                      const std::function<bool(const PathWord&)>& visit);

/// Cardinality of the family without materializing words.  Shares the pruned
/// search of enumerate_family.
BigCount count_family(const FamilySpec& spec);

std::vector<PathWord> collect_family(const FamilySpec& spec);

/// Rectangular table of formula values with labeled axes.
struct CountTable {
    std::string formula;
    std::string row_label, col_label;
    std::vector<std::string> row_keys;
    std::vector<long long> col_keys;
    std::vector<std::vector<BigCount>> cells;

    std::string to_csv() const;
    std::string to_plain() const;
    nlohmann::json to_json() const; ///< cells as decimal strings
};

CountTable cc_table(int t_lo, int t_hi, int m_lo, int m_hi);
CountTable scc_table(int t_lo, int t_hi, int m_lo, int m_hi);
/// scc with paired rows "2,3", "4,5", ..., "10,11" (equal-count pairs).
CountTable scc_paired_table(int m_lo, int m_hi);
CountTable cigler_table(int n_lo, int n_hi, int k_lo, int k_hi);
CountTable narayana_table(int m_lo, int m_hi, int i_lo, int i_hi);
CountTable symmetric_peak_table(int m_lo, int m_hi, int i_lo, int i_hi);

} // namespace corepath
