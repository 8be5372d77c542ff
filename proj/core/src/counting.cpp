#include "corepath/counting.hpp"

#include <algorithm>
#include <cstdlib>

namespace corepath {

BigCount binomial(long long n, long long k) {
    if (n < 0)
        throw Error(Errc::OutOfRange, "binomial needs n >= 0");
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigCount result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigCount narayana(int m, int i) {
    if (m < 1 || i < 1 || i > m)
        throw Error(Errc::OutOfRange, "narayana needs 1 <= i <= m");
    return binomial(m, i) * binomial(m, i - 1) / m;
}

BigCount catalan(int m) {
    if (m < 0)
        throw Error(Errc::OutOfRange, "catalan needs m >= 0");
    return binomial(2LL * m, m) / (m + 1);
}

BigCount cc(int t, int m) {
    if (t < 1 || m < 0)
        throw Error(Errc::OutOfRange, "cc needs t >= 1 and m >= 0");
    if (m == 0)
        return 1;
    BigCount total = 0;
    for (int i = 1; i <= m; ++i)
        total += narayana(m, i) * binomial(t + 2LL * m - 2 * i, 2LL * m);
    return total;
}

BigCount symmetric_dyck_peak_count(int m, int i) {
    if (m < 1 || i < 1 || i > m)
        throw Error(Errc::OutOfRange, "symmetric_dyck_peak_count needs 1 <= i <= m");
    return binomial((m - 1) / 2, (i - 1) / 2) * binomial(m / 2, i / 2);
}

BigCount scc(int t, int m) {
    if (t < 1 || m < 0)
        throw Error(Errc::OutOfRange, "scc needs t >= 1 and m >= 0");
    if (m == 0)
        return 1;
    int q = t / 2;
    BigCount total = 0;
    for (int i = 1; i <= m; ++i)
        total += symmetric_dyck_peak_count(m, i) * binomial(q + static_cast<long long>(m) - i, m);
    return total;
}

BigCount cigler_count(int n, int k) {
    if (n < 0 || k < 0)
        throw Error(Errc::OutOfRange, "cigler_count needs n >= 0 and k >= 0");
    BigCount total = 0;
    long long period = k + 2;
    for (long long j = -(n / period) - 1; j <= n / period + 1; ++j) {
        long long num = n + period * j;
        long long half = num >= 0 ? num / 2 : -((-num + 1) / 2);
        if (half < 0 || half > n)
            continue;
        BigCount term = binomial(n, half);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    if (total < 0)
        throw Error(Errc::InternalInconsistency, "strip count came out negative");
    return total;
}

namespace {

struct SearchPlan {
    int n = 0, m = 0, r = 0;
    int lo = 0, hi = 0;
    int start = 0;
    std::optional<int> end_height;
    std::optional<int> touch_line;
    bool cornerless = false;
    std::optional<Step> banned_first;
    bool last_flat = false;
    bool symmetric = false;
};

SearchPlan make_plan(const FamilySpec& spec) {
    if (spec.m < 0 || spec.r < 0)
        throw Error(Errc::OutOfRange, "family needs m >= 0 and r >= 0");
    SearchPlan plan;
    plan.m = spec.m;
    plan.r = spec.r;
    plan.n = spec.m + spec.r;
    switch (spec.family) {
        case Family::FreeMotzkinTight:
        case Family::CornerlessFreeTight:
            if (spec.k < 0)
                throw Error(Errc::OutOfRange, "family needs k >= 0");
            plan.start = spec.m & 1;
            plan.lo = -(spec.k / 2);
            plan.hi = (spec.k + 1) / 2;
            plan.end_height = 0;
            plan.touch_line = boundary_line(spec.k);
            if (spec.family == Family::CornerlessFreeTight) {
                plan.cornerless = true;
                plan.banned_first = (spec.m & 1) ? Step::Down : Step::Up;
            }
            break;
        case Family::MotzkinPrefixTight:
        case Family::CornerlessPrefixTight:
            if (spec.k < 0)
                throw Error(Errc::OutOfRange, "family needs k >= 0");
            plan.lo = 0;
            plan.hi = spec.k;
            plan.touch_line = spec.k;
            if (spec.family == Family::CornerlessPrefixTight) {
                plan.cornerless = true;
                plan.last_flat = plan.n > 0;
            }
            break;
        case Family::CornerlessMotzkin:
        case Family::SymmetricCornerlessMotzkin:
            plan.lo = 0;
            plan.hi = spec.m; // no height can exceed the non-flat count
            plan.end_height = 0;
            plan.cornerless = true;
            plan.symmetric = spec.family == Family::SymmetricCornerlessMotzkin;
            break;
    }
    return plan;
}

struct Search {
    const SearchPlan& plan;
    const std::function<bool(const std::string&)>& leaf;
    std::string buffer;
    bool stopped = false;

    bool feasible(int height, int rem_m, bool touched) const {
        if (plan.end_height && std::abs(height - *plan.end_height) > rem_m)
            return false;
        if (plan.touch_line && !touched) {
            int to_line = std::abs(*plan.touch_line - height);
            int back = plan.end_height ? std::abs(*plan.touch_line - *plan.end_height) : 0;
            if (to_line + back > rem_m)
                return false;
        }
        return true;
    }

    void walk(int pos, int height, int flats, bool touched) {
        if (stopped)
            return;
        if (pos == plan.n) {
            if (plan.touch_line && !touched)
                return;
            if (plan.end_height && height != *plan.end_height)
                return;
            if (plan.symmetric) {
                for (std::size_t i = 0, j = buffer.size(); i < j; ++i, --j) {
                    char a = buffer[i], b = buffer[j - 1];
                    char mirrored = b == 'u' ? 'd' : (b == 'd' ? 'u' : 'f');
                    if (a != mirrored)
                        return;
                }
            }
            if (!leaf(buffer))
                stopped = true;
            return;
        }
        int rem_m = plan.m - (pos - flats);
        int rem_r = plan.r - flats;
        if (plan.last_flat && rem_r == 0)
            return; // the final step must still be a flat
        char prev = pos > 0 ? buffer[pos - 1] : '\0';
        bool final_pos = pos == plan.n - 1;

        auto try_step = [&](char c, int dh) {
            if (stopped)
                return;
            if (c == 'f') {
                if (rem_r == 0)
                    return;
            } else {
                if (rem_m == 0)
                    return;
                if (plan.last_flat && final_pos)
                    return;
                if (plan.cornerless && prev != '\0' && prev != 'f' && prev != c)
                    return;
            }
            if (pos == 0 && plan.banned_first && static_cast<char>(*plan.banned_first) == c)
                return;
            int h = height + dh;
            if (h < plan.lo || h > plan.hi)
                return;
            int next_rem_m = rem_m - (c == 'f' ? 0 : 1);
            bool next_touched = touched || (plan.touch_line && h == *plan.touch_line);
            if (!feasible(h, next_rem_m, next_touched))
                return;
            buffer.push_back(c);
            walk(pos + 1, h, flats + (c == 'f' ? 1 : 0), next_touched);
            buffer.pop_back();
        };

        try_step('d', -1);
        try_step('f', 0);
        try_step('u', 1);
    }

    void run() {
        if (plan.start < plan.lo || plan.start > plan.hi)
            return;
        bool touched = plan.touch_line && plan.start == *plan.touch_line;
        if (!feasible(plan.start, plan.m, touched))
            return;
        buffer.reserve(static_cast<std::size_t>(plan.n));
        walk(0, plan.start, 0, touched);
    }
};

} // namespace

bool enumerate_family(const FamilySpec& spec, const std::function<bool(const PathWord&)>& visit) {
    SearchPlan plan = make_plan(spec);
    std::function<bool(const std::string&)> leaf = [&](const std::string& text) {
        return visit(PathWord::parse(text));
    };
    Search search{plan, leaf};
    search.run();
    return !search.stopped;
}

BigCount count_family(const FamilySpec& spec) {
    SearchPlan plan = make_plan(spec);
    BigCount count = 0;
    std::function<bool(const std::string&)> leaf = [&](const std::string&) {
        ++count;
        return true;
    };
    Search search{plan, leaf};
    search.run();
    return count;
}

std::vector<PathWord> collect_family(const FamilySpec& spec) {
    std::vector<PathWord> words;
    enumerate_family(spec, [&](const PathWord& w) {
        words.push_back(w);
        return true;
    });
    return words;
}

std::string CountTable::to_csv() const {
    std::string out = row_label;
    for (long long c : col_keys)
        out += "," + std::to_string(c);
    out += '\n';
    for (std::size_t i = 0; i < row_keys.size(); ++i) {
        out += '"' + row_keys[i] + '"';
        for (const BigCount& cell : cells[i])
            out += "," + cell.str();
        out += '\n';
    }
    return out;
}

std::string CountTable::to_plain() const {
    std::vector<std::size_t> widths(col_keys.size() + 1, 0);
    widths[0] = row_label.size();
    for (const std::string& key : row_keys)
        widths[0] = std::max(widths[0], key.size());
    std::vector<std::vector<std::string>> text(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (const BigCount& cell : cells[i])
            text[i].push_back(cell.str());
    for (std::size_t j = 0; j < col_keys.size(); ++j) {
        widths[j + 1] = std::to_string(col_keys[j]).size();
        for (const auto& row : text)
            widths[j + 1] = std::max(widths[j + 1], row[j].size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    std::string out = pad(row_label, widths[0]);
    for (std::size_t j = 0; j < col_keys.size(); ++j)
        out += "  " + pad(std::to_string(col_keys[j]), widths[j + 1]);
    out += '\n';
    for (std::size_t i = 0; i < row_keys.size(); ++i) {
        out += pad(row_keys[i], widths[0]);
        for (std::size_t j = 0; j < col_keys.size(); ++j)
            out += "  " + pad(text[i][j], widths[j + 1]);
        out += '\n';
    }
    return out;
}

nlohmann::json CountTable::to_json() const {
    nlohmann::json cells_json = nlohmann::json::array();
    for (const auto& row : cells) {
        nlohmann::json row_json = nlohmann::json::array();
        for (const BigCount& cell : row)
            row_json.push_back(cell.str());
        cells_json.push_back(std::move(row_json));
    }
    return {{"formula", formula},
            {"row_label", row_label},
            {"col_label", col_label},
            {"rows", row_keys},
            {"cols", col_keys},
            {"cells", std::move(cells_json)}};
}

namespace {

CountTable formula_table(std::string formula, std::string row_label, std::string col_label,
                         int r_lo, int r_hi, int c_lo, int c_hi,
                         const std::function<BigCount(int, int)>& value) {
    if (r_lo > r_hi || c_lo > c_hi)
        throw Error(Errc::OutOfRange, "empty table range");
    CountTable table;
    table.formula = std::move(formula);
    table.row_label = std::move(row_label);
    table.col_label = std::move(col_label);
    for (int r = r_lo; r <= r_hi; ++r) {
        table.row_keys.push_back(std::to_string(r));
        std::vector<BigCount> row;
        for (int c = c_lo; c <= c_hi; ++c) {
            if (r == r_lo)
                table.col_keys.push_back(c);
            row.push_back(value(r, c));
        }
        table.cells.push_back(std::move(row));
    }
    return table;
}

} // namespace

CountTable cc_table(int t_lo, int t_hi, int m_lo, int m_hi) {
    return formula_table("cc", "t", "m", t_lo, t_hi, m_lo, m_hi,
                         [](int t, int m) { return cc(t, m); });
}

CountTable scc_table(int t_lo, int t_hi, int m_lo, int m_hi) {
    return formula_table("scc", "t", "m", t_lo, t_hi, m_lo, m_hi,
                         [](int t, int m) { return scc(t, m); });
}

CountTable scc_paired_table(int m_lo, int m_hi) {
    CountTable table = formula_table("scc", "t", "m", 1, 5, m_lo, m_hi,
                                     [](int j, int m) { return scc(2 * j, m); });
    for (int j = 1; j <= 5; ++j)
        table.row_keys[static_cast<std::size_t>(j - 1)] =
            std::to_string(2 * j) + "," + std::to_string(2 * j + 1);
    return table;
}

CountTable cigler_table(int n_lo, int n_hi, int k_lo, int k_hi) {
    return formula_table("cigler", "n", "k", n_lo, n_hi, k_lo, k_hi,
                         [](int n, int k) { return cigler_count(n, k); });
}

CountTable narayana_table(int m_lo, int m_hi, int i_lo, int i_hi) {
    return formula_table("narayana", "m", "i", m_lo, m_hi, i_lo, i_hi, [](int m, int i) {
        return (i >= 1 && i <= m) ? narayana(m, i) : BigCount(0);
    });
}

CountTable symmetric_peak_table(int m_lo, int m_hi, int i_lo, int i_hi) {
    return formula_table("sympeaks", "m", "i", m_lo, m_hi, i_lo, i_hi, [](int m, int i) {
        return (i >= 1 && i <= m) ? symmetric_dyck_peak_count(m, i) : BigCount(0);
    });
}

} // namespace corepath
