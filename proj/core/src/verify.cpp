#include "corepath/verify.hpp"

#include <atomic>
#include <map>
#include <thread>

#include "corepath/core_maps.hpp"
#include "corepath/counting.hpp"
#include "corepath/partition.hpp"

namespace corepath {

namespace {

struct TupleOutcome {
    long long checked = 0;
    std::optional<std::string> failure;
};

int resolve_workers(int requested) {
    if (requested > 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run fn over [0, count) on a worker pool and merge outcomes in index order,
/// so the reported counterexample does not depend on the worker count.
PropertyResult sweep_property(std::string suite, std::string name, std::size_t count, int workers,
                              const std::function<TupleOutcome(std::size_t)>& fn) {
    std::vector<TupleOutcome> outcomes(count);
    auto guarded = [&](std::size_t i) -> TupleOutcome {
        try {
            return fn(i);
        } catch (const std::exception& e) {
            return {0, std::string("exception: ") + e.what()};
        }
    };
    int pool = std::max(1, std::min<int>(resolve_workers(workers), static_cast<int>(count)));
    if (pool <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            outcomes[i] = guarded(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(pool));
        for (int w = 0; w < pool; ++w) {
            threads.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    outcomes[i] = guarded(i);
            });
        }
        for (auto& t : threads)
            t.join();
    }
    PropertyResult result{std::move(suite), std::move(name), true, ""};
    long long total = 0;
    for (const TupleOutcome& o : outcomes) {
        total += o.checked;
        if (o.failure && result.passed) {
            result.passed = false;
            result.detail = *o.failure;
        }
    }
    if (result.passed)
        result.detail = "checked " + std::to_string(total) + " cases";
    return result;
}

struct MRK {
    int m, r, k;
};

std::vector<MRK> family_tuples(int max_size) {
    std::vector<MRK> tuples;
    for (int m = 0; m <= max_size; ++m)
        for (int r = 0; m + r <= max_size; ++r)
            for (int k = 0; k <= m + 1; ++k)
                tuples.push_back({m, r, k});
    return tuples;
}

std::string describe(const MRK& p) {
    return "(m=" + std::to_string(p.m) + ", r=" + std::to_string(p.r) +
           ", k=" + std::to_string(p.k) + ")";
}

using Forward = std::function<PathWord(const PathWord&)>;

Forward forward_map(const VerifyOptions& options) {
    PhiMutation mu = options.mutation;
    return [mu](const PathWord& w) { return phi_variant(w, mu); };
}

// ---- bijection suite -------------------------------------------------------

PropertyResult check_forward_roundtrip(const VerifyOptions& opt) {
    auto tuples = family_tuples(opt.max_size);
    Forward fwd = forward_map(opt);
    return sweep_property("bijection", "forward_roundtrip", tuples.size(), opt.workers,
                          [&, fwd](std::size_t i) {
        const MRK& p = tuples[i];
        TupleOutcome out;
        FamilySpec free_spec{Family::FreeMotzkinTight, p.m, p.r, p.k};
        FamilySpec prefix_spec{Family::MotzkinPrefixTight, p.m, p.r, p.k};
        enumerate_family(free_spec, [&](const PathWord& word) {
            ++out.checked;
            PathWord image = fwd(word);
            if (!is_member(image, prefix_spec)) {
                out.failure = "image of " + word.text() + " leaves the prefix family " + describe(p);
                return false;
            }
            if (psi(image) != word) {
                out.failure = "round trip broke at " + word.text() + " " + describe(p);
                return false;
            }
            return true;
        });
        return out;
    });
}

PropertyResult check_backward_roundtrip(const VerifyOptions& opt) {
    auto tuples = family_tuples(opt.max_size);
    Forward fwd = forward_map(opt);
    return sweep_property("bijection", "backward_roundtrip", tuples.size(), opt.workers,
                          [&, fwd](std::size_t i) {
        const MRK& p = tuples[i];
        TupleOutcome out;
        FamilySpec free_spec{Family::FreeMotzkinTight, p.m, p.r, p.k};
        FamilySpec prefix_spec{Family::MotzkinPrefixTight, p.m, p.r, p.k};
        enumerate_family(prefix_spec, [&](const PathWord& word) {
            ++out.checked;
            PathWord pre = psi(word);
            if (!is_member(pre, free_spec)) {
                out.failure = "preimage of " + word.text() + " leaves the free family " + describe(p);
                return false;
            }
            if (fwd(pre) != word) {
                out.failure = "round trip broke at " + word.text() + " " + describe(p);
                return false;
            }
            return true;
        });
        return out;
    });
}

PropertyResult check_cardinality_match(const VerifyOptions& opt) {
    auto tuples = family_tuples(opt.max_size);
    return sweep_property("bijection", "cardinality_match", tuples.size(), opt.workers,
                          [&](std::size_t i) {
        const MRK& p = tuples[i];
        TupleOutcome out;
        out.checked = 1;
        BigCount free_count = count_family({Family::FreeMotzkinTight, p.m, p.r, p.k});
        BigCount prefix_count = count_family({Family::MotzkinPrefixTight, p.m, p.r, p.k});
        if (free_count != prefix_count)
            out.failure = "family sizes differ at " + describe(p) + ": " + free_count.str() +
                          " vs " + prefix_count.str();
        return out;
    });
}

// ---- runs suite ------------------------------------------------------------

int expected_run_delta(const PathProfile& p) {
    bool odd = (p.nonflat_count & 1) != 0;
    bool starts_up = p.first_run_direction == RunDirection::Upward;
    return (starts_up == odd) ? -1 : 0;
}

PropertyResult check_run_delta_contract(const VerifyOptions& opt) {
    auto tuples = family_tuples(opt.max_size);
    Forward fwd = forward_map(opt);
    return sweep_property("runs", "run_delta_contract", tuples.size(), opt.workers,
                          [&, fwd](std::size_t i) {
        const MRK& p = tuples[i];
        TupleOutcome out;
        if (p.m < 1)
            return out;
        enumerate_family({Family::FreeMotzkinTight, p.m, p.r, p.k}, [&](const PathWord& word) {
            ++out.checked;
            int delta = run_count(fwd(word)) - run_count(word);
            int expected = expected_run_delta(profile(word, free_start_height(word)));
            if (delta != expected || delta < -1 || delta > 0) {
                out.failure = "run delta " + std::to_string(delta) + " != " +
                              std::to_string(expected) + " at " + word.text() + " " + describe(p);
                return false;
            }
            return true;
        });
        return out;
    });
}

PropertyResult check_run_class_preserved(const VerifyOptions& opt) {
    auto tuples = family_tuples(opt.max_size);
    Forward fwd = forward_map(opt);
    return sweep_property("runs", "run_class_preserved", tuples.size(), opt.workers,
                          [&, fwd](std::size_t i) {
        const MRK& p = tuples[i];
        TupleOutcome out;
        enumerate_family({Family::FreeMotzkinTight, p.m, p.r, p.k}, [&](const PathWord& word) {
            ++out.checked;
            PathWord image = fwd(word);
            int free_index = run_class(word, PathSide::Free).index;
            int prefix_index = run_class(image, PathSide::Prefix).index;
            if (free_index != prefix_index) {
                out.failure = "class " + std::to_string(free_index) + " maps to class " +
                              std::to_string(prefix_index) + " at " + word.text() + " " + describe(p);
                return false;
            }
            return true;
        });
        return out;
    });
}

PropertyResult check_class_histograms(const VerifyOptions& opt) {
    auto tuples = family_tuples(opt.max_size);
    return sweep_property("runs", "class_histogram_match", tuples.size(), opt.workers,
                          [&](std::size_t i) {
        const MRK& p = tuples[i];
        TupleOutcome out;
        std::map<int, long long> free_hist, prefix_hist;
        enumerate_family({Family::FreeMotzkinTight, p.m, p.r, p.k}, [&](const PathWord& w) {
            ++free_hist[run_class(w, PathSide::Free).index];
            ++out.checked;
            return true;
        });
        enumerate_family({Family::MotzkinPrefixTight, p.m, p.r, p.k}, [&](const PathWord& w) {
            ++prefix_hist[run_class(w, PathSide::Prefix).index];
            return true;
        });
        if (free_hist != prefix_hist)
            out.failure = "run-class histograms differ at " + describe(p);
        return out;
    });
}

PropertyResult check_run_fixture(const VerifyOptions&) {
    PropertyResult result{"runs", "run_fixture", true, ""};
    struct Fixture {
        const char* word;
        int runs;
    } fixtures[] = {{"dduuuuudddddduuu", 4}, {"uuuuuuddduuuddud", 6}};
    for (const auto& f : fixtures) {
        int got = run_count(PathWord::parse(f.word));
        if (got != f.runs) {
            result.passed = false;
            result.detail = std::string(f.word) + " has " + std::to_string(got) +
                            " runs, expected " + std::to_string(f.runs);
            return result;
        }
    }
    result.detail = "checked 2 cases";
    return result;
}

// ---- cornerless suite ------------------------------------------------------

PropertyResult check_cornerless_forward(const VerifyOptions& opt) {
    auto tuples = family_tuples(opt.max_size);
    Forward fwd = forward_map(opt);
    return sweep_property("cornerless", "cornerless_forward", tuples.size(), opt.workers,
                          [&, fwd](std::size_t i) {
        const MRK& p = tuples[i];
        TupleOutcome out;
        FamilySpec target{Family::CornerlessPrefixTight, p.m, p.r, p.k};
        enumerate_family({Family::CornerlessFreeTight, p.m, p.r, p.k}, [&](const PathWord& word) {
            ++out.checked;
            PathWord image = fwd(word);
            if (!is_member(image, target)) {
                out.failure = "image of " + word.text() + " is not cornerless-prefix " + describe(p);
                return false;
            }
            if (psi(image) != word) {
                out.failure = "round trip broke at " + word.text() + " " + describe(p);
                return false;
            }
            return true;
        });
        return out;
    });
}

PropertyResult check_cornerless_backward(const VerifyOptions& opt) {
    auto tuples = family_tuples(opt.max_size);
    Forward fwd = forward_map(opt);
    return sweep_property("cornerless", "cornerless_backward", tuples.size(), opt.workers,
                          [&, fwd](std::size_t i) {
        const MRK& p = tuples[i];
        TupleOutcome out;
        FamilySpec target{Family::CornerlessFreeTight, p.m, p.r, p.k};
        enumerate_family({Family::CornerlessPrefixTight, p.m, p.r, p.k}, [&](const PathWord& word) {
            ++out.checked;
            PathWord pre = psi(word);
            if (!is_member(pre, target)) {
                out.failure = "preimage of " + word.text() + " is not cornerless-free " + describe(p);
                return false;
            }
            if (fwd(pre) != word) {
                out.failure = "round trip broke at " + word.text() + " " + describe(p);
                return false;
            }
            return true;
        });
        return out;
    });
}

PropertyResult check_cornerless_cardinality(const VerifyOptions& opt) {
    auto tuples = family_tuples(opt.max_size);
    return sweep_property("cornerless", "cornerless_cardinality", tuples.size(), opt.workers,
                          [&](std::size_t i) {
        const MRK& p = tuples[i];
        TupleOutcome out;
        out.checked = 1;
        BigCount free_count = count_family({Family::CornerlessFreeTight, p.m, p.r, p.k});
        BigCount prefix_count = count_family({Family::CornerlessPrefixTight, p.m, p.r, p.k});
        if (free_count != prefix_count)
            out.failure = "cornerless family sizes differ at " + describe(p) + ": " +
                          free_count.str() + " vs " + prefix_count.str();
        return out;
    });
}

// ---- partition helpers -----------------------------------------------------

void partitions_of(int n, std::vector<long long>& stack,
                   const std::function<void(const std::vector<long long>&)>& emit) {
    if (n == 0) {
        emit(stack);
        return;
    }
    long long cap = stack.empty() ? n : std::min<long long>(stack.back(), n);
    for (long long part = cap; part >= 1; --part) {
        stack.push_back(part);
        partitions_of(n - static_cast<int>(part), stack, emit);
        stack.pop_back();
    }
}

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> all;
    std::vector<long long> stack;
    for (int n = 0; n <= max_weight; ++n)
        partitions_of(n, stack, [&](const std::vector<long long>& parts) {
            all.emplace_back(parts);
        });
    return all;
}

long long sequence_variation(const BeadSequence& seq) {
    long long sum = 0, prev = 0;
    for (long long v : seq.values) {
        sum += std::abs(v - prev);
        prev = v;
    }
    return sum + std::abs(prev);
}

// ---- tcore suite -----------------------------------------------------------

PropertyResult check_beta_roundtrip(const VerifyOptions& opt) {
    auto parts = partitions_up_to(24);
    return sweep_property("tcore", "beta_roundtrip", parts.size(), opt.workers,
                          [&](std::size_t i) {
        const Partition& p = parts[i];
        TupleOutcome out;
        out.checked = 1;
        if (beta_set_to_partition(beta_set(p)) != p) {
            out.failure = "beta round trip broke at " + p.to_string();
            return out;
        }
        if (conjugate(conjugate(p)) != p) {
            out.failure = "conjugation is not an involution at " + p.to_string();
            return out;
        }
        std::vector<long long> beta = beta_set(p);
        for (int row = 1; row <= p.length(); ++row) {
            if (hook_length(p, row, 1) != beta[static_cast<std::size_t>(row - 1)]) {
                out.failure = "beta value is not the first-column hook at " + p.to_string();
                return out;
            }
        }
        return out;
    });
}

PropertyResult check_core_dual_route(const VerifyOptions& opt) {
    auto parts = partitions_up_to(20);
    return sweep_property("tcore", "core_dual_route", parts.size(), opt.workers,
                          [&](std::size_t i) {
        const Partition& p = parts[i];
        TupleOutcome out;
        for (int t = 1; t <= 8; ++t) {
            ++out.checked;
            bool core = is_t_core(p, t); // cross-checks beta route against the hook scan
            bool encodable = true;
            try {
                abacus_encode(p, t);
            } catch (const Error&) {
                encodable = false;
            }
            if (core != encodable) {
                out.failure = "core test and abacus disagree at " + p.to_string() +
                              ", t=" + std::to_string(t);
                return out;
            }
        }
        return out;
    });
}

struct TM {
    int t, m;
};

std::vector<TM> tm_tuples(int t_max, int m_max) {
    std::vector<TM> tuples;
    for (int t = 1; t <= t_max; ++t)
        for (int m = 0; m <= m_max; ++m)
            tuples.push_back({t, m});
    return tuples;
}

PropertyResult check_ordinary_chain(const VerifyOptions& opt) {
    auto tuples = tm_tuples(6, 5);
    return sweep_property("tcore", "ordinary_chain_roundtrip", tuples.size(), opt.workers,
                          [&](std::size_t i) {
        auto [t, m] = tuples[i];
        TupleOutcome out;
        BigCount seen = 0;
        enumerate_family({Family::CornerlessMotzkin, 2 * m, t - 1, 0}, [&](const PathWord& word) {
            ++out.checked;
            ++seen;
            Partition core = path_to_tcore(word, t);
            if (!is_t_core(core, t) || corner_count(core) != m) {
                out.failure = "decode of " + word.text() + " (t=" + std::to_string(t) +
                              ") is not a " + std::to_string(t) + "-core with " +
                              std::to_string(m) + " corners";
                return false;
            }
            if (tcore_to_path(core, t) != word) {
                out.failure = "chain round trip broke at " + word.text() + ", t=" + std::to_string(t);
                return false;
            }
            if (sequence_variation(abacus_encode(core, t)) != 2 * m) {
                out.failure = "column variation != 2m at " + core.to_string() +
                              ", t=" + std::to_string(t);
                return false;
            }
            return true;
        });
        if (!out.failure && seen != cc(t, m))
            out.failure = "path count " + seen.str() + " != cc(" + std::to_string(t) + "," +
                          std::to_string(m) + ") = " + cc(t, m).str();
        return out;
    });
}

PropertyResult check_hook_ceiling(const VerifyOptions& opt) {
    auto tuples = tm_tuples(6, 5);
    return sweep_property("tcore", "hook_ceiling_vs_width", tuples.size(), opt.workers,
                          [&](std::size_t i) {
        auto [t, m] = tuples[i];
        TupleOutcome out;
        enumerate_family({Family::CornerlessMotzkin, 2 * m, t - 1, 0}, [&](const PathWord& word) {
            Partition core = path_to_tcore(word, t);
            long long h11 = core.empty() ? 0 : hook_length(core, 1, 1);
            int peak = profile(word, 0).max_height;
            for (int k = 1; k <= m + 1; ++k) {
                ++out.checked;
                if ((h11 < static_cast<long long>(k) * t) != (peak <= k)) {
                    out.failure = "corner hook bound and strip bound disagree at " + word.text() +
                                  ", t=" + std::to_string(t) + ", k=" + std::to_string(k);
                    return false;
                }
            }
            return true;
        });
        return out;
    });
}

// ---- self_conjugate suite --------------------------------------------------

PropertyResult check_md_roundtrip(const VerifyOptions& opt) {
    auto parts = partitions_up_to(24);
    return sweep_property("self_conjugate", "md_roundtrip", parts.size(), opt.workers,
                          [&](std::size_t i) {
        const Partition& p = parts[i];
        TupleOutcome out;
        if (!is_self_conjugate(p))
            return out;
        out.checked = 1;
        std::vector<long long> hooks = md_set(p);
        for (std::size_t j = 0; j < hooks.size(); ++j) {
            if (hooks[j] % 2 == 0 || hooks[j] <= 0 ||
                (j > 0 && hooks[j] >= hooks[j - 1])) {
                out.failure = "diagonal hooks not strictly decreasing odd at " + p.to_string();
                return out;
            }
        }
        if (md_set_to_partition(hooks) != p)
            out.failure = "diagonal hook round trip broke at " + p.to_string();
        return out;
    });
}

PropertyResult check_fms_vs_hooks(const VerifyOptions& opt) {
    auto parts = partitions_up_to(20);
    return sweep_property("self_conjugate", "doubled_abacus_vs_hooks", parts.size(), opt.workers,
                          [&](std::size_t i) {
        const Partition& p = parts[i];
        TupleOutcome out;
        if (!is_self_conjugate(p))
            return out;
        for (int t = 2; t <= 8; ++t) {
            ++out.checked;
            bool encodable = true;
            try {
                doubled_abacus_encode(p, t);
            } catch (const Error&) {
                encodable = false;
            }
            if (encodable != is_t_core(p, t)) {
                out.failure = "doubled abacus and hook scan disagree at " + p.to_string() +
                              ", t=" + std::to_string(t);
                return out;
            }
        }
        return out;
    });
}

PropertyResult check_signed_roundtrip(const VerifyOptions& opt) {
    struct Item {
        int t;
        std::vector<long long> values;
    };
    std::vector<Item> items;
    for (int t = 2; t <= 7; ++t) {
        int q = t / 2;
        std::vector<long long> values(static_cast<std::size_t>(q), -2);
        while (true) {
            items.push_back({t, values});
            int pos = 0;
            while (pos < q && values[static_cast<std::size_t>(pos)] == 2) {
                values[static_cast<std::size_t>(pos)] = -2;
                ++pos;
            }
            if (pos == q)
                break;
            ++values[static_cast<std::size_t>(pos)];
        }
    }
    return sweep_property("self_conjugate", "signed_roundtrip", items.size(), opt.workers,
                          [items](std::size_t i) {
        const auto& item = items[i];
        TupleOutcome out;
        out.checked = 1;
        BeadSequence seq{item.t, true, item.values};
        Partition p = doubled_abacus_decode(seq);
        if (!is_self_conjugate(p) || !is_t_core(p, item.t)) {
            out.failure = "decode of " + to_string(seq) + " (t=" + std::to_string(item.t) +
                          ") is not a self-conjugate core";
            return out;
        }
        if (doubled_abacus_encode(p, item.t) != seq)
            out.failure = "signed round trip broke at " + to_string(seq) +
                          ", t=" + std::to_string(item.t);
        return out;
    });
}

PropertyResult check_sc_chain(const VerifyOptions& opt) {
    auto tuples = tm_tuples(7, 5);
    return sweep_property("self_conjugate", "sc_chain_roundtrip", tuples.size(), opt.workers,
                          [&](std::size_t i) {
        auto [t, m] = tuples[i];
        TupleOutcome out;
        BigCount seen = 0;
        enumerate_family({Family::SymmetricCornerlessMotzkin, 2 * m, t - 1, 0},
                         [&](const PathWord& word) {
            ++out.checked;
            ++seen;
            Partition core = symmetric_path_to_sc_tcore(word, t);
            if (!is_self_conjugate(core) || !is_t_core(core, t) || corner_count(core) != m) {
                out.failure = "decode of " + word.text() + " (t=" + std::to_string(t) +
                              ") is not a self-conjugate core with " + std::to_string(m) + " corners";
                return false;
            }
            if (sc_tcore_to_symmetric_path(core, t) != word) {
                out.failure = "chain round trip broke at " + word.text() + ", t=" + std::to_string(t);
                return false;
            }
            long long variation = sequence_variation(doubled_abacus_encode(core, t));
            if (variation != m + (m & 1)) {
                out.failure = "signed variation != m + (m mod 2) at " + core.to_string() +
                              ", t=" + std::to_string(t);
                return false;
            }
            return true;
        });
        if (!out.failure && seen != scc(t, m))
            out.failure = "path count " + seen.str() + " != scc(" + std::to_string(t) + "," +
                          std::to_string(m) + ") = " + scc(t, m).str();
        return out;
    });
}

// ---- counts suite ----------------------------------------------------------

const long long kOrdinaryTable[5][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},
    {3, 5, 7, 9, 11, 13, 15, 17},
    {6, 16, 31, 51, 76, 106, 141, 181},
    {10, 40, 105, 219, 396, 650, 995, 1445},
    {15, 85, 295, 771, 1681, 3235, 5685, 9325},
};

const long long kSelfConjugateTable[5][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},
    {2, 4, 5, 7, 8, 10, 11, 13},
    {3, 9, 15, 27, 37, 55, 69, 93},
    {4, 16, 34, 76, 124, 216, 309, 471},
    {5, 25, 65, 175, 335, 675, 1095, 1875},
};

PropertyResult check_ordinary_table(const VerifyOptions&) {
    PropertyResult result{"counts", "ordinary_table_cells", true, ""};
    long long checked = 0;
    for (int t = 2; t <= 6; ++t) {
        for (int m = 1; m <= 8; ++m) {
            ++checked;
            if (cc(t, m) != kOrdinaryTable[t - 2][m - 1]) {
                result.passed = false;
                result.detail = "cc(" + std::to_string(t) + "," + std::to_string(m) + ") = " +
                                cc(t, m).str() + ", table says " +
                                std::to_string(kOrdinaryTable[t - 2][m - 1]);
                return result;
            }
        }
    }
    result.detail = "checked " + std::to_string(checked) + " cases";
    return result;
}

PropertyResult check_self_conjugate_table(const VerifyOptions&) {
    PropertyResult result{"counts", "self_conjugate_table_cells", true, ""};
    long long checked = 0;
    for (int j = 1; j <= 5; ++j) {
        for (int m = 1; m <= 8; ++m) {
            ++checked;
            BigCount even_row = scc(2 * j, m), odd_row = scc(2 * j + 1, m);
            if (even_row != kSelfConjugateTable[j - 1][m - 1] || even_row != odd_row) {
                result.passed = false;
                result.detail = "scc(" + std::to_string(2 * j) + "," + std::to_string(m) + ") = " +
                                even_row.str() + ", scc(" + std::to_string(2 * j + 1) + "," +
                                std::to_string(m) + ") = " + odd_row.str() + ", table says " +
                                std::to_string(kSelfConjugateTable[j - 1][m - 1]);
                return result;
            }
        }
    }
    result.detail = "checked " + std::to_string(checked) + " cases";
    return result;
}

PropertyResult check_cc_vs_enumeration(const VerifyOptions& opt) {
    auto tuples = tm_tuples(6, 6);
    return sweep_property("counts", "cc_vs_enumeration", tuples.size(), opt.workers,
                          [&](std::size_t i) {
        auto [t, m] = tuples[i];
        TupleOutcome out;
        out.checked = 1;
        BigCount enumerated = count_family({Family::CornerlessMotzkin, 2 * m, t - 1, 0});
        if (enumerated != cc(t, m))
            out.failure = "cc(" + std::to_string(t) + "," + std::to_string(m) + ") = " +
                          cc(t, m).str() + " but enumeration found " + enumerated.str();
        return out;
    });
}

PropertyResult check_scc_vs_enumeration(const VerifyOptions& opt) {
    auto tuples = tm_tuples(7, 6);
    return sweep_property("counts", "scc_vs_enumeration", tuples.size(), opt.workers,
                          [&](std::size_t i) {
        auto [t, m] = tuples[i];
        TupleOutcome out;
        out.checked = 1;
        BigCount enumerated = count_family({Family::SymmetricCornerlessMotzkin, 2 * m, t - 1, 0});
        if (enumerated != scc(t, m))
            out.failure = "scc(" + std::to_string(t) + "," + std::to_string(m) + ") = " +
                          scc(t, m).str() + " but enumeration found " + enumerated.str();
        return out;
    });
}

PropertyResult check_strip_counts(const VerifyOptions& opt) {
    struct NK {
        int n, k;
    };
    std::vector<NK> tuples;
    for (int n = 0; n <= 14; ++n)
        for (int k = 0; k <= 8; ++k)
            tuples.push_back({n, k});
    return sweep_property("counts", "strip_counts_match", tuples.size(), opt.workers,
                          [tuples](std::size_t idx) {
        auto [n, k] = tuples[idx];
        TupleOutcome out;
        out.checked = 1;
        BigCount free_total = 0, prefix_total = 0;
        for (int i = 0; i <= k; ++i) {
            free_total += count_family({Family::FreeMotzkinTight, n, 0, i});
            prefix_total += count_family({Family::MotzkinPrefixTight, n, 0, i});
        }
        BigCount formula = cigler_count(n, k);
        if (formula != free_total || formula != prefix_total)
            out.failure = "cigler_count(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                          formula.str() + " but families have " + free_total.str() + " and " +
                          prefix_total.str();
        return out;
    });
}

PropertyResult check_narayana_sums(const VerifyOptions&) {
    PropertyResult result{"counts", "narayana_sums", true, ""};
    long long checked = 0;
    for (int m = 1; m <= 12; ++m) {
        BigCount total = 0;
        for (int i = 1; i <= m; ++i) {
            total += narayana(m, i);
            ++checked;
            if (narayana(m, i) != narayana(m, m + 1 - i)) {
                result.passed = false;
                result.detail = "narayana symmetry broke at (" + std::to_string(m) + "," +
                                std::to_string(i) + ")";
                return result;
            }
        }
        if (total != catalan(m)) {
            result.passed = false;
            result.detail = "narayana row " + std::to_string(m) + " sums to " + total.str() +
                            ", catalan is " + catalan(m).str();
            return result;
        }
    }
    result.detail = "checked " + std::to_string(checked) + " cases";
    return result;
}

PropertyResult check_closed_forms(const VerifyOptions&) {
    PropertyResult result{"counts", "closed_forms", true, ""};
    long long checked = 0;
    for (long long m = 0; m <= 20; ++m) {
        ++checked;
        int mi = static_cast<int>(m);
        long long sign = (m % 2 == 0) ? 1 : -1;
        if (cc(3, mi) != 2 * m + 1 || cc(4, mi) != (5 * m * m + 5 * m + 2) / 2 ||
            scc(4, mi) != 3 * m / 2 + 1 ||
            scc(6, mi) != (10 * m * (m + 1) + sign * (2 * m + 1) + 7) / 8) {
            result.passed = false;
            result.detail = "a closed form broke at m = " + std::to_string(m);
            return result;
        }
    }
    result.detail = "checked " + std::to_string(checked) + " cases";
    return result;
}

using Check = PropertyResult (*)(const VerifyOptions&);

const std::pair<const char*, std::vector<Check>> kSuites[] = {
    {"bijection", {check_forward_roundtrip, check_backward_roundtrip, check_cardinality_match}},
    {"runs",
     {check_run_delta_contract, check_run_class_preserved, check_class_histograms,
      check_run_fixture}},
    {"cornerless",
     {check_cornerless_forward, check_cornerless_backward, check_cornerless_cardinality}},
    {"tcore",
     {check_beta_roundtrip, check_core_dual_route, check_ordinary_chain, check_hook_ceiling}},
    {"self_conjugate",
     {check_md_roundtrip, check_fms_vs_hooks, check_signed_roundtrip, check_sc_chain}},
    {"counts",
     {check_ordinary_table, check_self_conjugate_table, check_cc_vs_enumeration,
      check_scc_vs_enumeration, check_strip_counts, check_narayana_sums, check_closed_forms}},
};

} // namespace

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, checks] : kSuites)
        names.emplace_back(name);
    names.emplace_back("all");
    return names;
}

bool is_verify_suite(const std::string& name) {
    if (name == "all")
        return true;
    for (const auto& [suite, checks] : kSuites)
        if (name == suite)
            return true;
    return false;
}

std::vector<PropertyResult> run_verify_suite(const std::string& name, const VerifyOptions& options) {
    if (!is_verify_suite(name))
        throw Error(Errc::OutOfRange, "unknown verify suite '" + name + "'");
    std::vector<PropertyResult> results;
    for (const auto& [suite, checks] : kSuites) {
        if (name != "all" && name != suite)
            continue;
        for (Check check : checks)
            results.push_back(check(options));
    }
    return results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    for (const PropertyResult& r : results)
        if (!r.passed)
            return false;
    return true;
}

} // namespace corepath
