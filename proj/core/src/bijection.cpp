#include "corepath/bijection.hpp"

namespace corepath {

namespace {

int trailing_flats(const PathWord& w) {
    int n = static_cast<int>(w.size()), count = 0;
    while (count < n && w.step(n - 1 - count) == Step::Flat)
        ++count;
    return count;
}

int leading_flats(const PathWord& w) {
    int n = static_cast<int>(w.size()), count = 0;
    while (count < n && w.step(count) == Step::Flat)
        ++count;
    return count;
}

int flats_before(const PathWord& w, int index) {
    int count = 0;
    while (index - 1 - count >= 0 && w.step(index - 1 - count) == Step::Flat)
        ++count;
    return count;
}

PathWord slice_between(const PathWord& w, int first, int last_exclusive) {
    if (last_exclusive <= first)
        return {};
    return w.slice(static_cast<std::size_t>(first), static_cast<std::size_t>(last_exclusive - first));
}

} // namespace

int special_step_index(const PathWord& word, int k) {
    if (k <= 1)
        throw Error(Errc::NoSpecialStep, "special step defined only for width index k > 1");
    PathProfile p = profile(word, free_start_height(word));
    int line = boundary_line(k);
    for (std::size_t i = 0; i < word.size(); ++i)
        if (p.heights[i + 1] == line)
            return static_cast<int>(i);
    throw Error(Errc::NoSpecialStep, "word never reaches the boundary line of width " + std::to_string(k));
}

int turning_point_index(const PathWord& word, int start_height, int line_height) {
    PathProfile p = profile(word, start_height);
    for (int v = static_cast<int>(p.heights.size()) - 1; v >= 0; --v)
        if (p.heights[v] == line_height)
            return v;
    throw Error(Errc::LineNotTouched,
                "no vertex on line y = " + std::to_string(line_height));
}

std::optional<int> break_step_index(const PathWord& word, int k) {
    PathProfile p = profile(word, free_start_height(word));
    int turning = turning_point_index(word, p.start_height, boundary_line(k));
    Step away = (k & 1) ? Step::Down : Step::Up;
    for (int i = turning; i < static_cast<int>(word.size()); ++i)
        if (p.heights[i] == 0 && word.step(i) == away)
            return i;
    return std::nullopt;
}

int critical_point_index(const PathWord& word, int k) {
    PathProfile p = profile(word, 0);
    if (p.min_height < 0)
        throw Error(Errc::NotMotzkinPrefix, "word dips below height 0");
    int turning = turning_point_index(word, 0, k);
    for (int v = turning; v >= 0; --v)
        if (p.heights[v] == 0)
            return v;
    throw Error(Errc::InternalInconsistency, "prefix has no vertex at height 0");
}

PhiDecomposition phi_decomposition(const PathWord& word) {
    int m = word.nonflat_count();
    PathProfile p = profile(word, free_start_height(m));
    if (p.end_height() != 0)
        throw Error(Errc::NotFreeMotzkin, "word does not return to height 0");
    int k = width_index_free(word);
    if (k <= 1)
        throw Error(Errc::NoSpecialStep, "no decomposition for width index k <= 1");

    PhiDecomposition d;
    d.k = k;
    d.same_parity = ((m ^ k) & 1) == 0;
    int n = static_cast<int>(word.size());
    int line = boundary_line(k);

    d.gamma = trailing_flats(word);
    d.special_index = special_step_index(word, k);
    d.alpha = flats_before(word, d.special_index);
    d.head = slice_between(word, 0, d.special_index - d.alpha);

    int beta = 0;
    while (d.special_index + 1 + beta < n && word.step(d.special_index + 1 + beta) == Step::Flat)
        ++beta;
    d.beta = beta;

    int middle_first = d.special_index + 1 + d.beta;
    int middle_last = n - d.gamma;
    d.b_part = slice_between(word, middle_first, middle_last);

    d.break_index = break_step_index(word, k);
    if (d.break_index) {
        int b = *d.break_index;
        if (b < middle_first || b >= middle_last)
            throw Error(Errc::InternalInconsistency, "break step outside the middle section");
        d.delta = flats_before(word, b);
        d.b_head = slice_between(word, middle_first, b - d.delta);
        d.b_tail = slice_between(word, b + 1, middle_last);
    }

    if (!d.same_parity) {
        Step toward = (k & 1) ? Step::Up : Step::Down;
        int from_height = (k & 1) ? 0 : 1;
        for (int i = 0; i < n; ++i) {
            if (word.step(i) == toward && p.heights[i] == from_height) {
                d.pivot_index = i;
                break;
            }
        }
        if (!d.pivot_index || *d.pivot_index >= d.special_index - d.alpha)
            throw Error(Errc::InternalInconsistency, "pivot step missing from the head section");
        d.a_head = slice_between(word, 0, *d.pivot_index);
        d.a_tail = slice_between(word, *d.pivot_index + 1, d.special_index - d.alpha);
    }
    return d;
}

namespace {

PathWord phi_impl(const PathWord& word, PhiMutation mu) {
    int m = word.nonflat_count();
    PathProfile p = profile(word, free_start_height(m));
    if (p.end_height() != 0)
        throw Error(Errc::NotFreeMotzkin, "word does not return to height 0");
    int k = width_index_free(word);

    int cutoff = mu == PhiMutation::WidenMirrorCutoff ? 2 : 1;
    if (k <= cutoff)
        return reverse_complement(word);

    PhiDecomposition d = phi_decomposition(word);
    bool same = d.same_parity;
    if (mu == PhiMutation::FlipParityDispatch)
        same = !same;
    bool odd_k = (k & 1) != 0;
    bool mirror = !odd_k && mu != PhiMutation::SkipMirrorOnEvenWidth;
    bool use_break = d.break_index.has_value();
    if (same && mu == PhiMutation::IgnoreBreakInCase1)
        use_break = false;
    if (!same && mu == PhiMutation::IgnoreBreakInCase2)
        use_break = false;

    PathWord special;
    special.append(word.step(d.special_index));
    PathWord out = PathWord::flats(d.gamma);

    if (same) {
        if (!use_break) {
            out.append(complement(d.b_part))
                .append(PathWord::flats(d.alpha))
                .append(special)
                .append(d.head)
                .append(PathWord::flats(d.beta));
            return mirror ? complement(out) : out;
        }
        PathWord brk;
        brk.append(word.step(*d.break_index));
        PathWord arg = odd_k ? complement(d.b_tail) : d.b_tail;
        arg.append(PathWord::flats(d.delta));
        if ((arg.nonflat_count() & 1) == 0)
            throw Error(Errc::InternalInconsistency, "same-parity recursion needs an odd non-flat count");
        PathWord inner = phi_impl(arg, mu);
        out.append(complement(d.b_head))
            .append(PathWord::flats(d.alpha))
            .append(special)
            .append(d.head)
            .append(PathWord::flats(d.beta))
            .append(brk);
        if (mirror)
            out = complement(out);
        return out.append(complement(inner));
    }

    if (!d.pivot_index)
        throw Error(Errc::InternalInconsistency, "mixed-parity case without a pivot step");
    PathWord pivot_mirrored;
    pivot_mirrored.append(complement(word.step(*d.pivot_index)));

    PathWord arg;
    if (!use_break) {
        arg = odd_k ? d.a_head : complement(d.a_head);
    } else {
        PathWord brk;
        if (odd_k) {
            brk.append(complement(word.step(*d.break_index)));
            arg = d.a_head + brk + complement(d.b_tail);
        } else {
            brk.append(word.step(*d.break_index));
            arg = complement(d.a_head) + brk + d.b_tail;
        }
        arg.append(PathWord::flats(d.delta));
    }
    if ((arg.nonflat_count() & 1) != 0)
        throw Error(Errc::InternalInconsistency, "mixed-parity recursion needs an even non-flat count");
    PathWord inner = phi_impl(arg, mu);

    out.append(complement(use_break ? d.b_head : d.b_part))
        .append(PathWord::flats(d.alpha))
        .append(PathWord().append(word.step(d.special_index)))
        .append(d.a_tail)
        .append(PathWord::flats(d.beta))
        .append(pivot_mirrored);
    if (mirror)
        out = complement(out);
    return out.append(complement(inner));
}

} // namespace

PathWord phi(const PathWord& word) {
    return phi_impl(word, PhiMutation::None);
}

PathWord phi_variant(const PathWord& word, PhiMutation mutation) {
    return phi_impl(word, mutation);
}

PsiDecomposition psi_decomposition(const PathWord& word) {
    PathProfile p = profile(word, 0);
    if (p.min_height < 0)
        throw Error(Errc::NotMotzkinPrefix, "word dips below height 0");
    int k = p.max_height;
    if (k <= 1)
        throw Error(Errc::NoSpecialStep, "no decomposition for width index k <= 1");

    PsiDecomposition d;
    d.k = k;
    d.ends_on_ceiling = p.end_height() == k;
    d.gamma = leading_flats(word);
    int n = static_cast<int>(word.size());

    int search_end; // step index the rise step must precede
    if (d.ends_on_ceiling) {
        d.beta = trailing_flats(word);
        search_end = n - d.beta;
    } else {
        int drop = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (word.step(i) == Step::Down && p.heights[i] == k) {
                drop = i;
                break;
            }
        }
        if (drop < 0)
            throw Error(Errc::InternalInconsistency, "prefix leaves its ceiling without a down step");
        d.drop_index = drop;
        d.tail = slice_between(word, drop + 1, n);
        d.beta = flats_before(word, drop);
        search_end = drop - d.beta;
    }

    int critical = critical_point_index(word, k);
    int mid = (k + 1) / 2;
    int rise = -1;
    for (int i = critical; i < search_end; ++i) {
        if (word.step(i) == Step::Up && p.heights[i] == mid) {
            rise = i;
            break;
        }
    }
    if (rise < 0)
        throw Error(Errc::InternalInconsistency, "no rise step from the middle line after the critical point");
    d.rise_index = rise;
    d.alpha = flats_before(word, rise);
    d.b_part = slice_between(word, d.gamma, rise - d.alpha);
    d.a_part = slice_between(word, rise + 1, search_end);
    return d;
}

namespace {

PathWord psi_impl(const PathWord& word) {
    PathProfile p = profile(word, 0);
    if (p.min_height < 0)
        throw Error(Errc::NotMotzkinPrefix, "word dips below height 0");
    int k = p.max_height;
    if (k <= 1)
        return reverse_complement(word);

    int m = p.nonflat_count;
    bool same = ((m ^ k) & 1) == 0;
    bool odd_k = (k & 1) != 0;
    PsiDecomposition d = psi_decomposition(word);

    PathWord rise, drop;
    rise.append(Step::Up);
    drop.append(Step::Down);

    if (d.ends_on_ceiling) {
        if (!same)
            throw Error(Errc::InternalInconsistency, "prefix ends on its ceiling with mismatched parity");
        PathWord out;
        if (odd_k)
            out = d.a_part + PathWord::flats(d.alpha) + rise + PathWord::flats(d.beta) +
                  complement(d.b_part);
        else
            out = complement(d.a_part) + PathWord::flats(d.alpha) + drop + PathWord::flats(d.beta) +
                  d.b_part;
        return out.append(PathWord::flats(d.gamma));
    }

    PathWord inner_arg = complement(d.tail);
    int inner_m = inner_arg.nonflat_count();
    if (same && (inner_m & 1) == 0)
        throw Error(Errc::InternalInconsistency, "same-parity recursion needs an odd non-flat count");
    if (!same && (inner_m & 1) != 0)
        throw Error(Errc::InternalInconsistency, "mixed-parity recursion needs an even non-flat count");
    PathWord w = psi_impl(inner_arg);

    if (same) {
        int delta = trailing_flats(w);
        PathWord b_inner = slice_between(w, 0, static_cast<int>(w.size()) - delta);
        PathWord out;
        if (odd_k)
            out = d.a_part + PathWord::flats(d.alpha) + rise + PathWord::flats(d.beta) +
                  complement(d.b_part) + PathWord::flats(delta) + drop + complement(b_inner);
        else
            out = complement(d.a_part) + PathWord::flats(d.alpha) + drop + PathWord::flats(d.beta) +
                  d.b_part + PathWord::flats(delta) + rise + b_inner;
        return out.append(PathWord::flats(d.gamma));
    }

    PathProfile wp = profile(w, free_start_height(w));
    if (wp.max_height <= 0) {
        PathWord out;
        if (odd_k)
            out = w + rise + d.a_part + PathWord::flats(d.alpha) + rise + PathWord::flats(d.beta) +
                  complement(d.b_part);
        else
            out = complement(w) + drop + complement(d.a_part) + PathWord::flats(d.alpha) + drop +
                  PathWord::flats(d.beta) + d.b_part;
        return out.append(PathWord::flats(d.gamma));
    }

    int lift = -1;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w.step(i) == Step::Up && wp.heights[i] == 0) {
            lift = i;
            break;
        }
    }
    if (lift < 0)
        throw Error(Errc::InternalInconsistency, "recursion output crosses the axis without an up step");
    int delta = trailing_flats(w);
    PathWord a_inner = slice_between(w, 0, lift);
    PathWord b_inner = slice_between(w, lift + 1, static_cast<int>(w.size()) - delta);

    PathWord out;
    if (odd_k)
        out = a_inner + rise + d.a_part + PathWord::flats(d.alpha) + rise + PathWord::flats(d.beta) +
              complement(d.b_part) + PathWord::flats(delta) + drop + complement(b_inner);
    else
        out = complement(a_inner) + drop + complement(d.a_part) + PathWord::flats(d.alpha) + drop +
              PathWord::flats(d.beta) + d.b_part + PathWord::flats(delta) + rise + b_inner;
    return out.append(PathWord::flats(d.gamma));
}

} // namespace

PathWord psi(const PathWord& word) {
    return psi_impl(word);
}

int run_delta(const PathWord& word) {
    return run_count(phi(word)) - run_count(word);
}

RunClass run_class(const PathWord& word, PathSide side) {
    PathProfile p = profile(word, 0);
    RunClass rc;
    rc.end_direction = p.last_run_direction;
    if (p.run_count == 0)
        return rc;
    if (side == PathSide::Prefix) {
        rc.index = p.run_count;
        return rc;
    }
    bool odd_m = (p.nonflat_count & 1) != 0;
    RunDirection counted = odd_m ? RunDirection::Downward : RunDirection::Upward;
    int blocks = 0;
    std::optional<RunDirection> current;
    for (std::size_t i = 0; i < word.size(); ++i) {
        Step s = word.step(i);
        if (s == Step::Flat)
            continue;
        RunDirection dir = s == Step::Up ? RunDirection::Upward : RunDirection::Downward;
        if (current != dir) {
            current = dir;
            if (dir == counted)
                ++blocks;
        }
    }
    bool ends_down = p.last_run_direction == RunDirection::Downward;
    // Ends downward exactly when the class index and the non-flat count share
    // parity; pick the matching index from {2*blocks - 1, 2*blocks}.
    bool index_odd = odd_m == ends_down;
    rc.index = index_odd ? 2 * blocks - 1 : 2 * blocks;
    return rc;
}

} // namespace corepath
