# cython: language_level=3, boundscheck=False
"""Compiled beam-search kernel; keep in sync with _search_py.py."""


def _prune(list stack, int beam_size):
    best = {}
    for hyp in stack:
        key = (hyp[1], hyp[2], hyp[3], hyp[4])
        prev = best.get(key)
        if prev is None or hyp[0] < prev[0]:
            best[key] = hyp
    pruned = sorted(best.values(), key=lambda h: (h[0], h[4]))
    return pruned[:beam_size]


def run_beam(int n_src, list options, lm, tuple weights, int k,
             int beam_size, int max_jump):
    """Cover all source tokens with phrase options, k cheapest surfaces."""
    cdef double w_tm = weights[0]
    cdef double w_lm = weights[1]
    cdef double w_dist = weights[2]
    cdef double w_wp = weights[3]
    cdef double cost, tm, lmc, dist, wp, tm_cost, lp
    cdef double new_tm, new_lm, new_dist, new_wp, new_cost
    cdef double final_lm, final_cost
    # coverage masks stay Python ints so long inputs cannot overflow
    cdef int card, prev_end, start, end, jump
    cdef list stack

    stacks = [[] for _ in range(n_src + 1)]
    stacks[0].append((0.0, 0, 0, lm.start_history(), (), 0.0, 0.0, 0.0, 0.0))

    for card in range(n_src):
        stack = _prune(stacks[card], beam_size)
        stacks[card] = stack
        for cost, cov, prev_end, hist, out, tm, lmc, dist, wp in stack:
            for start, end, mask, target, tm_cost in options:
                if cov & mask:
                    continue
                jump = start - prev_end
                if jump < 0:
                    jump = -jump
                if jump > max_jump:
                    continue
                new_lm = lmc
                h = hist
                for word in target:
                    lp, h = lm.logprob_step(h, word)
                    new_lm -= lp
                new_tm = tm + tm_cost
                new_dist = dist + jump
                new_wp = wp + len(target)
                new_cost = (w_tm * new_tm + w_lm * new_lm
                            + w_dist * new_dist + w_wp * new_wp)
                stacks[card + (end - start)].append(
                    (new_cost, cov | mask, end, h, out + target,
                     new_tm, new_lm, new_dist, new_wp))

    best = {}
    for cost, cov, prev_end, hist, out, tm, lmc, dist, wp in stacks[n_src]:
        final_lm = lmc - lm.end_logprob(hist)
        final_cost = w_tm * tm + w_lm * final_lm + w_dist * dist + w_wp * wp
        item = (final_cost, out, tm, final_lm, dist, wp)
        prev = best.get(out)
        if prev is None or item[0] < prev[0]:
            best[out] = item
    ranked = sorted(best.values(), key=lambda it: (it[0], it[1]))
    return ranked[:k]
