"""Pure-Python beam-search kernel.

Mirrors _search_cy.pyx exactly; the package selects whichever import
succeeds. Keep the two files in sync, including the order of floating
point operations, so both backends produce bit-identical k-best lists.
"""


def _prune(stack, beam_size):
    # recombine: same coverage, span end, LM history and surface share
    # identical futures, so only the cheapest survives
    best = {}
    for hyp in stack:
        key = (hyp[1], hyp[2], hyp[3], hyp[4])
        prev = best.get(key)
        if prev is None or hyp[0] < prev[0]:
            best[key] = hyp
    pruned = sorted(best.values(), key=lambda h: (h[0], h[4]))
    return pruned[:beam_size]


def run_beam(n_src, options, lm, weights, k, beam_size, max_jump):
    """Cover all source tokens with phrase options, k cheapest surfaces.

    options: list of (start, end, coverage_mask, target_tuple, tm_cost).
    weights: (w_translation, w_lm, w_distortion, w_word_penalty).
    Returns [(cost, output_tuple, tm, lm, dist, wp), ...] sorted by
    (cost, output), duplicate surfaces suppressed.
    """
    w_tm, w_lm, w_dist, w_wp = weights
    # hypothesis: (cost, coverage, prev_end, lm_history, output, tm, lm, dist, wp)
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
