"""Slow, obviously-correct reference implementations used by the tests.

None of these call into the code they check.
"""

from itertools import combinations


def brute_force_segment(keys, token, max_segments=3):
    """Enumerate every 2..max_segments split and keep the best valid one."""
    best = None
    n = len(token)
    for k in range(2, max_segments + 1):
        for cuts in combinations(range(1, n), k - 1):
            bounds = (0,) + cuts + (n,)
            parts = [token[a:b] for a, b in zip(bounds, bounds[1:])]
            if not all(p in keys for p in parts):
                continue
            rank = (len(parts), [-len(p) for p in parts])
            if best is None or rank < best[0]:
                best = (rank, parts)
    return None if best is None else best[1]


def brute_force_choose(senses, words, target, policy="frequency"):
    """Pick a sense for ``words[target]`` by naive cue counting.

    ``senses`` is a list of (urdu, frequency, load_order, cues). Returns
    the chosen urdu form.
    """
    if len(senses) == 1:
        return senses[0][0]
    rows = []
    for urdu, freq, order, cues in senses:
        matched = set()
        nearest = None
        for j, w in enumerate(words):
            if j == target:
                continue
            if w in cues:
                matched.add(w)
                d = abs(j - target)
                if nearest is None or d < nearest:
                    nearest = d
        rows.append((urdu, len(matched), nearest, freq, order))
    top = max(r[1] for r in rows)
    if top == 0:
        if policy == "first":
            return sorted(rows, key=lambda r: r[4])[0][0]
        return sorted(rows, key=lambda r: (-r[3], r[4]))[0][0]
    tied = [r for r in rows if r[1] == top]
    closest = min(r[2] for r in tied)
    tied = [r for r in tied if r[2] == closest]
    tied.sort(key=lambda r: (-r[3], r[4]))
    return tied[0][0]
