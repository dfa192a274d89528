"""Partitioning a permutation into few monotone subsequences."""
from __future__ import annotations

from bisect import bisect_left


def partition_bound(length: int) -> int:
    """Smallest z with z(z+1)/2 >= 3*ceil(length/3).

    Any sequence of L distinct values splits into z monotone subsequences
    whenever z(z+1)/2 >= L.
    """
    target = 3 * (-(-length // 3))
    z = 0
    while z * (z + 1) // 2 < target:
        z += 1
    return z


def _longest(seq, idx, increasing: bool) -> list:
    best_len = [1] * len(idx)
    prev = [-1] * len(idx)
    for j in range(len(idx)):
        for i in range(j):
            a, b = seq[idx[i]], seq[idx[j]]
            if (a < b) == increasing and a != b and best_len[i] + 1 > best_len[j]:
                best_len[j] = best_len[i] + 1
                prev[j] = i
    if not idx:
        return []
    end = max(range(len(idx)), key=lambda j: (best_len[j], -j))
    out = []
    while end != -1:
        out.append(idx[end])
        end = prev[end]
    return out[::-1]


def longest_monotone(seq, idx=None) -> tuple:
    """Longest monotone subsequence of ``seq`` restricted to positions ``idx``.

    Returns ``(kind, positions)`` with kind "inc" or "dec"; ties go to "inc".
    """
    idx = list(range(len(seq))) if idx is None else list(idx)
    inc = _longest(seq, idx, True)
    dec = _longest(seq, idx, False)
    if len(dec) > len(inc):
        return "dec", dec
    return "inc", inc


def _decreasing_piles(seq, idx) -> list:
    # patience sorting: the pile count equals the longest increasing length
    piles: list = []
    tops: list = []
    for i in idx:
        v = seq[i]
        k = bisect_left(tops, v)
        if k == len(piles):
            piles.append([i])
            tops.append(v)
        else:
            piles[k].append(i)
            tops[k] = v
    return piles


def _constructive(seq, idx, z) -> list:
    parts = []
    while idx:
        if z * (z + 1) // 2 < len(idx):
            raise AssertionError("bound invariant violated")
        inc = _longest(seq, idx, True)
        if len(inc) >= z:
            parts.append(("inc", inc))
            taken = set(inc)
            idx = [i for i in idx if i not in taken]
            z -= 1
        else:
            for pile in _decreasing_piles(seq, idx):
                parts.append(("dec" if len(pile) > 1 else "inc", pile))
            break
    return parts


def monotone_partition(seq) -> list:
    """Split the positions of ``seq`` into monotone subsequences.

    Returns a list of ``(kind, positions)`` pairs covering every position once,
    with at most ``partition_bound(len(seq))`` parts. Longest monotone
    subsequences are peeled greedily; if that overshoots the bound, a
    construction that always meets it is used instead.
    """
    seq = list(seq)
    if len(set(seq)) != len(seq):
        raise ValueError("values must be distinct")
    bound = partition_bound(len(seq))
    idx = list(range(len(seq)))
    parts = []
    while idx:
        kind, chosen = longest_monotone(seq, idx)
        if len(chosen) == 1:
            kind = "inc"
        parts.append((kind, chosen))
        taken = set(chosen)
        idx = [i for i in idx if i not in taken]
    if len(parts) > bound:
        z = 0
        while z * (z + 1) // 2 < len(seq):
            z += 1
        parts = _constructive(seq, list(range(len(seq))), z)
    assert len(parts) <= bound
    return parts
