"""Exact maximum clique and graph colouring over bitmask adjacency.

Shared search engine: visibility statistics and crossing-family covers both
reduce to these two problems. Graphs are given as a list of neighbour
bitmasks; vertex v must not appear in its own mask. All tie-breaking is by
lowest vertex index, so results are deterministic.
"""

from __future__ import annotations

import time
from typing import Optional, Sequence


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _greedy_colour_sort(p_mask: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    # order candidates into greedy colour classes; colours come out ascending
    order: list[int] = []
    colours: list[int] = []
    uncoloured = p_mask
    colour = 0
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            v = (avail & -avail).bit_length() - 1
            order.append(v)
            colours.append(colour)
            uncoloured &= ~(1 << v)
            avail &= ~(1 << v)
            avail &= ~adj[v]
    return order, colours


def max_clique(
    n: int, adj: Sequence[int], deadline: Optional[float] = None
) -> tuple[int, list[int], bool]:
    """Maximum clique size with witness; exact unless the deadline cuts in.

    Branch and bound with a greedy colouring upper bound. Returns
    (size, sorted witness, exact).
    """
    if n == 0:
        return 0, [], True
    best: list[int] = []
    best_size = 0
    exact = True
    stack: list[int] = []

    def expand(p_mask: int) -> None:
        nonlocal best, best_size, exact
        if deadline is not None and time.monotonic() > deadline:
            exact = False
            return
        order, colours = _greedy_colour_sort(p_mask, adj)
        m = p_mask
        for i in range(len(order) - 1, -1, -1):
            v = order[i]
            if len(stack) + colours[i] <= best_size:
                return
            stack.append(v)
            sub = m & adj[v]
            if sub:
                expand(sub)
            elif len(stack) > best_size:
                best_size = len(stack)
                best = sorted(stack)
            stack.pop()
            m &= ~(1 << v)
            if not exact:
                return

    expand((1 << n) - 1)
    return best_size, best, exact


def greedy_colouring(n: int, adj: Sequence[int]) -> list[int]:
    """DSATUR greedy proper colouring; colours are 1-based."""
    colours = [0] * n
    ncmask = [0] * n  # bit c-1 set iff some neighbour has colour c
    deg = [bin(a).count("1") for a in adj]
    for _ in range(n):
        v = min(
            (u for u in range(n) if colours[u] == 0),
            key=lambda u: (-bin(ncmask[u]).count("1"), -deg[u], u),
        )
        c = 1
        while (ncmask[v] >> (c - 1)) & 1:
            c += 1
        colours[v] = c
        for u in _bits(adj[v]):
            if colours[u] == 0:
                ncmask[u] |= 1 << (c - 1)
    return colours


def k_colourable(
    n: int, adj: Sequence[int], k: int, deadline: Optional[float] = None
) -> tuple[Optional[list[int]], bool]:
    """Search for a proper colouring with at most k colours.

    Returns (colour list or None, budget_hit). DSATUR vertex choice; a fresh
    colour may only be opened one step past the largest in use, which kills
    colour-permutation symmetry.
    """
    if n == 0:
        return [], False
    colours = [0] * n
    ncmask = [0] * n
    deg = [bin(a).count("1") for a in adj]
    budget_hit = False

    def rec(assigned: int, used: int) -> bool:
        nonlocal budget_hit
        if deadline is not None and time.monotonic() > deadline:
            budget_hit = True
            return False
        if assigned == n:
            return True
        v = min(
            (u for u in range(n) if colours[u] == 0),
            key=lambda u: (-bin(ncmask[u]).count("1"), -deg[u], u),
        )
        for c in range(1, min(used + 1, k) + 1):
            if (ncmask[v] >> (c - 1)) & 1:
                continue
            colours[v] = c
            touched = []
            for u in _bits(adj[v]):
                if colours[u] == 0 and not (ncmask[u] >> (c - 1)) & 1:
                    ncmask[u] |= 1 << (c - 1)
                    touched.append(u)
            if rec(assigned + 1, max(used, c)):
                return True
            for u in touched:
                ncmask[u] &= ~(1 << (c - 1))
            colours[v] = 0
            if budget_hit:
                return False
        return False

    ok = rec(0, 0)
    return (list(colours) if ok else None), budget_hit


def chromatic_number(
    n: int, adj: Sequence[int], deadline: Optional[float] = None
) -> tuple[int, list[int], bool, int, int]:
    """Exact chromatic number when the budget allows.

    Returns (k, colouring, exact, lower, upper). When exact, lower == upper
    == k and the colouring uses k colours; otherwise the colouring is the
    greedy upper-bound witness.
    """
    if n == 0:
        return 0, [], True, 0, 0
    lower, _, clique_exact = max_clique(n, adj, deadline)
    greedy = greedy_colouring(n, adj)
    upper = max(greedy)
    if not clique_exact:
        return upper, greedy, False, lower, upper
    best_colouring = greedy
    while lower < upper:
        result, budget_hit = k_colourable(n, adj, lower, deadline)
        if budget_hit:
            return upper, best_colouring, False, lower, upper
        if result is not None:
            return lower, result, True, lower, lower
        lower += 1
    return upper, best_colouring, True, upper, upper
