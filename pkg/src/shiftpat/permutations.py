"""Permutations in one-line notation, descent statistics, and marked cycles.

A permutation of length n is a tuple over 1..n; positions are 1-indexed
everywhere. A marked cycle is the one-line form of an n-cycle with one
entry erased: the erased slot is stored as 0 and rendered as ``*``.
That same 0-encoding doubles as the "star rewritten to 0" variant used
for descent counts that include the erased entry.
"""

from __future__ import annotations

from itertools import permutations as _all_permutations

__all__ = [
    "check_permutation",
    "reduce",
    "descent_set",
    "descent_count",
    "eulerian_row",
    "contains_consecutive",
    "complement",
    "reverse",
    "reverse_complement",
    "inverse",
    "cycle_decomposition",
    "is_n_cycle",
    "n_cycles",
    "theta",
    "theta_inv",
    "marked_cycles",
    "star_position",
    "missing_value",
    "star_deleted",
    "marked_des",
    "marked_eps",
    "marked_rc",
    "marked_inverse",
    "parse_permutation",
    "format_permutation",
    "parse_marked",
    "format_marked",
]


def check_permutation(pi) -> tuple:
    """Return pi as a tuple after checking it is a bijection of 1..n."""
    pi = tuple(pi)
    n = len(pi)
    if n < 1 or set(pi) != set(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {pi!r}")
    return pi


def reduce(values) -> tuple:
    """Relabel distinct values by rank, smallest becoming 1.

    >>> reduce([8, 14, 2, 12, 3])
    (3, 5, 1, 4, 2)
    >>> reduce([10, 20])
    (1, 2)
    """
    vals = tuple(values)
    if len(set(vals)) != len(vals):
        raise ValueError("reduction undefined: repeated value")
    rank = {v: r for r, v in enumerate(sorted(vals), start=1)}
    return tuple(rank[v] for v in vals)


def descent_set(seq) -> frozenset:
    """Positions i with seq[i] > seq[i+1], 1-indexed.

    >>> sorted(descent_set((2, 5, 1, 7, 3, 6, 4)))
    [2, 4, 6]
    """
    seq = tuple(seq)
    if not seq:
        raise ValueError("descent set needs a nonempty sequence")
    return frozenset(i for i in range(1, len(seq)) if seq[i - 1] > seq[i])


def descent_count(seq) -> int:
    return len(descent_set(seq))


def eulerian_row(n: int) -> tuple:
    """Eulerian numbers (count of permutations of S_n by descents 0..n-1).

    Classical recurrence E(n,k) = (k+1)E(n-1,k) + (n-k)E(n-1,k-1).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    row = [1]
    for m in range(2, n + 1):
        row = [
            (k + 1) * (row[k] if k < len(row) else 0)
            + (m - k) * (row[k - 1] if k >= 1 else 0)
            for k in range(m)
        ]
    return tuple(row)


def contains_consecutive(sigma, pi) -> frozenset:
    """Start positions of windows of sigma reducing to pi; empty = avoidance.

    >>> sorted(contains_consecutive((4, 2, 1, 7, 5, 3, 6), (2, 1, 3)))
    [2, 5]
    """
    sigma = check_permutation(sigma)
    pi = check_permutation(pi)
    m = len(pi)
    if m > len(sigma):
        raise ValueError("pattern longer than the host permutation")
    return frozenset(
        i + 1 for i in range(len(sigma) - m + 1) if reduce(sigma[i : i + m]) == pi
    )


def complement(pi) -> tuple:
    """i -> n+1-pi(i)."""
    pi = check_permutation(pi)
    n = len(pi)
    return tuple(n + 1 - v for v in pi)


def reverse(pi) -> tuple:
    pi = check_permutation(pi)
    return tuple(reversed(pi))


def reverse_complement(pi) -> tuple:
    """The 180-degree rotation i -> n+1-pi(n+1-i).

    >>> reverse_complement((2, 3, 1))
    (3, 1, 2)
    """
    pi = check_permutation(pi)
    n = len(pi)
    return tuple(n + 1 - pi[n - i] for i in range(1, n + 1))


def inverse(pi) -> tuple:
    pi = check_permutation(pi)
    out = [0] * len(pi)
    for pos, v in enumerate(pi, start=1):
        out[v - 1] = pos
    return tuple(out)


def cycle_decomposition(pi) -> tuple:
    """Disjoint cycles, each starting at its smallest element.

    >>> cycle_decomposition((2, 5, 1, 7, 3, 6, 4))
    ((1, 2, 5, 3), (4, 7), (6,))
    """
    pi = check_permutation(pi)
    seen = set()
    cycles = []
    for start in range(1, len(pi) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = pi[start - 1]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = pi[v - 1]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def is_n_cycle(pi) -> bool:
    return len(cycle_decomposition(pi)) == 1


def n_cycles(n: int):
    """All (n-1)! permutations of S_n that are a single n-cycle."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        yield (1,)
        return
    for order in _all_permutations(range(2, n + 1)):
        sigma = [0] * n
        prev = 1
        for v in order:
            sigma[prev - 1] = v
            prev = v
        sigma[prev - 1] = 1
        yield tuple(sigma)


def theta(pi) -> tuple:
    """Marked-cycle image of pi: position i holds the entry right of i in pi.

    The slot of i = pi(n) holds the mark (the hidden value is pi(1)).

    >>> theta((3, 4, 2, 1))
    (0, 1, 4, 2)
    """
    pi = check_permutation(pi)
    n = len(pi)
    out = [0] * n
    for k in range(n - 1):
        out[pi[k] - 1] = pi[k + 1]
    return tuple(out)


def theta_inv(mc) -> tuple:
    """The unique pi with theta(pi) = mc; errors unless mc is a marked cycle."""
    mc = tuple(mc)
    n = len(mc)
    _check_marked_shape(mc)
    pi = [missing_value(mc)]
    while mc[pi[-1] - 1] != 0 and len(pi) <= n:
        pi.append(mc[pi[-1] - 1])
    if len(pi) != n:
        raise ValueError(f"not a marked n-cycle: {mc!r}")
    return tuple(pi)


def marked_cycles(n: int):
    """All n! marked cycles: n-cycles with one one-line entry erased."""
    for sigma in n_cycles(n):
        for p in range(n):
            yield sigma[:p] + (0,) + sigma[p + 1 :]


def _check_marked_shape(mc) -> None:
    n = len(mc)
    vals = [e for e in mc if e != 0]
    if mc.count(0) != 1 or len(set(vals)) != n - 1 or not all(1 <= e <= n for e in vals):
        raise ValueError(f"not a marked cycle shape: {mc!r}")


def star_position(mc) -> int:
    """1-indexed slot of the mark."""
    return tuple(mc).index(0) + 1


def missing_value(mc) -> int:
    """The value of 1..n hidden behind the mark."""
    mc = tuple(mc)
    return set(range(1, len(mc) + 1)).difference(mc).pop()


def star_deleted(mc) -> tuple:
    return tuple(e for e in mc if e != 0)


def marked_des(mc) -> int:
    """Descents of the one-line form with the mark deleted.

    >>> marked_des((5, 3, 6, 1, 7, 4, 0, 9, 2))
    4
    >>> marked_des((0, 1, 4, 2))
    1
    """
    return descent_count(star_deleted(mc))


def marked_eps(mc) -> int:
    """1 iff the marked cycle looks like [*, 1, ...] or [..., n, *]."""
    mc = tuple(mc)
    n = len(mc)
    if n < 2:
        raise ValueError("need length >= 2")
    if mc[0] == 0 and mc[1] == 1:
        return 1
    if mc[-1] == 0 and mc[-2] == n:
        return 1
    return 0


def marked_rc(mc) -> tuple:
    """Rotate the dot array of the marked cycle by 180 degrees."""
    mc = tuple(mc)
    n = len(mc)
    return tuple((n + 1 - e) if e else 0 for e in reversed(mc))


def marked_inverse(mc) -> tuple:
    """Transpose the dot array: the marked dot (i, j) becomes (j, i).

    The mark's implied value is restored for the transposition and
    erased again afterwards.
    """
    mc = tuple(mc)
    _check_marked_shape(mc)
    n = len(mc)
    v = missing_value(mc)
    star = star_position(mc)
    full = list(mc)
    full[star - 1] = v
    out = [0] * n
    for pos, e in enumerate(full, start=1):
        out[e - 1] = pos
    out[v - 1] = 0
    return tuple(out)


def parse_permutation(text: str) -> tuple:
    """Parse `4 3 6 1 5 2`, `4,3,6,1,5,2` or the compact `436152` (n <= 9)."""
    tokens = text.replace(",", " ").split()
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
        tokens = list(tokens[0])
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"not a permutation literal: {text!r}") from None
    return check_permutation(values)


def format_permutation(pi) -> str:
    return " ".join(str(v) for v in pi)


def parse_marked(text: str) -> tuple:
    """Parse a marked cycle literal such as `5 3 6 1 7 4 * 9 2`."""
    tokens = text.replace(",", " ").split()
    try:
        mc = tuple(0 if t == "*" else int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"not a marked cycle literal: {text!r}") from None
    _check_marked_shape(mc)
    return mc


def format_marked(mc) -> str:
    return " ".join("*" if e == 0 else str(e) for e in mc)
