"""Words of exact half-integers, Robinson-Schensted insertion, Knuth
equivalence, and brute-force Greene statistics."""

from bisect import bisect_right
from fractions import Fraction
from functools import lru_cache


class CapExceeded(ValueError):
    """Input too large for a brute-force oracle."""


def half(x) -> Fraction:
    """Coerce x to an exact half-integer (denominator 1 or 2)."""
    f = Fraction(x)
    if f.denominator not in (1, 2):
        raise ValueError(f"not a half-integer: {x!r}")
    return f


def parse_half(s: str) -> Fraction:
    return half(Fraction(s))


def fmt_half(f: Fraction) -> str:
    return str(f)


def parse_word(xs) -> tuple[Fraction, ...]:
    return tuple(half(x) for x in xs)


def rs_insert(w) -> tuple[tuple[Fraction, ...], ...]:
    """Robinson-Schensted insertion tableau of w.

    Rows are weakly increasing; row 1 (the longest, drawn at the bottom) is
    rows[0].  Along each column the entries strictly increase with row index.
    """
    rows: list[list[Fraction]] = []
    for x in parse_word(w):
        for row in rows:
            pos = bisect_right(row, x)
            if pos == len(row):
                row.append(x)
                x = None
                break
            x, row[pos] = row[pos], x
        if x is not None:
            rows.append([x])
    return tuple(tuple(r) for r in rows)


def tableau_shape(t) -> tuple[int, ...]:
    return tuple(len(r) for r in t)


def is_valid_tableau(t) -> bool:
    rows = [list(r) for r in t]
    for i, row in enumerate(rows):
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if i + 1 < len(rows):
            nxt = rows[i + 1]
            if len(nxt) > len(row):
                return False
            if any(nxt[j] <= row[j] for j in range(len(nxt))):
                return False
    return True


def knuth_equivalent(u, w) -> bool:
    """True iff u and w have equal insertion tableaux."""
    return rs_insert(u) == rs_insert(w)


def knuth_moves(w) -> list[tuple[Fraction, ...]]:
    """All words one elementary Knuth move away from w.

    The moves are xzy ~ zxy for x <= y < z and yxz ~ yzx for x < y <= z,
    applied in any window of three consecutive letters.
    """
    w = parse_word(w)
    out = []
    for i in range(len(w) - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        # xzy -> zxy with (x, z, y) = (a, b, c): x <= y < z
        if a <= c < b:
            out.append(w[:i] + (b, a, c) + w[i + 3:])
        # zxy -> xzy with (z, x, y) = (a, b, c)
        if b <= c < a:
            out.append(w[:i] + (b, a, c) + w[i + 3:])
        # yxz -> yzx with (y, x, z) = (a, b, c): x < y <= z
        if b < a <= c:
            out.append(w[:i] + (a, c, b) + w[i + 3:])
        # yzx -> yxz with (y, z, x) = (a, b, c)
        if c < a <= b:
            out.append(w[:i] + (a, c, b) + w[i + 3:])
    return out


GREENE_CAP = 12


def _longest_monotone(sub, strict_decreasing: bool) -> int:
    """Longest strictly decreasing (or weakly increasing) subsequence length."""
    best = [0] * len(sub)
    top = 0
    for i, x in enumerate(sub):
        b = 1
        for j in range(i):
            if strict_decreasing:
                ok = sub[j] > x
            else:
                ok = sub[j] <= x
            if ok and best[j] + 1 > b:
                b = best[j] + 1
        best[i] = b
        if b > top:
            top = b
    return top


@lru_cache(maxsize=65536)
def _greene_profile_cached(w: tuple, increasing: bool) -> tuple[int, ...]:
    """For each k, the max total size of k disjoint weakly increasing
    (resp. strictly decreasing) subsequences, by exhaustive subset search.

    A subset is a union of k weakly increasing subsequences exactly when its
    longest strictly decreasing subsequence has length <= k, and dually; the
    search scans every subset once and bins it by that length.
    """
    n = len(w)
    best = [0] * (n + 1)
    for mask in range(1 << n):
        sub = [w[i] for i in range(n) if mask >> i & 1]
        if not sub:
            continue
        width = _longest_monotone(sub, strict_decreasing=increasing)
        if len(sub) > best[width]:
            best[width] = len(sub)
    for k in range(1, n + 1):
        if best[k] < best[k - 1]:
            best[k] = best[k - 1]
    return tuple(best[1:])


def greene_stats(w, k: int, direction: str = "increasing") -> int:
    """Max total length of k disjoint weakly increasing (or strictly
    decreasing) subsequences of w, by exhaustive search; |w| capped at 12."""
    w = parse_word(w)
    if len(w) > GREENE_CAP:
        raise CapExceeded(f"greene_stats capped at length {GREENE_CAP}")
    if k <= 0:
        return 0
    if not w:
        return 0
    profile = _greene_profile_cached(w, direction == "increasing")
    return profile[min(k, len(w)) - 1]
