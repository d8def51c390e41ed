"""Row swapping for tables and s-tables, built on greedy best-fit pairing."""

from .stables import STable, make_stable


class NoFit(ValueError):
    pass


class Undefined(ValueError):
    pass


def best_fit(long, short, side: str):
    """Greedy closest-fit column-strict pairing of a shorter row against a
    longer one.

    side="long_above": scanning short left to right, pair each entry with the
    smallest unused long entry strictly greater.  side="long_below": scanning
    short right to left, pair each entry with the largest unused long entry
    strictly smaller.  Returns (pairs, unpaired) where pairs maps short-row
    positions to long-row entries; raises NoFit if some entry has no
    candidate.
    """
    if len(long) < len(short):
        raise ValueError("long row must be at least as long as short row")
    used = [False] * len(long)
    pairs: dict[int, object] = {}
    if side == "long_above":
        for k, x in enumerate(short):
            best = None
            for j, y in enumerate(long):
                if not used[j] and y > x and (best is None or y < long[best]):
                    best = j
            if best is None:
                raise NoFit(f"no entry above {x}")
            used[best] = True
            pairs[k] = long[best]
    elif side == "long_below":
        for k in range(len(short) - 1, -1, -1):
            x = short[k]
            best = None
            for j, y in enumerate(long):
                if not used[j] and y < x and (best is None or y > long[best]):
                    best = j
            if best is None:
                raise NoFit(f"no entry below {x}")
            used[best] = True
            pairs[k] = long[best]
    else:
        raise ValueError(f"unknown side {side!r}")
    unpaired = [y for j, y in enumerate(long) if not used[j]]
    return pairs, unpaired


def swap_adjacent_rows(upper, lower):
    """Exchange the lengths of two weakly increasing rows.

    Paired entries stay in their own row; the unpaired entries of the longer
    row migrate to the other row; both results are re-sorted.  Equal-length
    rows are left unchanged when they admit a full column-strict pairing and
    are Undefined otherwise.
    """
    upper, lower = tuple(upper), tuple(lower)
    if len(upper) == len(lower):
        try:
            best_fit(upper, lower, "long_above")
        except NoFit:
            raise Undefined("equal-length rows admit no column-strict pairing")
        return upper, lower
    if len(upper) > len(lower):
        pairs, unpaired = _nofit_to_undefined(upper, lower, "long_above")
        new_upper = tuple(sorted(pairs.values()))
        new_lower = tuple(sorted(list(lower) + unpaired))
    else:
        pairs, unpaired = _nofit_to_undefined(lower, upper, "long_below")
        new_lower = tuple(sorted(pairs.values()))
        new_upper = tuple(sorted(list(upper) + unpaired))
    return new_upper, new_lower


def _nofit_to_undefined(long, short, side):
    try:
        return best_fit(long, short, side)
    except NoFit as e:
        raise Undefined(str(e)) from e


def swap_rows_table(rows, i: int):
    """Apply the swap of rows i and i+1 (1-based, top to bottom) to a plain
    table given as a sequence of weakly increasing rows."""
    rows = [tuple(r) for r in rows]
    if not 1 <= i <= len(rows) - 1:
        raise ValueError(f"row index {i} out of range")
    up, lo = swap_adjacent_rows(rows[i - 1], rows[i])
    rows[i - 1], rows[i] = up, lo
    return rows


def _mirror(row):
    return tuple(-x for x in reversed(row))


def swap_rows_skew(rows, i: int):
    """The mirrored row swap on a centrally skew-symmetric list of rows:
    positions i and i+1 (1-based from the top) exchange, and so do their
    mirror positions."""
    rows = [tuple(r) for r in rows]
    m = len(rows)
    if not 1 <= i <= m - 1:
        raise ValueError(f"row index {i} out of range")
    up, lo = swap_adjacent_rows(rows[i - 1], rows[i])
    rows[i - 1], rows[i] = up, lo
    if {m - i, m - 1 - i} != {i - 1, i}:
        rows[m - i] = _mirror(up)
        rows[m - 1 - i] = _mirror(lo)
    for k in range(m):
        if rows[k] != _mirror(rows[m - 1 - k]):
            raise Undefined("swap broke skew symmetry")
    return rows


def swap_rows_stable(a: STable, i: int) -> STable:
    """The mirrored row swap on an s-table; the frame becomes the swapped
    frame."""
    r = a.frame.shape.r
    if not 1 <= i <= r - 1:
        raise ValueError(f"swap index {i} out of range for r={r}")
    rows = swap_rows_skew(a.rows, i)
    order = list(a.frame.order)
    order[i - 1], order[i] = order[i], order[i - 1]
    frame = type(a.frame)(a.frame.shape, tuple(order))
    return make_stable(frame, rows)


def apply_swap_word(word, a: STable) -> STable:
    """Apply a product of elementary swaps to an s-table.

    word lists the indices of the product left to right; the rightmost factor
    acts first, as in function composition.
    """
    for i in reversed(list(word)):
        a = swap_rows_stable(a, i)
    return a
