"""Symmetric pyramids, s-frames, s-tables, their words and weights,
enumeration of row-sorted tables, and the column-strict membership test."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .partitions import OrbitShape, validate_orbit_partition
from .words import half, parse_word, rs_insert, tableau_shape


class NotRowSorted(ValueError):
    pass


class ParityMixed(ValueError):
    pass


class InvalidSTable(ValueError):
    pass


class CrossCheckMismatch(AssertionError):
    """The two column-strictness strategies disagreed: an implementation bug."""


@dataclass(frozen=True)
class SFrame:
    """A row permutation of the symmetric pyramid of an orbit shape.

    order lists the row labels of the top half, top to bottom; the identity
    frame has order (1, ..., r).  The bottom half mirrors the top and the
    middle row (label 0) never moves.
    """

    shape: OrbitShape
    order: tuple[int, ...]

    @staticmethod
    def identity(shape: OrbitShape) -> "SFrame":
        return SFrame(shape, tuple(range(1, shape.r + 1)))

    @property
    def row_labels(self) -> tuple[int, ...]:
        return self.order + (0,) + tuple(-i for i in reversed(self.order))

    @property
    def row_lengths(self) -> tuple[int, ...]:
        def length(lab: int) -> int:
            return self.shape.p0 if lab == 0 else self.shape.pairs[abs(lab) - 1]

        return tuple(length(lab) for lab in self.row_labels)

    def swap(self, i: int) -> "SFrame":
        """The frame with row labels i and i+1 (and their mirrors) exchanged."""
        if not 1 <= i <= self.shape.r - 1:
            raise ValueError(f"swap index {i} out of range")
        sub = {i: i + 1, i + 1: i}
        return SFrame(self.shape, tuple(sub.get(x, x) for x in self.order))

    def k_rows(self) -> list[list[int]]:
        """Box labels 1..n, (0,) -n..-1 filled across rows, top to bottom."""
        n = self.shape.n
        labels = list(range(1, n + 1))
        if self.shape.gtype == "B":
            labels.append(0)
        labels.extend(range(-n, 0))
        rows, pos = [], 0
        for length in self.row_lengths:
            rows.append(labels[pos:pos + length])
            pos += length
        return rows


@dataclass(frozen=True)
class STable:
    """A skew-symmetric filling of an s-frame; rows are stored top to bottom."""

    frame: SFrame
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def gtype(self) -> str:
        return self.frame.shape.gtype


def _parity_class(entries) -> int:
    """0 for integer entries, 1 for half-integer entries."""
    kinds = {e.denominator for e in entries}
    if kinds <= {1}:
        return 0
    if kinds <= {2}:
        return 1
    raise ParityMixed(f"entries mix integers and half-integers: {sorted(entries)}")


def make_stable(frame: SFrame, rows) -> STable:
    """Build an STable after checking all invariants."""
    rows = tuple(tuple(half(x) for x in r) for r in rows)
    lengths = tuple(len(r) for r in rows)
    if lengths != frame.row_lengths:
        raise InvalidSTable(f"row lengths {lengths} != frame {frame.row_lengths}")
    m = len(rows)
    for k in range(m):
        mirror = rows[m - 1 - k][::-1]
        if rows[k] != tuple(-x for x in mirror):
            raise InvalidSTable("not skew-symmetric about the origin")
    flat = [x for r in rows for x in r]
    if frame.shape.gtype == "C":
        if any(x.denominator != 1 for x in flat):
            raise InvalidSTable("type C entries must be integers")
    else:
        mid = rows[frame.shape.r]
        centre = mid[len(mid) // 2]
        if centre != 0:
            raise InvalidSTable("type B central box must hold 0")
        rest = flat[:frame.shape.n] + flat[frame.shape.n + 1:]
        _parity_class(rest)
    return STable(frame, rows)


def stable_from_json(obj) -> STable:
    gtype = obj["gtype"]
    rows = [[half(Fraction(s)) for s in r] for r in obj["rows"]]
    lengths = [len(r) for r in rows]
    if len(lengths) % 2 == 0:
        raise InvalidSTable("an s-frame has an odd number of rows")
    r = len(lengths) // 2
    p0 = lengths[r]
    top = lengths[:r]
    bp = sorted(top) * 2 + [p0]
    shape = validate_orbit_partition(bp, gtype)
    # recover the row order from the top-half lengths
    remaining = list(range(1, r + 1))
    order = []
    for length in top:
        idx = next(i for i in remaining if shape.pairs[i - 1] == length)
        remaining.remove(idx)
        order.append(idx)
    return make_stable(SFrame(shape, tuple(order)), rows)


def stable_to_json(a: STable) -> dict:
    return {"gtype": a.gtype, "rows": [[str(x) for x in r] for r in a.rows]}


def word_of(a: STable) -> tuple[Fraction, ...]:
    """Row-major reading of the table, top to bottom."""
    return tuple(x for r in a.rows for x in r)


def weight_of(a: STable) -> tuple[Fraction, ...]:
    """The weight (a_1, ..., a_n): entry a_i sits in the box labelled i."""
    n = a.frame.shape.n
    by_label: dict[int, Fraction] = {}
    for krow, arow in zip(a.frame.k_rows(), a.rows):
        for lab, x in zip(krow, arow):
            by_label[lab] = x
    return tuple(by_label[i] for i in range(1, n + 1))


def table_from_weight(mu, frame: SFrame) -> STable:
    """The table with entry mu_i in box i of the frame's coordinate pyramid.

    Raises NotRowSorted when some row fails to be weakly increasing; use
    sorted_table_from_weight for the canonical row-equivalence representative.
    """
    a = _fill_from_weight(mu, frame)
    for row in a.rows:
        if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
            raise NotRowSorted(f"row {tuple(map(str, row))} is not weakly increasing")
    return a


def _fill_from_weight(mu, frame: SFrame) -> STable:
    mu = parse_word(mu)
    if len(mu) != frame.shape.n:
        raise ValueError(f"weight length {len(mu)} != n = {frame.shape.n}")
    by_label = {i: x for i, x in enumerate(mu, start=1)}
    by_label.update({-i: -x for i, x in enumerate(mu, start=1)})
    by_label[0] = Fraction(0)
    rows = [tuple(by_label[lab] for lab in krow) for krow in frame.k_rows()]
    return make_stable(frame, rows)


def sorted_table_from_weight(mu, frame: SFrame) -> STable:
    """The unique row-sorted table whose row class matches the weight."""
    a = _fill_from_weight(mu, frame)
    return make_stable(frame, tuple(tuple(sorted(r)) for r in a.rows))


def sort_rows(a: STable) -> STable:
    return make_stable(a.frame, tuple(tuple(sorted(r)) for r in a.rows))


def is_row_sorted(a: STable) -> bool:
    return all(all(r[i] <= r[i + 1] for i in range(len(r) - 1)) for r in a.rows)


def _column_strict_search(rows) -> bool:
    """Whether entries can be permuted within rows so that, left-justified,
    every column strictly decreases top to bottom across present rows."""
    remaining = [sorted(r, reverse=True) for r in rows]
    width = max((len(r) for r in rows), default=0)

    def fill_column(c: int, remaining) -> bool:
        if c == width:
            return all(not r for r in remaining)
        active = [i for i, r in enumerate(rows) if len(r) > c]

        def place(pos: int, prev, state) -> bool:
            if pos == len(active):
                return fill_column(c + 1, state)
            i = active[pos]
            seen = set()
            for x in state[i]:
                if x in seen or (prev is not None and x >= prev):
                    continue
                seen.add(x)
                nxt = list(state)
                rest = list(state[i])
                rest.remove(x)
                nxt[i] = rest
                if place(pos + 1, x, nxt):
                    return True
            return False

        return place(0, None, remaining)

    return fill_column(0, remaining)


def is_cc(a: STable) -> bool:
    """Whether the rows of a can be permuted so that the left-justified table
    has strictly decreasing columns, including across the middle gap.

    Decided by explicit column-assignment search, cross-checked against the
    insertion-shape criterion shape(RS(word)) = bp; disagreement is a bug.
    """
    by_search = _column_strict_search([list(r) for r in a.rows])
    # the verdict is a property of the row-equivalence class, so the
    # insertion-shape criterion reads the canonical row-sorted word
    by_shape = tableau_shape(rs_insert(word_of(sort_rows(a)))) == a.frame.shape.partition
    if by_search != by_shape:
        raise CrossCheckMismatch(f"search={by_search} shape={by_shape} on {a}")
    return by_search


def _value_range(bound, parity: int):
    b = half(bound)
    if parity == 0:
        top = int(b)
        return [Fraction(v) for v in range(-top, top + 1)]
    vals = []
    x = Fraction(1, 2) - (int(b + Fraction(1, 2)))
    while x <= b:
        vals.append(x)
        x += 1
    return vals


def enumerate_stab_le(frame: SFrame, bound, parity: int = 0):
    """All row-sorted tables on the frame with |entry| <= bound in the given
    parity class (0 integers, 1 half-integers), in lexicographic order of the
    positive-box entry vector."""
    if frame.shape.gtype == "C" and parity != 0:
        raise ParityMixed("type C tables have integer entries")
    values = _value_range(bound, parity)
    shape = frame.shape
    half_rows = []
    for lab in frame.order:
        half_rows.append(shape.pairs[lab - 1])
    mid_half = shape.p0 // 2

    def rows_for(choices):
        rows = [tuple(c) for c in choices[:-1]]
        mid_pos = choices[-1]
        mid = tuple(mid_pos) + ((Fraction(0),) if shape.gtype == "B" else ()) + tuple(
            -x for x in reversed(mid_pos))
        bottom = tuple(tuple(-x for x in reversed(r)) for r in reversed(rows))
        return rows + [mid] + list(bottom)

    def rec(idx, acc):
        if idx < len(half_rows):
            for combo in combinations_with_replacement(values, half_rows[idx]):
                yield from rec(idx + 1, acc + [combo])
        else:
            for combo in combinations_with_replacement(values, mid_half):
                if combo and combo[-1] > 0:
                    continue
                yield make_stable(frame, rows_for(acc + [combo]))

    yield from rec(0, [])
