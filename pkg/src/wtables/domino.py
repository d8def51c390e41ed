"""Domino tableaux: the slide algorithm converting a signed tableau into a
domino tableau, fixed squares, shifted dominoes, cycles, the moving-through
operation, and the two signed-permutation front ends."""

import math
from collections import deque
from dataclasses import dataclass, field

from .partitions import normalize
from .words import parse_word, rs_insert


class Undefined(ValueError):
    pass


class NotACycle(ValueError):
    pass


class OddBoxCount(ValueError):
    pass


class InvalidDominoTableau(ValueError):
    pass


Cell = tuple[int, int]  # (row from bottom = 1, column from left = 1)


@dataclass(frozen=True)
class DominoTableau:
    """Dominoes keyed by positive label, each a frozenset of two adjacent
    cells; zero_cell marks an extra 1x1 box labelled 0 at (1, 1)."""

    dominoes: tuple[tuple[int, frozenset], ...]
    zero_cell: bool = False
    _labels: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        labels: dict[Cell, int] = {}
        if self.zero_cell:
            labels[(1, 1)] = 0
        for k, cells in self.dominoes:
            for cell in cells:
                if cell in labels:
                    raise InvalidDominoTableau(f"cell {cell} covered twice")
                labels[cell] = k
        object.__setattr__(self, "_labels", labels)
        _validate(self)

    @staticmethod
    def from_dominoes(dominoes: dict, zero_cell: bool = False) -> "DominoTableau":
        items = tuple(sorted((k, frozenset(v)) for k, v in dominoes.items()))
        return DominoTableau(items, zero_cell)

    @property
    def labels(self) -> dict:
        """Mapping cell -> label (including the zero cell)."""
        return dict(self._labels)

    @property
    def domino_map(self) -> dict:
        return {k: cells for k, cells in self.dominoes}

    @property
    def boxes(self) -> int:
        return len(self._labels)

    @property
    def shape(self) -> tuple[int, ...]:
        """Row lengths, longest (bottom) row first."""
        counts: dict[int, int] = {}
        for (i, _), _lab in self._labels.items():
            counts[i] = counts.get(i, 0) + 1
        return tuple(counts[i] for i in sorted(counts))

    def to_json(self) -> dict:
        out = {
            "zero_cell": self.zero_cell,
            "dominoes": {str(k): sorted(map(list, cells)) for k, cells in self.dominoes},
        }
        return out

    @staticmethod
    def from_json(obj) -> "DominoTableau":
        dominoes = {
            int(k): frozenset(tuple(c) for c in cells)
            for k, cells in obj["dominoes"].items()
        }
        return DominoTableau.from_dominoes(dominoes, bool(obj.get("zero_cell", False)))


def part(r: DominoTableau) -> tuple[int, ...]:
    """The partition underlying a domino tableau."""
    return normalize(r.shape)


def _validate(r: DominoTableau) -> None:
    labels = r._labels
    cells = set(labels)
    for k, dom in r.dominoes:
        if k <= 0:
            raise InvalidDominoTableau(f"label {k} is not positive")
        (i1, j1), (i2, j2) = sorted(dom)
        if (i2 - i1, j2 - j1) not in ((0, 1), (1, 0)):
            raise InvalidDominoTableau(f"domino {k} cells not adjacent")
    for (i, j) in cells:
        if i < 1 or j < 1:
            raise InvalidDominoTableau(f"cell ({i}, {j}) out of the quadrant")
        if i > 1 and (i - 1, j) not in cells:
            raise InvalidDominoTableau(f"cell below ({i}, {j}) missing")
        if j > 1 and (i, j - 1) not in cells:
            raise InvalidDominoTableau(f"cell left of ({i}, {j}) missing")
    for (i, j), lab in labels.items():
        right = labels.get((i, j + 1))
        if right is not None and right <= lab and not _same_domino(r, (i, j), (i, j + 1)):
            raise InvalidDominoTableau(f"row not increasing at ({i}, {j})")
        up = labels.get((i + 1, j))
        if up is not None and up <= lab and not _same_domino(r, (i, j), (i + 1, j)):
            raise InvalidDominoTableau(f"column not decreasing at ({i}, {j})")


def _same_domino(r: DominoTableau, a: Cell, b: Cell) -> bool:
    la, lb = r._labels[a], r._labels[b]
    return la == lb and la != 0


def dt(t) -> DominoTableau:
    """Slide each negative entry up/right until it meets its positive partner,
    then fuse the pair into a domino.

    t is a tableau given as rows of integers, bottom row first, containing
    exactly the labels -n..-1, 1..n and optionally 0.
    """
    grid: dict[Cell, int] = {}
    for i, row in enumerate(t, start=1):
        for j, x in enumerate(row, start=1):
            grid[(i, j)] = int(x)
    values = sorted(grid.values())
    pos = {v: c for c, v in grid.items()}
    if len(pos) != len(grid):
        raise Undefined("repeated entries")
    n = max(values, default=0)
    expect = list(range(-n, 0)) + list(range(1, n + 1))
    if values not in (expect, sorted(expect + [0])):
        raise Undefined(f"entries are not a signed labelling: {values}")
    frozen: set[Cell] = set()
    dominoes: dict[int, frozenset] = {}
    for k in range(n, 0, -1):
        cur = pos[-k]
        last = None
        while True:
            nbrs = [
                c for c in ((cur[0] + 1, cur[1]), (cur[0], cur[1] + 1))
                if c in grid and c not in frozen
            ]
            if not nbrs:
                break
            target = min(nbrs, key=lambda c: grid[c])
            last = grid[target]
            grid[cur], grid[target] = grid[target], grid[cur]
            pos[last] = cur
            pos[-k] = target
            cur = target
        if last != k:
            raise Undefined(f"{-k} ended next to {last}, not {k}")
        dominoes[k] = frozenset({pos[k], pos[-k]})
        frozen |= dominoes[k]
    zero = 0 in pos
    if zero and pos[0] != (1, 1):
        raise Undefined(f"the 0 entry ended at {pos[0]}, not (1, 1)")
    return DominoTableau.from_dominoes(dominoes, zero_cell=zero)


def fixed_square(boxes: int, i: int, j: int) -> bool:
    """Whether position (i, j) is fixed in a diagram with the given box count."""
    return (i + j + boxes) % 2 == 1


def _fixed_cell(r: DominoTableau, k: int) -> Cell:
    (f,) = [c for c in r.domino_map[k] if fixed_square(r.boxes, *c)]
    return f


def d_prime(r: DominoTableau, k: int):
    """The shifted domino D'(k), with the diagonal square E and its label.

    Returns (cells of D'(k), E, m) where m is E's label, -1 at the quadrant
    boundary, or infinity outside the diagram.
    """
    dom = r.domino_map[k]
    f = _fixed_cell(r, k)
    (other,) = dom - {f}
    fi, fj = f
    # fixed square lower/right -> step down-right; upper/left -> up-left
    down_right = (other[0] > fi) or (other[1] < fj)
    e = (fi - 1, fj + 1) if down_right else (fi + 1, fj - 1)
    if e in r._labels:
        m = r._labels[e]
    elif e[0] == 0 or e[1] == 0:
        m = -1
    else:
        m = math.inf
    # the second square of D'(k) is adjacent to both the fixed square and E,
    # chosen so the L-shape D'(k) + E reads as increasing rows and
    # upward-increasing columns
    if down_right:
        x = (fi, fj + 1) if m < k else (fi - 1, fj)
    else:
        x = (fi + 1, fj) if m < k else (fi, fj - 1)
    return frozenset({f, x}), e, m


def cycles(r: DominoTableau) -> frozenset:
    """The cycles: classes of "i ~ j when D(j) and D'(i) share a box"."""
    labels = [k for k, _ in r.dominoes]
    parent = {k: k for k in labels}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    cell_owner = {c: k for k, dom in r.dominoes for c in dom}
    for i in labels:
        dp, _, _ = d_prime(r, i)
        for c in dp:
            j = cell_owner.get(c)
            if j is not None:
                union(i, j)
    groups: dict[int, set] = {}
    for k in labels:
        groups.setdefault(find(k), set()).add(k)
    return frozenset(frozenset(g) for g in groups.values())


def move_through(r: DominoTableau, c) -> DominoTableau:
    """Replace D(k) with D'(k) for every k in the cycle c."""
    if r.boxes % 2 == 1:
        raise OddBoxCount("moving through needs an even box count")
    c = frozenset(c)
    if c not in cycles(r):
        raise NotACycle(f"{sorted(c)} is not a cycle")
    new = {k: (d_prime(r, k)[0] if k in c else dom) for k, dom in r.dominoes}
    old_cells = set(r._labels)
    new_cells = {cell for dom in new.values() for cell in dom}
    removed = old_cells - new_cells
    zero = removed == {(1, 1)}
    return DominoTableau.from_dominoes(new, zero_cell=zero)


def move_through_seq(r: DominoTableau, cycle_list) -> DominoTableau:
    """Apply moving-through for each listed cycle in turn, recomputing the
    cycles of the current tableau at every step."""
    for c in cycle_list:
        r = move_through(r, c)
    return r


def find_cycle_path(start: DominoTableau, target: DominoTableau):
    """A list of cycles carrying start to target by repeated moving-through,
    recomputing the cycles at every step, or None if no sequence exists.

    Moving through needs an even box count, so a tableau that acquires the
    zero box is terminal and only useful when it equals the target.
    """
    if start == target:
        return []
    seen = {start}
    queue = deque([(start, [])])
    while queue:
        cur, path = queue.popleft()
        for c in sorted(cycles(cur), key=sorted):
            nxt = move_through(cur, c)
            if nxt == target:
                return path + [c]
            if nxt.boxes % 2 == 0 and nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, path + [c]))
    return None


def garfinkle(w, variant: str) -> DominoTableau:
    """The domino tableau of a signed permutation, as the composite of
    insertion and the slide algorithm.

    variant "G0" expects the doubled form (a_1..a_n, -a_n..-a_1) of a signed
    permutation of (-n..-1, 1..n); "G1" expects a 0 inserted in the middle.
    """
    w = [int(x) for x in parse_word(w)]
    vals = sorted(w)
    n = max((abs(x) for x in w), default=0)
    expect = list(range(-n, 0)) + list(range(1, n + 1))
    if variant == "G1":
        expect = sorted(expect + [0])
    elif variant != "G0":
        raise ValueError(f"variant must be 'G0' or 'G1', got {variant!r}")
    if vals != expect:
        raise Undefined(f"not a signed permutation for {variant}: {w}")
    return dt(rs_insert(w))


def _young_cells(shape) -> set:
    # row 1 is the bottom row and must be the longest
    return {(i, j) for i, row in enumerate(normalize(shape), start=1)
            for j in range(1, row + 1)}


def _tilings(cells: frozenset):
    """All domino tilings of a cell set, as frozensets of dominoes."""
    if not cells:
        yield frozenset()
        return
    c = min(cells)
    for other in ((c[0], c[1] + 1), (c[0] + 1, c[1])):
        if other in cells:
            dom = frozenset({c, other})
            for rest in _tilings(cells - dom):
                yield rest | {dom}


def all_domino_tableaux(shape):
    """Every domino tableau on the given shape (zero cell at (1, 1) when the
    box count is odd), by tiling enumeration and label filtering."""
    from itertools import permutations

    shape = normalize(shape)
    odd = sum(shape) % 2 == 1
    cells = _young_cells(shape)
    if odd:
        if (1, 1) not in cells:
            return
        cells = cells - {(1, 1)}
    for tiling in _tilings(frozenset(cells)):
        doms = sorted(tiling)
        for perm in permutations(range(1, len(doms) + 1)):
            try:
                yield DominoTableau.from_dominoes(dict(zip(perm, doms)), zero_cell=odd)
            except InvalidDominoTableau:
                continue
