"""Exact integer partitions: transpose, dominance, content, domino shapes,
and validation of the nilpotent-orbit shapes used throughout the package."""

from dataclasses import dataclass
from functools import lru_cache


class NotSymplecticOrOrthogonal(ValueError):
    """A part parity/multiplicity combination impossible for the Lie type."""


class NotStandardLeviSpecial(ValueError):
    """The parity pattern around the odd-multiplicity part is wrong."""


class NotOddMultiplicityShape(ValueError):
    """The partition has no unique odd-multiplicity part."""


def normalize(parts) -> tuple[int, ...]:
    """Canonical form: weakly decreasing, zero parts dropped."""
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    return tuple(x for x in p if x != 0)


def is_partition(parts) -> bool:
    p = list(parts)
    return all(x >= 0 for x in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def transpose(p) -> tuple[int, ...]:
    """Column lengths of the Young diagram of p."""
    p = normalize(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def dominance_compare(p, q) -> str:
    """Dominance order on partitions of equal total.

    Returns one of "less", "equal", "greater", "incomparable".  Partitions of
    different totals are incomparable.
    """
    p, q = normalize(p), normalize(q)
    if sum(p) != sum(q):
        return "incomparable"
    if p == q:
        return "equal"
    m = max(len(p), len(q))
    pp = list(p) + [0] * (m - len(p))
    qq = list(q) + [0] * (m - len(q))
    le = ge = True
    sp = sq = 0
    for a, b in zip(pp, qq):
        sp += a
        sq += b
        if sp > sq:
            le = False
        if sp < sq:
            ge = False
    if le:
        return "less"
    if ge:
        return "greater"
    return "incomparable"


def content(p) -> tuple[int, ...]:
    """The content multiset of a partition, returned sorted ascending.

    Take the parts ascending, pad with one leading zero if needed so the count
    is odd, add the staircase 0,1,2,..., and split the results into even
    values 2s and odd values 2t+1; the content is the multiset of all s and t.
    """
    q = sorted(normalize(p))
    if len(q) % 2 == 0:
        q = [0] + q
    shifted = [x + i for i, x in enumerate(q)]
    out = [(v // 2) if v % 2 == 0 else ((v - 1) // 2) for v in shifted]
    return tuple(sorted(out))


def _cells(p, skip_origin: bool) -> frozenset:
    cells = {(i, j) for i, row in enumerate(normalize(p)) for j in range(row)}
    if skip_origin:
        cells.discard((0, 0))
    return frozenset(cells)


@lru_cache(maxsize=None)
def _tileable(cells: frozenset) -> bool:
    """Whether a cell set admits a domino tiling, by backtracking search."""
    if not cells:
        return True
    i, j = min(cells)
    for other in ((i, j + 1), (i + 1, j)):
        if other in cells:
            if _tileable(cells - {(i, j), other}):
                return True
    return False


def two_core(p) -> tuple[int, ...]:
    """The 2-core of a partition, computed on the 2-abacus."""
    p = list(normalize(p))
    n = len(p) + (len(p) % 2)
    p += [0] * (n - len(p))
    beta = sorted(p[i] + (n - 1 - i) for i in range(n))
    evens = sum(1 for b in beta if b % 2 == 0)
    odds = n - evens
    # sliding all beads down on each runner leaves a staircase core
    new_beta = sorted([2 * i for i in range(evens)] + [2 * i + 1 for i in range(odds)])
    core = [b - i for i, b in enumerate(new_beta)]
    return normalize(core)


def is_domino_shape(p) -> bool:
    """True iff the diagram admits a domino tiling; when the box count is odd
    a single 1x1 zero cell sits in the lower-left corner first.

    Decided by exhaustive tiling search, cross-checked against the 2-core
    criterion.
    """
    p = normalize(p)
    odd = sum(p) % 2 == 1
    by_search = _tileable(_cells(p, skip_origin=odd))
    core = two_core(p)
    by_core = core == ((1,) if odd else ())
    if by_search != by_core:
        raise AssertionError(f"domino-shape criteria disagree on {p}")
    return by_search


@dataclass(frozen=True)
class OrbitShape:
    """A validated nilpotent-orbit partition in type B or C.

    pairs holds the even-multiplicity parts p_1 <= ... <= p_r (one entry per
    pair); p0 is the unique odd-multiplicity part; d is the index such that
    p_1, ..., p_{d-1} < p0 <= p_d, ..., p_r.
    """

    gtype: str
    pairs: tuple[int, ...]
    p0: int

    @property
    def r(self) -> int:
        return len(self.pairs)

    @property
    def d(self) -> int:
        return 1 + sum(1 for x in self.pairs if x < self.p0)

    @property
    def boxes(self) -> int:
        return 2 * sum(self.pairs) + self.p0

    @property
    def n(self) -> int:
        return self.boxes // 2

    @property
    def partition(self) -> tuple[int, ...]:
        return normalize(list(self.pairs) * 2 + [self.p0])

    @property
    def row_lengths(self) -> tuple[int, ...]:
        """Pyramid row lengths top to bottom: p_1, ..., p_r, p_0, p_r, ..., p_1."""
        return self.pairs + (self.p0,) + self.pairs[::-1]

    @property
    def row_labels(self) -> tuple[int, ...]:
        """Row labels top to bottom: 1, ..., r, 0, -r, ..., -1."""
        r = self.r
        return tuple(range(1, r + 1)) + (0,) + tuple(range(-r, 0))


def validate_orbit_partition(bp, gtype: str) -> OrbitShape:
    """Check that bp is a valid orbit partition for so_{2n+1} (gtype "B") or
    sp_{2n} (gtype "C") in standard-Levi special position."""
    if gtype not in ("B", "C"):
        raise ValueError(f"gtype must be 'B' or 'C', got {gtype!r}")
    parts = sorted(normalize(bp))
    if not parts:
        raise NotOddMultiplicityShape("empty partition")
    mult: dict[int, int] = {}
    for x in parts:
        mult[x] = mult.get(x, 0) + 1
    odd_mult = [v for v, m in mult.items() if m % 2 == 1]
    if len(odd_mult) != 1:
        raise NotOddMultiplicityShape(
            f"need exactly one odd-multiplicity part, found {sorted(odd_mult)}"
        )
    p0 = odd_mult[0]
    if gtype == "B":
        if sum(parts) % 2 == 0 or p0 % 2 == 0:
            raise NotSymplecticOrOrthogonal(
                "type B needs an odd box count and an odd middle part"
            )
    else:
        if sum(parts) % 2 == 1 or p0 % 2 == 1:
            raise NotSymplecticOrOrthogonal(
                "type C needs an even box count and an even middle part"
            )
    pairs = []
    for v in sorted(mult):
        pairs.extend([v] * (mult[v] // 2))
    pairs = tuple(pairs)
    if gtype == "B":
        bad = [x for x in pairs if x >= p0 and x % 2 == 0]
        if bad:
            raise NotStandardLeviSpecial(
                f"type B pairs at or above the middle part must be odd: {bad}"
            )
    else:
        bad = [x for x in pairs if x < p0 and x % 2 == 1]
        if bad:
            raise NotStandardLeviSpecial(
                f"type C pairs below the middle part must be even: {bad}"
            )
    return OrbitShape(gtype=gtype, pairs=pairs, p0=p0)
