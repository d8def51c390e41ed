"""Exact matrix realization of so_{2n+1} and sp_{2n}: the basis elements
f_{i,j}, the nilpotent e, the grading element h, Jordan types, and the
component group generator matrices.  A verification harness, not a
linear-algebra library: everything is dense exact-integer."""

from fractions import Fraction

from .partitions import OrbitShape, normalize


class NotNilpotent(ValueError):
    pass


class NoSuchGenerator(ValueError):
    pass


def _sign(x: int) -> int:
    return 1 if x >= 0 else -1


class CoordinatePyramid:
    """The symmetric pyramid for an orbit shape, with box labels.

    Boxes are labelled 1..n (then 0 in type B) then -n..-1, reading across
    rows from top to bottom.  col maps a label to the x-coordinate of its box
    centre (boxes are 2 units wide); row maps a label to its row label in
    {1, ..., r, 0, -r, ..., -1}, top to bottom.
    """

    def __init__(self, shape: OrbitShape):
        self.shape = shape
        self.gtype = shape.gtype
        self.n = shape.n
        labels = list(range(1, self.n + 1))
        if self.gtype == "B":
            labels.append(0)
        labels.extend(range(-self.n, 0))
        self.rows: list[list[int]] = []
        self.col: dict[int, int] = {}
        self.row: dict[int, int] = {}
        pos = 0
        for rowlabel, length in zip(shape.row_labels, shape.row_lengths):
            row = labels[pos:pos + length]
            pos += length
            self.rows.append(row)
            for k, lab in enumerate(row):
                self.col[lab] = 2 * k - (length - 1)
                self.row[lab] = rowlabel

    @property
    def labels(self) -> list[int]:
        return sorted(self.col, key=lambda i: (-_sign(i), abs(i) if i > 0 else 0, -i))

    def basis_order(self) -> list[int]:
        """Labels in the order e_1, ..., e_n, (e_0,) e_-n, ..., e_-1."""
        order = list(range(1, self.n + 1))
        if self.gtype == "B":
            order.append(0)
        order.extend(range(-self.n, 0))
        return order


def zero_matrix(m: int) -> list[list[int]]:
    return [[0] * m for _ in range(m)]


def mat_mul(a, b):
    m = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_rank(a) -> int:
    """Rank over the rationals by Gaussian elimination with exact fractions."""
    m = [[Fraction(x) for x in row] for row in a]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][c]
        m[rank] = [x / pv for x in m[rank]]
        for r in range(rows):
            if r != rank and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


class Realization:
    """so_{2n+1} (gtype "B") or sp_{2n} (gtype "C") in the matrix basis
    indexed by labels 1..n, (0,) -n..-1."""

    def __init__(self, shape: OrbitShape):
        self.shape = shape
        self.pyramid = CoordinatePyramid(shape)
        self.gtype = shape.gtype
        self.n = shape.n
        self._order = self.pyramid.basis_order()
        self._index = {lab: i for i, lab in enumerate(self._order)}
        self.dim = len(self._order)

    def e_unit(self, i: int, j: int) -> list[list[int]]:
        m = zero_matrix(self.dim)
        m[self._index[i]][self._index[j]] = 1
        return m

    def f_basis_indices(self) -> list[tuple[int, int]]:
        if self.gtype == "B":
            return [(i, j) for i in self._order for j in self._order if i + j > 0]
        return [(i, j) for i in self._order for j in self._order if i + j >= 0]

    def f(self, i: int, j: int) -> list[list[int]]:
        m = self.e_unit(i, j)
        if self.gtype == "B":
            return mat_sub(m, self.e_unit(-j, -i))
        return mat_sub(m, mat_scale(self.e_unit(-j, -i), _sign(i) * _sign(j)))

    def form_matrix(self) -> list[list[int]]:
        m = zero_matrix(self.dim)
        for i in self._order:
            for j in self._order:
                if i == -j:
                    m[self._index[i]][self._index[j]] = 1 if self.gtype == "B" else _sign(i)
        return m

    def in_algebra(self, x) -> bool:
        """Whether x satisfies (xv, w) = -(v, xw) for the bilinear form."""
        j = self.form_matrix()
        xt = [list(r) for r in zip(*x)]
        return mat_add(mat_mul(xt, j), mat_mul(j, x)) == zero_matrix(self.dim)

    def build_e(self) -> list[list[int]]:
        k = self.pyramid
        e = zero_matrix(self.dim)
        lower = 1 if self.gtype == "B" else 0
        for row in k.rows:
            for a, b in zip(row, row[1:]):
                # each mirror pair of adjacencies contributes one basis element
                if a + b >= lower:
                    e = mat_add(e, self.f(a, b))
        return e

    def build_h(self) -> list[list[int]]:
        k = self.pyramid
        h = zero_matrix(self.dim)
        for i in range(1, self.n + 1):
            h = mat_add(h, mat_scale(self.f(i, i), -k.col[i]))
        return h

    def grading_degree(self, i: int, j: int) -> int:
        """The degree k with f_{i,j} in g(k)."""
        return self.pyramid.col[j] - self.pyramid.col[i]

    def in_m(self, i: int, j: int) -> bool:
        return self.pyramid.col[i] > self.pyramid.col[j]

    def generator_parts(self) -> list[tuple[int, int]]:
        """The component-group generators as pairs (row index i_k, part).

        One generator per distinct pair value different from the middle part
        and of the correct parity (odd in type B, even in type C), taken at
        the maximal row index with that value; listed by increasing part.
        """
        want_odd = self.gtype == "B"
        pairs = self.shape.pairs
        chosen: dict[int, int] = {}
        for idx, v in enumerate(pairs, start=1):
            if v != self.shape.p0 and (v % 2 == 1) == want_odd:
                chosen[v] = idx
        return [(chosen[v], v) for v in sorted(chosen)]

    def build_component_generator(self, k: int) -> list[list[int]]:
        """The matrix of the k-th component group generator (1-based)."""
        gens = self.generator_parts()
        if not 1 <= k <= len(gens):
            raise NoSuchGenerator(f"no generator {k}; have {len(gens)}")
        ik, _ = gens[k - 1]
        py = self.pyramid
        c = zero_matrix(self.dim)
        for i in self._order:
            if py.row[i] == ik:
                for j in self._order:
                    if py.row[j] == -ik and py.col[j] == py.col[i]:
                        # sign alternates along box columns; forced by the
                        # requirement that the generator centralizes e
                        s = (-1) ** ((py.col[i] + 1) // 2)
                        c = mat_add(c, mat_scale(mat_add(self.e_unit(i, j), self.e_unit(j, i)), s))
            elif py.row[i] != -ik:
                c = mat_add(c, self.e_unit(i, i))
        return c

    def jordan_type(self, m) -> tuple[int, ...]:
        """Jordan type of a nilpotent matrix from ranks of its powers."""
        dim = len(m)
        ranks = [dim]
        power = [row[:] for row in m]
        while True:
            r = mat_rank(power)
            ranks.append(r)
            if r == 0:
                break
            power = mat_mul(power, m)
            if len(ranks) > dim + 1:
                raise NotNilpotent("matrix is not nilpotent")
        # number of blocks of size >= k is ranks[k-1] - ranks[k]
        sizes = []
        for kk in range(1, len(ranks)):
            count = (ranks[kk - 1] - ranks[kk]) - (ranks[kk] - ranks[kk + 1] if kk + 1 < len(ranks) else 0)
            sizes.extend([kk] * count)
        return normalize(sizes)
