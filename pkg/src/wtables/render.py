"""ASCII diagram renderings of the objects the toolkit computes with,
each paired with a parser so that every rendering re-parses to the identical
object."""

from fractions import Fraction

from .domino import DominoTableau
from .partitions import OrbitShape, normalize
from .stables import SFrame, STable, make_stable
from .words import parse_word


def render_word(w) -> str:
    return " ".join(str(x) for x in parse_word(w))


def parse_word_text(text) -> tuple:
    return parse_word(text.split())


def render_partition(p) -> str:
    return ",".join(str(x) for x in normalize(p))


def parse_partition_text(text) -> tuple:
    return normalize(int(x) for x in text.replace(",", " ").split())


def _cell_width(entries) -> int:
    return max((len(str(x)) for x in entries), default=1)


def render_tableau(t) -> str:
    """A left-justified tableau, bottom row drawn last (as in the figures)."""
    rows = [tuple(Fraction(x) for x in row) for row in t]
    w = _cell_width(x for row in rows for x in row)
    lines = [" ".join(str(x).rjust(w) for x in row) for row in reversed(rows)]
    return "\n".join(lines)


def parse_tableau(text) -> tuple:
    rows = [parse_word(line.split()) for line in text.splitlines() if line.strip()]
    return tuple(reversed(rows))


def render_stable(a: STable) -> str:
    """An s-table: a header naming the frame, then the rows top to bottom,
    centered about the vertical symmetry axis."""
    shape = a.frame.shape
    head = "type {}  pairs {}  p0 {}  order {}".format(
        shape.gtype,
        ",".join(str(p) for p in shape.pairs),
        shape.p0,
        ",".join(str(o) for o in a.frame.order),
    )
    w = _cell_width(x for row in a.rows for x in row)
    width = max(len(r) for r in a.rows)
    lines = [head]
    for row in a.rows:
        pad = " " * ((width - len(row)) * (w + 1) // 2)
        lines.append((pad + " ".join(str(x).rjust(w) for x in row)).rstrip())
    return "\n".join(lines)


def parse_stable(text) -> STable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if head[:1] != ["type"] or head[2] != "pairs" or head[4] != "p0" or head[6] != "order":
        raise ValueError(f"not an s-table rendering: {lines[0]!r}")
    gtype = head[1]
    pairs = tuple(int(x) for x in head[3].split(","))
    p0 = int(head[5])
    order = tuple(int(x) for x in head[7].split(","))
    frame = SFrame(OrbitShape(gtype, pairs, p0), order)
    rows = [parse_word(ln.split()) for ln in lines[1:]]
    return make_stable(frame, rows)


def _row_lengths(labels) -> dict:
    lens: dict[int, int] = {}
    for (i, j) in labels:
        lens[i] = max(lens.get(i, 0), j)
    return lens


def render_domino(r: DominoTableau) -> str:
    """A domino tableau as a bordered grid, top row first; the border between
    the two cells of one domino is omitted and every cell carries its label."""
    labels = r.labels
    if not labels:
        return "++"
    w = max(2, _cell_width(labels.values()))
    lens = _row_lengths(labels)
    imax = max(lens)

    def same(c1, c2):
        return (c1 in labels and c2 in labels and labels[c1] == labels[c2]
                and labels[c1] != 0)

    def border(upper, lower):
        cols = max(lens.get(upper, 0), lens.get(lower, 0))
        out = ""
        for j in range(1, cols + 1):
            out += "+" + (" " * w if same((upper, j), (lower, j)) else "-" * w)
        return out + "+"

    lines = []
    for i in range(imax, 0, -1):
        lines.append(border(i + 1, i))
        row = ""
        for j in range(1, lens[i] + 1):
            sep = " " if same((i, j - 1), (i, j)) else "|"
            row += sep + str(labels[(i, j)]).rjust(w)
        lines.append(row + "|")
    lines.append(border(1, 0))
    return "\n".join(lines)


def parse_domino(text) -> DominoTableau:
    """Rebuild a domino tableau from its rendering: the fixed cell width is
    read off the top border and cells sharing a label form one domino."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("+"):
        raise ValueError("not a domino tableau rendering")
    if lines[0] == "++":
        return DominoTableau.from_dominoes({})
    w = lines[0].index("+", 1) - 1
    content = [ln for ln in lines if not ln.startswith("+")]
    dominoes: dict[int, set] = {}
    zero = False
    for i, line in enumerate(reversed(content), start=1):
        j = 0
        while (j + 1) * (w + 1) <= len(line):
            tok = line[j * (w + 1) + 1:(j + 1) * (w + 1)].strip()
            j += 1
            if not tok:
                continue
            lab = int(tok)
            if lab == 0:
                zero = True
            else:
                dominoes.setdefault(lab, set()).add((i, j))
    return DominoTableau.from_dominoes(
        {k: frozenset(v) for k, v in dominoes.items()}, zero_cell=zero)
