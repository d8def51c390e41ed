"""The duality algorithm computing the Jordan type of the associated variety
from a weight, in its plain and zero-inserted variants."""

from fractions import Fraction

from .partitions import content, normalize
from .words import parse_word, rs_insert, tableau_shape


def _bv_of_word(word, odd_output: bool) -> tuple[int, ...]:
    """Insertion shape, content split, and staircase reassembly.

    With odd_output the reassembled staircase has one more odd value than
    even values (an odd total box count, as needed in type B); otherwise one
    more even value (even total, type C).
    """
    q = tableau_shape(rs_insert(word))
    u = content(q)  # sorted ascending, odd length 2k+1
    s = u[0::2]  # k+1 values
    t = u[1::2]  # k values
    if odd_output:
        v = sorted([2 * x + 1 for x in s] + [2 * x for x in t])
    else:
        v = sorted([2 * x for x in s] + [2 * x + 1 for x in t])
    qp = [x - i for i, x in enumerate(v)]
    return normalize(qp)


def bv_raw(mu) -> tuple[int, ...]:
    """Duality of the doubled word (a_1, ..., a_n, -a_n, ..., -a_1), with the
    odd-box-count reassembly."""
    mu = parse_word(mu)
    return _bv_of_word(mu + tuple(-x for x in reversed(mu)), odd_output=True)


def bv_prime(mu) -> tuple[int, ...]:
    """Variant of bv_raw with a zero inserted in the middle of the doubled
    word."""
    mu = parse_word(mu)
    word = mu + (Fraction(0),) + tuple(-x for x in reversed(mu))
    return _bv_of_word(word, odd_output=True)


def bv_details(mu, gtype: str) -> dict:
    """The intermediate data of bv: the insertion shape q, its content, the
    split u-lists, the reassembled staircase v, and the result."""
    mu = parse_word(mu)
    if gtype == "C":
        word = mu + tuple(-x for x in reversed(mu))
        odd_output = False
    elif gtype == "B":
        word = mu + (Fraction(0),) + tuple(-x for x in reversed(mu))
        odd_output = True
    else:
        raise ValueError(f"gtype must be 'B' or 'C', got {gtype!r}")
    q = tableau_shape(rs_insert(word))
    u = content(q)
    s, t = u[0::2], u[1::2]
    if odd_output:
        v = sorted([2 * x + 1 for x in s] + [2 * x for x in t])
    else:
        v = sorted([2 * x for x in s] + [2 * x + 1 for x in t])
    return {
        "word": [str(x) for x in word],
        "q": list(q),
        "content": list(u),
        "s": list(s),
        "t": list(t),
        "v": list(v),
        "result": list(normalize(x - i for i, x in enumerate(v))),
    }


def bv(mu, gtype: str) -> tuple[int, ...]:
    """The Jordan type of the associated variety attached to the weight mu.

    Type B uses the zero-inserted word; type C uses the plain doubled word
    with the even-box-count reassembly, so that the output is a partition of
    2n as it must be.
    """
    mu = parse_word(mu)
    if gtype == "C":
        return _bv_of_word(mu + tuple(-x for x in reversed(mu)), odd_output=False)
    if gtype == "B":
        return bv_prime(mu)
    raise ValueError(f"gtype must be 'B' or 'C', got {gtype!r}")
