"""Closure of a weight under the tau-equivalence generators: Knuth moves
anywhere, a tail sign flip, and a tail swap."""

from collections import deque
from dataclasses import dataclass

from .words import CapExceeded, knuth_moves, parse_word

DEFAULT_CAP = 5_000_000


class TooShort(ValueError):
    """The tail relations need at least two entries."""


def tau_neighbors(mu) -> set:
    """All weights one relation away from mu: any elementary Knuth move, the
    tail sign flip when |a_{n-1}| <= |a_n|, and the tail swap when exactly
    one of a_{n-1}, a_n is strictly positive.

    On regular weights (all absolute values distinct and nonzero) the two
    tail conditions are the strict ones |a_{n-1}| < |a_n| and
    a_{n-1} a_n < 0.  The weakenings -- flipping at equal absolute value and
    treating 0 as weakly negative in the swap -- only affect non-regular
    weights, where they are forced by the component-group action: the
    partner of a justified-column-strict table must stay in the class, and
    no two such tables may be merged.  Both facts are checked exhaustively
    in the test suite.
    """
    mu = parse_word(mu)
    if len(mu) < 2:
        raise TooShort("tau relations need weights of length >= 2")
    out = set(knuth_moves(mu))
    a, b = mu[-2], mu[-1]
    if abs(a) <= abs(b):
        out.add(mu[:-1] + (-b,))
    if (a > 0) != (b > 0):
        out.add(mu[:-2] + (b, a))
    out.discard(mu)
    return out


@dataclass(frozen=True)
class TauClass:
    seed: tuple
    members: frozenset

    @property
    def fingerprint(self) -> tuple:
        return min(self.members)

    @property
    def has_repeated_abs(self) -> bool:
        """Whether some member repeats an absolute value (non-regular)."""
        mu = self.seed
        return len({abs(x) for x in mu}) < len(mu)

    def __contains__(self, mu) -> bool:
        return parse_word(mu) in self.members

    def __len__(self) -> int:
        return len(self.members)


def tau_class(mu, cap: int = DEFAULT_CAP) -> TauClass:
    """Breadth-first closure of mu under the tau relations."""
    seed = parse_word(mu)
    if len(seed) < 2:
        raise TooShort("tau relations need weights of length >= 2")
    seen = {seed}
    queue = deque([seed])
    while queue:
        cur = queue.popleft()
        for nxt in tau_neighbors(cur):
            if nxt not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(
                        f"tau class exceeded cap {cap}; partial size {len(seen)}"
                    )
                seen.add(nxt)
                queue.append(nxt)
    return TauClass(seed=seed, members=frozenset(seen))


def tau_equivalent(mu, nu, cap: int = DEFAULT_CAP) -> bool:
    return parse_word(nu) in tau_class(mu, cap).members
