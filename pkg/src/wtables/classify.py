"""The classification as an executable decision procedure: finite-dimension
tests by two independent methods, enumeration of the finite-dimensional set
grouped into component-group orbits, and primitive-ideal fingerprints."""

from .bv import bv
from .caction import c_k_action
from .partitions import validate_orbit_partition
from .realization import Realization
from .rowswap import NoFit, Undefined
from .stables import SFrame, STable, enumerate_stab_le, is_cc, weight_of
from .tau import DEFAULT_CAP, tau_class


class MethodDisagreement(AssertionError):
    """The two finite-dimension tests returned different verdicts; the
    classification theorem makes this impossible."""


def conjugacy_orbit(a: STable, strategy: str = "oracle",
                    cap: int = DEFAULT_CAP) -> frozenset:
    """The orbit of a under all component-group generators.

    With the pipeline strategy a generator whose construction does not apply
    contributes nothing, so the orbit of a table outside the classification
    is just what the explicit constructions reach.
    """
    gens = len(Realization(a.frame.shape).generator_parts())
    seen = {a}
    queue = [a]
    while queue:
        cur = queue.pop()
        for k in range(1, gens + 1):
            try:
                nxt = c_k_action(cur, k, strategy, cap)
            except (Undefined, NoFit):
                continue
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def is_finite_dimensional(a: STable, method: str = "bv",
                          cap: int = DEFAULT_CAP) -> bool:
    """Whether the irreducible module attached to a is finite dimensional.

    method "bv": the dual-pair test on the weight.  method "conjugacy": the
    orbit under the explicit generator constructions contains a table that is
    row equivalent to column strict.  method "both": run both and assert they
    agree.
    """
    bp = a.frame.shape.partition
    if method == "bv":
        return bv(weight_of(a), a.gtype) == bp
    if method == "conjugacy":
        return any(is_cc(t) for t in conjugacy_orbit(a, "pipeline", cap))
    if method == "both":
        by_bv = is_finite_dimensional(a, "bv", cap)
        by_conj = is_finite_dimensional(a, "conjugacy", cap)
        if by_bv != by_conj:
            raise MethodDisagreement(
                f"bv says {by_bv}, conjugacy says {by_conj} on {a.rows}")
        return by_bv
    raise ValueError(f"method must be 'bv', 'conjugacy' or 'both', got {method!r}")


def _parities(gtype: str):
    return (0,) if gtype == "C" else (0, 1)


def _rows_json(a: STable):
    return [[str(x) for x in row] for row in a.rows]


def _verdict_batch(args):
    tables, method, cap = args
    return [is_finite_dimensional(a, method, cap) for a in tables]


def classify(partition, gtype: str, bound, method: str = "bv",
             cap: int = DEFAULT_CAP, workers: int = 1) -> dict:
    """Enumerate the finite-dimensional row-sorted tables on the shape with
    entries bounded by bound, grouped into component-group orbits.

    Each orbit is tagged with its unique column-strict representative, the
    fingerprint of the shared tau-class of weights, and a non-regularity
    flag.  The report is deterministic: members and orbits are sorted by
    entry vector.
    """
    shape = validate_orbit_partition(partition, gtype)
    frame = SFrame.identity(shape)
    tables: list[STable] = []
    for parity in _parities(gtype):
        tables.extend(enumerate_stab_le(frame, bound, parity))
    total = len(tables)
    if workers > 1 and total:
        from multiprocessing import Pool

        shards = [(tables[i::workers], method, cap) for i in range(workers)]
        with Pool(workers) as pool:
            results = pool.map(_verdict_batch, shards)
        verdicts = [None] * total
        for i, shard in enumerate(results):
            verdicts[i::workers] = shard
    else:
        verdicts = _verdict_batch((tables, method, cap))
    findim = [a for a, ok in zip(tables, verdicts) if ok]

    grouped: dict[frozenset, list[STable]] = {}
    for a in findim:
        orbit = conjugacy_orbit(a, "oracle", cap)
        grouped.setdefault(orbit, []).append(a)

    orbits = []
    for orbit, members in grouped.items():
        cc = [t for t in orbit if is_cc(t)]
        if len(cc) != 1:
            raise AssertionError(
                f"orbit of {members[0].rows} has {len(cc)} column-strict tables")
        cls = tau_class(weight_of(cc[0]), cap)
        orbits.append({
            "representative": _rows_json(cc[0]),
            "tau_fingerprint": [str(x) for x in cls.fingerprint],
            "non_regular": cls.has_repeated_abs,
            "tables": [_rows_json(t) for t in sorted(members, key=lambda t: t.rows)],
        })
    orbits.sort(key=lambda o: o["representative"])
    return {
        "gtype": gtype,
        "partition": list(shape.partition),
        "bound": str(bound),
        "method": method,
        "counts": {
            "tables": total,
            "finite_dimensional": len(findim),
            "orbits": len(orbits),
        },
        "orbits": orbits,
    }


def primitive_ideal_fingerprints(partition, gtype: str, bound,
                                 cap: int = DEFAULT_CAP) -> list:
    """One tau-class fingerprint per column-strict row-sorted table at the
    bound; the classification makes them pairwise distinct, which is
    asserted."""
    shape = validate_orbit_partition(partition, gtype)
    frame = SFrame.identity(shape)
    fps = []
    for parity in _parities(gtype):
        for a in enumerate_stab_le(frame, bound, parity):
            if is_cc(a):
                fps.append(tau_class(weight_of(a), cap).fingerprint)
    if len(set(fps)) != len(fps):
        raise AssertionError("two column-strict tables share a fingerprint")
    return sorted(fps)
