"""Catalog of hand-built example acceptors used in tests and the CLI."""

from __future__ import annotations

from .errors import UnknownFixture
from .model import (
    Acceptor,
    alphabet,
    buchi,
    cobuchi,
    complete_with_sink,
    make_structure,
    muller,
    parity,
    tmuller,
    validate,
)

_AB = alphabet("a", "b")
_ABC = alphabet("a", "b", "c")


def _acc(structure, acceptance) -> Acceptor:
    return validate(structure, acceptance)


def _fig2_B():
    # states: 0 after "..ab", 1 neutral (initial), 2 after "..a"
    d = {
        (0, "a"): 1, (0, "b"): 1, (0, "c"): 1,
        (1, "a"): 2, (1, "b"): 1, (1, "c"): 1,
        (2, "a"): 2, (2, "b"): 0, (2, "c"): 2,
    }
    return _acc(make_structure(_ABC, 3, 1, d), buchi(0))


def _fig2_C():
    d = {(0, "a"): 0, (0, "b"): 1, (1, "a"): 0, (1, "b"): 1}
    return _acc(make_structure(_AB, 2, 0, d), cobuchi(0))


def _fig2_M():
    d = {(0, "a"): 1, (0, "b"): 0, (1, "a"): 0, (1, "b"): 1}
    return _acc(make_structure(_AB, 2, 0, d), muller([0], [1]))


def _fig2_P():
    d = {
        (0, "a"): 0, (0, "b"): 1,
        (1, "a"): 0, (1, "b"): 2,
        (2, "a"): 0, (2, "b"): 3,
        (3, "a"): 3, (3, "b"): 3,
    }
    return _acc(make_structure(_AB, 4, 0, d), parity(2, 1, 0, 0))


def _fig2_T():
    d = {(0, "a"): 0, (0, "b"): 0}
    return _acc(make_structure(_AB, 1, 0, d), tmuller([(0, "a", 0)]))


def _fig3_structure():
    # 0 initial, 1 after '0', 2 after '1'
    d = {
        (0, "0"): 1, (0, "1"): 2,
        (1, "0"): 0, (1, "1"): 0,
        (2, "0"): 2, (2, "1"): 0,
    }
    return make_structure(alphabet("0", "1"), 3, 0, d)


def _fig3_M():
    return _acc(_fig3_structure(), muller([0, 2]))


def _fig3_P():
    return _acc(_fig3_structure(), parity(1, 0, 2))


def _fig3_BC_structure():
    d = {
        (0, "a"): 1, (0, "b"): 1, (0, "c"): 1,
        (1, "a"): 2, (1, "b"): 1, (1, "c"): 1,
        (2, "a"): 2, (2, "b"): 3, (2, "c"): 1,
        (3, "a"): 1, (3, "b"): 3, (3, "c"): 0,
    }
    return make_structure(_ABC, 4, 0, d)


def _fig3_B():
    return _acc(_fig3_BC_structure(), buchi(0))


def _fig3_C():
    return _acc(_fig3_BC_structure(), cobuchi(0))


def _fig3_Mprime():
    d = {
        (0, "a"): 0, (0, "b"): 1, (0, "c"): 2,
        (1, "a"): 2, (1, "b"): 1, (1, "c"): 0,
        (2, "a"): 2, (2, "b"): 2, (2, "c"): 2,
    }
    return _acc(make_structure(_ABC, 3, 0, d), muller([0], [1]))


def _fig3_T():
    d = {(0, "a"): 0, (0, "b"): 0}
    return _acc(
        make_structure(_AB, 1, 0, d), tmuller([(0, "a", 0)], [(0, "b", 0)])
    )


def _fig5_Bbad():
    s = alphabet("0", "1", "2")
    d = {
        (0, "0"): 1, (0, "1"): 2, (0, "2"): 3,
        (1, "0"): 1, (1, "1"): 1, (1, "2"): 1,
        (2, "0"): 2, (2, "1"): 0, (2, "2"): 2,
        (3, "0"): 3, (3, "1"): 3, (3, "2"): 0,
    }
    return _acc(make_structure(s, 4, 0, d), buchi(0))


def _fig5_Cbad():
    s = alphabet("0", "1", "2", "3")
    d = {
        (0, "0"): 1, (0, "1"): 2, (0, "2"): 3, (0, "3"): 0,
        (1, "0"): 1, (1, "1"): 1, (1, "2"): 1, (1, "3"): 1,
        (2, "0"): 2, (2, "1"): 0, (2, "2"): 2, (2, "3"): 4,
        (3, "0"): 3, (3, "1"): 3, (3, "2"): 0, (3, "3"): 3,
        (4, "0"): 4, (4, "1"): 4, (4, "2"): 4, (4, "3"): 2,
    }
    return _acc(make_structure(s, 5, 0, d), cobuchi(1, 4))


def _fig5_Dbad():
    s = alphabet("0", "1", "2", "3", "4")
    d = {
        (0, "0"): 1, (0, "1"): 2, (0, "2"): 3, (0, "3"): 0, (0, "4"): 0,
        (1, "0"): 1, (1, "1"): 1, (1, "2"): 1, (1, "3"): 1, (1, "4"): 1,
        (2, "0"): 2, (2, "1"): 0, (2, "2"): 2, (2, "3"): 4, (2, "4"): 5,
        (3, "0"): 3, (3, "1"): 3, (3, "2"): 0, (3, "3"): 3, (3, "4"): 1,
        (4, "0"): 4, (4, "1"): 4, (4, "2"): 4, (4, "3"): 4, (4, "4"): 5,
        (5, "0"): 5, (5, "1"): 5, (5, "2"): 5, (5, "3"): 5, (5, "4"): 5,
    }
    return _acc(make_structure(s, 6, 0, d), buchi(0, 2, 3, 5))


def _fig6_B1():
    d = {
        (0, "a"): 1, (0, "b"): 2,
        (1, "a"): 1, (1, "b"): 0,
        (2, "a"): 0, (2, "b"): 2,
    }
    return _acc(make_structure(_AB, 3, 0, d), buchi(2))


def _fig6_B2():
    d = {
        (0, "a"): 2, (0, "b"): 0,
        (1, "a"): 1, (1, "b"): 0,
        (2, "a"): 1, (2, "b"): 2,
    }
    return _acc(make_structure(_AB, 3, 0, d), buchi(2))


def _fig6_BC():
    d = {(0, "a"): 1, (0, "b"): 2, (1, "a"): 0, (2, "b"): 0}
    return _acc(complete_with_sink(_AB, 3, 0, d), buchi(2))


def _fig6_P():
    d = {
        (0, "a"): 0, (0, "b"): 1, (0, "c"): 0,
        (1, "a"): 2, (1, "b"): 0, (1, "c"): 0,
        (2, "a"): 3,
        (3, "c"): 2,
    }
    return _acc(complete_with_sink(_ABC, 4, 0, d), buchi(2, 3))


def _fig7_structure():
    d = {
        (0, "a"): 1, (0, "b"): 0, (0, "c"): 0,
        (1, "a"): 1, (1, "b"): 0, (1, "c"): 1,
    }
    return make_structure(_ABC, 2, 0, d)


def _fig7_bowtie():
    d = {
        (0, "a"): 1, (0, "b"): 3,
        (1, "b"): 2,
        (2, "a"): 0,
        (3, "a"): 4,
        (4, "b"): 0,
    }
    return _acc(complete_with_sink(_AB, 5, 0, d), buchi(0))


def _L1():
    # tracks which letters have occurred: 0 none, 1 only a, 2 only b, 3 both
    d = {
        (0, "a"): 1, (0, "b"): 2,
        (1, "a"): 1, (1, "b"): 3,
        (2, "a"): 3, (2, "b"): 2,
        (3, "a"): 3, (3, "b"): 3,
    }
    return _acc(
        make_structure(_AB, 4, 0, d), tmuller([(3, "a", 3)], [(3, "b", 3)])
    )


def _L2():
    d = {
        (0, "a"): 1, (0, "b"): 2,
        (1, "a"): 1, (1, "b"): 2,
        (2, "a"): 1, (2, "b"): 2,
    }
    return _acc(make_structure(_AB, 3, 0, d), muller([1], [2]))


def _aab():
    # even number of a's, then b forever
    d = {
        (0, "a"): 1, (0, "b"): 2,
        (1, "a"): 0, (1, "b"): 3,
        (2, "a"): 3, (2, "b"): 2,
        (3, "a"): 3, (3, "b"): 3,
    }
    return _acc(make_structure(_AB, 4, 0, d), buchi(2))


def _fgaxa():
    # finitely many occurrences of "bb"
    d = {
        (0, "a"): 0, (0, "b"): 1,
        (1, "a"): 0, (1, "b"): 2,
        (2, "a"): 0, (2, "b"): 2,
    }
    return _acc(make_structure(_AB, 3, 0, d), cobuchi(2))


_CATALOG = {
    "fig2_B": _fig2_B,
    "fig2_C": _fig2_C,
    "fig2_M": _fig2_M,
    "fig2_P": _fig2_P,
    "fig2_T": _fig2_T,
    "fig3_M": _fig3_M,
    "fig3_P": _fig3_P,
    "fig3_B": _fig3_B,
    "fig3_C": _fig3_C,
    "fig3_Mprime": _fig3_Mprime,
    "fig3_T": _fig3_T,
    "fig5_Bbad": _fig5_Bbad,
    "fig5_Cbad": _fig5_Cbad,
    "fig5_Dbad": _fig5_Dbad,
    "fig6_B1": _fig6_B1,
    "fig6_B2": _fig6_B2,
    "fig6_BC": _fig6_BC,
    "fig6_P": _fig6_P,
    "fig7_M1": lambda: _acc(_fig7_structure(), muller([0])),
    "fig7_M2": lambda: _acc(_fig7_structure(), muller([1])),
    "fig7_M3": lambda: _acc(_fig7_structure(), muller([0], [1])),
    "fig7_P1": lambda: _acc(_fig7_structure(), parity(1, 2)),
    "fig7_P2": lambda: _acc(_fig7_structure(), parity(2, 1)),
    "fig7_C1": lambda: _acc(_fig7_structure(), cobuchi(1)),
    "fig7_C2": lambda: _acc(_fig7_structure(), cobuchi(0)),
    "fig7_bowtie": _fig7_bowtie,
    "L1": _L1,
    "L2": _L2,
    "aab": _aab,
    "fgaxa": _fgaxa,
}


def fixture_names() -> list[str]:
    return sorted(_CATALOG)


def fixture(name: str) -> Acceptor:
    try:
        factory = _CATALOG[name]
    except KeyError:
        raise UnknownFixture(name) from None
    return factory()


def _wagner_table(n: int, m: int, flip: bool):
    entries = []
    for row in range(m):
        for j in range(n + 1):
            accept = (j % 2 == 1) == (row % 2 == 1)
            if flip:
                accept = not accept
            if accept:
                entries.append(
                    frozenset(row * (n + 1) + k for k in range(j + 1))
                )
    # last row: the loopable sets are the intervals [i..j]; the verdict of
    # an interval is decided by the parity of its top endpoint j
    for i in range(n + 1):
        for j in range(i, n + 1):
            if n == 1:
                # the two-state swap row accepts only the matching singleton;
                # an accepting swap loop would break orbit stabilization
                accept = i == j and (j % 2 == 1) == (m % 2 == 1)
            else:
                accept = (j % 2 == 1) == (m % 2 == 1)
            if flip:
                accept = not accept if i == j or n != 1 else accept
            if accept:
                entries.append(
                    frozenset(m * (n + 1) + k for k in range(i, j + 1))
                )
    return entries


def _wagner_delta(n: int, m: int, base: int = 0):
    d = {}
    for row in range(m):
        for k in range(n + 1):
            sid = base + row * (n + 1) + k
            d[(sid, "a")] = base + row * (n + 1)
            d[(sid, "b")] = sid + 1 if k < n else base + (row + 1) * (n + 1)
    # last row: a bidirectional chain whose endpoints absorb the outward
    # symbol, so every interval of it is loopable and every state distinct
    for k in range(n + 1):
        sid = base + m * (n + 1) + k
        d[(sid, "a")] = sid - 1 if k > 0 else sid
        d[(sid, "b")] = sid + 1 if k < n else sid
    if n == 1:
        # a two-state chain merges under both symbols; let a hold the
        # position and b swap it instead, keeping the same loopable sets
        lo = base + m * 2
        d[(lo, "a")] = lo
        d[(lo, "b")] = lo + 1
        d[(lo + 1, "a")] = lo + 1
        d[(lo + 1, "b")] = lo
    return d


def wagner_family(n: int, m: int, polarity: str = "+") -> Acceptor:
    """Family with n acceptance alternations per chain over m+1 stacked rows.

    polarity "+" starts chains accepting, "-" starts them rejecting, "+-"
    branches on the first symbol into one copy of each.
    """
    if polarity in ("+", "-"):
        size = (n + 1) * (m + 1)
        d = _wagner_delta(n, m)
        table = _wagner_table(n, m, polarity == "-")
        return _acc(make_structure(_AB, size, 0, d), muller(*table))
    if polarity != "+-":
        raise ValueError(f"polarity must be +, - or +-, got {polarity!r}")
    size = (n + 1) * (m + 1)
    d = {(0, "a"): 1, (0, "b"): 1 + size}
    d.update(_wagner_delta(n, m, base=1))
    d.update(_wagner_delta(n, m, base=1 + size))
    # route the fresh state's successors to the two copies' initial states
    d[(0, "a")] = 1
    d[(0, "b")] = 1 + size
    table = [frozenset(q + 1 for q in s) for s in _wagner_table(n, m, False)]
    table += [frozenset(q + 1 + size for q in s) for s in _wagner_table(n, m, True)]
    return _acc(make_structure(_AB, 1 + 2 * size, 0, d), muller(*table))
