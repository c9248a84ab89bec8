"""Right-congruence quotient and the informative-class decisions."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .dfa import Dfa
from .errors import NotMuller, NotTrivial
from .loops import (
    DEFAULT_CAPACITY,
    is_db as _is_db,
    is_dc as _is_dc,
    is_weak as _is_weak,
    loopable_state_sets,
    loopable_transition_sets,
)
from .model import (
    Acceptor,
    Buchi,
    CoBuchi,
    LassoWord,
    MullerStates,
    MullerTransitions,
    Parity,
    Transition,
    TransitionStructure,
    check_same_alphabet,
)
from .parity import ParityView, find_discrepancy
from .semantics import accepts

_BATTERY_SEED = 982451653


def reroot(acceptor: Acceptor, state: int) -> Acceptor:
    return Acceptor(acceptor.structure.reroot(state), acceptor.acceptance)


def shortest_word_to(structure: TransitionStructure, src: int, dst: int):
    """BFS word from src to dst in symbol order; None if unreachable."""
    if src == dst:
        return ()
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for i, sym in enumerate(structure.alphabet.symbols):
            v = structure.delta[u][i]
            if v not in prev:
                prev[v] = (u, sym)
                if v == dst:
                    out = []
                    cur = v
                    while prev[cur] is not None:
                        pu, psym = prev[cur]
                        out.append(psym)
                        cur = pu
                    return tuple(reversed(out))
                queue.append(v)
    return None


def closed_walk_covering(
    structure: TransitionStructure,
    transitions: frozenset[Transition],
    start: int,
) -> tuple[str, ...]:
    """Closed walk from start traversing every transition of the set.

    The set must be strongly connected and contain start.
    """
    adj: dict[int, list[tuple[str, int]]] = {}
    for (p, sym, q) in sorted(transitions):
        adj.setdefault(p, []).append((sym, q))
    remaining = set(transitions)
    walk: list[str] = []
    cur = start

    def bfs_path(src, want_unused):
        # shortest path inside the set; if want_unused, stop at the first
        # reachable unused transition and include it
        prev = {src: None}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for sym, v in adj.get(u, ()):
                if want_unused and (u, sym, v) in remaining:
                    path = []
                    cur2 = u
                    while prev[cur2] is not None:
                        pu, psym, pv = prev[cur2]
                        path.append((pu, psym, pv))
                        cur2 = pu
                    path.reverse()
                    path.append((u, sym, v))
                    return path
                if v not in prev:
                    prev[v] = (u, sym, v)
                    if not want_unused and v == want_target[0]:
                        path = []
                        cur2 = v
                        while prev[cur2] is not None:
                            pu, psym, pv = prev[cur2]
                            path.append((pu, psym, pv))
                            cur2 = pu
                        path.reverse()
                        return path
                    queue.append(v)
        return None

    want_target = [None]
    while remaining:
        path = bfs_path(cur, True)
        for (p, sym, q) in path:
            walk.append(sym)
            remaining.discard((p, sym, q))
            cur = q
    if cur != start:
        want_target[0] = start
        path = bfs_path(cur, False)
        for (p, sym, q) in path:
            walk.append(sym)
            cur = q
    return tuple(walk)


def _battery(structure: TransitionStructure):
    """Deterministic stream of probe lassos for partition prefiltering."""
    symbols = structure.alphabet.symbols
    words_by_len = [[()]]
    for _ in range(2):
        words_by_len.append(
            [w + (s,) for w in words_by_len[-1] for s in symbols]
        )
    short = [w for ws in words_by_len for w in ws]
    for spoke in short:
        for cycle in short:
            if cycle:
                yield LassoWord(spoke, cycle)
    rng = random.Random(_BATTERY_SEED)
    n = structure.state_count
    for _ in range(300):
        spoke = tuple(rng.choice(symbols) for _ in range(rng.randint(0, 2 * n)))
        cycle = tuple(rng.choice(symbols) for _ in range(rng.randint(1, 2 * n + 2)))
        yield LassoWord(spoke, cycle)


@dataclass(frozen=True)
class Quotient:
    structure: TransitionStructure
    projection: dict
    class_representatives: tuple[tuple[str, ...], ...]
    classes: tuple[frozenset[int], ...]


def partition_language_equivalent(acceptor: Acceptor) -> list[list[int]]:
    """Partition reachable states by language equality.

    Cheap probe lassos split most pairs; surviving pairs are settled by the
    exact product check, whose witnesses feed back into the refinement.
    """
    structure = acceptor.structure
    order = [structure.initial]
    seen = {structure.initial}
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for t in structure.delta[q]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)

    blocks = [list(order)]

    def refine_by(lasso: LassoWord):
        nonlocal blocks
        new = []
        for b in blocks:
            if len(b) == 1:
                new.append(b)
                continue
            groups: dict[bool, list[int]] = {}
            for q in b:
                groups.setdefault(accepts(acceptor, lasso, q), []).append(q)
            new.extend(groups.values())
        blocks = new

    for lasso in _battery(structure):
        if all(len(b) == 1 for b in blocks):
            return blocks
        refine_by(lasso)

    # targeted phase: probe the surviving blocks with lassos whose cycles
    # are closed walks, i.e. with realizable candidate infinity sets
    rng = random.Random(_BATTERY_SEED ^ 0x5DEECE66D)
    symbols = structure.alphabet.symbols
    n = structure.state_count
    stale_rounds = 0
    while stale_rounds < 3:
        multi = [b for b in blocks if len(b) > 1]
        if not multi:
            return blocks
        before = len(blocks)
        for b in multi:
            for q in b:
                for _ in range(4):
                    spoke = tuple(
                        rng.choice(symbols) for _ in range(rng.randint(0, n))
                    )
                    origin = structure.run(q, spoke)
                    cur = origin
                    walk = []
                    for _ in range(3 * n):
                        sym = rng.choice(symbols)
                        walk.append(sym)
                        cur = structure.step(cur, sym)
                        if cur == origin and rng.random() < 0.7:
                            break
                    if cur == origin and walk:
                        refine_by(LassoWord(spoke, tuple(walk)))
        stale_rounds = 0 if len(blocks) > before else stale_rounds + 1

    view = None
    proven: set[frozenset[int]] = set()
    while True:
        pending = None
        for b in blocks:
            for q in b[1:]:
                if frozenset((b[0], q)) not in proven:
                    pending = (b[0], q)
                    break
            if pending:
                break
        if pending is None:
            return blocks
        if view is None:
            view = ParityView(acceptor)
        witness = find_discrepancy(view, view, pending[0], pending[1])
        if witness is None:
            proven.add(frozenset(pending))
        else:
            refine_by(witness)


def state_equivalent(
    acceptor: Acceptor, p: int, q: int
) -> tuple[bool, LassoWord | None]:
    """Exact comparison of the languages of two states."""
    if p == q:
        return True, None
    view = ParityView(acceptor)
    witness = find_discrepancy(view, view, p, q)
    return witness is None, witness


def rightcon_quotient(acceptor: Acceptor) -> Quotient:
    """Quotient of the structure by language equivalence of states."""
    structure = acceptor.structure
    blocks = partition_language_equivalent(acceptor)
    block_of = {}
    for i, b in enumerate(blocks):
        for q in b:
            block_of[q] = i

    # quotient ids in BFS discovery order from the initial class
    ids = {block_of[structure.initial]: 0}
    reps: list[tuple[str, ...]] = [()]
    member = {0: structure.initial}
    rows: list[tuple[int, ...]] = []
    queue = deque([0])
    discovered = [block_of[structure.initial]]
    while queue:
        cid = queue.popleft()
        q = member[cid]
        row = []
        for i, sym in enumerate(structure.alphabet.symbols):
            t = structure.delta[q][i]
            tb = block_of[t]
            if tb not in ids:
                ids[tb] = len(ids)
                member[ids[tb]] = t
                reps.append(reps[cid] + (sym,))
                discovered.append(tb)
                queue.append(ids[tb])
            row.append(ids[tb])
        rows.append(tuple(row))
    q_structure = TransitionStructure(
        structure.alphabet, len(ids), 0, tuple(rows)
    )
    projection = {q: ids[b] for q, b in block_of.items()}
    classes = tuple(
        frozenset(blocks[b]) for b in discovered
    )
    return Quotient(q_structure, projection, tuple(reps), classes)


def index(acceptor: Acceptor) -> int:
    return rightcon_quotient(acceptor).structure.state_count


def is_trivial(acceptor: Acceptor) -> bool:
    return index(acceptor) == 1


def refines(a: TransitionStructure, b: TransitionStructure) -> bool:
    """Does the word partition by a-states refine the one by b-states?"""
    check_same_alphabet(a, b)
    image: dict[int, int] = {}
    seen = set()
    queue = deque([(a.initial, b.initial)])
    seen.add((a.initial, b.initial))
    while queue:
        pa, pb = queue.popleft()
        if pa in image and image[pa] != pb:
            return False
        image[pa] = pb
        for i in range(len(a.alphabet)):
            t = (a.delta[pa][i], b.delta[pb][i])
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return True


def powerset(
    alphabet,
    initial_states,
    ndelta,
) -> TransitionStructure:
    """Subset construction on a nondeterministic delta (acceptance-free).

    ndelta maps (state, symbol) to an iterable of successor states.
    """
    start = frozenset(initial_states)
    ids = {start: 0}
    order = [start]
    rows = []
    queue = deque([start])
    while queue:
        s = queue.popleft()
        row = []
        for sym in alphabet.symbols:
            t = frozenset(q2 for q in s for q2 in ndelta.get((q, sym), ()))
            if t not in ids:
                ids[t] = len(order)
                order.append(t)
                queue.append(t)
            row.append(ids[t])
        rows.append(tuple(row))
    return TransitionStructure(alphabet, len(order), 0, tuple(rows))


@dataclass(frozen=True)
class Classification:
    index: int
    trivial: bool
    flags: dict
    certificates: dict
    counterexamples: dict
    quotient: Quotient


def _loop_lasso(
    structure: TransitionStructure, states: frozenset[int], trans: frozenset[Transition]
) -> LassoWord:
    anchor = min(states)
    spoke = shortest_word_to(structure, structure.initial, anchor)
    cycle = closed_walk_covering(structure, trans, anchor)
    return LassoWord(spoke, cycle)


def _parity_certificate(
    q_structure: TransitionStructure, table: dict
) -> Parity:
    """Alternation-peeling coloring for a union-closed quotient loop table."""
    colors: dict[int, int] = {}

    def maximal_within(universe: frozenset[int]):
        inside = [s for s in table if s <= universe]
        return [s for s in inside if not any(s < t for t in inside)]

    def assign(region: frozenset[int], color: int):
        verdict = table[region]
        if (color % 2 == 1) != verdict:
            raise AssertionError("peeling parity drifted from loop verdict")
        core = {
            q
            for q in region
            if all(table[s] == verdict for s in table if s <= region and q in s)
        }
        if not core:
            raise AssertionError("peeling found no uniform-polarity states")
        for q in core:
            colors[q] = color
        rest = region - core
        for sub in maximal_within(frozenset(rest)):
            assign(sub, color + 1)

    for top in maximal_within(frozenset(q for s in table for q in s)):
        assign(top, 1 if table[top] else 0)
    fallback = max(colors.values(), default=0)
    return Parity(
        tuple(colors.get(q, fallback) for q in range(q_structure.state_count))
    )


def classify(acceptor: Acceptor, capacity: int = DEFAULT_CAPACITY) -> Classification:
    """Index, triviality, and the informative-class flags with evidence."""
    quotient = rightcon_quotient(acceptor)
    proj = quotient.projection
    structure = acceptor.structure
    acc = acceptor.acceptance

    tsets = loopable_transition_sets(structure, capacity)
    flags: dict = {}
    certificates: dict = {}
    counterexamples: dict = {}

    def fingerprint_consistent(key_fn, flag: str):
        groups: dict = {}
        for s, t in tsets:
            verdict = acc.accepts_loop(s, t)
            groups.setdefault(key_fn(s, t), {}).setdefault(verdict, (s, t))
        for key, by_verdict in groups.items():
            if len(by_verdict) > 1:
                pos = _loop_lasso(structure, *by_verdict[True])
                neg = _loop_lasso(structure, *by_verdict[False])
                counterexamples[flag] = ("conflict", pos, neg)
                return False, groups
        return True, groups

    def t_key(s, t):
        return frozenset((proj[p], sym, proj[q]) for (p, sym, q) in t)

    def s_key(s, t):
        return frozenset(proj[q] for q in s)

    it_ok, it_groups = fingerprint_consistent(t_key, "IT")
    flags["IT"] = it_ok
    if it_ok:
        certificates["IT"] = MullerTransitions(
            frozenset(k for k, v in it_groups.items() if True in v)
        )

    im_ok, im_groups = fingerprint_consistent(s_key, "IM")
    flags["IM"] = im_ok
    table: dict = {}
    if im_ok:
        table = {k: (True in v) for k, v in im_groups.items()}
        certificates["IM"] = MullerStates(
            frozenset(k for k, v in table.items() if v)
        )

    if not im_ok:
        flags["IP"] = flags["IB"] = flags["IC"] = False
        counterexamples.setdefault("IP", ("requires", "IM"))
        counterexamples.setdefault("IB", ("requires", "IM"))
        counterexamples.setdefault("IC", ("requires", "IM"))
    else:
        # union-closure of each polarity family over the quotient loop table
        ip_ok = True
        for s, v in table.items():
            covered = all(
                any(q in s2 and s2 <= s and table[s2] != v for s2 in table)
                for q in s
            )
            if covered:
                ip_ok = False
                counterexamples["IP"] = ("union_closure", s, v)
                break
        flags["IP"] = ip_ok
        if ip_ok:
            certificates["IP"] = _parity_certificate(quotient.structure, table)
            f_star = frozenset(
                q
                for q in range(quotient.structure.state_count)
                if any(q in s for s in table)
                and all(table[s] for s in table if q in s)
            )
            ib_ok = all(s & f_star for s, v in table.items() if v)
            flags["IB"] = ib_ok
            if ib_ok:
                certificates["IB"] = Buchi(f_star)
            else:
                counterexamples["IB"] = ("accepting_loop_misses_core", f_star)
            f_circ = frozenset(
                q
                for q in range(quotient.structure.state_count)
                if any(q in s for s in table)
                and all(not table[s] for s in table if q in s)
            )
            ic_ok = all(s & f_circ for s, v in table.items() if not v)
            flags["IC"] = ic_ok
            if ic_ok:
                certificates["IC"] = CoBuchi(f_circ)
            else:
                counterexamples["IC"] = ("rejecting_loop_misses_core", f_circ)
        else:
            flags["IB"] = flags["IC"] = False
            counterexamples.setdefault("IB", ("requires", "IP"))
            counterexamples.setdefault("IC", ("requires", "IP"))

    flags["weak"] = _is_weak(acceptor, capacity)
    flags["db"] = _is_db(acceptor, capacity)
    flags["dc"] = _is_dc(acceptor, capacity)

    n = quotient.structure.state_count
    return Classification(n, n == 1, flags, certificates, counterexamples, quotient)


def trivial_decomposition(acceptor: Acceptor, capacity: int = DEFAULT_CAPACITY):
    """Finite-word acceptors R_i decomposing a trivial-congruence language.

    The language then equals the union over i of: all words, followed by an
    infinite concatenation of R_i blocks.
    """
    if not isinstance(acceptor.acceptance, MullerStates):
        raise NotMuller("convert to a state-table acceptor first")
    if not is_trivial(acceptor):
        raise NotTrivial("right congruence has more than one class")
    structure = acceptor.structure
    loopable = {s for s, _ in loopable_state_sets(structure, capacity)}
    out = []
    for entry in sorted(acceptor.acceptance.table, key=sorted):
        if entry not in loopable:
            continue  # unrealizable table entries contribute nothing
        anchor = min(entry)
        out.append(_cycle_dfa(structure, entry, anchor))
    return out


def _cycle_dfa(structure: TransitionStructure, states: frozenset[int], anchor: int) -> Dfa:
    """Nonempty words looping anchor -> anchor visiting exactly `states`."""
    alphabet = structure.alphabet
    start = ("start",)
    trans = {}
    seen = {start}
    queue = deque([(start, anchor, frozenset([anchor]))])
    meta = {start: (anchor, frozenset([anchor]))}
    accepting = set()
    while queue:
        node, q, visited = queue.popleft()
        for i, sym in enumerate(alphabet.symbols):
            t = structure.delta[q][i]
            if t not in states:
                continue
            nvisited = visited | {t}
            nnode = (t, nvisited)
            trans[(node, sym)] = nnode
            if nnode not in seen:
                seen.add(nnode)
                meta[nnode] = (t, nvisited)
                queue.append((nnode, t, nvisited))
            if t == anchor and nvisited == states:
                accepting.add(nnode)
    return Dfa(alphabet, start, trans, frozenset(accepting))
