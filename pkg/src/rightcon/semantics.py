"""Run analysis and membership for lasso words."""

from __future__ import annotations

from .model import Acceptor, LassoWord, RunAnalysis, Transition, TransitionStructure


def lasso_run(
    structure: TransitionStructure, w: LassoWord, from_state: int | None = None
) -> RunAnalysis:
    """Simulate spoke then repeat the cycle until the boundary state repeats.

    The state at the cycle boundary must repeat within state_count+1
    repetitions; the infinity sets are collected over the periodic part.
    """
    start = structure.initial if from_state is None else from_state
    q = structure.run(start, w.spoke)
    # record the boundary state and visited sets after each cycle repetition
    boundary_seen: dict[int, int] = {q: 0}
    history: list[tuple[int, list[int], list[Transition]]] = []
    cur = q
    for rep in range(structure.state_count + 1):
        states: list[int] = []
        trans: list[Transition] = []
        for sym in w.cycle:
            nxt = structure.step(cur, sym)
            trans.append((cur, sym, nxt))
            states.append(nxt)
            cur = nxt
        history.append((cur, states, trans))
        if cur in boundary_seen:
            entry = boundary_seen[cur]
            inf_states: set[int] = set()
            inf_trans: set[Transition] = set()
            for _, ss, ts in history[entry:]:
                inf_states.update(ss)
                inf_trans.update(ts)
            return RunAnalysis(frozenset(inf_states), frozenset(inf_trans), entry)
        boundary_seen[cur] = rep + 1
    raise AssertionError("cycle boundary state failed to repeat")


def accepts(acceptor: Acceptor, w: LassoWord, from_state: int | None = None) -> bool:
    run = lasso_run(acceptor.structure, w, from_state)
    return acceptor.acceptance.accepts_loop(run.inf_states, run.inf_transitions)
