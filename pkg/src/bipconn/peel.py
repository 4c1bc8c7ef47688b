"""Peeling a digraph down to a part whose underlying graph is k-connected.

Each step removes a separator of at most ``k - 1`` vertices from the underlying
graph and keeps the smallest remaining component. A survivor loses at most the
separator size in out-degree per step, since its other out-neighbours stay in
its component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .connectivity import SeparatorWitness, separator_witness
from .errors import PreconditionViolation
from .graph import Digraph, induced_subdigraph, underlying


@dataclass
class PeelResult:
    survivors: list[int]  # labels in the input digraph, sorted
    D_prime: Digraph  # induced on survivors, relabelled in sorted order
    removed: list[SeparatorWitness]  # in input labels
    loss_bound: int  # sum of removed separator sizes
    k: int
    loss_budget: int | None
    success: bool
    failure: str | None = None
    step_bound: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def steps(self) -> int:
        return len(self.removed)

    def out_degree_loss(self, d: Digraph) -> dict[int, int]:
        """Actual out-degree loss of each survivor relative to ``d``."""
        return {v: d.out_degree(v) - self.D_prime.out_degree(i) for i, v in enumerate(self.survivors)}


def peel(d: Digraph, k: int, loss_budget: int | None) -> PeelResult:
    """Peel ``d`` until its underlying graph is k-connected.

    ``loss_budget=None`` means unbounded. Fails when the summed separator sizes
    would exceed the budget or when at most ``k`` vertices remain.
    """
    current = list(range(d.n))
    sub = d
    removed: list[SeparatorWitness] = []
    loss = 0
    while True:
        u = underlying(sub)
        w = separator_witness(u, k) if k >= 1 else None
        if w is None:
            return PeelResult(current, sub, removed, loss, k, loss_budget, True)
        if w.reason == "too_few_vertices":
            return PeelResult(current, sub, removed, loss, k, loss_budget, False,
                              f"only {len(current)} vertices left, need at least {k + 1}")
        if loss_budget is not None and loss + len(w) > loss_budget:
            return PeelResult(current, sub, removed, loss, k, loss_budget, False,
                              f"loss budget {loss_budget} exceeded at step {len(removed) + 1}")
        keep = sorted(w.side_small)
        removed.append(SeparatorWitness(
            frozenset(current[x] for x in w.vertices),
            frozenset(current[x] for x in w.side_small),
        ))
        loss += len(w)
        sub, labels = induced_subdigraph(sub, keep)
        current = [current[x] for x in labels]


def peel_log(d: Digraph, k: int, n: int | None = None) -> PeelResult:
    """Peel with budget ``ceil((k-1) log2 n)``; needs min out-degree above ``(k-1) log2 n``."""
    n = d.n if n is None else n
    if d.n > n:
        raise ValueError(f"digraph has {d.n} > n={n} vertices")
    bound = (k - 1) * math.log2(n) if n > 1 else 0.0
    if d.n and not d.min_out_degree() > bound:
        raise PreconditionViolation(
            f"minimum out-degree {d.min_out_degree()} is not above (k-1)log n = {bound:.3f}",
            guarantee="peel precondition: min out-degree > (k-1) log n",
        )
    return peel(d, k, math.ceil(bound))


def exact_fraction(x: float) -> Fraction:
    """``x`` as the decimal it was written as, so ``floor(0.15 * 80)`` is 12 and not 11."""
    return Fraction(repr(x)) if isinstance(x, float) else Fraction(x)


def linear_peel_constants(c: float, n: int) -> dict:
    """k, budget, required out-degree and step bound for the linear-regime peel."""
    if not 0 < c < 0.5:
        raise ValueError("c must lie in (0, 1/2)")
    gamma = 3 * c * math.log2(1 / c)
    return {
        "gamma": gamma,
        "k": math.ceil(exact_fraction(c) * n),
        "budget": math.floor(2 * c * math.log2(1 / c) * n),
        "min_out_degree": gamma * n,
        "step_bound": math.ceil(gamma / (2 * c)),
        "trivial": gamma >= 1,
    }


def peel_linear(d: Digraph, c: float, n: int | None = None) -> PeelResult:
    """Peel to ``ceil(cn)``-connectivity with budget ``floor(2c log2(1/c) n)``.

    When ``3c log2(1/c) >= 1`` the out-degree requirement exceeds any possible
    out-degree, so the guarantee is vacuous; such inputs are still peeled without a
    budget and the result carries a note.
    """
    n = d.n if n is None else n
    consts = linear_peel_constants(c, n)
    if consts["trivial"]:
        res = peel(d, consts["k"], None)
        res.notes.append("3c log(1/c) >= 1: out-degree condition is unsatisfiable, nothing to prove")
        return res
    if d.n and d.min_out_degree() < consts["min_out_degree"]:
        raise PreconditionViolation(
            f"minimum out-degree {d.min_out_degree()} is below 3c log(1/c) n = "
            f"{consts['min_out_degree']:.3f}",
            guarantee="linear peel precondition",
        )
    res = peel(d, consts["k"], consts["budget"])
    res.step_bound = consts["step_bound"]
    if res.success and res.steps >= consts["step_bound"]:
        res.notes.append(f"took {res.steps} steps, expected fewer than {consts['step_bound']}")
    return res
