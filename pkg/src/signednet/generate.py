"""Synthetic signed-network generators: SSBM, signed ring lattices, trees.

Every generator is a deterministic function of its parameters and seed: the
same inputs produce the same edge list, element for element.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .core import SignedGraph, build_graph
from .errors import (
    DisconnectedError,
    GaveUpConnectivityError,
    ParamOutOfRangeError,
)

CONNECTIVITY_RETRIES = 100


@dataclass(frozen=True)
class SSBMParams:
    """Two-block signed stochastic block model.

    Within-block pairs draw an edge with probability ``p_in`` (weight
    +alpha), cross-block pairs with ``p_out`` (weight -alpha); every realized
    edge's sign then flips independently with probability ``eta``.  eta = 0
    plants a balanced graph, eta = 1 an antibalanced one.
    """

    n1: int
    n2: int
    p_in: float
    p_out: float
    eta: float
    alpha: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0 or self.n1 + self.n2 < 2:
            raise ParamOutOfRangeError("block sizes must be nonnegative with at least 2 nodes total")
        for name in ("p_in", "p_out", "eta"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ParamOutOfRangeError(f"{name}={v} outside [0, 1]")
        if self.alpha <= 0:
            raise ParamOutOfRangeError("alpha must be positive")

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    def planted_signs(self) -> np.ndarray:
        s = np.ones(self.n, dtype=np.int8)
        s[self.n1:] = -1
        return s


def ssbm(params: SSBMParams) -> SignedGraph:
    """Draw a connected SSBM instance; resamples up to 100 times for
    connectivity before giving up."""
    rng = np.random.default_rng(params.seed)
    for _ in range(CONNECTIVITY_RETRIES):
        edges = _ssbm_once(params, rng)
        try:
            return build_graph(params.n, edges)
        except DisconnectedError:
            continue
    raise GaveUpConnectivityError(
        f"no connected draw within {CONNECTIVITY_RETRIES} attempts; "
        f"raise p_in/p_out or change the seed"
    )


def _ssbm_once(params: SSBMParams, rng: np.random.Generator) -> list[tuple[int, int, float]]:
    n, n1 = params.n, params.n1
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            same = (i < n1) == (j < n1)
            if rng.random() >= (params.p_in if same else params.p_out):
                continue
            sign = 1.0 if same else -1.0
            if rng.random() < params.eta:
                sign = -sign
            edges.append((i, j, sign * params.alpha))
    return edges


# ---------------------------------------------------------------------------
# ring lattices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BalancedPlan:
    """Signs consistent with a bipartition rule: positive inside parts,
    negative across."""

    rule: str = "all"


@dataclass(frozen=True)
class AntibalancedPlan:
    """Signs opposite to the balanced plan for the same rule."""

    rule: str = "all"


@dataclass(frozen=True)
class FlipKPlan:
    """Balanced plan perturbed by flipping k distinct random edge signs."""

    k: int
    seed: int = 0
    base_rule: str = "all"


SignPlan = Union[BalancedPlan, AntibalancedPlan, FlipKPlan]


def resolve_partition_rule(rule: str, n: int) -> np.ndarray:
    """Sign vector for a named bipartition rule.

    ``all`` puts every node in the first part; ``arc:<k>`` puts nodes
    0..k-1 there; ``blocks:<b>`` alternates contiguous blocks of size b.
    """
    if rule == "all":
        return np.ones(n, dtype=np.int8)
    kind, _, arg = rule.partition(":")
    if kind == "arc" and arg:
        k = int(arg)
        if not 0 <= k <= n:
            raise ParamOutOfRangeError(f"arc size {k} outside [0, {n}]")
        s = np.full(n, -1, dtype=np.int8)
        s[:k] = 1
        return s
    if kind == "blocks" and arg:
        b = int(arg)
        if b < 1:
            raise ParamOutOfRangeError("block size must be positive")
        return np.array([1 if (i // b) % 2 == 0 else -1 for i in range(n)], dtype=np.int8)
    raise ParamOutOfRangeError(f"unknown bipartition rule {rule!r}")


@dataclass(frozen=True)
class LatticeParams:
    """Signed ring lattice: n nodes on a circle, each adjacent to dbar/2
    nearest neighbours per side, uniform weight magnitude alpha."""

    n: int
    dbar: int
    alpha: float
    sign_plan: SignPlan

    def __post_init__(self):
        if self.dbar % 2 != 0 or not (2 <= self.dbar < self.n):
            raise ParamOutOfRangeError(f"dbar must be even with 2 <= dbar < n, got dbar={self.dbar}, n={self.n}")
        if self.alpha <= 0:
            raise ParamOutOfRangeError("alpha must be positive")


def ring_lattice(params: LatticeParams) -> SignedGraph:
    """Circulant ring lattice with signs from the given plan."""
    n, half = params.n, params.dbar // 2
    pairs = [(i, (i + o) % n) for i in range(n) for o in range(1, half + 1)]
    pairs = sorted({(min(i, j), max(i, j)) for i, j in pairs})
    plan = params.sign_plan
    if isinstance(plan, BalancedPlan):
        signs = _partition_signs(pairs, resolve_partition_rule(plan.rule, n))
    elif isinstance(plan, AntibalancedPlan):
        signs = [-v for v in _partition_signs(pairs, resolve_partition_rule(plan.rule, n))]
    elif isinstance(plan, FlipKPlan):
        signs = _partition_signs(pairs, resolve_partition_rule(plan.base_rule, n))
        if not 0 <= plan.k <= len(pairs):
            raise ParamOutOfRangeError(f"cannot flip {plan.k} of {len(pairs)} edges")
        rng = np.random.default_rng(plan.seed)
        for idx in rng.choice(len(pairs), size=plan.k, replace=False):
            signs[idx] = -signs[idx]
    else:
        raise ParamOutOfRangeError(f"unknown sign plan {plan!r}")
    edges = [(i, j, sign * params.alpha) for (i, j), sign in zip(pairs, signs)]
    return build_graph(n, edges)


def _partition_signs(pairs, s: np.ndarray) -> list[float]:
    return [1.0 if s[i] == s[j] else -1.0 for i, j in pairs]


# ---------------------------------------------------------------------------
# random signed trees
# ---------------------------------------------------------------------------

def random_signed_tree(n: int, sign_prob: float, seed: int = 0, alpha: float = 1.0) -> SignedGraph:
    """Uniform random recursive tree; each edge negative with ``sign_prob``."""
    if n < 1:
        raise ParamOutOfRangeError("tree needs at least one node")
    if not (0.0 <= sign_prob <= 1.0):
        raise ParamOutOfRangeError(f"sign_prob={sign_prob} outside [0, 1]")
    if alpha <= 0:
        raise ParamOutOfRangeError("alpha must be positive")
    rng = np.random.default_rng(seed)
    edges = []
    for child in range(1, n):
        parent = int(rng.integers(0, child))
        sign = -1.0 if rng.random() < sign_prob else 1.0
        edges.append((parent, child, sign * alpha))
    return build_graph(n, edges)


# ---------------------------------------------------------------------------
# JSON parameter round-trip (CLI surface)
# ---------------------------------------------------------------------------

def sign_plan_from_json(doc: dict) -> SignPlan:
    kind = doc.get("kind")
    if kind == "balanced":
        return BalancedPlan(rule=doc.get("rule", "all"))
    if kind == "antibalanced":
        return AntibalancedPlan(rule=doc.get("rule", "all"))
    if kind == "flip_k":
        return FlipKPlan(k=int(doc["k"]), seed=int(doc.get("seed", 0)), base_rule=doc.get("base_rule", "all"))
    raise ParamOutOfRangeError(f"unknown sign plan kind {kind!r}")


def sign_plan_to_json(plan: SignPlan) -> dict:
    if isinstance(plan, BalancedPlan):
        return {"kind": "balanced", "rule": plan.rule}
    if isinstance(plan, AntibalancedPlan):
        return {"kind": "antibalanced", "rule": plan.rule}
    if isinstance(plan, FlipKPlan):
        return {"kind": "flip_k", "k": plan.k, "seed": plan.seed, "base_rule": plan.base_rule}
    raise ParamOutOfRangeError(f"unknown sign plan {plan!r}")
