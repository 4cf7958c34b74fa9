"""Acceptance verification suites.

Each criterion function below checks one shipping gate at its stated
tolerance and returns a :class:`CriterionResult`; the CLI ``verify``
subcommand and the acceptance test module both run these.  Suites:

* ``spectra``: classification oracle, spectral theorem, radius contraction,
  measures, highland tribes, perturbation first-order check
* ``walks``:   stationary states, doubled-walk consistency
* ``elt``:     lattice behavior, figure-pattern reproduction
* ``all``:     everything, in criterion order

Everything is deterministic: corpora are generated from fixed seeds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import datasets
from .balance import Verdict, apply_flip_set, bipartite_partition, classify
from .core import SignedGraph, build_graph, unsigned_counterpart
from .dynamics import (
    ELTConfig,
    StationaryKind,
    doubled_walk_simulate,
    elt_lattice_simulate,
    elt_simulate,
    linear_adjacency_simulate,
    predict_stationary,
    random_walk_simulate,
)
from .generate import BalancedPlan, FlipKPlan, AntibalancedPlan, LatticeParams, SSBMParams, ring_lattice, ssbm
from .spectral import balance_measures, perturbation_estimate, transition_spectrum, verify_spectral_theorem


@dataclass(frozen=True)
class CriterionResult:
    criterion: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.criterion}: {self.detail} ({self.seconds:.2f}s)"


def _result(name: str, started: float, passed: bool, detail: str) -> CriterionResult:
    return CriterionResult(name, passed, detail, time.perf_counter() - started)


# ---------------------------------------------------------------------------
# desk-scale corpus and the independent cycle-sign oracle
# ---------------------------------------------------------------------------

def random_connected_corpus(count: int, max_n: int = 6, seed: int = 2024) -> list[SignedGraph]:
    """Connected unit-weight signed graphs: random tree plus random extras."""
    rng = np.random.default_rng(seed)
    graphs = []
    for _ in range(count):
        n = int(rng.integers(2, max_n + 1))
        edges = {}
        for child in range(1, n):
            parent = int(rng.integers(0, child))
            edges[(min(parent, child), max(parent, child))] = None
        possible = [(i, j) for i in range(n) for j in range(i + 1, n)]
        extra = int(rng.integers(0, len(possible) + 1))
        for idx in rng.permutation(len(possible))[:extra]:
            edges[possible[idx]] = None
        signed = [(i, j, 1.0 if rng.random() < 0.5 else -1.0) for i, j in sorted(edges)]
        graphs.append(build_graph(n, signed))
    return graphs


def enumerate_simple_cycles(G: SignedGraph) -> list[list[int]]:
    """All simple cycles as node sequences (each cycle once, up to rotation
    and reflection).  Exponential; intended for desk-scale oracles only."""
    n = G.n
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j, _ in G.edges:
        adj[i].append(j)
        adj[j].append(i)
    cycles = []

    def extend(path: list[int]) -> None:
        head, start = path[-1], path[0]
        for nxt in adj[head]:
            if nxt == start and len(path) >= 3 and path[1] < path[-1]:
                cycles.append(list(path))
            elif nxt > start and nxt not in path:
                path.append(nxt)
                extend(path)
                path.pop()

    for start in range(n):
        extend([start])
    return cycles


def cycle_sign_oracle(G: SignedGraph) -> tuple[bool, bool]:
    """(balanced, antibalanced) by exhaustive simple-cycle enumeration.

    Balanced: every cycle carries an even number of negative edges;
    antibalanced: an even number of positive edges.
    """
    balanced = True
    antibalanced = True
    for cycle in enumerate_simple_cycles(G):
        negatives = positives = 0
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            if G.weight(a, b) < 0:
                negatives += 1
            else:
                positives += 1
        if negatives % 2:
            balanced = False
        if positives % 2:
            antibalanced = False
        if not balanced and not antibalanced:
            break
    return balanced, antibalanced


# ---------------------------------------------------------------------------
# SSBM corpora (reference experiment configuration)
# ---------------------------------------------------------------------------

def reference_ssbm(eta: float, seed: int, n1: int = 6, n2: int = 10) -> SignedGraph:
    return ssbm(SSBMParams(n1=n1, n2=n2, p_in=0.8, p_out=0.1, eta=eta, alpha=0.1, seed=seed))


def ssbm_with_verdict(eta: float, verdict: Verdict, count: int, seed0: int,
                      require_nonbipartite: bool = False) -> list[SignedGraph]:
    out: list[SignedGraph] = []
    seed = seed0
    while len(out) < count:
        G = reference_ssbm(eta, seed)
        seed += 1
        if classify(G).verdict is not verdict:
            continue
        if require_nonbipartite and bipartite_partition(G) is not None:
            continue
        out.append(G)
    return out


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------

def criterion_classification_oracle() -> CriterionResult:
    """1: classify agrees with exhaustive cycle-sign enumeration, 500 graphs."""
    started = time.perf_counter()
    corpus = random_connected_corpus(500)
    mismatches = 0
    for G in corpus:
        c = classify(G)
        balanced, antibalanced = cycle_sign_oracle(G)
        if (c.is_balanced, c.is_antibalanced) != (balanced, antibalanced):
            mismatches += 1
    elapsed = time.perf_counter() - started
    passed = mismatches == 0 and elapsed < 30.0
    return _result("1-classification-oracle", started, passed,
                   f"{len(corpus)} graphs, {mismatches} mismatches, {elapsed:.1f}s (< 30s)")


def criterion_spectral_theorem() -> CriterionResult:
    """2: signed/unsigned spectra correspondence on 100 + 100 SSBM draws."""
    started = time.perf_counter()
    worst_vals = worst_lead = 0.0
    for eta, verdict in ((0.0, Verdict.BALANCED), (1.0, Verdict.ANTIBALANCED)):
        for G in ssbm_with_verdict(eta, verdict, 100, seed0=0):
            report = verify_spectral_theorem(G, classify(G))
            worst_vals = max(worst_vals, report.eigenvalue_max_dev)
            worst_lead = max(worst_lead, report.leading_magnitude_dev)
    passed = worst_vals < 1e-9 and worst_lead < 1e-8
    return _result("2-spectral-theorem", started, passed,
                   f"max eigenvalue dev {worst_vals:.2e} (< 1e-9), "
                   f"max leading |u| dev {worst_lead:.2e} (< 1e-8)")


def criterion_radius_contraction() -> CriterionResult:
    """3: strictly unbalanced <=> rho(W) < rho(|W|) - 1e-9, both directions."""
    started = time.perf_counter()
    corpus = random_connected_corpus(500)
    exceptions = 0
    for G in corpus:
        m = balance_measures(G)
        contracted = m.spectral_radius_signed < m.spectral_radius_unsigned - 1e-9
        strictly = classify(G).verdict is Verdict.STRICTLY_UNBALANCED
        if contracted != strictly:
            exceptions += 1
    return _result("3-radius-contraction", started, exceptions == 0,
                   f"{len(corpus)} graphs, {exceptions} exceptions")


def criterion_measures() -> CriterionResult:
    """4: d_b/d_a vanish exactly on the matching class; scale invariance."""
    started = time.perf_counter()
    balanced = ssbm_with_verdict(0.0, Verdict.BALANCED, 100, seed0=0)
    antibalanced = ssbm_with_verdict(1.0, Verdict.ANTIBALANCED, 100, seed0=0)
    strictly = ssbm_with_verdict(0.1, Verdict.STRICTLY_UNBALANCED, 50, seed0=0)
    ok = True
    details = []
    for G in balanced:
        m = balance_measures(G)
        ok &= m.d_b < 1e-8 and m.d_a > 1e-8
    for G in antibalanced:
        m = balance_measures(G)
        ok &= m.d_a < 1e-8 and m.d_b > 1e-8
    for G in strictly:
        m = balance_measures(G)
        ok &= m.d_b > 1e-8 and m.d_a > 1e-8
    worst_scale = 0.0
    for G in balanced[:10] + antibalanced[:10] + strictly[:10]:
        m = balance_measures(G)
        for factor in (10.0, 0.01):
            scaled = balance_measures(G.with_weights([e.w * factor for e in G.edges]))
            worst_scale = max(worst_scale, abs(scaled.d_b - m.d_b), abs(scaled.d_a - m.d_a))
    ok &= worst_scale < 1e-10
    details.append(f"zero-iff over 250 draws, scale dev {worst_scale:.2e} (< 1e-10)")
    return _result("4-measures", started, ok, "; ".join(details))


PUBLISHED_TRIBES_D_B = 0.155
PUBLISHED_TRIBES_D_A = 0.529
TRIBES_TOLERANCE = 0.002


def criterion_highland_tribes() -> CriterionResult:
    """5: bundled Gahuku-Gama network reproduces the published measures.

    The bundled edge list is a reconstruction (the canonical archive is not
    reachable from this environment); when it disagrees beyond tolerance this
    criterion reports the discrepancy rather than hiding it.  Internal
    consistency (verdict, closer-to-balanced ordering, scale invariance) is
    checked regardless.
    """
    started = time.perf_counter()
    G = datasets.highland_tribes()
    m = balance_measures(G)
    verdict = classify(G).verdict
    consistent = (
        verdict is Verdict.STRICTLY_UNBALANCED
        and m.d_b < m.d_a  # closer to balanced, as reported for this network
        and G.n == 16
    )
    db_ok = abs(m.d_b - PUBLISHED_TRIBES_D_B) <= TRIBES_TOLERANCE
    da_ok = abs(m.d_a - PUBLISHED_TRIBES_D_A) <= TRIBES_TOLERANCE
    elapsed = time.perf_counter() - started
    passed = consistent and db_ok and da_ok and elapsed < 1.0
    detail = (
        f"d_b={m.d_b:.4f} (published {PUBLISHED_TRIBES_D_B}), d_a={m.d_a:.4f} (published {PUBLISHED_TRIBES_D_A}), "
        f"verdict={verdict.value}, n={G.n}, m={G.num_edges}"
    )
    if not (db_ok and da_ok):
        detail += " -- reconstructed dataset disagrees with the published values; see README data provenance"
    return _result("5-highland-tribes", started, passed, detail)


def criterion_stationary_states() -> CriterionResult:
    """6: iterated walks match the closed-form limits for all three classes."""
    started = time.perf_counter()
    rng = np.random.default_rng(7)
    worst_fixed = worst_pair = worst_decay = 0.0

    def random_unit_l1(n: int) -> np.ndarray:
        x = rng.standard_normal(n)
        return x / np.abs(x).sum()

    for G in ssbm_with_verdict(0.0, Verdict.BALANCED, 50, seed0=300, require_nonbipartite=True):
        x0 = random_unit_l1(G.n)
        pred = predict_stationary(G, x0)
        assert pred.kind is StationaryKind.FIXED
        T = _mixing_horizon(G)
        traj = random_walk_simulate(G, x0, T)
        worst_fixed = max(worst_fixed, float(np.max(np.abs(traj.final - pred.fixed))))

    for G in ssbm_with_verdict(1.0, Verdict.ANTIBALANCED, 50, seed0=300, require_nonbipartite=True):
        x0 = random_unit_l1(G.n)
        pred = predict_stationary(G, x0)
        assert pred.kind is StationaryKind.ALTERNATING_PAIR
        T = _mixing_horizon(G)
        T += T % 2  # land on an even step
        traj = random_walk_simulate(G, x0, T)
        dev_even = float(np.max(np.abs(traj.states[-1] - pred.even)))
        dev_odd = float(np.max(np.abs(traj.states[-2] - pred.odd)))
        worst_pair = max(worst_pair, dev_even, dev_odd)

    for G in ssbm_with_verdict(0.1, Verdict.STRICTLY_UNBALANCED, 50, seed0=300):
        x0 = random_unit_l1(G.n)
        rho = transition_spectrum(G).spectral_radius
        T = int(np.ceil(10.0 / (-np.log10(rho))))
        traj = random_walk_simulate(G, x0, T)
        worst_decay = max(worst_decay, float(np.max(np.abs(traj.final))))

    passed = worst_fixed < 1e-6 and worst_pair < 1e-6 and worst_decay < 1e-8
    return _result("6-stationary-states", started, passed,
                   f"fixed dev {worst_fixed:.2e} (< 1e-6), pair dev {worst_pair:.2e} (< 1e-6), "
                   f"decay {worst_decay:.2e} (< 1e-8), 150 draws")


def _mixing_horizon(G: SignedGraph, target: float = 1e-9, cap: int = 20000) -> int:
    """Steps needed for the subdominant transition mode to fall below target."""
    vals = transition_spectrum(G).eigenvalues
    sub = sorted(np.abs(vals))[-2]
    if sub >= 1.0 - 1e-12:
        return cap
    return min(cap, int(np.ceil(np.log(target) / np.log(sub))) + 2)


def criterion_perturbation() -> CriterionResult:
    """7: first-order d_b prediction within 15% on >= 90% of 30 single flips."""
    started = time.perf_counter()
    hits = 0
    trials = 30
    for trial in range(trials):
        G = ssbm(SSBMParams(n1=30, n2=30, p_in=0.8, p_out=0.1, eta=0.0, alpha=0.1, seed=trial))
        if not classify(G).is_balanced:
            continue
        rng = np.random.default_rng(1000 + trial)
        e = G.edges[int(rng.integers(0, G.num_edges))]
        est = perturbation_estimate(G, [(e.i, e.j)])
        predicted_db = -est.delta_max
        measured_db = balance_measures(apply_flip_set(G, [(e.i, e.j)])).d_b
        if abs(measured_db - predicted_db) / measured_db < 0.15:
            hits += 1
    passed = hits >= int(np.ceil(0.9 * trials))
    return _result("7-perturbation", started, passed, f"{hits}/{trials} trials within 15% (need >= 27)")


def criterion_elt_lattice() -> CriterionResult:
    """8: ELT ring-lattice behavior at n=40, dbar=4, alpha=0.1."""
    started = time.perf_counter()
    n, dbar, alpha, horizon = 40, 4, 0.1, 30
    problems: list[str] = []

    def lattice(plan):
        return ring_lattice(LatticeParams(n=n, dbar=dbar, alpha=alpha, sign_plan=plan))

    def run(G, theta_l, mode):
        cfg = ELTConfig(theta_l=theta_l, alpha=alpha, l0=1.0, horizon=horizon)
        return elt_lattice_simulate(G, seed_center=0, cfg=cfg, mode=mode)

    # spread beyond the seeded neighbourhood iff theta_l <= dbar/2
    for theta_l in (1.0, 2.0, 2.5):
        G = lattice(BalancedPlan("all"))
        _, acts = run(G, theta_l, "balanced")
        spread = bool(acts.ever_active() - acts.active(0))
        if spread != (theta_l <= dbar / 2):
            problems.append(f"spread at theta_l={theta_l} is {spread}")
        if theta_l <= dbar / 2:
            # steady growth rate; the single step that closes the ring absorbs
            # whatever remains (the two frontiers meet), so it is exempt
            expected = dbar - 2 * (int(np.ceil(theta_l)) - 1)
            if len(acts.ever_active()) != n:
                problems.append(f"theta_l={theta_l}: lattice never saturates")
            for t in range(1, horizon + 1):
                if len(acts.active(t)) == n:
                    break
                new = len(acts.new_active(t))
                if new != expected:
                    problems.append(f"theta_l={theta_l}, t={t}: {new} new, expected {expected}")
                    break

    # sign preservation / inversion
    _, acts = run(lattice(BalancedPlan("arc:20")), 2.0, "balanced")
    for t in range(1, horizon + 1):
        if not (acts.plus(t - 1) <= acts.plus(t) and acts.minus(t - 1) <= acts.minus(t)):
            problems.append(f"balanced mode lost a sign at t={t}")
            break
    _, acts = run(lattice(AntibalancedPlan("all")), 2.0, "antibalanced")
    for t in range(1, horizon + 1):
        if not (acts.plus(t - 1) <= acts.minus(t) and acts.minus(t - 1) <= acts.plus(t)):
            problems.append(f"antibalanced mode failed to invert at t={t}")
            break

    # k-flip perturbations never activate more nodes per step than balanced
    _, acts_b = run(lattice(BalancedPlan("all")), 2.0, "balanced")
    for seed in range(5):
        _, acts_f = run(lattice(FlipKPlan(k=2, seed=seed)), 2.0, "balanced")
        for t in range(horizon + 1):
            if len(acts_f.active(t)) > len(acts_b.active(t)):
                problems.append(f"flip-2 seed {seed} exceeded balanced count at t={t}")
                break

    return _result("8-elt-lattice", started, not problems,
                   "spread iff theta_l <= dbar/2 at {1, 2, 2.5}; per-step counts, sign patterns, "
                   "flip-2 bound all hold" if not problems else "; ".join(problems))


def criterion_doubled_walk() -> CriterionResult:
    """9: two-species sum/difference match unsigned/signed walks to 1e-12."""
    started = time.perf_counter()
    rng = np.random.default_rng(11)
    worst = 0.0
    corpus = random_connected_corpus(20, max_n=12, seed=77)
    for G in corpus:
        xp = rng.random(G.n)
        xm = rng.random(G.n)
        plus, minus = doubled_walk_simulate(G, xp, xm, 50)
        signed = random_walk_simulate(G, xp - xm, 50)
        unsigned = random_walk_simulate(unsigned_counterpart(G), xp + xm, 50)
        worst = max(worst, float(np.max(np.abs((plus.states - minus.states) - signed.states))))
        worst = max(worst, float(np.max(np.abs((plus.states + minus.states) - unsigned.states))))
    return _result("9-doubled-walk", started, worst < 1e-12,
                   f"max deviation {worst:.2e} (< 1e-12) over {len(corpus)} graphs, 50 steps")


def criterion_figure_patterns() -> CriterionResult:
    """10: qualitative sign patterns of the three dynamics across regimes."""
    started = time.perf_counter()
    problems: list[str] = []

    def simulate_all(G, x0, steps):
        lin = linear_adjacency_simulate(G, x0, steps).states
        rw = random_walk_simulate(G, x0, steps).states
        cfg = ELTConfig(theta_l=1.0, alpha=0.1, l0=1.0, horizon=steps)
        elt, _ = elt_simulate(G, x0, cfg)
        return {"linear": lin, "rw": rw, "elt": elt.states}

    def agreement(states, pattern, steps):
        agree = total = 0
        for t in range(1, steps + 1):
            target = pattern(t)
            row = states[t]
            nz = np.abs(row) > 0
            agree += int(np.sum(np.sign(row[nz]) == target[nz]))
            total += int(np.sum(nz))
        return agree / total if total else 1.0

    steps = 10
    G0 = ssbm_with_verdict(0.0, Verdict.BALANCED, 1, seed0=42, require_nonbipartite=True)[0]
    s0 = classify(G0).balanced_partition.s.astype(float)
    for model, states in simulate_all(G0, s0.copy(), steps).items():
        frac = agreement(states, lambda t: s0, steps)
        if frac != 1.0:
            problems.append(f"eta=0 {model}: sign agreement {frac:.3f} != 1")

    G1 = ssbm_with_verdict(1.0, Verdict.ANTIBALANCED, 1, seed0=42, require_nonbipartite=True)[0]
    s1 = classify(G1).antibalanced_partition.s.astype(float)
    for model, states in simulate_all(G1, s1.copy(), steps).items():
        frac = agreement(states, lambda t: ((-1) ** t) * s1, steps)
        if frac != 1.0:
            problems.append(f"eta=1 {model}: sign agreement {frac:.3f} != 1")

    G005 = ssbm_with_verdict(0.05, Verdict.STRICTLY_UNBALANCED, 1, seed0=42)[0]
    planted = SSBMParams(n1=6, n2=10, p_in=0.8, p_out=0.1, eta=0.05, alpha=0.1).planted_signs().astype(float)
    fracs_near_b = {}
    for model, states in simulate_all(G005, planted.copy(), steps).items():
        fracs_near_b[model] = agreement(states, lambda t: planted, steps)
        if fracs_near_b[model] <= 0.9:
            problems.append(f"eta=0.05 {model}: agreement {fracs_near_b[model]:.3f} <= 0.9")

    G095 = ssbm_with_verdict(0.95, Verdict.STRICTLY_UNBALANCED, 1, seed0=42)[0]
    fracs_near_a = {}
    for model, states in simulate_all(G095, planted.copy(), steps).items():
        fracs_near_a[model] = agreement(states, lambda t: ((-1) ** t) * planted, steps)
        if fracs_near_a[model] <= 0.9:
            problems.append(f"eta=0.95 {model}: agreement {fracs_near_a[model]:.3f} <= 0.9")

    detail = ("pure regimes exact; near-balanced agreement "
              + ", ".join(f"{k}={v:.2f}" for k, v in fracs_near_b.items())
              + "; near-antibalanced "
              + ", ".join(f"{k}={v:.2f}" for k, v in fracs_near_a.items()))
    return _result("10-figure-patterns", started, not problems,
                   detail if not problems else "; ".join(problems))


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

CRITERIA: dict[str, Callable[[], CriterionResult]] = {
    "1-classification-oracle": criterion_classification_oracle,
    "2-spectral-theorem": criterion_spectral_theorem,
    "3-radius-contraction": criterion_radius_contraction,
    "4-measures": criterion_measures,
    "5-highland-tribes": criterion_highland_tribes,
    "6-stationary-states": criterion_stationary_states,
    "7-perturbation": criterion_perturbation,
    "8-elt-lattice": criterion_elt_lattice,
    "9-doubled-walk": criterion_doubled_walk,
    "10-figure-patterns": criterion_figure_patterns,
}

SUITES: dict[str, list[str]] = {
    "spectra": ["1-classification-oracle", "2-spectral-theorem", "3-radius-contraction",
                "4-measures", "5-highland-tribes", "7-perturbation"],
    "walks": ["6-stationary-states", "9-doubled-walk"],
    "elt": ["8-elt-lattice", "10-figure-patterns"],
    "all": list(CRITERIA),
}


def run_suite(suite: str, report: Optional[Callable[[str], None]] = print) -> list[CriterionResult]:
    """Run every criterion in a suite, reporting one line per criterion."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    results = []
    for name in SUITES[suite]:
        result = CRITERIA[name]()
        results.append(result)
        if report is not None:
            report(result.line())
    return results
