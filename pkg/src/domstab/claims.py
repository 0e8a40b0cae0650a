"""Registry and evaluator for the published 2-domination stability claims.

Every numbered statement from the source text (sections 2 to 4) is one
registered claim, C01 to C33, carrying its section locator and verbatim
formula quote. A claim verdict is always anchored to the enumeration
oracles: whenever an instance fits the configured oracle budget, the
brute-force result is computed alongside the fast solver and any
disagreement aborts the run with SolverDisagreementError, which is a
solver bug signal, never a claim verdict. Claim FAILs are data and carry
a re-checkable witness.

Conventions adopted here and repeated in every report header:

- K_{1,n} is read as the star with n leaves (order n + 1);
- removal sets are arbitrary vertex subsets, with no adjacency or
  connectivity restriction;
- cactus chain constructions and labelings are the ones fixed in
  :mod:`domstab.families`;
- the corona joins each root to all of its private copy, the one-vertex
  graph counts as having a universal vertex, and the universal-vertex
  corona value "n" is evaluated as |V(G)|.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .families import generate
from .graph import Graph, GraphError
from .io import parse_graph6, write_graph6
from .products import corona, has_universal_vertex, join, lexicographic
from .solver import (
    DominationResult,
    SearchBudgetExceeded,
    gamma2,
    gamma2_bruteforce,
    is_2_dominating,
)
from .stability import StabilityResult, st, st_bruteforce

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED(budget)"


class SolverDisagreementError(RuntimeError):
    """Fast solver and enumeration oracle disagreed; aborts the whole suite."""


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str
    params: str
    anchor: str


@dataclass(frozen=True)
class Witness:
    """Re-checkable evidence attached to a FAIL row."""

    graph6: str
    set_kind: str
    vertices: tuple[int, ...]
    graph6_b: str | None = None


@dataclass(frozen=True)
class ClaimInstanceResult:
    claim_id: str
    params: str
    claimed: str
    computed: str
    verdict: str
    witness: Witness | None


@dataclass(frozen=True)
class ClaimSummary:
    claim_id: str
    instances: int
    passed: int
    failed: int
    skipped: int
    first_counterexample: str | None


@dataclass(frozen=True)
class ClaimReport:
    meta: dict[str, Any]
    results: tuple[ClaimInstanceResult, ...]
    summaries: tuple[ClaimSummary, ...]


@dataclass(frozen=True)
class WorkBudget:
    """Deterministic per-instance work limits for the suite.

    Order caps gate instances outright; node caps abort a search that
    turns out to be too expensive. Both are instance-size based, never
    wall-clock based, so verdicts are reproducible byte for byte.
    """

    gamma2_max_order: int = 32
    gamma2_oracle_max_order: int = 14
    gamma2_max_nodes: int = 300_000
    st_max_order: int = 20
    st_oracle_max_order: int = 9
    st_max_nodes: int = 400_000

    @classmethod
    def scaled(cls, factor: float) -> "WorkBudget":
        base = cls()
        return cls(
            *(int(getattr(base, f) * factor) for f in (
                "gamma2_max_order",
                "gamma2_oracle_max_order",
                "gamma2_max_nodes",
                "st_max_order",
                "st_oracle_max_order",
                "st_max_nodes",
            ))
        )

    def as_dict(self) -> dict[str, int]:
        return {
            "gamma2_max_order": self.gamma2_max_order,
            "gamma2_oracle_max_order": self.gamma2_oracle_max_order,
            "gamma2_max_nodes": self.gamma2_max_nodes,
            "st_max_order": self.st_max_order,
            "st_oracle_max_order": self.st_oracle_max_order,
            "st_max_nodes": self.st_max_nodes,
        }


@dataclass(frozen=True)
class SuiteConfig:
    max_n: int = 10
    seed: int = 271828
    random_count: int = 200
    random_order_range: tuple[int, int] = (6, 10)
    include_labeled_order5: bool = True
    budget: WorkBudget = field(default_factory=WorkBudget)
    claim_ids: tuple[str, ...] | None = None
    threads: int = 1


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

_REGISTRY: tuple[Claim, ...] = (
    Claim("C01", "formula-equality", "path, n >= 4",
          "§2 Observation(i) 'the Path graph and the cycle graph of order n>=4': "
          "gamma2(P_n) = n/2 + 1 (n even), (n-1)/2 + 1 (n odd)"),
    Claim("C02", "formula-equality", "cycle, n >= 4",
          "§2 Observation(ii): gamma2(C_n) = n/2 (n even), (n+1)/2 (n odd)"),
    Claim("C03", "formula-equality", "path, n >= 4",
          "§2 Proposition(i) 'By removing the three first consecutive vertices': "
          "st(P_n) = 3"),
    Claim("C04", "piecewise", "cycle, n >= 4",
          "§2 Proposition(ii) 'we need to remove three consecutive vertices': "
          "st(C_n) = 2 (n odd), 3 (n even)"),
    Claim("C05", "formula-equality", "wheel, n >= 5",
          "§2 Proposition(iii) 'By removing two adjacent vertices of C_{n-1}': "
          "st(W_n) = 2"),
    Claim("C06", "formula-equality", "friendship, n >= 1",
          "§2 Observation(i): gamma2(F_n) = n + 1"),
    Claim("C07", "formula-equality", "book, n >= 2",
          "§2 Observation(ii): gamma2(B_n) = n + 1"),
    Claim("C08", "formula-equality", "friendship, n >= 2",
          "§2 Proposition(i) 'removing the central vertex': st(F_n) = 1"),
    Claim("C09", "formula-equality", "book, n >= 2",
          "§2 Proposition(ii) 'removing two vertices v_1,v_2 of B_n': st(B_n) = 1"),
    Claim("C10", "formula-equality", "complete, n >= 2",
          "§2 Observation(i): gamma2(K_n) = 2"),
    Claim("C11", "formula-equality", "star with n leaves, n >= 3",
          "§2 Observation(ii): gamma2(K_{1,n}) = n - 1"),
    Claim("C12", "piecewise", "complete bipartite, 1 <= m <= n",
          "§2 Observation(iii): gamma2(K_{m,n}) = n-1 (m=1), m-1 (n=1), "
          "4 (m,n >= 2)"),
    Claim("C13", "formula-equality", "complete, n >= 2",
          "§2 Proposition(i): st(K_n) = n - 1"),
    Claim("C14", "formula-equality", "star with n leaves, n >= 2",
          "§2 Proposition(ii): st(K_{1,n}) = 1"),
    Claim("C15", "piecewise", "complete bipartite, 1 <= m <= n",
          "§2 Proposition(iii): st(K_{m,n}) = 1 (m=1 or n=1), 2 (m,n >= 2)"),
    Claim("C16", "formula-equality", "tri_chain and para_chain, n >= 1",
          "§2.2 Observation(i): gamma2(T_n) = gamma2(Q_n) = ceil((n+2)/2)"),
    Claim("C17", "formula-equality", "ortho_chain, n >= 1",
          "§2.2 Observation(ii): gamma2(O_n) = n + 1"),
    Claim("C18", "formula-equality", "tri/para/ortho chains, n >= 2",
          "§2.2 Proposition: st(T_n) = st(Q_n) = st(O_n) = 2"),
    Claim("C19", "existential", "gap growth via helm, subdivided wheel, (P4, K_m)",
          "§2 Theorem 'is arbitrarily large': equal-stability pairs with "
          "unbounded gamma2 gap (helm vs subdivided wheel), and equal-gamma2 "
          "pairs with unbounded stability gap (P_4 vs K_n)"),
    Claim("C20", "inequality", "corpus graphs, n >= 2, all vertices v",
          "§3 Proposition: st(G) <= st(G - v) + 1"),
    Claim("C21", "inequality", "corpus graphs, n >= 2",
          "§3 Theorem(i): st(G) <= n - 1"),
    Claim("C22", "inequality", "corpus graphs with an induced star K_{1,t}, t >= 3",
          "§3 Theorem(ii) 'star graph K_{1,t} as the induced subgraph': "
          "st(G) <= n - t"),
    Claim("C23", "inequality", "corpus graphs with min degree 2, or >= 3",
          "§3 cited Theorem 'If the minimum degree delta(G)': "
          "gamma2 <= 2n/3 (delta = 2), gamma2 <= n/2 (delta >= 3)"),
    Claim("C24", "inequality", "corpus graphs with min degree 2, or >= 3",
          "§3 Corollary: st <= n + 1 - 3*gamma2/2 (delta = 2), "
          "st <= n + 1 - 2*gamma2 (delta >= 3)"),
    Claim("C25", "universal-over-corpus", "corpus graphs, n >= 2",
          "§3 Corollary: if st(G) = n - 1 then gamma2(G) = 1"),
    Claim("C26", "inequality", "corpus graphs with gamma2 >= 2",
          "§3 Theorem: st(G) <= n - gamma2(G) + 1"),
    Claim("C27", "inequality", "corpus graphs, n >= 2",
          "§3 Theorem: st(G) + st(complement of G) <= 2n - 2"),
    Claim("C28", "formula-equality", "panel pairs of nonempty graphs",
          "§4 Theorem: gamma2(G v H) = min{gamma2(G), gamma2(H)}"),
    Claim("C29", "inequality", "panel pairs of nonempty graphs",
          "§4 Theorem: st(G v H) <= min{st(G), st(H)}"),
    Claim("C30", "inequality", "panel pairs of nonempty graphs",
          "§4 Theorem: gamma2(G[H]) <= |V(H)| * gamma2(G)"),
    Claim("C31", "piecewise", "panel pairs of nonempty graphs",
          "§4 Corollary 'if G has at least one isolated vertex': "
          "st(G[H]) = st(G) (no isolated vertex in G), "
          "min{st(G), st(H)} (otherwise)"),
    Claim("C32", "piecewise", "panel pairs",
          "§4 Theorem and Remark 'contains a universal vertex': "
          "gamma2(G o H) = |V(G)| + gamma2(H) (H without universal vertex), "
          "|V(G)| (H with universal vertex)"),
    Claim("C33", "formula-equality", "panel pairs",
          "§4 Corollary: st(G o H) = 1"),
)

_CLAIMS_BY_ID = {c.id: c for c in _REGISTRY}


def list_claims() -> list[Claim]:
    """All registered claims, ordered by id."""
    return list(_REGISTRY)


# ---------------------------------------------------------------------------
# Oracle-anchored value computation
# ---------------------------------------------------------------------------


class _Evaluator:
    """Computes gamma2/st under a budget, cross-checking against the oracles.

    Results are memoized on the exact labeled graph, so corpus claims that
    revisit the same graph (or the same vertex-deleted subgraph) pay once.
    A ``None`` result means the instance exceeded the budget.
    """

    def __init__(self, budget: WorkBudget):
        self.budget = budget
        self._gamma2: dict[tuple[int, tuple[int, ...]], DominationResult | None] = {}
        self._st: dict[tuple[int, tuple[int, ...]], StabilityResult | None] = {}

    def gamma2_result(self, g: Graph) -> DominationResult | None:
        key = (g.order, g.adjacency)
        if key in self._gamma2:
            return self._gamma2[key]
        result = self._compute_gamma2(g)
        self._gamma2[key] = result
        return result

    def _compute_gamma2(self, g: Graph) -> DominationResult | None:
        b = self.budget
        if g.order > b.gamma2_max_order:
            return None
        try:
            fast = gamma2(g, max_nodes=b.gamma2_max_nodes)
        except SearchBudgetExceeded:
            return None
        if not is_2_dominating(g, fast.witness):
            raise SolverDisagreementError(
                f"gamma2 produced an invalid witness on {write_graph6(g)}"
            )
        if g.order <= b.gamma2_oracle_max_order:
            oracle = gamma2_bruteforce(g)
            if oracle.value != fast.value:
                raise SolverDisagreementError(
                    f"gamma2 disagreement on {write_graph6(g)}: "
                    f"fast={fast.value} oracle={oracle.value}"
                )
            return oracle
        return fast

    def st_result(self, g: Graph) -> StabilityResult | None:
        key = (g.order, g.adjacency)
        if key in self._st:
            return self._st[key]
        result = self._compute_st(g)
        self._st[key] = result
        return result

    def _compute_st(self, g: Graph) -> StabilityResult | None:
        b = self.budget
        if g.order > b.st_max_order or g.order == 0:
            return None
        try:
            fast = st(g, max_nodes=b.st_max_nodes)
        except SearchBudgetExceeded:
            return None
        if g.order <= b.st_oracle_max_order:
            oracle = st_bruteforce(g)
            if (fast.value, fast.witness.mask, fast.gamma2_before,
                    fast.gamma2_after) != (oracle.value, oracle.witness.mask,
                                           oracle.gamma2_before,
                                           oracle.gamma2_after):
                raise SolverDisagreementError(
                    f"st disagreement on {write_graph6(g)}: "
                    f"fast={fast} oracle={oracle}"
                )
            return oracle
        return fast


# ---------------------------------------------------------------------------
# Row helpers
# ---------------------------------------------------------------------------


def _skip(claim_id: str, params: str, claimed: str) -> ClaimInstanceResult:
    return ClaimInstanceResult(claim_id, params, claimed, "", SKIPPED, None)


def _gamma2_row(claim_id: str, params: str, claimed: int, g: Graph,
                ev: _Evaluator) -> ClaimInstanceResult:
    result = ev.gamma2_result(g)
    if result is None:
        return _skip(claim_id, params, str(claimed))
    verdict = PASS if result.value == claimed else FAIL
    witness = None
    if verdict == FAIL:
        witness = Witness(write_graph6(g), "dominating_set", result.witness.members())
    return ClaimInstanceResult(claim_id, params, str(claimed), str(result.value),
                               verdict, witness)


def _st_row(claim_id: str, params: str, claimed: int, g: Graph,
            ev: _Evaluator) -> ClaimInstanceResult:
    result = ev.st_result(g)
    if result is None:
        return _skip(claim_id, params, str(claimed))
    verdict = PASS if result.value == claimed else FAIL
    witness = None
    if verdict == FAIL:
        witness = Witness(write_graph6(g), "removal_set", result.witness.members())
    return ClaimInstanceResult(claim_id, params, str(claimed), str(result.value),
                               verdict, witness)


# ---------------------------------------------------------------------------
# Family claims
# ---------------------------------------------------------------------------

_FAMILY_GAMMA2: dict[str, tuple[str, int, Callable[[int], int]]] = {
    # claim id -> (family, first valid n, claimed value)
    "C01": ("path", 4, lambda n: n // 2 + 1),
    "C02": ("cycle", 4, lambda n: (n + 1) // 2),
    "C06": ("friendship", 1, lambda n: n + 1),
    "C07": ("book", 2, lambda n: n + 1),
    "C10": ("complete", 2, lambda n: 2),
    "C11": ("star", 3, lambda n: n - 1),
    "C17": ("ortho_chain", 1, lambda n: n + 1),
}

_FAMILY_ST: dict[str, tuple[str, int, Callable[[int], int]]] = {
    "C03": ("path", 4, lambda n: 3),
    "C04": ("cycle", 4, lambda n: 2 if n % 2 else 3),
    "C05": ("wheel", 5, lambda n: 2),
    "C08": ("friendship", 2, lambda n: 1),
    "C09": ("book", 2, lambda n: 1),
    "C13": ("complete", 2, lambda n: n - 1),
    "C14": ("star", 2, lambda n: 1),
}

_CHAINS = ("tri_chain", "para_chain", "ortho_chain")


def _family_params(family: str, n: int) -> str:
    return f"family={family},n={n}"


def _eval_family_gamma2(claim_id: str, ev: _Evaluator, n: int) -> ClaimInstanceResult:
    family, lo, claimed_fn = _FAMILY_GAMMA2[claim_id]
    if n < lo:
        raise GraphError(f"{claim_id} requires n >= {lo}, got {n}")
    return _gamma2_row(claim_id, _family_params(family, n), claimed_fn(n),
                       generate(family, n), ev)


def _eval_family_st(claim_id: str, ev: _Evaluator, n: int) -> ClaimInstanceResult:
    family, lo, claimed_fn = _FAMILY_ST[claim_id]
    if n < lo:
        raise GraphError(f"{claim_id} requires n >= {lo}, got {n}")
    return _st_row(claim_id, _family_params(family, n), claimed_fn(n),
                   generate(family, n), ev)


def _eval_c12(ev: _Evaluator, m: int, n: int) -> ClaimInstanceResult:
    if m < 1 or n < 1:
        raise GraphError("C12 requires m, n >= 1")
    claimed = n - 1 if m == 1 else m - 1 if n == 1 else 4
    return _gamma2_row("C12", f"m={m},n={n}", claimed,
                       generate("complete_bipartite", m, n), ev)


def _eval_c15(ev: _Evaluator, m: int, n: int) -> ClaimInstanceResult:
    if m < 1 or n < 1:
        raise GraphError("C15 requires m, n >= 1")
    claimed = 1 if m == 1 or n == 1 else 2
    return _st_row("C15", f"m={m},n={n}", claimed,
                   generate("complete_bipartite", m, n), ev)


def _eval_c16(ev: _Evaluator, family: str, n: int) -> ClaimInstanceResult:
    if family not in ("tri_chain", "para_chain") or n < 1:
        raise GraphError("C16 instances are (tri_chain|para_chain, n >= 1)")
    return _gamma2_row("C16", _family_params(family, n), (n + 3) // 2,
                       generate(family, n), ev)


def _eval_c18(ev: _Evaluator, family: str, n: int) -> ClaimInstanceResult:
    if family not in _CHAINS or n < 2:
        raise GraphError("C18 instances are (tri_chain|para_chain|ortho_chain, n >= 2)")
    return _st_row("C18", _family_params(family, n), 2, generate(family, n), ev)


def _eval_c19(ev: _Evaluator, part: str, gap: int, max_n: int) -> ClaimInstanceResult:
    if part not in ("i", "ii") or gap < 1:
        raise GraphError("C19 instances are (part 'i'|'ii', gap >= 1)")
    params = f"part={part},gap={gap}"
    claimed = (f"some equal-stability pair reaches |gamma2 difference| >= {gap}"
               if part == "i" else
               f"some equal-gamma2 pair reaches |st difference| >= {gap}")
    if part == "i":
        values = []
        for family in ("helm", "subdivided_wheel"):
            for n in range(4, max(4, max_n) + 1):
                g = generate(family, n)
                g2 = ev.gamma2_result(g)
                s = ev.st_result(g)
                if g2 is None or s is None:
                    return _skip("C19", params, claimed)
                values.append((family, n, g2.value, s.value))
        best = None
        for fam_a, n_a, g2_a, st_a in values:
            if fam_a != "helm":
                continue
            for fam_b, n_b, g2_b, st_b in values:
                if fam_b != "subdivided_wheel" or st_a != st_b:
                    continue
                spread = abs(g2_a - g2_b)
                if best is None or spread > best[0]:
                    best = (spread, n_a, g2_a, st_a, n_b, g2_b, st_b)
        if best is None:
            computed = "no pair with equal stability"
            verdict = FAIL
            witness = None
        else:
            spread, n_a, g2_a, st_a, n_b, g2_b, st_b = best
            computed = (f"max gap {spread}: helm n={n_a} (gamma2={g2_a}, st={st_a}) "
                        f"vs subdivided_wheel n={n_b} (gamma2={g2_b}, st={st_b})")
            verdict = PASS if spread >= gap else FAIL
            witness = None
            if verdict == FAIL:
                witness = Witness(write_graph6(generate("helm", n_a)),
                                  "best_gap_pair", (),
                                  write_graph6(generate("subdivided_wheel", n_b)))
        return ClaimInstanceResult("C19", params, claimed, computed, verdict, witness)

    # part (ii): the named construction is the pair (P_4, K_m)
    p4 = generate("path", 4)
    g2_p = ev.gamma2_result(p4)
    st_p = ev.st_result(p4)
    if g2_p is None or st_p is None:
        return _skip("C19", params, claimed)
    best = None
    for m in range(2, max(2, max_n) + 1):
        km = generate("complete", m)
        g2_k = ev.gamma2_result(km)
        st_k = ev.st_result(km)
        if g2_k is None or st_k is None:
            return _skip("C19", params, claimed)
        if g2_k.value != g2_p.value:
            continue
        spread = abs(st_p.value - st_k.value)
        if best is None or spread > best[0]:
            best = (spread, m)
    if best is None:
        computed = (f"no m in 2..{max_n} gives gamma2(K_m) = gamma2(P_4) = "
                    f"{g2_p.value}")
        verdict = FAIL
        witness = Witness(write_graph6(p4), "best_gap_pair", (),
                          write_graph6(generate("complete", max(2, max_n))))
    else:
        spread, m = best
        computed = f"max |st difference| {spread} at (P_4, K_{m})"
        verdict = PASS if spread >= gap else FAIL
        witness = None
        if verdict == FAIL:
            witness = Witness(write_graph6(p4), "best_gap_pair", (),
                              write_graph6(generate("complete", m)))
    return ClaimInstanceResult("C19", params, claimed, computed, verdict, witness)


# ---------------------------------------------------------------------------
# Corpus claims (single graph per instance)
# ---------------------------------------------------------------------------


def _eval_c20(ev: _Evaluator, g6: str) -> ClaimInstanceResult:
    g = parse_graph6(g6)
    params = f"g6={g6}"
    if g.order < 2:
        raise GraphError("C20 requires order >= 2")
    base = ev.st_result(g)
    if base is None:
        return _skip("C20", params, "st(G) <= st(G - v) + 1 for every v")
    tightest = None
    arg = -1
    for v in range(g.order):
        sub = ev.st_result(g.delete_mask(1 << v))
        if sub is None:
            return _skip("C20", params, "st(G) <= st(G - v) + 1 for every v")
        if tightest is None or sub.value < tightest:
            tightest = sub.value
            arg = v
    claimed = f"st(G) <= {tightest + 1} (tightest vertex v={arg})"
    computed = f"st(G) = {base.value}"
    verdict = PASS if base.value <= tightest + 1 else FAIL
    witness = Witness(g6, "removed_vertex", (arg,)) if verdict == FAIL else None
    return ClaimInstanceResult("C20", params, claimed, computed, verdict, witness)


def _eval_c21(ev: _Evaluator, g6: str) -> ClaimInstanceResult:
    g = parse_graph6(g6)
    params = f"g6={g6}"
    if g.order < 2:
        raise GraphError("C21 requires order >= 2")
    claimed = f"st <= {g.order - 1}"
    result = ev.st_result(g)
    if result is None:
        return _skip("C21", params, claimed)
    verdict = PASS if result.value <= g.order - 1 else FAIL
    witness = (Witness(g6, "removal_set", result.witness.members())
               if verdict == FAIL else None)
    return ClaimInstanceResult("C21", params, claimed, f"st = {result.value}",
                               verdict, witness)


def _eval_c22(ev: _Evaluator, g6: str) -> ClaimInstanceResult:
    g = parse_graph6(g6)
    params = f"g6={g6}"
    if g.order < 2:
        raise GraphError("C22 requires order >= 2")
    t = g.max_induced_star()
    if t < 3:
        raise GraphError("C22 requires an induced star K_{1,t} with t >= 3")
    claimed = f"st <= {g.order - t} (largest induced star t={t})"
    result = ev.st_result(g)
    if result is None:
        return _skip("C22", params, claimed)
    verdict = PASS if result.value <= g.order - t else FAIL
    witness = (Witness(g6, "removal_set", result.witness.members())
               if verdict == FAIL else None)
    return ClaimInstanceResult("C22", params, claimed, f"st = {result.value}",
                               verdict, witness)


def _eval_c23(ev: _Evaluator, g6: str) -> ClaimInstanceResult:
    g = parse_graph6(g6)
    params = f"g6={g6}"
    delta = g.min_degree() if g.order else 0
    if delta < 2:
        raise GraphError("C23 requires minimum degree at least 2")
    n = g.order
    claimed = ("3*gamma2 <= 2n (delta = 2)" if delta == 2
               else "2*gamma2 <= n (delta >= 3)")
    result = ev.gamma2_result(g)
    if result is None:
        return _skip("C23", params, claimed)
    value = result.value
    ok = 3 * value <= 2 * n if delta == 2 else 2 * value <= n
    computed = f"gamma2 = {value}, n = {n}, delta = {delta}"
    witness = (Witness(g6, "dominating_set", result.witness.members())
               if not ok else None)
    return ClaimInstanceResult("C23", params, claimed, computed,
                               PASS if ok else FAIL, witness)


def _eval_c24(ev: _Evaluator, g6: str) -> ClaimInstanceResult:
    g = parse_graph6(g6)
    params = f"g6={g6}"
    delta = g.min_degree() if g.order else 0
    if delta < 2:
        raise GraphError("C24 requires minimum degree at least 2")
    n = g.order
    claimed = ("2*st <= 2n + 2 - 3*gamma2 (delta = 2)" if delta == 2
               else "st <= n + 1 - 2*gamma2 (delta >= 3)")
    g2 = ev.gamma2_result(g)
    s = ev.st_result(g)
    if g2 is None or s is None:
        return _skip("C24", params, claimed)
    if delta == 2:
        ok = 2 * s.value <= 2 * n + 2 - 3 * g2.value
    else:
        ok = s.value <= n + 1 - 2 * g2.value
    computed = f"st = {s.value}, gamma2 = {g2.value}, n = {n}, delta = {delta}"
    witness = (Witness(g6, "removal_set", s.witness.members())
               if not ok else None)
    return ClaimInstanceResult("C24", params, claimed, computed,
                               PASS if ok else FAIL, witness)


def _eval_c25(ev: _Evaluator, g6: str) -> ClaimInstanceResult:
    g = parse_graph6(g6)
    params = f"g6={g6}"
    if g.order < 2:
        raise GraphError("C25 requires order >= 2")
    claimed = f"st = {g.order - 1} implies gamma2 = 1"
    s = ev.st_result(g)
    g2 = ev.gamma2_result(g)
    if s is None or g2 is None:
        return _skip("C25", params, claimed)
    ok = s.value != g.order - 1 or g2.value == 1
    computed = f"st = {s.value}, gamma2 = {g2.value}"
    witness = (Witness(g6, "dominating_set", g2.witness.members())
               if not ok else None)
    return ClaimInstanceResult("C25", params, claimed, computed,
                               PASS if ok else FAIL, witness)


def _eval_c26(ev: _Evaluator, g6: str) -> ClaimInstanceResult:
    g = parse_graph6(g6)
    params = f"g6={g6}"
    if g.order < 2:
        raise GraphError("C26 requires order >= 2 (so that gamma2 >= 2)")
    g2 = ev.gamma2_result(g)
    s = ev.st_result(g)
    if g2 is None or s is None:
        return _skip("C26", params, "st <= n - gamma2 + 1")
    claimed = f"st <= {g.order - g2.value + 1}"
    verdict = PASS if s.value <= g.order - g2.value + 1 else FAIL
    computed = f"st = {s.value}, gamma2 = {g2.value}"
    witness = (Witness(g6, "removal_set", s.witness.members())
               if verdict == FAIL else None)
    return ClaimInstanceResult("C26", params, claimed, computed, verdict, witness)


def _eval_c27(ev: _Evaluator, g6: str) -> ClaimInstanceResult:
    g = parse_graph6(g6)
    params = f"g6={g6}"
    if g.order < 2:
        raise GraphError("C27 requires order >= 2")
    claimed = f"st(G) + st(complement) <= {2 * g.order - 2}"
    a = ev.st_result(g)
    b = ev.st_result(g.complement())
    if a is None or b is None:
        return _skip("C27", params, claimed)
    total = a.value + b.value
    verdict = PASS if total <= 2 * g.order - 2 else FAIL
    computed = f"st(G) = {a.value}, st(complement) = {b.value}"
    witness = (Witness(g6, "removal_set", a.witness.members())
               if verdict == FAIL else None)
    return ClaimInstanceResult("C27", params, claimed, computed, verdict, witness)


# ---------------------------------------------------------------------------
# Pair claims (panel pairs)
# ---------------------------------------------------------------------------


def _eval_c28(ev: _Evaluator, name_g: str, g6: str, name_h: str,
              h6: str) -> ClaimInstanceResult:
    g, h = parse_graph6(g6), parse_graph6(h6)
    params = f"g={name_g},h={name_h}"
    a = ev.gamma2_result(g)
    b = ev.gamma2_result(h)
    joined = join(g, h)
    c = ev.gamma2_result(joined)
    if a is None or b is None or c is None:
        return _skip("C28", params, "gamma2(G v H) = min{gamma2(G), gamma2(H)}")
    claimed = min(a.value, b.value)
    verdict = PASS if c.value == claimed else FAIL
    witness = (Witness(write_graph6(joined), "dominating_set",
                       c.witness.members()) if verdict == FAIL else None)
    return ClaimInstanceResult("C28", params, str(claimed), str(c.value),
                               verdict, witness)


def _eval_c29(ev: _Evaluator, name_g: str, g6: str, name_h: str,
              h6: str) -> ClaimInstanceResult:
    g, h = parse_graph6(g6), parse_graph6(h6)
    params = f"g={name_g},h={name_h}"
    a = ev.st_result(g)
    b = ev.st_result(h)
    joined = join(g, h)
    c = ev.st_result(joined)
    if a is None or b is None or c is None:
        return _skip("C29", params, "st(G v H) <= min{st(G), st(H)}")
    bound = min(a.value, b.value)
    claimed = f"st(G v H) <= {bound}"
    verdict = PASS if c.value <= bound else FAIL
    witness = (Witness(write_graph6(joined), "removal_set",
                       c.witness.members()) if verdict == FAIL else None)
    return ClaimInstanceResult("C29", params, claimed,
                               f"st(G v H) = {c.value}", verdict, witness)


def _eval_c30(ev: _Evaluator, name_g: str, g6: str, name_h: str,
              h6: str) -> ClaimInstanceResult:
    g, h = parse_graph6(g6), parse_graph6(h6)
    params = f"g={name_g},h={name_h}"
    a = ev.gamma2_result(g)
    product = lexicographic(g, h)
    c = ev.gamma2_result(product)
    if a is None or c is None:
        return _skip("C30", params, "gamma2(G[H]) <= |V(H)| * gamma2(G)")
    bound = h.order * a.value
    claimed = f"gamma2(G[H]) <= {bound}"
    verdict = PASS if c.value <= bound else FAIL
    witness = (Witness(write_graph6(product), "dominating_set",
                       c.witness.members()) if verdict == FAIL else None)
    return ClaimInstanceResult("C30", params, claimed,
                               f"gamma2(G[H]) = {c.value}", verdict, witness)


def _eval_c31(ev: _Evaluator, name_g: str, g6: str, name_h: str,
              h6: str) -> ClaimInstanceResult:
    g, h = parse_graph6(g6), parse_graph6(h6)
    params = f"g={name_g},h={name_h}"
    a = ev.st_result(g)
    b = ev.st_result(h)
    product = lexicographic(g, h)
    c = ev.st_result(product)
    if a is None or b is None or c is None:
        return _skip("C31", params, "st(G[H]) piecewise equality")
    if g.min_degree() > 0:
        claimed = a.value
        branch = "no isolated vertex in G"
    else:
        claimed = min(a.value, b.value)
        branch = "G has an isolated vertex"
    verdict = PASS if c.value == claimed else FAIL
    witness = (Witness(write_graph6(product), "removal_set",
                       c.witness.members()) if verdict == FAIL else None)
    return ClaimInstanceResult("C31", params, f"st(G[H]) = {claimed} ({branch})",
                               f"st(G[H]) = {c.value}", verdict, witness)


def _eval_c32(ev: _Evaluator, name_g: str, g6: str, name_h: str,
              h6: str) -> ClaimInstanceResult:
    g, h = parse_graph6(g6), parse_graph6(h6)
    params = f"g={name_g},h={name_h}"
    product = corona(g, h)
    c = ev.gamma2_result(product)
    if has_universal_vertex(h):
        claimed_value = g.order
        branch = "H has a universal vertex; the claimed value n is read as |V(G)|"
    else:
        b = ev.gamma2_result(h)
        if b is None or c is None:
            return _skip("C32", params, "gamma2(G o H) piecewise")
        claimed_value = g.order + b.value
        branch = "H has no universal vertex"
    if c is None:
        return _skip("C32", params, "gamma2(G o H) piecewise")
    verdict = PASS if c.value == claimed_value else FAIL
    witness = (Witness(write_graph6(product), "dominating_set",
                       c.witness.members()) if verdict == FAIL else None)
    return ClaimInstanceResult("C32", params,
                               f"gamma2(G o H) = {claimed_value} ({branch})",
                               f"gamma2(G o H) = {c.value}", verdict, witness)


def _eval_c33(ev: _Evaluator, name_g: str, g6: str, name_h: str,
              h6: str) -> ClaimInstanceResult:
    g, h = parse_graph6(g6), parse_graph6(h6)
    params = f"g={name_g},h={name_h}"
    product = corona(g, h)
    c = ev.st_result(product)
    if c is None:
        return _skip("C33", params, "1")
    verdict = PASS if c.value == 1 else FAIL
    witness = (Witness(write_graph6(product), "removal_set",
                       c.witness.members()) if verdict == FAIL else None)
    return ClaimInstanceResult("C33", params, "1", str(c.value), verdict, witness)


# ---------------------------------------------------------------------------
# Instance construction
# ---------------------------------------------------------------------------

_PAIR_PANEL_SPEC: tuple[tuple[str, str, tuple[int, ...]], ...] = (
    # (display name, family or literal, params) -- all of order <= 5
    ("K1", "complete", (1,)),
    ("2K1", "", ()),
    ("K2", "complete", (2,)),
    ("K2+K1", "", ()),
    ("P3", "path", (3,)),
    ("K3", "complete", (3,)),
    ("P4", "path", (4,)),
    ("C4", "cycle", (4,)),
    ("K1,3", "star", (3,)),
    ("K4", "complete", (4,)),
    ("C5", "cycle", (5,)),
    ("K2,3", "complete_bipartite", (2, 3)),
)


def pair_panel() -> list[tuple[str, Graph]]:
    """The fixed small-graph panel used for the two-operand claims."""
    out: list[tuple[str, Graph]] = []
    for name, family, params in _PAIR_PANEL_SPEC:
        if name == "2K1":
            out.append((name, Graph.from_edges(2, [])))
        elif name == "K2+K1":
            out.append((name, Graph.from_edges(3, [(0, 1)])))
        else:
            out.append((name, generate(family, *params)))
    return out


def _random_corpus(count: int, order_range: tuple[int, int],
                   seed: int) -> list[Graph]:
    rng = random.Random(seed)
    lo, hi = order_range
    densities = (0.2, 0.35, 0.5, 0.65, 0.8)
    out = []
    for i in range(count):
        n = lo + i % (hi - lo + 1)
        p = densities[i % len(densities)]
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        out.append(Graph.from_edges(n, edges))
    return out


_CORPUS_FAMILY_MINIMA: dict[str, int] = {
    "path": 1, "cycle": 3, "complete": 1, "star": 1, "wheel": 4,
    "friendship": 1, "book": 1, "helm": 4, "subdivided_wheel": 4,
    "tri_chain": 1, "para_chain": 1, "ortho_chain": 1,
}


def _family_corpus(max_n: int) -> list[Graph]:
    out = []
    for name, lo in sorted(_CORPUS_FAMILY_MINIMA.items()):
        for n in range(lo, max_n + 1):
            out.append(generate(name, n))
    for m in range(1, max_n + 1):
        for n in range(m, max_n + 1):
            out.append(generate("complete_bipartite", m, n))
    return out


def build_corpus(config: SuiteConfig) -> list[str]:
    """Deterministic corpus as graph6 strings, deduplicated in order."""
    graphs: list[Graph] = []
    if config.include_labeled_order5:
        pairs = [(u, v) for u in range(5) for v in range(u + 1, 5)]
        for code in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if code >> i & 1]
            graphs.append(Graph.from_edges(5, edges))
    graphs.extend(_family_corpus(config.max_n))
    graphs.extend(_random_corpus(config.random_count,
                                 config.random_order_range, config.seed))
    return list(dict.fromkeys(write_graph6(g) for g in graphs))


def _corpus_payloads(corpus: list[str],
                     keep: Callable[[Graph], bool]) -> list[tuple]:
    out = []
    for g6 in corpus:
        if keep(parse_graph6(g6)):
            out.append((g6,))
    return out


def _pair_payloads(panel: list[tuple[str, Graph]]) -> list[tuple]:
    named = [(name, write_graph6(g)) for name, g in panel]
    return [(na, a, nb, b) for na, a in named for nb, b in named]


def _instances(claim_id: str, config: SuiteConfig, corpus: list[str],
               panel: list[tuple[str, Graph]]) -> list[tuple]:
    max_n = config.max_n
    if claim_id in _FAMILY_GAMMA2:
        lo = _FAMILY_GAMMA2[claim_id][1]
        return [(n,) for n in range(lo, max(lo, max_n) + 1)]
    if claim_id in _FAMILY_ST:
        lo = _FAMILY_ST[claim_id][1]
        return [(n,) for n in range(lo, max(lo, max_n) + 1)]
    if claim_id in ("C12", "C15"):
        return [(m, n) for m in range(1, max_n + 1) for n in range(m, max_n + 1)]
    if claim_id == "C16":
        return [(fam, n) for fam in ("tri_chain", "para_chain")
                for n in range(1, max_n + 1)]
    if claim_id == "C18":
        return [(fam, n) for fam in _CHAINS for n in range(2, max_n + 1)]
    if claim_id == "C19":
        return [(part, gap, max_n) for part in ("i", "ii")
                for gap in range(1, 6)]
    if claim_id in ("C20", "C21", "C25", "C26", "C27"):
        return _corpus_payloads(corpus, lambda g: g.order >= 2)
    if claim_id == "C22":
        return _corpus_payloads(
            corpus, lambda g: g.order >= 2 and g.max_induced_star() >= 3)
    if claim_id in ("C23", "C24"):
        return _corpus_payloads(
            corpus, lambda g: g.order >= 1 and g.min_degree() >= 2)
    if claim_id in ("C28", "C29", "C30", "C31", "C32", "C33"):
        return _pair_payloads(panel)
    raise KeyError(f"unknown claim id {claim_id!r}")


_EVALUATORS: dict[str, Callable[..., ClaimInstanceResult]] = {
    **{cid: (lambda cid: lambda ev, n: _eval_family_gamma2(cid, ev, n))(cid)
       for cid in _FAMILY_GAMMA2},
    **{cid: (lambda cid: lambda ev, n: _eval_family_st(cid, ev, n))(cid)
       for cid in _FAMILY_ST},
    "C12": _eval_c12,
    "C15": _eval_c15,
    "C16": _eval_c16,
    "C18": _eval_c18,
    "C19": _eval_c19,
    "C20": _eval_c20,
    "C21": _eval_c21,
    "C22": _eval_c22,
    "C23": _eval_c23,
    "C24": _eval_c24,
    "C25": _eval_c25,
    "C26": _eval_c26,
    "C27": _eval_c27,
    "C28": _eval_c28,
    "C29": _eval_c29,
    "C30": _eval_c30,
    "C31": _eval_c31,
    "C32": _eval_c32,
    "C33": _eval_c33,
}


# ---------------------------------------------------------------------------
# Public evaluation entry points
# ---------------------------------------------------------------------------


def _normalize_instance(claim_id: str, instance: Any) -> tuple:
    if claim_id in _FAMILY_GAMMA2 or claim_id in _FAMILY_ST:
        if not isinstance(instance, int):
            raise GraphError(f"{claim_id} takes a single integer parameter")
        return (instance,)
    if claim_id in ("C12", "C15"):
        m, n = instance
        return (int(m), int(n))
    if claim_id in ("C16", "C18"):
        family, n = instance
        return (str(family), int(n))
    if claim_id == "C19":
        part, gap = instance
        return (str(part), int(gap), SuiteConfig().max_n)
    if claim_id in ("C20", "C21", "C22", "C23", "C24", "C25", "C26", "C27"):
        if not isinstance(instance, Graph):
            raise GraphError(f"{claim_id} takes a corpus Graph instance")
        return (write_graph6(instance),)
    if claim_id in ("C28", "C29", "C30", "C31", "C32", "C33"):
        g, h = instance
        if not isinstance(g, Graph) or not isinstance(h, Graph):
            raise GraphError(f"{claim_id} takes a pair of Graph instances")
        return ("g", write_graph6(g), "h", write_graph6(h))
    raise KeyError(f"unknown claim id {claim_id!r}")


def evaluate_claim(claim_id: str, instance: Any, *,
                   budget: WorkBudget | None = None) -> ClaimInstanceResult:
    """Adjudicate one claim at one instance.

    ``instance`` is an int for single-parameter family claims, an (m, n)
    pair for C12/C15, a (family, n) pair for C16/C18, a (part, gap) pair
    for C19, a Graph for the corpus claims and a (Graph, Graph) pair for
    the two-operand claims.
    """
    if claim_id not in _CLAIMS_BY_ID:
        raise KeyError(f"unknown claim id {claim_id!r}")
    payload = _normalize_instance(claim_id, instance)
    ev = _Evaluator(budget if budget is not None else WorkBudget())
    return _EVALUATORS[claim_id](ev, *payload)


# Worker-side state for parallel suite evaluation.
_WORKER_EVALUATOR: _Evaluator | None = None


def _init_worker(budget: WorkBudget) -> None:
    global _WORKER_EVALUATOR
    _WORKER_EVALUATOR = _Evaluator(budget)


def _eval_token(token: tuple[str, tuple]) -> ClaimInstanceResult:
    claim_id, payload = token
    ev = _WORKER_EVALUATOR
    if ev is None:
        raise RuntimeError("worker evaluator not initialized")
    return _EVALUATORS[claim_id](ev, *payload)


def _summarize(claim_id: str,
               rows: Iterable[ClaimInstanceResult]) -> ClaimSummary:
    rows = [r for r in rows if r.claim_id == claim_id]
    passed = sum(1 for r in rows if r.verdict == PASS)
    failed = sum(1 for r in rows if r.verdict == FAIL)
    skipped = sum(1 for r in rows if r.verdict == SKIPPED)
    first = next((r.params for r in rows if r.verdict == FAIL), None)
    return ClaimSummary(claim_id, len(rows), passed, failed, skipped, first)


def run_suite(config: SuiteConfig | None = None) -> ClaimReport:
    """Evaluate the registered claims and assemble a deterministic report."""
    cfg = config if config is not None else SuiteConfig()
    if cfg.claim_ids is None:
        ids = [c.id for c in _REGISTRY]
    else:
        for cid in cfg.claim_ids:
            if cid not in _CLAIMS_BY_ID:
                raise KeyError(f"unknown claim id {cid!r}")
        ids = sorted(set(cfg.claim_ids))

    corpus = build_corpus(cfg)
    panel = pair_panel()
    tokens: list[tuple[str, tuple]] = []
    for cid in ids:
        for payload in _instances(cid, cfg, corpus, panel):
            tokens.append((cid, payload))

    if cfg.threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=cfg.threads,
                                 initializer=_init_worker,
                                 initargs=(cfg.budget,)) as pool:
            rows = list(pool.map(_eval_token, tokens, chunksize=16))
    else:
        _init_worker(cfg.budget)
        rows = [_eval_token(t) for t in tokens]

    summaries = tuple(_summarize(cid, rows) for cid in ids)
    lo, hi = cfg.random_order_range
    meta = {
        "generator": "domstab 0.1.0",
        "max_n": cfg.max_n,
        "seed": cfg.seed,
        "corpus": (
            ("all 1024 labeled graphs on 5 vertices; " if cfg.include_labeled_order5
             else "")
            + f"all family instances with parameters <= {cfg.max_n}; "
            + f"{cfg.random_count} random graphs G(n,p) with n in [{lo},{hi}], "
            + "p cycling (0.2, 0.35, 0.5, 0.65, 0.8), "
            + f"seed {cfg.seed}; deduplicated by graph6"
        ),
        "pair_panel": [name for name, _ in panel],
        "budget": cfg.budget.as_dict(),
        "conventions": [
            "K_{1,n} is the star with n leaves (order n+1); the alternative "
            "order-n reading would shift C11/C12/C14/C15 and is reported, "
            "not adjudicated",
            "removal sets are arbitrary vertex subsets; no adjacency or "
            "connectivity restriction (consecutive-only removals can give "
            "different stability values)",
            "cactus chains use the fixed labelings of domstab.families: "
            "para squares attach at opposite vertices, ortho squares at "
            "adjacent vertices",
            "corona joins each root to every vertex of its private copy",
            "the one-vertex graph counts as having a universal vertex",
            "the universal-vertex corona value 'n' is evaluated as |V(G)|",
        ],
        "claims": ids,
    }
    return ClaimReport(meta, tuple(rows), summaries)
