"""Closed-form values, bound formulas, and the floor/ceiling lemma, as pure
functions of the family parameters.

Every formula carries an explicit applicability guard; outside its guard a
prediction is flagged inapplicable rather than extrapolated. Where the
source states one bound but its own construction attains another (the
corona upper bound, the tree independence bound), both versions are
computed side by side so the harness can report which survives.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .graph import GraphSpec, generate


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class Prediction:
    kind: str  # "exact" | "upper" | "lower"
    source: str
    value: Optional[int]
    applicable: bool = True
    reason: Optional[str] = None

    @staticmethod
    def inapplicable(kind: str, source: str, reason: str) -> "Prediction":
        return Prediction(kind, source, None, applicable=False, reason=reason)


# ---------------------------------------------------------------------------
# per-family exact values


def complete_value(n: int) -> int:
    if n < 2:
        raise ValueError("complete-graph value requires n >= 2")
    return 2 if n == 3 else 1


def wheel_value(n: int) -> int:
    if n < 4:
        raise ValueError("wheel value requires n >= 4")
    return 2 * ceil_div(n, 6) - n + 3


def fan_value(n: int) -> int:
    if n < 4:
        raise ValueError("fan value requires n >= 4")
    return wheel_value(n)


def star_value(n: int) -> int:
    if n < 2:
        raise ValueError("star value requires n >= 2")
    return 3 - n


def complement_path_value(n: int) -> int:
    if n < 12:
        raise ValueError("complement-of-path value requires n >= 12")
    return -1


def complement_cycle_value(n: int) -> int:
    if n < 12:
        raise ValueError("complement-of-cycle value requires n >= 12")
    return -1


def complete_minus_matching_value(n: int) -> int:
    if n < 3:
        raise ValueError("K_{2n}-M value requires n >= 3")
    return 0


def join_complete_value(m: int, n: int) -> int:
    if not (2 <= m <= n) or m == 3 or n == 3:
        raise ValueError("join value requires 2 <= m <= n and m, n != 3")
    return 1


def corona_k3_value(k: int) -> int:
    if k < 1:
        raise ValueError("K_{3k} o K_3 value requires k >= 1")
    return -k


# ---------------------------------------------------------------------------
# tree bounds


def tree_support_leaf_bound(n: int, s: int, l: int) -> int:
    """ceil((n + 7s - 5l) / 4)."""
    if n < 2 or s < 1 or l < 1:
        raise ValueError("requires n >= 2, s >= 1, l >= 1")
    return ceil_div(n + 7 * s - 5 * l, 4)


def tree_domination_bound(n: int, gamma: int) -> int:
    """3*gamma - n; gamma within Ore's range."""
    if not (1 <= gamma <= ceil_div(n, 2)):
        raise ValueError("requires 1 <= gamma <= ceil(n/2)")
    return 3 * gamma - n


def tree_independence_bounds(n: int, beta0: int) -> Tuple[int, int]:
    """The stated bound 2n - beta0 and the proof-derived 2n - 3*beta0.

    The statement and its proof disagree; both candidates are returned,
    (stated, proof_derived), and tested empirically downstream.
    """
    if not (ceil_div(n, 2) <= beta0 <= n):
        raise ValueError("requires ceil(n/2) <= beta0 <= n")
    return 2 * n - beta0, 2 * n - 3 * beta0


# ---------------------------------------------------------------------------
# corona bounds (|G| = n, |H| = m, H connected with min degree >= 2)


def corona_upper_bound(n: int, m: int) -> Tuple[int, int]:
    """(stated_formula, construction_weight) for the corona upper bound.

    The stated formula is (m-4)*ceil(n/2) - m*floor(n/2) + 2n. The
    labeling used to prove it (anchors 2; m-1 ones and one -1 in the first
    ceil(n/2) copies; -1 elsewhere) actually weighs
    2n + (m-2)*ceil(n/2) - m*floor(n/2); both are reported.
    """
    if m < 3 or n < 1:
        raise ValueError("requires m >= 3 and n >= 1")
    half_up = ceil_div(n, 2)
    half_down = n // 2
    stated = (m - 4) * half_up - m * half_down + 2 * n
    construction = 2 * n + (m - 2) * half_up - m * half_down
    return stated, construction


def corona_lower_bound(n: int, m: int) -> int:
    """(2 - m) * n + 2 * floor(n/m)."""
    if m < 3 or n < 1:
        raise ValueError("requires m >= 3 and n >= 1")
    return (2 - m) * n + 2 * (n // m)


def lemma_inequality_holds(n: int, m: int) -> bool:
    """floor(n/m)*m + n <= ceil((n*m + n) / 2)."""
    if m < 3 or n < 1:
        raise ValueError("requires m >= 3 and n >= 1")
    return (n // m) * m + n <= ceil_div(n * m + n, 2)


# ---------------------------------------------------------------------------
# prediction dispatch


def predict(spec: GraphSpec) -> List[Prediction]:
    """All closed-form predictions that name this spec's family.

    Predictions outside a theorem's stated domain are returned flagged as
    inapplicable. Families without a closed form yield an empty list.
    """
    f = spec.family
    out: List[Prediction] = []
    if f == "complete":
        if spec.n >= 2:
            out.append(Prediction("exact", "complete", complete_value(spec.n)))
        else:
            out.append(Prediction.inapplicable("exact", "complete", "needs n >= 2"))
    elif f == "join_complete":
        m, n = spec.m, spec.n
        if 2 <= m <= n and m != 3 and n != 3:
            out.append(Prediction("exact", "join_complete", 1))
        else:
            out.append(
                Prediction.inapplicable(
                    "exact", "join_complete", "needs 2 <= m <= n and m, n != 3"
                )
            )
    elif f == "wheel":
        if spec.n >= 4:
            out.append(Prediction("exact", "wheel", wheel_value(spec.n)))
        else:
            out.append(Prediction.inapplicable("exact", "wheel", "needs n >= 4"))
    elif f == "fan":
        if spec.n >= 4:
            out.append(Prediction("exact", "fan", fan_value(spec.n)))
        else:
            out.append(Prediction.inapplicable("exact", "fan", "needs n >= 4"))
    elif f == "star":
        if spec.n >= 2:
            out.append(Prediction("exact", "star", star_value(spec.n)))
        else:
            out.append(Prediction.inapplicable("exact", "star", "needs n >= 2"))
    elif f == "complement_path":
        if spec.n >= 12:
            out.append(Prediction("exact", "complement_path", -1))
        else:
            out.append(
                Prediction.inapplicable("exact", "complement_path", "needs n >= 12")
            )
    elif f == "complement_cycle":
        if spec.n >= 12:
            out.append(Prediction("exact", "complement_cycle", -1))
        else:
            out.append(
                Prediction.inapplicable("exact", "complement_cycle", "needs n >= 12")
            )
    elif f == "complete_minus_matching":
        if spec.n >= 3:
            out.append(Prediction("exact", "complete_minus_matching", 0))
        else:
            out.append(
                Prediction.inapplicable(
                    "exact", "complete_minus_matching", "needs n >= 3"
                )
            )
    elif f == "corona_k3":
        if spec.k >= 1:
            out.append(Prediction("exact", "corona_k3", -spec.k))
        else:
            out.append(Prediction.inapplicable("exact", "corona_k3", "needs k >= 1"))
    elif f == "corona":
        g_spec, h_spec = spec.parts
        g = generate(g_spec)
        h = generate(h_spec)
        n, m = g.n, h.n
        if m >= 3 and h.is_connected() and min(len(h.adj[v]) for v in range(m)) >= 2:
            stated, construction = corona_upper_bound(n, m)
            out.append(Prediction("upper", "corona_upper_stated", stated))
            out.append(Prediction("upper", "corona_upper_construction", construction))
            out.append(Prediction("lower", "corona_lower", corona_lower_bound(n, m)))
        else:
            reason = "needs H connected with min degree >= 2 (so |H| >= 3)"
            out.append(Prediction.inapplicable("upper", "corona_upper_stated", reason))
            out.append(
                Prediction.inapplicable("upper", "corona_upper_construction", reason)
            )
            out.append(Prediction.inapplicable("lower", "corona_lower", reason))
    return out
