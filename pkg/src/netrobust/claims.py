"""Catalog of the published DCell, complete-graph and star-graph claims.

Each record states what the published results assert for one instance, or NotStated
when the instance lies outside every stated parameter range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .topology import size_t

NOT_STATED = "NotStated"

METRICS = (
    "lambda",
    "lambda2",
    "lambda3",
    "xi2",
    "xi3",
    "alpha",
    "mp",
    "mp1",
    "super_lambda",
    "super_lambda2",
    "super_lambda3",
    "super_matched",
    "cond_super_matched",
    "isomorphic_to_star",
)

# Instances beyond this order are never attempted at desk scale.
DESK_ORDER_LIMIT = 2000

Expected = Union[int, bool, str]


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    family: str  # dcell, star or complete
    params: tuple[int, int]  # (k, n) for dcell, (n', k') for star, (n, 0) for complete
    metric: str
    expected: Expected
    source: str
    desk_verifiable: bool

    @property
    def stated(self) -> bool:
        return self.expected != NOT_STATED


def _record(family, params, metric, expected, source, order) -> ClaimRecord:
    tag = "-".join(str(p) for p in params)
    return ClaimRecord(
        id=f"{family}-{tag}-{metric}",
        family=family,
        params=params,
        metric=metric,
        expected=expected,
        source=source if expected != NOT_STATED else "no stated claim for these parameters",
        desk_verifiable=order <= DESK_ORDER_LIMIT,
    )


def _dcell_expectation(metric: str, k: int, n: int) -> tuple[Expected, str]:
    r = n + k - 1
    if metric == "lambda":
        return r, "lambda(D_{k,n}) = n+k-1"
    if metric == "lambda2" or metric == "xi2":
        if k >= 2:
            return 2 * n + 2 * k - 4, f"{metric}(D_{{k,n}}) = 2n+2k-4 for n>=2, k>=2"
    if metric == "lambda3" or metric == "xi3":
        if n >= 3 and k >= 3:
            return 3 * n + 3 * k - 9, "lambda3(D_{k,n}) = 3n+3k-9 for n>=3, k>=3"
        if n == 2 and k >= 2:
            return 3 * n + 3 * k - 7, "lambda3(D_{k,2}) = 3n+3k-7 for k>=2"
    if metric == "alpha" and (k, n) == (2, 2):
        return 19, "alpha(D_{2,2}) = 19"
    if metric == "mp":
        if k == 1 and n >= 3:
            return n, "mp(D_{1,n}) = n for n>=3"
        if k >= 2:
            return r, "mp(D_{k,n}) = n+k-1 for k>=2, n>=2"
    if metric == "mp1":
        if k >= 3 and n >= 3:
            return 2 * n + 2 * k - 5, "mp1(D_{k,n}) = 2n+2k-5 for k>=3, n>=3"
        if n == 2 and k >= 2:
            return 2 * n + 2 * k - 4, "mp1(D_{k,2}) = 2n+2k-4 for k>=2"
    if metric == "super_lambda":
        if k >= 2:
            return True, "D_{k,n} is super-lambda for k>=2, n>=2"
        if k == 1:
            return False, "D_{1,n} is not super-lambda for n>=2"
    if metric == "super_lambda2":
        if k >= 3 or (k, n) == (2, 2):
            return True, "D_{k,n} is super-lambda2 for k>=3, n>=2, or k=2, n=2"
        if k == 2 and n >= 3:
            return False, "D_{2,n} is not super-lambda2 for n>=3"
        if k == 1:
            return False, "D_{1,n} is not super-lambda2 for n>=2"
    if metric == "super_lambda3":
        if k >= 4 and n >= 3:
            return True, "D_{k,n} is super-lambda3 for k>=4, n>=3"
        if n == 2 and k >= 2:
            return True, "D_{k,2} is super-lambda3 for k>=2"
        if k == 3 and n >= 4:
            return False, "D_{3,n} is not super-lambda3 for n>=4"
    if metric == "super_matched":
        if k >= 2:
            return True, "D_{k,n} is super matched for k>=2, n>=2"
        if k == 1 and n == 2:
            return False, "D_{1,2} is a 6-cycle and not super matched"
        if k == 1 and n % 2 == 0:
            return True, "D_{1,n} is super matched for even n>=3"
        if k == 1:
            return False, "D_{1,n} for odd n>=3 has semi-trivial optimal solutions"
    if metric == "cond_super_matched":
        if k >= 4 and n >= 3:
            return True, "D_{k,n} is conditionally super matched for k>=4, n>=3"
        if n == 2 and k >= 3:
            return True, "D_{k,2} is conditionally super matched for k>=3"
    if metric == "isomorphic_to_star" and k == 1:
        return True, "D_{1,n} is isomorphic to S_{n+1,2}"
    return NOT_STATED, ""


def claims_for(k: int, n: int) -> list[ClaimRecord]:
    """Every catalog metric instantiated for D_{k,n}."""
    if k < 0 or n < 2:
        raise ValueError("need k >= 0 and n >= 2")
    order = size_t(k, n)
    out = []
    for metric in METRICS:
        expected, source = _dcell_expectation(metric, k, n)
        out.append(_record("dcell", (k, n), metric, expected, source, order))
    return out


def complete_claims(n: int) -> list[ClaimRecord]:
    """Claims for the complete graph K_n."""
    if n < 2:
        raise ValueError("need n >= 2")
    table: dict[str, tuple[Expected, str]] = {
        "lambda": (n - 1, "lambda(K_n) = n-1"),
        "alpha": (1, "alpha(K_n) = 1"),
    }
    if n >= 4:
        table["lambda2"] = (2 * n - 4, "lambda2(K_n) = 2n-4 for n>=4")
        table["super_lambda2"] = (True, "K_n is super-lambda2 for n>=4")
    if n >= 6:
        table["lambda3"] = (3 * n - 9, "lambda3(K_n) = 3n-9 for n>=6")
        table["super_lambda3"] = (True, "K_n is super-lambda3 for n>=6")
    return [
        _record("complete", (n, 0), metric, *table.get(metric, (NOT_STATED, "")), n)
        for metric in METRICS
        if metric != "isomorphic_to_star"
    ]


def star_claims(n_prime: int, k_prime: int = 2) -> list[ClaimRecord]:
    """Claims for the (n', 2)-star graph; other k' carry no stated values."""
    if not 1 <= k_prime < n_prime:
        raise ValueError("need 1 <= k' < n'")
    order = 1
    for i in range(k_prime):
        order *= n_prime - i
    table: dict[str, tuple[Expected, str]] = {}
    if k_prime == 2 and n_prime >= 4:
        table["mp"] = (n_prime - 1, "mp(S_{n,2}) = n-1 for n>=4")
        if n_prime % 2:
            table["super_matched"] = (True, "S_{n,2} is super matched for odd n>=4")
        else:
            table["super_matched"] = (
                False,
                "S_{n,2} for even n>=4 has semi-trivial optimal solutions",
            )
    return [
        _record("star", (n_prime, k_prime), metric, *table.get(metric, (NOT_STATED, "")), order)
        for metric in ("mp", "super_matched")
    ]
