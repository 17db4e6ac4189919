"""Determinant laws checked against a concrete matrix.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
law.  Used by ``ringdet check`` and by the test suite as a negative control.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import determinant as D
from .matrix import Matrix, identity, mat_scale, multiply, replace_row, row, transpose
from .permutations import DEFAULT_CAP
from .rings import vec_add, vec_scale, zeros

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL


def _result(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, PASS if ok else FAIL, detail)


def _random_matrix(ring, n: int, rng: random.Random) -> Matrix:
    return Matrix._trusted(
        ring, tuple(tuple(ring.random_element(rng) for _ in range(n)) for _ in range(n)), n
    )


def run_checks(a: Matrix, seed: int = 20240101, cap: int = DEFAULT_CAP, samples: int = 5) -> list[CheckResult]:
    """Run every law on ``a`` (square, size >= 1) and return one result per law."""
    if not a.is_square or a.nrows < 1:
        raise ValueError(f"laws need a non-empty square matrix, got {a.dims}")
    ring = a.ring
    n = a.nrows
    eq = ring.eq
    rng = random.Random(seed)

    def det(m: Matrix):
        return D.det(m, cap=cap) if m.nrows <= cap else D.det_rec(m)

    d = det(a)
    results = [_result("transpose-invariance", eq(det(transpose(a)), d))]

    if n >= 2:
        bad = [
            (i, j) for i in range(n) for j in range(n)
            if i != j and not ring.is_zero(det(replace_row(a, j, row(i, a))))
        ]
        results.append(_result("alternating", not bad, f"nonzero for row pairs {bad}" if bad else ""))
    else:
        results.append(CheckResult("alternating", SKIP, "n < 2"))

    bad = [k for k in range(n) if not ring.is_zero(det(replace_row(a, k, zeros(ring, n))))]
    results.append(_result("zero-row", not bad, f"nonzero for rows {bad}" if bad else ""))

    ok = True
    for _ in range(samples):
        i = rng.randrange(n)
        c = ring.random_element(rng)
        x = tuple(ring.random_element(rng) for _ in range(n))
        y = tuple(ring.random_element(rng) for _ in range(n))
        lhs = det(replace_row(a, i, vec_add(ring, vec_scale(ring, c, x), y)))
        rhs = ring.add(ring.mul(c, det(replace_row(a, i, x))), det(replace_row(a, i, y)))
        ok = ok and eq(lhs, rhs)
    results.append(_result("n-linearity", ok, f"{samples} samples"))

    ok = True
    for _ in range(samples):
        b = _random_matrix(ring, n, rng)
        ok = ok and eq(det(multiply(a, b)), ring.mul(d, det(b)))
    results.append(_result("multiplicativity", ok, f"{samples} samples"))

    if n >= 2:
        adj = D.adjoint(a, det_fn=det)
        results.append(_result("adjoint-identity", multiply(a, adj) == mat_scale(d, identity(ring, n))))
    else:
        results.append(CheckResult("adjoint-identity", SKIP, "n < 2"))

    values = {"det-rec": D.det_rec(a)}
    if n <= cap:
        values["leibniz"] = D.det(a, cap=cap)
    if n >= 2:
        for k in range(n):
            values[f"expand-row[{k}]"] = D.expand_row(a, k, det_fn=det)
            values[f"expand-col[{k}]"] = D.expand_col(a, k, det_fn=det)
    bad = sorted(name for name, v in values.items() if not eq(v, d))
    results.append(_result("cross-algorithm", not bad, f"disagree: {bad}" if bad else f"{len(values)} routes"))

    if n <= 4:
        f = D.product_functional(_random_matrix(ring, n, rng), cap)
        verdict = D.check_uniqueness(f, a, rng=rng, cap=cap)
        results.append(_result("uniqueness", verdict.ok, "; ".join(verdict.failures())))
    else:
        results.append(CheckResult("uniqueness", SKIP, "n > 4"))
    return results
