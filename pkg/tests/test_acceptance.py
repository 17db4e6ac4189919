"""Acceptance criteria, one test each, at the stated sample counts and time limits.

Run alone with ``pytest tests/test_acceptance.py``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

import random
import time
from itertools import permutations as brute_perms
from pathlib import Path

import pytest

from ringdet import cli
from ringdet.determinant import (
    charpoly,
    check_uniqueness,
    det,
    det_functional,
    det_rec,
    expand_col,
    expand_col_functional,
    expand_row,
    adjoint,
    product_functional,
)
from ringdet.matrix import Matrix, identity, mat_scale, multiply, replace_row, row
from ringdet.permutations import (
    apply,
    compose,
    compose_all,
    decompose,
    enumerate_perms,
    identity_perm,
    invert,
    parity,
)
from ringdet.rings import Integers, IntegersMod, Polynomials, vec_add, vec_scale, zeros
from ringdet.textio import parse_matrix_file, parse_matrix_text, render_matrix

from strategies import RINGS

FIXTURES = Path(__file__).parent / "fixtures"
ZZ = Integers()


def rand_matrix(ring, n, rng):
    return Matrix._trusted(ring, tuple(tuple(ring.random_element(rng) for _ in range(n)) for _ in range(n)), n)


def rand_row(ring, n, rng):
    return tuple(ring.random_element(rng) for _ in range(n))


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.criterion(1, "ring axioms: 1000 instances x 8 rings, < 5 s")
def test_ring_axioms():
    failures = 0
    with Timer() as t:
        for k, ring in enumerate(RINGS):
            rng = random.Random(1000 + k)
            add, mul, neg, zero, one = ring.add, ring.mul, ring.neg, ring.zero, ring.one
            for _ in range(1000):
                x, y, z = (ring.random_element(rng) for _ in range(3))
                ok = (
                    ring.contains(add(x, y)) and ring.contains(mul(x, y)) and ring.contains(neg(x))
                    and add(x, y) == add(y, x)
                    and mul(x, y) == mul(y, x)
                    and add(add(x, y), z) == add(x, add(y, z))
                    and mul(mul(x, y), z) == mul(x, mul(y, z))
                    and add(x, zero) == x
                    and mul(x, one) == x
                    and add(x, neg(x)) == zero
                    and mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
                )
                failures += not ok
    assert failures == 0
    assert t.elapsed < 5.0


@pytest.mark.criterion(2, "det(I_n) = 1 for n = 1..6, every ring and algorithm, < 10 s")
def test_identity_determinant():
    with Timer() as t:
        for ring in RINGS:
            for n in range(1, 7):
                e = identity(ring, n)
                assert det(e) == ring.one, (ring, n)
                assert det_rec(e) == ring.one, (ring, n)
                for k in range(n if n > 1 else 0):
                    assert expand_row(e, k) == ring.one, (ring, n, k)
                    assert expand_col(e, k) == ring.one, (ring, n, k)
    assert t.elapsed < 10.0


@pytest.mark.criterion(3, "cross-algorithm equality: 200 matrices x 8 rings, n = 2..5, < 60 s")
def test_cross_algorithm():
    with Timer() as t:
        for k, ring in enumerate(RINGS):
            rng = random.Random(3000 + k)
            for trial in range(200):
                n = 2 + trial % 4
                a = rand_matrix(ring, n, rng)
                d = det(a)
                assert det_rec(a) == d
                for i in range(n):
                    assert expand_row(a, i) == d, (ring, a, i)
                    assert expand_col(a, i) == d, (ring, a, i)
    assert t.elapsed < 60.0


@pytest.mark.criterion(4, "alternating and zero-row: 200 constructions x 8 rings")
def test_alternating_zero_row():
    for k, ring in enumerate(RINGS):
        rng = random.Random(4000 + k)
        for trial in range(200):
            n = 2 + trial % 3
            a = rand_matrix(ring, n, rng)
            for i in range(n):
                for j in range(n):
                    if i != j:
                        assert det(replace_row(a, j, row(i, a))) == ring.zero
                assert det(replace_row(a, i, zeros(ring, n))) == ring.zero


@pytest.mark.criterion(5, "n-linearity: 200 samples x 8 rings, n <= 4")
def test_n_linearity():
    for k, ring in enumerate(RINGS):
        rng = random.Random(5000 + k)
        for trial in range(200):
            n = 1 + trial % 4
            a = rand_matrix(ring, n, rng)
            i = rng.randrange(n)
            c = ring.random_element(rng)
            x, y = rand_row(ring, n, rng), rand_row(ring, n, rng)
            lhs = det(replace_row(a, i, vec_add(ring, vec_scale(ring, c, x), y)))
            rhs = ring.add(ring.mul(c, det(replace_row(a, i, x))), det(replace_row(a, i, y)))
            assert lhs == rhs


@pytest.mark.criterion(6, "multiplicativity: 200 pairs x 8 rings, n <= 4")
def test_multiplicativity():
    for k, ring in enumerate(RINGS):
        rng = random.Random(6000 + k)
        for trial in range(200):
            n = 1 + trial % 4
            a, b = rand_matrix(ring, n, rng), rand_matrix(ring, n, rng)
            assert det(multiply(a, b)) == ring.mul(det(a), det(b))


@pytest.mark.criterion(7, "adjoint identity: 100 matrices x 8 rings, n = 2..5")
def test_adjoint_identity():
    for k, ring in enumerate(RINGS):
        rng = random.Random(7000 + k)
        for trial in range(100):
            n = 2 + trial % 4
            a = rand_matrix(ring, n, rng)
            assert multiply(a, adjoint(a)) == mat_scale(det(a), identity(ring, n))


@pytest.mark.criterion(8, "uniqueness harness: n = 3, 20 matrices over Z and Z/7, < 30 s")
def test_uniqueness_harness():
    with Timer() as t:
        for k, ring in enumerate([ZZ, IntegersMod(7)]):
            rng = random.Random(8000 + k)
            for _ in range(20):
                a = rand_matrix(ring, 3, rng)
                b = rand_matrix(ring, 3, rng)
                functionals = [det_functional(), product_functional(b)]
                functionals += [expand_col_functional(j) for j in range(3)]
                for f in functionals:
                    v = check_uniqueness(f, a, rng=rng)
                    assert len(v.level_steps) == 3 and v.levels_invariant, (f.name, v.levels)
                    assert v.base_level and v.top_level and v.final_identity, v.failures()
                    assert all(v.constraints.values()), v.constraints
                    if f.name == "det(a*b)":
                        assert v.value == ring.mul(det(a), det(b))
                    else:
                        assert v.value_at_identity == ring.one and v.value == det(a)
    assert t.elapsed < 30.0


@pytest.mark.criterion(9, "permutation group laws, parity homomorphism, decompose round-trip")
def test_permutation_laws():
    checked = 0
    for n in range(1, 5):
        group = enumerate_perms(n)
        assert sorted(group) == sorted(brute_perms(range(n)))
        e = identity_perm(n)
        for p in group:
            ts = decompose(p)
            assert compose_all(ts, n) == p
            assert len(ts) % 2 == parity(p)
            assert compose(p, invert(p)) == e == compose(invert(p), p)
            assert compose(e, p) == p == compose(p, e)
            checked += 1
            for q in group:
                assert compose(p, q) in group
                assert parity(compose(p, q)) == parity(p) ^ parity(q)
                for r in group:
                    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert checked == 24 + 6 + 2 + 1


@pytest.mark.criterion(10, "row-permutation sign law over S_3: 50 matrices x 8 rings")
def test_row_permutation_sign():
    for k, ring in enumerate(RINGS):
        rng = random.Random(10000 + k)
        for _ in range(50):
            a = rand_matrix(ring, 3, rng)
            d = det(a)
            for p in enumerate_perms(3):
                permuted = Matrix._trusted(ring, tuple(apply(a.rows, p)), 3)
                assert det(permuted) == (ring.neg(d) if parity(p) else d)


def _brute_int_det(rows):
    """Integer determinant by the permutation sum with inversion-count signs."""
    n = len(rows)
    total = 0
    for p in brute_perms(range(n)):
        sign = (-1) ** sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))
        prod = 1
        for i in range(n):
            prod *= rows[i][p[i]]
        total += sign * prod
    return total


def _evaluate(coeffs, x):
    return sum(c * x**k for k, c in enumerate(coeffs))


@pytest.mark.criterion(11, "charpoly golden cases: t^2, (t-1)^2, companion of t^3 - 2t - 5")
def test_charpoly_golden():
    ZT = Polynomials(ZZ)
    ring, p = charpoly(Matrix.from_ints(ZZ, [[0, 1], [0, 0]]))
    assert ring == ZT and p == (0, 0, 1)
    assert charpoly(identity(ZZ, 2))[1] == (1, -2, 1)
    companion = [[0, 0, 5], [1, 0, 2], [0, 1, 0]]
    _, p = charpoly(Matrix.from_ints(ZZ, companion))
    # oracle: det(xI - A) evaluated at 4 integer points pins the cubic
    for x in range(-2, 3):
        shifted = [[(x if i == j else 0) - companion[i][j] for j in range(3)] for i in range(3)]
        assert _evaluate(p, x) == _brute_int_det(shifted) == x**3 - 2 * x - 5
    assert p == (-5, -2, 0, 1)


CLI_CASES = [
    (["det", "int_2x2.txt"], 0, "-2"),
    (["det", "--algorithm", "leibniz", "int_identity3.txt"], 0, "1"),
    (["det", "--cross-check", "rat_3x3.txt"], 0, "-26/3"),
    (["det", "zmod6_reduce.txt"], 0, "3"),
    (["det", "--cross-check", "zmod6_3x3.txt"], 0, "3"),
    (["det", "poly_int_antidiag.txt"], 0, "[-1]"),
    (["det", "poly_zmod5.txt"], 0, "[3,2,2,4]"),
    (["det", "poly_poly.txt"], 0, "[[0,0,-1],[0,-1]]"),
    (["adjoint", "--verify", "int_2x2.txt"], 0, "ring integers\ndims 2 2\n4 -2\n-3 1"),
    (["charpoly", "nilpotent.txt"], 0, "[0,0,1]"),
    (["charpoly", "companion.txt"], 0, "[-5,-2,0,1]"),
    (["check", "identity_q4.txt"], 0, None),
    (["det", "--algorithm", "leibniz", "int_identity9.txt"], 1, ""),
    (["det", "err_nonsquare.txt"], 1, ""),
    (["adjoint", "int_1x1.txt"], 1, ""),
    (["charpoly", "poly_int_antidiag.txt"], 1, ""),
    (["det", "err_descriptor.txt"], 2, ""),
    (["det", "err_modulus.txt"], 2, ""),
    (["det", "err_no_dims.txt"], 2, ""),
    (["det", "err_extra_row.txt"], 2, ""),
    (["det", "err_missing_row.txt"], 2, ""),
    (["det", "err_ragged.txt"], 2, ""),
    (["det", "err_entry.txt"], 2, ""),
    (["det", "err_zero_denominator.txt"], 2, ""),
    (["det", "err_unbalanced.txt"], 2, ""),
]


@pytest.mark.criterion(12, "CLI round-trip and exit codes over the fixture corpus")
def test_cli_contract(capsys, monkeypatch):
    corpus = sorted(FIXTURES.glob("*.txt"))
    assert len(corpus) >= 10
    for path in corpus:
        if not path.name.startswith("err_"):
            ring, a = parse_matrix_file(path)
            assert parse_matrix_text(render_matrix(a)) == (ring, a)

    for argv, code, expected in CLI_CASES:
        args = argv[:-1] + [str(FIXTURES / argv[-1])]
        got = cli.main(args)
        out, err = capsys.readouterr()
        assert got == code, (argv, got, err)
        if expected is not None:
            assert out.strip() == expected, argv
        if code:
            assert err

    # exit 3 needs a law to fail, so break the adjoint for one run
    import ringdet.determinant as D

    monkeypatch.setattr(D, "adjoint", lambda a, n=None, det_fn=None: mat_scale(a.ring.zero, a))
    assert cli.main(["check", str(FIXTURES / "int_2x2.txt")]) == cli.EXIT_CHECK
    capsys.readouterr()
