"""Exit criteria.  Every check is exact; runtime bounds are wall clock."""

import json
import random
import time

from jtsnf.cli import main
from jtsnf.exactalg import QQ_q, Q, UniPoly, poly_from_roots, poly_gcd
from jtsnf.jacobitrudi import ZERO_MINOR, build_jt, minor_matrix, q_h, submatrix_to_skew
from jtsnf.partitions import SkewShape, lr_coefficient, partitions_of, partitions_up_to, ssyt_count, subpartitions
from jtsnf.snf import det, monic_diagonal, snf_reduce, snf_via_minors
from jtsnf.theorems import N_POLY, Q_BRACKET, QY_POLY, claim_c1_check, claim_c2_check, predict, sweep


def test_criterion_1_paper_example(criterion, capsys):
    start = time.perf_counter()
    code = main(["snf", "--shape", "7,5,5,2", "-t", "4", "--ring", "n", "--format", "json"])
    elapsed = time.perf_counter() - start
    data = json.loads(capsys.readouterr().out)
    expected = [
        UniPoly.constant(1),
        poly_from_roots([0, -1, -2]),
        poly_from_roots([2, 1, 0, -1, -2, -3]),
        poly_from_roots(range(-6, 4)),
    ]
    criterion["detail"] = f"{elapsed * 1000:.0f} ms"
    assert code == 0 and data["match"]
    assert data["computed"] == [str(e) for e in expected]
    direct = monic_diagonal(snf_reduce(build_jt((7, 5, 5, 2), 4).entries).diagonal)
    assert direct == tuple(expected)
    assert elapsed < 1.0


def test_criterion_2_theorem1_sweep(criterion):
    start = time.perf_counter()
    rep = sweep(8, 2, [N_POLY], method="reduce")
    elapsed = time.perf_counter() - start
    criterion["detail"] = f"{len(rep.cases)} cases, {len(rep.failures)} failures, {elapsed:.1f} s"
    assert len(rep.cases) > 0 and not rep.failures
    assert elapsed < 120


def test_criterion_3_oracle_agreement(criterion):
    count = 0
    bad = []
    for lam in partitions_up_to(6):
        for t in range(max(len(lam), 1), 5):
            m = build_jt(lam, t).entries
            count += 1
            if monic_diagonal(snf_reduce(m).diagonal) != snf_via_minors(m):
                bad.append((str(lam), t))
    criterion["detail"] = f"{count} matrices, {len(bad)} disagreements"
    assert count > 0 and not bad


def test_criterion_4_q_sweeps(criterion):
    start = time.perf_counter()
    rep = sweep(6, 1, [QY_POLY, Q_BRACKET], method="reduce")
    elapsed = time.perf_counter() - start
    criterion["detail"] = f"{len(rep.cases)} cases, {len(rep.failures)} failures, {elapsed:.1f} s"
    assert len(rep.cases) > 0 and not rep.failures
    assert elapsed < 300


def test_criterion_5_q_display(criterion):
    factor = lambda c: UniPoly((1, -Q**c), "y", QQ_q)
    display = factor(2) * factor(1) * factor(0) * ((1 - Q**3) * (1 - Q**2) * (1 - Q)).inverse()
    assert q_h(3) == display


def test_criterion_6_minor_skew_crosscheck(criterion):
    rng = random.Random(2024)
    pool = list(partitions_up_to(8))
    shapes = zero = 0
    for _ in range(200):
        lam = rng.choice(pool)
        t = max(len(lam), 1) + rng.randint(0, 2)
        k = rng.randint(1, min(3, t))
        rows = sorted(rng.sample(range(1, t + 1), k))
        cols = sorted(rng.sample(range(1, t + 1), k))
        skew = submatrix_to_skew(lam, t, rows, cols)
        minor = det(minor_matrix(build_jt(lam, t), rows, cols))
        if skew is ZERO_MINOR:
            zero += 1
            assert minor.is_zero(), (lam, t, rows, cols)
        else:
            shapes += 1
            for nv in range(1, 6):
                assert minor(nv) == ssyt_count(skew, nv), (lam, t, rows, cols, nv)
    criterion["detail"] = f"{shapes} skew shapes, {zero} zero minors"


def test_criterion_7_claims(criterion):
    c1_bad, c2_bad, checked = [], [], 0
    for lam in partitions_up_to(7):
        t = len(lam)
        for k in range(1, t + 1):
            checked += 1
            if not claim_c1_check(lam, t, k):
                c1_bad.append((str(lam), k))
            if not claim_c2_check(lam, t, k, samples=None if k <= 3 else 50, seed=k):
                c2_bad.append((str(lam), k))
    criterion["detail"] = f"{checked} (shape, k) pairs, C1 failures {c1_bad}, C2 failures {c2_bad}"
    assert not c1_bad and not c2_bad


def test_criterion_8_squarefree(criterion):
    count = 0
    for lam in partitions_up_to(8):
        for a in predict(lam, len(lam), N_POLY).entries:
            count += 1
            if a.degree > 0:
                assert poly_gcd(a, a.derivative()).degree == 0, (lam, a)
    criterion["detail"] = f"{count} predicted entries"


def test_criterion_9_lr_expansion(criterion):
    count = 0
    for size in range(7):
        for rho in partitions_of(size):
            for sigma in subpartitions(rho):
                lrs = [(tau, lr_coefficient(rho, sigma, tau)) for tau in partitions_of(size - sigma.size)]
                for nv in range(1, 5):
                    lhs = ssyt_count(SkewShape(rho, sigma), nv)
                    rhs = sum(c * ssyt_count(tau, nv) for tau, c in lrs if c)
                    assert lhs == rhs, (rho, sigma, nv)
                count += 1
    criterion["detail"] = f"{count} skew shapes"

