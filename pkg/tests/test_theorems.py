import json
from fractions import Fraction

import pytest

from jtsnf.exactalg import QQ_q, Q, UniPoly, poly_from_roots
from jtsnf.jacobitrudi import build_jt, minor_matrix
from jtsnf.partitions import PartitionError, partitions_up_to
from jtsnf.snf import det, gcd_of_k_minors, snf_via_minors
from jtsnf.theorems import (
    N_POLY,
    Q_BRACKET,
    QY_POLY,
    claim_c1_check,
    claim_c2_check,
    corner_block,
    hook_content_check,
    is_squarefree,
    minor_gcd_corner_check,
    predict,
    sweep,
    sweep_cases,
    verify,
)

n = UniPoly.gen("n")
y = UniPoly.gen("y", QQ_q)


def test_predict_example():
    pred = predict((7, 5, 5, 2), 4, N_POLY)
    assert pred.entries == (
        n.one(),
        poly_from_roots([0, -1, -2]),
        poly_from_roots(range(-3, 3)),
        poly_from_roots(range(-6, 4)),
    )
    assert pred.factored()[1] == "(n)(n + 1)(n + 2)"


def test_predict_small():
    assert predict((1,), 1, Q_BRACKET).entries == (y,)
    assert predict((1,), 1, QY_POLY).entries == (1 - y,)
    for kind in (N_POLY, QY_POLY, Q_BRACKET):
        assert all(e.is_one() for e in predict((), 3, kind).entries)
    with pytest.raises(PartitionError):
        predict((1, 1), 1)


def test_predict_negative_content_factor():
    # content -1 contributes 1 - q^-1 y
    pred = predict((1, 1), 2, QY_POLY)
    assert pred.entries[1] == (1 - y) * (1 - y * Q**-1)


def test_verify_examples():
    rep = verify((7, 5, 5, 2), 4, N_POLY, "both")
    assert rep.match
    rep = verify((2, 1), 3, N_POLY)
    assert [str(c) for c in rep.computed] == ["1", "1", "n^3 - n"]
    assert rep.match
    m = build_jt((2, 1), 3).entries
    assert snf_via_minors(m) == rep.computed
    rep = verify((1,), 1, Q_BRACKET)
    assert rep.computed == (y,) and rep.match


def test_verify_detects_mismatch(monkeypatch):
    import jtsnf.theorems as th

    real = th.predict

    def wrong(lam, t, kind=N_POLY):
        p = real(lam, t, kind)
        return th.PredictedDiagonal(kind, p.entries[::-1], p.factors, p.contents)

    monkeypatch.setattr(th, "predict", wrong)
    assert not th.verify((2, 1), 2).match


def test_verify_checks_transforms():
    assert verify((3, 1), 3, QY_POLY, check_transforms=True).match


def test_hook_content_check():
    assert hook_content_check((2, 1), 2) == (Fraction(1, 3), True)
    assert hook_content_check((1,), 1) == (Fraction(1), True)
    const, ok = hook_content_check((7, 5, 5, 2), 4)
    assert ok and const > 0
    # the constant is 1/H_lambda, the reciprocal of the hook-length product
    assert hook_content_check((3, 2), 3) == (Fraction(1, 24), True)


def test_c1_examples():
    rows, cols, m1 = corner_block((7, 5, 5, 2), 4, 1)
    assert det(m1).is_zero()
    assert claim_c1_check((7, 5, 5, 2), 4, 1)
    assert claim_c1_check((2, 1), 2, 2)
    assert claim_c1_check((1,), 1, 1)


def test_c1_counterexamples():
    # M_k vanishes here although no k x k minor is a unit: the gcd of the
    # minors is the Schur polynomial of the hook union instead
    for lam, t, k in [((3, 3, 3, 1), 4, 2), ((3, 3), 3, 2)]:
        assert det(corner_block(lam, t, k)[2]).is_zero()
        assert gcd_of_k_minors(build_jt(lam, t).entries, k).degree > 0
        assert not claim_c1_check(lam, t, k)
        assert minor_gcd_corner_check(lam, t, k)


def test_corrected_corner_statement_sweep():
    for lam in partitions_up_to(6):
        for t in range(max(len(lam), 1), len(lam) + 2):
            for k in range(1, min(t, 3) + 1):
                assert minor_gcd_corner_check(lam, t, k)


def test_c2_examples():
    lam, t, k = (7, 6, 6, 5, 3), 5, 3
    dmk = det(corner_block(lam, t, k)[2])
    minor = det(minor_matrix(build_jt(lam, t), (3, 4, 5), (1, 3, 5)))
    assert dmk.divides(minor)
    assert claim_c2_check(lam, t, k, samples=40)
    assert claim_c2_check((3, 2, 2), 3, 3)
    assert claim_c2_check((2, 1), 2, 1)


def test_squarefree_and_chain():
    for lam in partitions_up_to(7):
        t = len(lam) + 1
        for kind in (N_POLY, QY_POLY, Q_BRACKET):
            entries = predict(lam, t, kind).entries
            for a, b in zip(entries, entries[1:]):
                assert a.divides(b)
        for a in predict(lam, t, N_POLY).entries:
            assert is_squarefree(a)
    assert not is_squarefree(n**2)


def test_prediction_determinant_conservation():
    for lam in partitions_up_to(5):
        t = len(lam) or 1
        for kind in (N_POLY, QY_POLY, Q_BRACKET):
            prod = UniPoly.constant(kind.field.one, kind.var, kind.field)
            for e in predict(lam, t, kind).entries:
                prod = prod * e
            assert prod.monic() == det(build_jt(lam, t, kind).entries).monic()


def test_sweep_small():
    rep = sweep(4, 1, [N_POLY])
    assert len(rep.cases) == len(list(sweep_cases(4, 1, [N_POLY])))
    assert not rep.failures
    assert [str(c.shape) for c in rep.cases[:6]] == ["-", "1", "1", "2", "2", "1,1"]
    assert sweep(0, 0, [N_POLY]).cases == []
    data = json.loads(json.dumps(rep.to_json()))
    assert set(data) == {"cases", "failures", "total_ms"}
    assert set(data["cases"][0]) == {"shape", "t", "kind", "predicted", "computed", "match", "ms"}


def test_sweep_parallel_matches_serial():
    a = sweep(4, 1, [N_POLY, Q_BRACKET], workers=2)
    b = sweep(4, 1, [N_POLY, Q_BRACKET])
    strip = lambda r: [(str(c.shape), c.t, c.kind, c.computed, c.match) for c in r.cases]
    assert strip(a) == strip(b)
