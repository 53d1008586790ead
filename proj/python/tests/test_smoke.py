import json

import pytest

import lehel


def test_params_validation():
    p = lehel.Params(24, 3, 1)
    assert (p.n, p.k, p.ell, p.step, p.n0) == (24, 3, 1, 2, 12)
    with pytest.raises(ValueError, match="must divide n"):
        lehel.Params(7, 3, 1)


def test_colex_rank():
    p = lehel.Params(6, 3, 1)
    assert lehel.colex_rank([1, 2, 3], p) == 0
    assert lehel.colex_rank([1, 2, 4], p) == 1
    assert lehel.colex_rank([4, 5, 6], p) == 19
    assert lehel.colex_unrank(19, p) == [4, 5, 6]


def test_colouring_text_round_trip():
    p = lehel.Params(6, 3, 1)
    c = lehel.Colouring.constant(p, "blue")
    assert c.to_text() == "6 3 1\n" + "0" * 20 + "\n"
    r = lehel.Colouring.random(p, 5, 0.4)
    back = lehel.Colouring.parse(r.to_text())
    assert back.bits() == r.bits()
    assert lehel.Colouring.split(lehel.Params(10, 4, 2), [1, 2, 3, 4, 5], 3).colour_of([1, 2, 3, 9]) == "red"


@pytest.mark.parametrize("n,k,ell", [(24, 3, 1), (32, 6, 2), (30, 7, 2)])
def test_partition_variants_verify(n, k, ell):
    p = lehel.Params(n, k, ell)
    for seed in range(20):
        c = lehel.Colouring.random(p, seed, 0.5)
        a, stats = lehel.partition_a(c)
        assert lehel.verify(c, a) == []
        assert len(a.uncovered) <= 4 * p.step
        assert stats["iterations"] <= p.n0
        b, _ = lehel.partition_b(c)
        assert lehel.verify(c, b) == []
        assert len(b.uncovered) <= 2 * p.step


def test_cover_and_json():
    p = lehel.Params(24, 3, 1)
    c = lehel.Colouring.random(p, 11, 0.5)
    cert, _ = lehel.cover(c, "a")
    assert cert.uncovered == []
    assert len(cert.items) <= 4
    doc = json.loads(cert.to_json())
    assert doc["params"] == {"n": 24, "k": 3, "ell": 1}
    again = lehel.Certificate.from_json(cert.to_json())
    assert lehel.verify(c, again) == []
    assert "graph certificate" in cert.to_dot()


def test_verify_reports_violations():
    p = lehel.Params(6, 3, 1)
    c = lehel.Colouring.constant(p, "blue")
    bad = lehel.Certificate.from_json(json.dumps({
        "params": {"n": 6, "k": 3, "ell": 1},
        "items": [{"kind": "cycle", "vseq": [1, 2, 3, 4], "colour": "blue"}],
        "uncovered": [4, 5, 6]}))
    codes = [code for code, _ in lehel.verify(c, bad, 8)]
    assert "disjointness" in codes


def test_brute_force_and_errors():
    p = lehel.Params(6, 2, 1)
    best, witness = lehel.brute_force(lehel.Colouring.random(p, 13, 0.5))
    assert best == 0
    assert witness.uncovered == []
    with pytest.raises(ValueError):
        lehel.partition_b(lehel.Colouring.random(lehel.Params(24, 4, 2), 1))
    with pytest.raises(RuntimeError):
        lehel.brute_force(lehel.Colouring.constant(p, "red"), budget=3)


def test_sweep_summary():
    summary = json.loads(lehel.sweep(lehel.Params(6, 2, 1), mode="exhaustive", engine="a", jobs=2))
    assert summary["instances"] == 32768
    assert summary["failures"] == 0
    assert summary["max_uncovered"] <= 4
