import math

import qes


def test_case_ids():
    ids = qes.case_ids()
    assert len(ids) == 12
    assert "morse1" in ids and "lame12" in ids


def test_case_info():
    info = {c["id"]: c for c in qes.case_info()}
    assert set(info["sextic6"]["params"]) == {"a", "b"}
    assert info["coulomb8"]["radial"]
    assert info["lame11"]["algebraic_only"]


def test_solve():
    sol = qes.solve("sextic6", {"a": 1, "b": 1}, n=1)
    s3 = math.sqrt(3.0)
    assert abs(sol["energies"][0] - (3 - 2 * s3)) < 1e-9
    assert abs(sol["energies"][1] - (3 + 2 * s3)) < 1e-9
    assert max(sol["bae_residuals"]) < 1e-8


def test_verify():
    rep = qes.verify("morse1", {"a": 1, "b": 1, "c": 1, "alpha": 1})
    assert rep["pass"]
    assert rep["new_poles"] == []
    assert all(c["pass"] for c in rep["checks"])


def test_susy_grid():
    xs = [-3 + 6 * i / 200 for i in range(201)]
    out = qes.susy("morse1", {"a": 1, "b": 1, "c": 1, "alpha": 1}, grid=xs)
    assert abs(out["gap"] + 5.0) < 1e-9
    assert len(out["V2"]) == len(xs)
    assert len(out["psi_partner"]) == len(xs)
    finite = [v for v in out["V2"] if v is not None]
    assert finite  # pole markers come back as None, the rest as floats


def test_error_type():
    try:
        qes.solve("nosuch", {})
    except qes.QesError:
        pass
    else:
        raise AssertionError("expected QesError")
