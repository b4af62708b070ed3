from fractions import Fraction

import pytest

import seshadri


def test_pell():
    assert seshadri.pell_fundamental(8) == (3, 1)
    assert seshadri.pell_fundamental(61) == (1766319049, 226153980)
    with pytest.raises(seshadri.SeshadriError) as e:
        seshadri.pell_fundamental(9)
    assert seshadri.error_code(e.value) == "PerfectSquare"


def test_epsilon_examples():
    r = seshadri.seshadri_constant([[0, 4], [4, 0]], [1, 1])
    assert seshadri.quad_value(r["value"]) == (Fraction(8, 3), 1)
    assert r["attained_by"] == ["Ample"]
    assert r["curves"][0]["class"] == [1, 1]

    r = seshadri.seshadri_constant([[0, 8], [8, 0]], [1, 1])
    assert seshadri.quad_value(r["value"]) == (Fraction(4), 1)
    assert r["attained_by"] == ["SqrtBound"]
    assert r["diagnostics"]["upper_bound"] == "31/8"

    r = seshadri.seshadri_constant([[0, 1, 1], [1, 0, 1], [1, 1, 0]], [1, 1, 1])
    assert sorted(c["class"] for c in r["curves"]) == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


def test_rational_class_scales():
    r = seshadri.seshadri_constant([[0, 4], [4, 0]], ["1/2", "1/2"])
    assert seshadri.quad_value(r["value"]) == (Fraction(4, 3), 1)


def test_errors():
    with pytest.raises(seshadri.SeshadriError) as e:
        seshadri.seshadri_constant([[0, 4], [4, 0]], [1, -1])
    assert seshadri.error_code(e.value) == "NotNef"
    with pytest.raises(seshadri.SeshadriError) as e:
        seshadri.seshadri_constant([[1, 2], [3, 4]], [1, 1])
    assert seshadri.error_code(e.value) == "NotSymmetric"


def test_elliptic_and_verify():
    # Degree 4 is not below sqrt(8), so only a cap admits it.
    assert seshadri.eps_elliptic([[0, 4], [4, 0]], [1, 1]) is None
    assert seshadri.eps_elliptic([[0, 4], [4, 0]], [1, 1], cap=10) == (4, [(0, 1), (1, 0)])
    assert seshadri.eps_elliptic([[0, 1, 1], [1, 0, 1], [1, 1, 0]], [1, 1, 1])[0] == 2
    assert seshadri.eps_elliptic([[2, 1], [1, -2]], [1, 0]) is None
    assert seshadri.verify_ample_curve([[0, 4], [4, 0]], [1, 1]) == "Verified"


def test_envelope_and_plot():
    env = seshadri.build_envelope([[0, 4], [4, 0]])
    assert len(env["segments"]) == 3
    assert env["gaps"]["uncovered"] == []
    csv = seshadri.emit_plot([[0, 4], [4, 0]], "csv")
    assert csv.splitlines()[0] == "t_lo,t_hi,eps_lo,eps_hi,kind,class,ell,k,certified"
    assert seshadri.emit_plot([[0, 4], [4, 0]], "svg") == seshadri.emit_plot([[0, 4], [4, 0]], "svg")


def test_survey():
    rows = seshadri.survey("[[0,n],[n,0]]", ["n=1..3"])
    assert [r["values"]["n"] for r in rows] == [1, 2, 3]
    assert all(r["piecewise_linear"] for r in rows)
