from fractions import Fraction

from services import reports, stokes2
from services.exactalg import MatrixRF, RationalFunction


def test_report_json_round_trip():
    report = stokes2.verify_monodromy(1)
    again = reports.from_json(report.dumps())
    assert again == report
    assert again.dumps() == report.dumps()
    assert reports.from_json(report.to_json()).passed


def test_compare_records_the_residual():
    u = RationalFunction.variable("ta")
    report = reports.Report("demo", {})
    assert report.compare("equal", u * u / u, u)
    assert not report.compare("different", u + 1, u)
    assert report.items[-1] == {"name": "different", "status": "fail", "residual": "1"}
    assert not report.compare("matrices", MatrixRF.identity(2), MatrixRF.zeros(2))
    assert not report.passed


def test_merge_prefixes_items_and_keeps_first_conventions():
    a = reports.Report("walk", {}, conventions={"mode": "symbolic"})
    b = reports.Report("flip", {}, conventions={"mode": "pointwise", "flip_case": 2})
    b.add("s1", True)
    a.merge(b, prefix="step 1: ")
    assert a.items == [{"name": "step 1: s1", "status": "pass"}]
    assert a.conventions == {"mode": "symbolic", "flip_case": 2}


def test_fraction_matrix_json():
    assert reports.fraction_matrix_json([[Fraction(1, 4), 0]]) == [["1/4", "0"]]
