import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropcount.errors import CensusError, ConsistencyError, DomainError, ValidationError
from tropcount.tropical.enumerate import EnumerationResult, PointConfiguration, enumerate_curves
from tropcount.tropical.ringkit import HalfLaurent
from tropcount.tropical.tropcurve import A_MIN, FaceCensus
from tropcount.tropical.verify import (
    ContributionTable,
    chi_linear_series,
    chi_universal_curve,
    conjecture_check,
    default_table,
    delta_invariant,
    euler_check,
    face_ledger,
    smooth_locus_chi,
    verify_result,
)

y = HalfLaurent.y()

# y N(Gamma) of each case
EXPECTED_N1 = {
    "FourValent": y,
    "Weight2Marked": (y + 1) ** 2,
    "Weight2Unmarked": (y + 1) ** 2,
    "Mult3Vertex": y**2 + y + 1,
}


def test_table_shape():
    table = default_table()
    assert len(table) == 32
    assert set(table.cases()) == set(EXPECTED_N1)
    assert len(table.faces("FourValent")) == 4


@pytest.mark.parametrize("case_id", sorted(EXPECTED_N1))
@pytest.mark.parametrize("A", range(9, 30))
def test_genus_one_identities(case_id, A):
    census = FaceCensus.expected(case_id, A, 1)
    assert chi_universal_curve(census, 1) == EXPECTED_N1[case_id]


@given(
    st.sampled_from(sorted(EXPECTED_N1)),
    st.integers(min_value=1, max_value=10),
    st.integers(min_value=0, max_value=25),
)
def test_identities_in_every_genus(case_id, g, extra):
    A = max(A_MIN[case_id], 2 * g + 1) + extra
    census = FaceCensus.expected(case_id, A, g)
    assert delta_invariant(census, g) == EXPECTED_N1[case_id]


def test_linear_series():
    assert chi_linear_series("FourValent") == y - 1
    with pytest.raises(DomainError):
        chi_linear_series("Smooth")


def test_smooth_locus():
    assert smooth_locus_chi(FaceCensus.expected("FourValent", 9, 1)) == 0
    for case_id in ("Weight2Marked", "Weight2Unmarked", "Mult3Vertex"):
        assert smooth_locus_chi(FaceCensus.expected(case_id, 9, 1)) == (1 - y) ** 2


def test_ledger_lists_every_face():
    ledger = face_ledger(FaceCensus.expected("Mult3Vertex", 9, 1), 1)
    assert [entry["face"] for entry in ledger] == ["bounded", "unbounded", "ordinary", "special"]
    assert [entry["count"] for entry in ledger] == [6, 9, 6, 1]


def test_census_must_match_its_case():
    counts = dict(FaceCensus.expected_counts("FourValent", 9, 1), bounded=7)
    with pytest.raises(CensusError):
        chi_universal_curve(FaceCensus("FourValent", counts), 1)
    with pytest.raises(DomainError):
        chi_universal_curve(FaceCensus.expected("Smooth", 9, 1), 1)
    with pytest.raises(DomainError):
        chi_universal_curve(FaceCensus.expected("FourValent", 9, 1), 0)


@pytest.mark.parametrize("fixture", ["crossing_cubic", "weight2_cubic", "mult3_cubic"])
def test_special_curves(fixture, request):
    curve = request.getfixturevalue(fixture)
    check = conjecture_check(curve, 1, 1)
    assert check.equal
    assert check.N_delta.shift(-2) == check.N_refined
    assert euler_check(curve, 1, 1)["equal"]


def test_marked_weight2_curve(weight2_marked_cubic):
    check = conjecture_check(weight2_marked_cubic, 1, 1)
    assert check.case_id == "Weight2Marked"
    assert check.equal


def test_smooth_curve_has_no_correction(smooth_cubic):
    check = conjecture_check(smooth_cubic, 1, 0)
    assert check.equal
    assert check.to_json()["ledger"] == []
    with pytest.raises(DomainError):
        conjecture_check(smooth_cubic, 1, 2)


def test_strict_verification(cubic, crossing_cubic, mult3_cubic, tmp_path):
    config = PointConfiguration.stretched(cubic, 1)
    result = EnumerationResult(cubic, 1, 0, config, [crossing_cubic, mult3_cubic])
    report = verify_result(result, strict=True)
    assert report["all_equal"]
    assert [entry["case_id"] for entry in report["curves"]] == ["FourValent", "Mult3Vertex"]

    # a table that gives the crossing face a wrong class
    fname = tmp_path / "broken.yaml"
    text = default_table().fname.read_text()
    fname.write_text(
        text.replace("{L_poly: {2: 1, 1: -3, 0: 3}}", "{L_poly: {2: 1, 1: -3, 0: 4}}")
    )
    broken = ContributionTable(fname)
    assert not verify_result(result, table=broken)["all_equal"]
    with pytest.raises(ConsistencyError):
        verify_result(result, strict=True, table=broken)


def test_table_validation(tmp_path):
    fname = tmp_path / "table.yaml"
    fname.write_text("schema: 1\n")
    with pytest.raises(ValidationError):
        ContributionTable(fname)
    fname.write_text("cases:\n  Cusp: {faces: {}}\n")
    with pytest.raises(ValidationError):
        ContributionTable(fname)


def test_enumerated_cubics_verify(cubic):
    result = enumerate_curves(cubic, 1, PointConfiguration.stretched(cubic, 1))
    report = verify_result(result, strict=True)
    assert report["g"] == 1
    assert len(report["curves"]) == len(result)
    assert all(entry["euler"] for entry in report["curves"])
    assert all(entry["symmetric"] for entry in report["curves"])
