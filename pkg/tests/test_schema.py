import json

import pytest
from pydantic import ValidationError

from core.decomp.decomposition import detect_theta
from core.exactnum import make_root
from core.gradedgroup.cocycles import heisenberg_cocycle
from core.identities.multilinear import MultilinearPoly
from core.schema.payloads import (
    AlgebraPayload,
    DecompositionPayload,
    MultilinearPolyPayload,
    ScalarPayload,
    ScalarTablePayload,
    ThetaTablePayload,
    dumps,
    load_decomposition,
    write_json,
)
from core.schema.report import CheckReport, PipelineReport


def test_scalar_payload_is_normalized():
    payload = ScalarPayload.from_domain(make_root(8, 2))
    assert payload.model_dump() == {"N": 4, "coeffs": ["0", "1"]}
    assert payload.to_domain() == make_root(4, 1)
    with pytest.raises(ValidationError):
        ScalarPayload(N=0, coeffs=[])


def test_algebra_payload_validates_ranges(pauli2):
    payload = AlgebraPayload.from_domain(pauli2.algebra)
    assert payload.dim == 4
    assert payload.components == [(0, 4)]
    data = payload.model_dump(mode="json")
    data["structure"].append([0, 0, 9, {"N": 1, "coeffs": ["1"]}])
    with pytest.raises(ValueError):
        AlgebraPayload.model_validate(data).to_domain()
    data = payload.model_dump(mode="json")
    data["unit"] = data["unit"][:2]
    with pytest.raises(ValueError):
        AlgebraPayload.model_validate(data).to_domain()


def test_decomposition_files_reference_their_algebra(tmp_path, pauli3):
    write_json(tmp_path / "p.algebra.json", AlgebraPayload.from_domain(pauli3.algebra))
    payload = DecompositionPayload.from_domain(pauli3.decomposition, algebra_ref="p.algebra.json")
    write_json(tmp_path / "p.decomposition.json", payload)
    loaded = load_decomposition(tmp_path / "p.decomposition.json")
    assert loaded.labels == pauli3.decomposition.labels
    assert loaded.algebra.dim == 9
    assert detect_theta(loaded).entries == pauli3.expected_theta.entries


def test_inline_algebra_and_empty_components(pauli2):
    data = json.loads(dumps(DecompositionPayload.from_domain(pauli2.decomposition)))
    assert isinstance(data["algebra"], dict)
    assert DecompositionPayload.model_validate(data).to_domain().m == 4
    data["components"] = [[]]
    with pytest.raises(ValidationError):
        DecompositionPayload.model_validate(data)


def test_theta_and_scalar_tables(pauli2):
    payload = ThetaTablePayload.from_domain(pauli2.expected_theta)
    table = ThetaTablePayload.model_validate(payload.model_dump(mode="json")).to_domain()
    assert table.entries == pauli2.expected_theta.entries
    with pytest.raises(ValueError):
        ThetaTablePayload(m=3, entries=payload.entries).to_domain()
    alpha = heisenberg_cocycle(2)
    restored = ScalarTablePayload.from_domain(alpha).to_cocycle()
    assert restored.values == alpha.values
    assert restored.group == alpha.group


def test_multilinear_payload_is_one_based():
    payload = MultilinearPolyPayload.from_domain(MultilinearPoly.commutator())
    assert [term.perm for term in payload.terms] == [[1, 2], [2, 1]]
    assert payload.to_domain().terms == MultilinearPoly.commutator().terms
    broken = payload.model_dump()
    broken["terms"][0]["perm"] = [1, 1]
    with pytest.raises(ValueError):
        MultilinearPolyPayload.model_validate(broken).to_domain()


def test_reports_serialize_pass_alias():
    report = CheckReport.ok("determinant", {"det": 1})
    assert report.to_json_dict()["pass"] is True
    skipped = CheckReport.skipped("matrix-rows", "not a matrix algebra", vacuous=True)
    assert skipped.passed and skipped.certificate["not_applicable"]
    assert not CheckReport.skipped("witness", "theta unavailable").passed
    assert not CheckReport.inconclusive("witness").passed
    pipeline = PipelineReport(source="x", seed=0, steps=[report, CheckReport.fail("minimality")])
    assert pipeline.exit_code == 1
    assert pipeline.to_json_dict()["pass"] is False
    assert PipelineReport(source="x", seed=0, steps=[report]).exit_code == 0


def test_dumps_is_stable():
    text = dumps({"b": 1, "a": [1, 2]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
