"""
Tests for the Matrix JSON / Block JSON payloads and report models.
"""

import pytest
from pydantic import ValidationError

from app.blocks.block import Block2x2
from app.errors import OddDimension
from app.linalg.matrix import ComplexMatrix
from app.models import BlockPayload, CheckReport, MatrixPayload, PairedResult, load_operand


def matrix_json(rows, cols, data):
    return {"rows": rows, "cols": cols, "data": data}


IDENTITY_2 = matrix_json(2, 2, [[[1, 0], [0, 0]], [[0, 0], [1, 0]]])


class TestMatrixPayload:
    def test_to_matrix(self):
        m = MatrixPayload.model_validate(matrix_json(1, 2, [[[1, 2], [3, -4]]])).to_matrix()
        assert m.shape == (1, 2)
        assert m[0, 0] == 1 + 2j
        assert m[0, 1] == 3 - 4j

    def test_from_matrix(self):
        payload = MatrixPayload.from_matrix(ComplexMatrix([[1j, 2]]))
        assert payload.rows == 1 and payload.cols == 2
        assert payload.data == [[[0.0, 1.0], [2.0, 0.0]]]

    def test_missing_field(self):
        with pytest.raises(ValidationError) as exc_info:
            MatrixPayload.model_validate({"rows": 1, "data": [[[1, 0]]]})
        assert "cols" in str(exc_info.value)

    def test_row_count_mismatch(self):
        with pytest.raises(ValidationError):
            MatrixPayload.model_validate(matrix_json(2, 1, [[[1, 0]]]))

    def test_column_count_mismatch(self):
        with pytest.raises(ValidationError):
            MatrixPayload.model_validate(matrix_json(1, 2, [[[1, 0]]]))

    def test_entry_must_be_pair(self):
        with pytest.raises(ValidationError):
            MatrixPayload.model_validate(matrix_json(1, 1, [[[1, 0, 0]]]))

    @pytest.mark.parametrize("bad", [float("nan"), float("inf")])
    def test_non_finite_entries(self, bad):
        with pytest.raises(ValidationError):
            MatrixPayload.model_validate(matrix_json(1, 1, [[[bad, 0]]]))

    def test_empty_matrix(self):
        with pytest.raises(ValidationError):
            MatrixPayload.model_validate(matrix_json(0, 0, []))


class TestBlockPayload:
    def test_to_block(self):
        one = matrix_json(1, 1, [[[1, 0]]])
        two = matrix_json(1, 1, [[[2, 0]]])
        b = BlockPayload.model_validate({"t11": one, "t12": two, "t21": two, "t22": one}).to_block()
        assert isinstance(b, Block2x2)
        assert b.t12[0, 0] == 2

    def test_mismatched_blocks(self):
        one = matrix_json(1, 1, [[[1, 0]]])
        with pytest.raises(ValidationError):
            BlockPayload.model_validate({"t11": one, "t12": one, "t21": one, "t22": IDENTITY_2})

    def test_missing_block(self):
        one = matrix_json(1, 1, [[[1, 0]]])
        with pytest.raises(ValidationError) as exc_info:
            BlockPayload.model_validate({"t11": one, "t12": one, "t21": one})
        assert "t22" in str(exc_info.value)

    def test_from_block_inverts_to_block(self, ad_witness):
        b = BlockPayload.from_block(ad_witness).to_block()
        assert all(x.allclose(y, 0.0) for x, y in zip(b.blocks(), ad_witness.blocks()))


class TestLoadOperand:
    def test_plain_matrix(self):
        assert isinstance(load_operand(IDENTITY_2, as_block=False), ComplexMatrix)

    def test_partitioned_matrix(self):
        b = load_operand(IDENTITY_2, as_block=True)
        assert isinstance(b, Block2x2)
        assert b.block_dim == 1

    def test_block_json_is_always_a_block(self):
        one = matrix_json(1, 1, [[[1, 0]]])
        assert isinstance(load_operand({"t11": one, "t12": one, "t21": one, "t22": one}, as_block=False), Block2x2)

    def test_odd_dimension(self):
        with pytest.raises(OddDimension):
            load_operand(matrix_json(1, 1, [[[1, 0]]]), as_block=True)


class TestCheckReport:
    def base(self, **kwargs):
        fields = dict(id="x", statement="s", applicable=True, lhs=1.0, rhs=0.0, slack=-1.0, holds=False, tol=1e-8)
        fields.update(kwargs)
        return CheckReport(**fields)

    def test_violation(self):
        assert self.base().violated

    def test_probe_failure_is_not_a_violation(self):
        assert not self.base(expected_falsifiable=True).violated

    def test_not_applicable_is_not_a_violation(self):
        report = CheckReport.not_applicable("eq8", "s", {}, 1e-8, False)
        assert not report.violated
        assert report.worst_slack is None

    def test_worst_slack_includes_paired(self):
        paired = PairedResult(kind="le", lhs=2.0, rhs=0.0, slack=-2.0, holds=False)
        assert self.base(paired=paired).worst_slack == -2.0
