import pytest
from pydantic import ValidationError

from src.errors import ParseError
from src.schemas import RealChannelMatrix
from src.utils.formats import format_codebook, format_matrix, parse_codebook, parse_key_values, parse_matrix

EXAMPLE_MATRIX = """\
# receiver rows
3
1 4 3

2 1 3
6 2 1
"""


class TestMatrix:
    def test_comments_and_blank_lines(self):
        assert parse_matrix(EXAMPLE_MATRIX) == [[1, 4, 3], [2, 1, 3], [6, 2, 1]]

    def test_real_entries(self):
        assert parse_matrix("2\n1.5 0\n0.25 2\n", real=True) == [[1.5, 0.0], [0.25, 2.0]]

    @pytest.mark.parametrize("token", ["nan", "inf", "-inf", "NaN"])
    def test_non_finite_gain(self, token):
        with pytest.raises(ParseError) as info:
            parse_matrix(f"2\n1 0.5\n0.5 {token}\n", real=True)
        assert (info.value.line, info.value.column) == (3, 5)

    def test_bad_token_position(self):
        with pytest.raises(ParseError) as info:
            parse_matrix("3\n1 4 3\n2 x 3\n6 2 1\n")
        assert (info.value.line, info.value.column) == (3, 3)

    def test_short_row(self):
        with pytest.raises(ParseError) as info:
            parse_matrix("2\n1 2\n3\n")
        assert info.value.line == 3

    def test_missing_rows(self):
        with pytest.raises(ParseError):
            parse_matrix("3\n1 2 3\n")

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_matrix("# nothing\n\n")

    def test_format(self):
        assert format_matrix([[1, 4], [2, 1]]) == "2\n1 4\n2 1\n"


class TestCodebook:
    def test_parse(self):
        assert parse_codebook("0,1,2,3,4,5\n0, 3\n\n0,2,4\n") == [[0, 1, 2, 3, 4, 5], [0, 3], [0, 2, 4]]

    def test_order(self):
        with pytest.raises(ParseError) as info:
            parse_codebook("0,3,2\n")
        assert (info.value.line, info.value.column) == (1, 5)

    def test_column_after_spaces(self):
        with pytest.raises(ParseError) as info:
            parse_codebook("0,1\n0, 3, y\n")
        assert (info.value.line, info.value.column) == (2, 7)

    def test_format(self):
        assert format_codebook([[0, 3], [0, 2, 4]]) == "0,3\n0,2,4\n"


class TestKeyValues:
    def test_parse(self):
        assert parse_key_values("# bounds\nr_max = 3\n\ns_cap=50\n") == {"r_max": "3", "s_cap": "50"}

    def test_duplicate(self):
        with pytest.raises(ParseError) as info:
            parse_key_values("r_max = 3\nr_max = 4\n")
        assert info.value.line == 2

    def test_missing_equals(self):
        with pytest.raises(ParseError):
            parse_key_values("r_max 3\n")


class TestRealChannelMatrix:
    @pytest.mark.parametrize("value", [float("nan"), float("inf")])
    def test_rejects_non_finite_gain(self, value):
        with pytest.raises(ValidationError, match="non-finite"):
            RealChannelMatrix(entries=[[1.0, 0.5], [value, 1.0]])

    def test_accepts_finite_gains(self):
        assert RealChannelMatrix(entries=[[1.5, 0.0], [0.25, 2.0]]).floor().entries == [[1, 0], [0, 2]]
