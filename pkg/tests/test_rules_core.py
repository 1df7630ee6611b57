import pytest

from segtext import ErrorKind, SegmenterError
from segtext.languages import lookup
from segtext.placeholders import DECIMAL_PERIOD, FILE_PERIOD
from segtext.rules_core import (
    GroupName,
    apply_group,
    make_group,
    parse_rule_table,
    rule,
)


def test_decimal_period_masked():
    profile = lookup("en")
    assert apply_group("3.14 is pi.", profile.common_number) == f"3{DECIMAL_PERIOD}14 is pi."


def test_no_match_leaves_text_alone():
    profile = lookup("en")
    assert apply_group("No punctuation here", profile.common_number) == "No punctuation here"


def test_file_extension_masked():
    profile = lookup("en")
    out = apply_group("file.txt was saved.", profile.standard)
    assert out == f"file{FILE_PERIOD}txt was saved."


def test_rules_applied_in_rank_order():
    first = rule("a", 10, "x", "y")
    second = rule("b", 20, "y", "z")
    group = make_group(GroupName.STANDARD, [second, first])
    # rank order means x -> y -> z in one pass over the group
    assert apply_group("x", group) == "z"


def test_duplicate_ranks_rejected():
    with pytest.raises(ValueError):
        make_group(GroupName.STANDARD, [rule("a", 10, "x", "y"), rule("b", 10, "y", "z")])


def test_gate_skips_scan_without_substring():
    gated = rule("g", 10, "x", "y", gate=("never",))
    assert gated.apply("x stays") == "x stays"
    gated2 = rule("g", 10, "x", "y", gate=("x",))
    assert gated2.apply("x goes") == "y goes"


def test_parse_rule_table():
    lines = [
        "# comment",
        "",
        "mask-at\t10\t@\t\\uE001",
        "swap\t20\t(a)(b)\t\\2\\1",
    ]
    rules = parse_rule_table(lines, source="test")
    assert [r.id for r in rules] == ["mask-at", "swap"]
    assert rules[0].apply("x@y") == "xy"
    assert rules[1].apply("ab") == "ba"


@pytest.mark.parametrize(
    "line, fragment",
    [
        ("only\tthree\tfields", "4 tab-separated fields"),
        ("id\tNaN\tx\ty", "rank is not an integer"),
        ("id\t1\t([bad\ty", "bad pattern"),
    ],
)
def test_parse_rule_table_errors(line, fragment):
    with pytest.raises(SegmenterError) as err:
        parse_rule_table([line], source="test")
    assert err.value.kind is ErrorKind.MALFORMED_FIXTURE
    assert fragment in err.value.detail


def test_parse_rule_table_duplicate_id():
    with pytest.raises(SegmenterError):
        parse_rule_table(["a\t1\tx\ty", "a\t2\tp\tq"], source="test")
