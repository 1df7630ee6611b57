import json

import pytest

from segtext import ErrorKind, SegmenterError, make_config
from segtext.harness import (
    GoldenRule,
    bench,
    eval_corpus,
    load_grs,
    naive_segment,
    run_grs,
)

EN = make_config("en")


# --- load_grs -----------------------------------------------------------------


def test_load_full_english_fixture(en_fixture_path):
    rules = load_grs(en_fixture_path)
    assert len(rules) == 48
    assert [r.id for r in rules] == list(range(1, 49))


def test_load_empty_file(tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("", encoding="utf-8")
    assert load_grs(path) == []


def test_duplicate_id_rejected(tmp_path):
    path = tmp_path / "dup.jsonl"
    record = json.dumps({"id": 1, "description": "", "input": "Hi.", "expected": ["Hi."]})
    path.write_text(record + "\n" + record + "\n", encoding="utf-8")
    with pytest.raises(SegmenterError) as err:
        load_grs(path)
    assert err.value.kind is ErrorKind.MALFORMED_FIXTURE
    assert ":2:" in err.value.detail


def test_malformed_json_reports_line(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"id": 1, "input": "Hi.", "expected": ["Hi."]}\nnot json\n', encoding="utf-8")
    with pytest.raises(SegmenterError) as err:
        load_grs(path)
    assert ":2:" in err.value.detail


def test_empty_expected_for_real_input_rejected(tmp_path):
    path = tmp_path / "empty-expected.jsonl"
    path.write_text(
        json.dumps({"id": 1, "input": "Hi.", "expected": []}) + "\n", encoding="utf-8"
    )
    with pytest.raises(SegmenterError):
        load_grs(path)


# --- run_grs ------------------------------------------------------------------


def test_full_fixture_accuracy(en_fixture_path):
    report = run_grs(EN, load_grs(en_fixture_path))
    assert report.passed >= 47  # 47/48 = 97.92%
    assert 0.0 <= report.accuracy <= 1.0


def test_single_trivial_rule():
    rules = [GoldenRule(id=1, description="", input="Hi. Bye.", expected=("Hi.", "Bye."))]
    assert run_grs(EN, rules).accuracy == 1.0


def test_scoring_is_order_sensitive():
    rules = [GoldenRule(id=1, description="", input="Hi. Bye.", expected=("Bye.", "Hi."))]
    assert run_grs(EN, rules).accuracy == 0.0


def test_duplicated_rule_list_keeps_ratio(en_fixture_path):
    rules = load_grs(en_fixture_path)
    once = run_grs(EN, rules)
    twice = run_grs(EN, list(rules) + list(rules))
    assert twice.accuracy == once.accuracy


def test_naive_baseline_below_pipeline(en_fixture_path):
    rules = load_grs(en_fixture_path)
    pipeline = run_grs(EN, rules)
    naive = run_grs(EN, rules, segmenter=naive_segment)
    assert naive.accuracy < pipeline.accuracy


# --- naive_segment --------------------------------------------------------------


def test_naive_examples():
    assert naive_segment("Hi. Bye.") == ["Hi.", "Bye."]
    assert naive_segment("Mr. Smith left.") == ["Mr.", "Smith left."]
    assert naive_segment("a:b") == ["a:b"]
    assert naive_segment("One: two. Three!") == ["One:", "two.", "Three!"]


# --- eval_corpus ----------------------------------------------------------------


def test_eval_corpus_perfect_group():
    gold = ["This is one.", "This is two."]
    assert eval_corpus(EN, gold, group_size=2) == 1.0


def test_eval_corpus_merge_drops_two():
    # Hand trace: joining gives "Left without a terminal Right side is fine."
    # No boundary can be found inside, so the group yields one sentence that
    # matches neither gold entry: 0 of 2 recovered in that pair, 2 of 2 in
    # the clean pair -> 2/4.
    gold = [
        "Left without a terminal",
        "Right side is fine.",
        "A clean sentence.",
        "Another clean sentence.",
    ]
    assert eval_corpus(EN, gold, group_size=2) == pytest.approx(0.5)


def test_eval_corpus_group_size_one():
    gold = ["Whole sentence.", "Another whole sentence."]
    assert eval_corpus(EN, gold, group_size=1) == 1.0


def test_eval_corpus_validates_group_size():
    with pytest.raises(ValueError):
        eval_corpus(EN, ["Hi."], group_size=0)


# --- bench -----------------------------------------------------------------------


def test_bench_reports_counts():
    text = "One sentence here. Another sentence there. " * 50
    report = bench(EN, text, repetitions=2)
    assert report.sentences == 100
    assert report.chars == len(text)
    assert report.wall_time_ms > 0
    assert report.throughput > 0


def test_bench_empty_text():
    report = bench(EN, "", repetitions=1)
    assert report.sentences == 0
    assert report.chars == 0


def test_bench_validates_repetitions():
    with pytest.raises(ValueError):
        bench(EN, "Hi.", repetitions=0)
