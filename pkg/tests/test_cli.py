import json
import subprocess
import sys
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def run_cli(args, input_text=None, env_extra=None):
    import os

    env = os.environ.copy()
    env["PYTHONPATH"] = str(REPO_ROOT / "src")
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "segtext", *args],
        input=input_text,
        capture_output=True,
        text=True,
        env=env,
    )


def test_segment_lines():
    result = run_cli(["segment", "--lang", "en"], input_text="Hi. Bye.")
    assert result.returncode == 0
    assert result.stdout.splitlines() == ["Hi.", "Bye."]


def test_segment_jsonl_spans():
    result = run_cli(
        ["segment", "--lang", "en", "--char-span", "--format", "jsonl"],
        input_text="Hi. Bye.",
    )
    assert result.returncode == 0
    records = [json.loads(line) for line in result.stdout.splitlines()]
    assert records == [
        {"text": "Hi.", "start": 0, "end": 3},
        {"text": "Bye.", "start": 4, "end": 8},
    ]


def test_segment_clean_with_char_span_is_usage_error():
    result = run_cli(
        ["segment", "--lang", "en", "--clean", "--char-span"], input_text="x"
    )
    assert result.returncode == 2
    assert "IncompatibleOptions" in result.stderr


def test_segment_unknown_flag_is_error():
    result = run_cli(["segment", "--nope"], input_text="x")
    assert result.returncode == 2


def test_segment_batch_mode():
    batch = '"Mr. Smith left. He was tired."\n{"text": "Hi. Bye."}\n'
    result = run_cli(["segment", "--lang", "en", "--batch"], input_text=batch)
    assert result.returncode == 0
    lines = [json.loads(line) for line in result.stdout.splitlines()]
    assert lines[0] == {"sentences": ["Mr. Smith left.", "He was tired."]}
    assert lines[1] == {"sentences": ["Hi.", "Bye."]}


def test_lang_env_fallback():
    result = run_cli(["segment"], input_text="यह घर है। वह गया।", env_extra={"SEGTEXT_LANG": "hi"})
    assert result.returncode == 0
    assert result.stdout.splitlines() == ["यह घर है।", "वह गया।"]


def test_segment_missing_file_is_io_error():
    result = run_cli(["segment", "--lang", "en", str(REPO_ROOT / "no-such-file.txt")])
    assert result.returncode == 1
    assert "error[io]" in result.stderr


def test_clean_subcommand():
    result = run_cli(["clean", "--doc-type", "pdf"], input_text="word wrap\ncontinues here.")
    assert result.returncode == 0
    assert result.stdout.strip() == "word wrap continues here."


def test_grs_pass_and_threshold(tmp_path):
    fixture = REPO_ROOT / "fixtures" / "grs" / "en.jsonl"
    ok = run_cli(
        ["grs", "--lang", "en", "--fixture", str(fixture), "--min-accuracy", "0.97", "--baseline"]
    )
    assert ok.returncode == 0
    assert "accuracy" in ok.stdout
    assert "baseline accuracy" in ok.stdout

    # an impossible expected list forces a failure; threshold 1.0 -> exit 1
    hard = tmp_path / "hard.jsonl"
    hard.write_text(
        json.dumps({"id": 1, "input": "Dr. No waved.", "expected": ["Dr.", "No waved."]})
        + "\n",
        encoding="utf-8",
    )
    failing = run_cli(["grs", "--lang", "en", "--fixture", str(hard), "--min-accuracy", "1.0"])
    assert failing.returncode == 1


def test_grs_malformed_fixture_exits_2(tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text("nope\n", encoding="utf-8")
    result = run_cli(["grs", "--lang", "en", "--fixture", str(bad)])
    assert result.returncode == 2
    assert "MalformedFixture" in result.stderr


def test_grs_json_format(tmp_path):
    fixture = REPO_ROOT / "fixtures" / "grs" / "zh.jsonl"
    result = run_cli(["grs", "--lang", "zh", "--fixture", str(fixture), "--format", "json"])
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["total"] == 12


def test_bench_subcommand(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("One sentence here. Another there. " * 200, encoding="utf-8")
    result = run_cli(["bench", "--lang", "en", "--file", str(corpus), "--reps", "2"])
    assert result.returncode == 0
    fields = dict(line.split("\t") for line in result.stdout.splitlines())
    assert int(fields["sentences"]) == 400

    missing = run_cli(["bench", "--lang", "en", "--file", str(tmp_path / "nope.txt")])
    assert missing.returncode == 1

    zero = run_cli(["bench", "--lang", "en", "--file", str(corpus), "--reps", "0"])
    assert zero.returncode == 2
