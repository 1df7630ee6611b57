"""Golden-rule fixtures, accuracy scoring, the naive baseline, corpus-style
evaluation, and the speed benchmark.

Fixture files are JSON Lines: one record per rule with ``id``,
``description``, ``input`` and ``expected`` fields.  Scoring is exact and
order-sensitive: a rule passes only when the produced sentence list equals
the expected list element-wise after trimming.
"""

from __future__ import annotations

import json
import re
import statistics
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .config import ErrorKind, SegmenterConfig, SegmenterError
from .processor import segment


@dataclass(frozen=True)
class GoldenRule:
    id: int
    description: str
    input: str
    expected: tuple[str, ...]


@dataclass(frozen=True)
class GrsReport:
    total: int
    passed: int
    failures: tuple[tuple[int, tuple[str, ...], tuple[str, ...]], ...]

    @property
    def accuracy(self) -> float:
        return self.passed / self.total if self.total else 1.0


@dataclass(frozen=True)
class BenchReport:
    wall_time_ms: float
    sentences: int
    chars: int

    @property
    def throughput(self) -> float:
        """Characters per second at the median wall time."""
        if self.wall_time_ms <= 0:
            return 0.0
        return self.chars / (self.wall_time_ms / 1000.0)


def load_grs(path: str | Path) -> list[GoldenRule]:
    """Load a JSONL fixture; ids must be unique, line numbers are reported."""
    rules: list[GoldenRule] = []
    seen: set[int] = set()
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SegmenterError(
                    ErrorKind.MALFORMED_FIXTURE, f"{path}:{lineno}: invalid JSON: {exc.msg}"
                ) from None
            try:
                rule_id = int(record["id"])
                description = str(record.get("description", ""))
                text = record["input"]
                expected = record["expected"]
            except (KeyError, TypeError, ValueError) as exc:
                raise SegmenterError(
                    ErrorKind.MALFORMED_FIXTURE, f"{path}:{lineno}: {exc}"
                ) from None
            if not isinstance(text, str) or not isinstance(expected, list):
                raise SegmenterError(
                    ErrorKind.MALFORMED_FIXTURE,
                    f"{path}:{lineno}: input must be a string and expected a list",
                )
            if rule_id in seen:
                raise SegmenterError(
                    ErrorKind.MALFORMED_FIXTURE, f"{path}:{lineno}: duplicate id {rule_id}"
                )
            if not expected and text.strip():
                raise SegmenterError(
                    ErrorKind.MALFORMED_FIXTURE,
                    f"{path}:{lineno}: expected list empty for non-empty input",
                )
            seen.add(rule_id)
            rules.append(
                GoldenRule(
                    id=rule_id,
                    description=description,
                    input=text,
                    expected=tuple(str(s) for s in expected),
                )
            )
    return rules


def _score(got: Sequence[str], expected: Sequence[str]) -> bool:
    return [s.strip() for s in got] == [s.strip() for s in expected]


def run_grs(
    config: SegmenterConfig,
    rules: Sequence[GoldenRule],
    segmenter=None,
) -> GrsReport:
    """Score every rule by exact list equality; errors count as failures."""
    segment_fn = segmenter or (lambda text: segment(config, text))
    passed = 0
    failures: list[tuple[int, tuple[str, ...], tuple[str, ...]]] = []
    for rule in rules:
        try:
            got = tuple(segment_fn(rule.input))
        except SegmenterError:
            got = ()
        if _score(got, rule.expected):
            passed += 1
        else:
            failures.append((rule.id, got, rule.expected))
    return GrsReport(total=len(rules), passed=passed, failures=tuple(failures))


_NAIVE_RE = re.compile(r"[?!:;.]+(?=\s|$)")


def naive_segment(text: str) -> list[str]:
    """The control splitter: cut after any of ``?!:;.`` at whitespace/end."""
    pieces: list[str] = []
    start = 0
    for m in _NAIVE_RE.finditer(text):
        pieces.append(text[start : m.end()])
        start = m.end()
    pieces.append(text[start:])
    return [p for p in (piece.strip() for piece in pieces) if p]


def eval_corpus(config: SegmenterConfig, gold: Sequence[str], group_size: int = 10) -> float:
    """Join consecutive gold sentences into groups, segment each group, and
    return the fraction of gold sentences recovered exactly."""
    if group_size < 1:
        raise ValueError("group_size must be >= 1")
    gold = [s.strip() for s in gold if s.strip()]
    if not gold:
        return 1.0
    recovered = 0
    for i in range(0, len(gold), group_size):
        group = gold[i : i + group_size]
        got = segment(config, " ".join(group))
        pointer = 0
        for sentence in group:
            for j in range(pointer, len(got)):
                if got[j] == sentence:
                    recovered += 1
                    pointer = j + 1
                    break
    return recovered / len(gold)


def bench(config: SegmenterConfig, text: str, repetitions: int = 3) -> BenchReport:
    """Median wall time of segmenting the text; profile compilation and any
    fixture loading stay outside the timed region."""
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    segment(config, text[:1000])  # warm profile compilation and caches
    times: list[float] = []
    sentences = 0
    for _ in range(repetitions):
        started = time.perf_counter()
        result = segment(config, text)
        times.append((time.perf_counter() - started) * 1000.0)
        sentences = len(result)
    return BenchReport(
        wall_time_ms=statistics.median(times),
        sentences=sentences,
        chars=len(text),
    )
