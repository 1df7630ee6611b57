import random
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures" / "grs"


@pytest.fixture(scope="session")
def en_fixture_path() -> Path:
    return FIXTURES / "en.jsonl"


# Token pool for punctuation-rich generated inputs.  Deliberately adversarial:
# abbreviations, decimals, quotes, lists, ellipses, URLs, mixed scripts.
_TOKENS = [
    "alpha",
    "beta",
    "Gamma",
    "delta",
    "words",
    "Mr.",
    "Dr.",
    "St.",
    "etc.",
    "vs.",
    "U.S.A.",
    "E.U.",
    "No. 7",
    "p. 55",
    "3.14",
    "$100.00",
    "1026.253.553",
    "a.m.",
    "P.M.",
    "file.txt",
    "report.pdf",
    "www.example.com/a.html",
    "https://example.org/x.y",
    "Jane.Doe@example.com",
    "Yahoo!",
    "Hello!!",
    "What?!",
    "(see inside.)",
    '"quoted text."',
    "'single bit.'",
    "«guillemets?»",
    "[bracketed.]",
    "—dashed bit.—",
    "…",
    "...",
    ". . .",
    "wait....",
    "e.g.",
    "Fig. 2",
    "JFK Jr.'s",
    "हिंदी।",
    "中文。",
]

_TERMINALS = [".", "!", "?"]


def make_generator(seed: int):
    rng = random.Random(seed)

    def one_input() -> str:
        sentences = []
        for _ in range(rng.randint(1, 5)):
            count = rng.randint(2, 9)
            words = [rng.choice(_TOKENS) for _ in range(count)]
            tail = rng.choice(_TERMINALS) if rng.random() < 0.8 else ""
            sentence = " ".join(words) + tail
            if rng.random() < 0.5:
                sentence = sentence[:1].upper() + sentence[1:]
            sentences.append(sentence)
        joiner = "\n" if rng.random() < 0.1 else " "
        text = joiner.join(sentences)
        if rng.random() < 0.1:
            text = "  " + text
        if rng.random() < 0.1:
            text = text + "  "
        return text

    return one_input


@pytest.fixture(scope="session")
def generated_inputs():
    gen = make_generator(20240817)
    return [gen() for _ in range(10_000)]
