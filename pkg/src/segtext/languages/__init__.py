"""Language profiles and the profile registry.

A profile is assembled from three flat data files in a per-language
directory, so adding a language is a data-only change:

    <code>/profile.cfg        key=value settings (terminals, lists, pairs)
    <code>/abbreviations.txt  general abbreviations, one per line
    <code>/rules.tsv          optional extra rules: id TAB rank TAB pattern TAB replacement

All profiles inherit the shared Common and Standard machinery; the data
files only supply the deltas (punctuation inventory, word lists, pair
styles).  Profiles compile once at registration and are immutable.
"""

from __future__ import annotations

import logging
import re
import threading
from dataclasses import dataclass, field
from pathlib import Path

from ..config import ErrorKind, SegmenterError
from ..rules_core import (
    GroupName,
    Rule,
    RuleGroup,
    build_common_number_group,
    build_common_post_group,
    build_standard_group,
    load_rule_table,
    make_group,
)
from ..rules_special import AbbreviationSet, ExclamationWordSet, PairSpec

log = logging.getLogger(__name__)

_DATA_DIR = Path(__file__).parent / "data"

_CLOSERS = "\"'”’»›)\\]}」』）"

# Scripts with case distinction: a boundary is suppressed when the follower
# is a lowercase letter (or a placeholder left by masking).  Caseless
# scripts fall through to "any follower splits".
_LOWER_FOLLOWER = (
    "a-zà-öø-ÿā-ſα-ωа-я"
    "-"
)


@dataclass(frozen=True)
class LanguageProfile:
    """Everything the pipeline needs for one language, compiled."""

    code: str
    terminals: frozenset[str]
    space_bounded: bool
    common_number: RuleGroup
    common_post: RuleGroup
    standard: RuleGroup
    abbreviations: AbbreviationSet
    exclamations: ExclamationWordSet
    pairs: tuple[PairSpec, ...]
    boundary_re: re.Pattern[str] = field(repr=False, default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if not self.terminals:
            raise ValueError(f"profile {self.code!r} has no terminal characters")
        term_class = "".join(re.escape(c) for c in sorted(self.terminals))
        if self.space_bounded:
            pattern = rf"[{term_class}]+[{_CLOSERS}]*(?=\s|$)(?!\s+[{_LOWER_FOLLOWER}])"
        else:
            pattern = rf"[{term_class}]+[{_CLOSERS}]*"
        object.__setattr__(self, "boundary_re", re.compile(pattern))

    @property
    def common(self) -> RuleGroup:
        """The full Common group (number rules plus the late rules)."""
        return make_group(
            GroupName.COMMON,
            [*(r for r in self.common_number.rules),
             *(Rule(r.id, r.order + 1000, r.pattern, r.replacement) for r in self.common_post.rules)],
        )

    @property
    def quote_styles(self) -> tuple[PairSpec, ...]:
        return tuple(p for p in self.pairs if p.context == "quote")


_REGISTRY: dict[str, LanguageProfile] = {}
_BUILTIN = ("en", "hi", "ar", "zh")
_builtin_loaded = False
_load_lock = threading.Lock()


def register(profile: LanguageProfile) -> None:
    if profile.code in _REGISTRY:
        log.warning("language %r re-registered; replacing previous profile", profile.code)
    _REGISTRY[profile.code] = profile


def lookup(code: str) -> LanguageProfile:
    _ensure_builtin()
    try:
        return _REGISTRY[code]
    except KeyError:
        raise SegmenterError(
            ErrorKind.UNKNOWN_LANGUAGE,
            f"no language profile registered for {code!r} (known: {', '.join(sorted(_REGISTRY))})",
        ) from None


def available() -> list[str]:
    _ensure_builtin()
    return sorted(_REGISTRY)


def _ensure_builtin() -> None:
    global _builtin_loaded
    if _builtin_loaded:
        return
    with _load_lock:
        if _builtin_loaded:
            return
        for code in _BUILTIN:
            register(load_profile_dir(_DATA_DIR / code, code=code))
        _builtin_loaded = True


def register_from_dir(path: str | Path, code: str | None = None) -> LanguageProfile:
    """Register a language from a data directory; returns the profile."""
    profile = load_profile_dir(Path(path), code=code)
    _ensure_builtin()
    register(profile)
    return profile


# ---------------------------------------------------------------------------
# Data-file parsing

_KNOWN_KEYS = {
    "code",
    "terminals",
    "requires_whitespace_after_boundary",
    "sentence_starters",
    "prepositive",
    "number",
    "exclamation_words",
    "quote_pairs",
    "paren_pairs",
    "dash_pairs",
}


def _parse_cfg(path: Path) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise SegmenterError(
                    ErrorKind.MALFORMED_FIXTURE, f"{path}:{lineno}: expected key=value"
                )
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _KNOWN_KEYS:
                raise SegmenterError(
                    ErrorKind.MALFORMED_FIXTURE, f"{path}:{lineno}: unknown key {key!r}"
                )
            values[key] = value.strip()
    return values


def _split_words(value: str) -> list[str]:
    return [w for w in value.split() if w]


def _parse_pairs(value: str, context: str, path: Path) -> list[PairSpec]:
    pairs = []
    for item in _split_words(value):
        if "|" not in item:
            raise SegmenterError(
                ErrorKind.MALFORMED_FIXTURE, f"{path}: pair {item!r} must be open|close"
            )
        open_s, _, close_s = item.partition("|")
        pairs.append(PairSpec(open=open_s, close=close_s, context=context))
    return pairs


def _read_list_file(path: Path) -> list[str]:
    entries: list[str] = []
    if not path.exists():
        return entries
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            entries.append(line)
    return entries


def load_profile_dir(directory: Path, code: str | None = None) -> LanguageProfile:
    """Compile a profile from a data directory (see module docstring)."""
    cfg_path = directory / "profile.cfg"
    if not cfg_path.exists():
        raise SegmenterError(ErrorKind.MALFORMED_FIXTURE, f"missing {cfg_path}")
    cfg = _parse_cfg(cfg_path)

    resolved = code or cfg.get("code") or directory.name
    resolved = resolved.strip().lower()
    if not re.fullmatch(r"[a-z]{2}", resolved):
        raise SegmenterError(
            ErrorKind.MALFORMED_FIXTURE, f"{cfg_path}: bad language code {resolved!r}"
        )

    terminals = frozenset(_split_words(cfg.get("terminals", ". ! ?")))
    space_bounded = cfg.get("requires_whitespace_after_boundary", "true").lower() != "false"
    starters = frozenset(_split_words(cfg.get("sentence_starters", "")))

    general = [e.rstrip(".") for e in _read_list_file(directory / "abbreviations.txt")]
    abbreviations = AbbreviationSet(
        prepositive=frozenset(_split_words(cfg.get("prepositive", ""))),
        number=frozenset(_split_words(cfg.get("number", ""))),
        general=frozenset(general),
        sentence_starters=starters,
    )
    exclamations = ExclamationWordSet(words=frozenset(_split_words(cfg.get("exclamation_words", ""))))

    pairs: list[PairSpec] = []
    pairs += _parse_pairs(cfg.get("paren_pairs", ""), "paren", cfg_path)
    pairs += _parse_pairs(cfg.get("quote_pairs", ""), "quote", cfg_path)
    pairs += _parse_pairs(cfg.get("dash_pairs", ""), "dash", cfg_path)

    extra_rules: list[Rule] = []
    tsv = directory / "rules.tsv"
    if tsv.exists():
        extra_rules = load_rule_table(tsv)

    return LanguageProfile(
        code=resolved,
        terminals=terminals,
        space_bounded=space_bounded,
        common_number=build_common_number_group(sorted(starters)),
        common_post=build_common_post_group(sorted(starters)),
        standard=build_standard_group(tuple(extra_rules)),
        abbreviations=abbreviations,
        exclamations=exclamations,
        pairs=tuple(pairs),
    )
