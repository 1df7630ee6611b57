"""Multilingual rule-based sentence boundary disambiguation.

The segmenter masks punctuation it judges non-terminal with reserved
placeholder codepoints, splits on what remains, and restores the originals,
so every output sentence maps back to an exact character span of the input.

>>> from segtext import Segmenter
>>> Segmenter(language="en").segment("Hello world. My name is Jonas.")
['Hello world.', 'My name is Jonas.']
"""

from .config import DocType, ErrorKind, SegmenterConfig, SegmenterError, make_config
from .processor import Segmenter, TextSpan, map_spans, segment, segment_spans
from .cleaner import CleanReport, clean
from .languages import LanguageProfile, available, lookup, register, register_from_dir

__version__ = "0.1.0"

__all__ = [
    "CleanReport",
    "DocType",
    "ErrorKind",
    "LanguageProfile",
    "Segmenter",
    "SegmenterConfig",
    "SegmenterError",
    "TextSpan",
    "available",
    "clean",
    "lookup",
    "make_config",
    "map_spans",
    "register",
    "register_from_dir",
    "segment",
    "segment_spans",
]
