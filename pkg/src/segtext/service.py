"""HTTP service wrapping the segmenter for long-running, multi-client use.

Profiles compile once per process, so a resident service amortizes that cost
across requests; the CLI remains the right tool for one-shot pipeline work.
Configuration errors surface as HTTP 400 with the error kind in the body.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .cleaner import clean
from .config import DocType, ErrorKind, SegmenterError, make_config
from .harness import GoldenRule, naive_segment, run_grs
from .languages import available
from .processor import segment, segment_spans

app = FastAPI(title="segtext", version=__version__)


@app.exception_handler(SegmenterError)
async def segmenter_error_handler(request: Request, exc: SegmenterError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": {"kind": exc.kind.value, "detail": exc.detail}},
    )


class SegmentRequest(BaseModel):
    text: str
    language: str = "en"
    char_span: bool = False
    clean: bool = False
    doc_type: str = "plain"


class SpanRecord(BaseModel):
    text: str
    start: int
    end: int


class SegmentResponse(BaseModel):
    language: str
    sentences: list[str] | None = None
    spans: list[SpanRecord] | None = None


class CleanRequest(BaseModel):
    text: str
    doc_type: str = "plain"


class CleanResponse(BaseModel):
    text: str
    actions: list[tuple[str, int]]


class GoldenRuleRecord(BaseModel):
    id: int
    description: str = ""
    input: str
    expected: list[str]


class GrsRequest(BaseModel):
    language: str = "en"
    rules: list[GoldenRuleRecord] = Field(min_length=1)
    baseline: bool = False


class GrsFailure(BaseModel):
    id: int
    got: list[str]
    expected: list[str]


class GrsResponse(BaseModel):
    total: int
    passed: int
    accuracy: float
    failures: list[GrsFailure]
    baseline_accuracy: float | None = None


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/languages")
def languages() -> dict:
    return {"languages": available()}


@app.post("/segment", response_model=SegmentResponse, response_model_exclude_none=True)
def segment_endpoint(req: SegmentRequest) -> SegmentResponse:
    config = make_config(
        req.language, clean=req.clean, char_span=req.char_span, doc_type=req.doc_type
    )
    if config.char_span:
        spans = segment_spans(config, req.text)
        return SegmentResponse(
            language=config.language,
            spans=[SpanRecord(text=s.sentence, start=s.start, end=s.end) for s in spans],
        )
    return SegmentResponse(language=config.language, sentences=segment(config, req.text))


@app.post("/clean", response_model=CleanResponse)
def clean_endpoint(req: CleanRequest) -> CleanResponse:
    try:
        doc_type = DocType(req.doc_type.strip().lower())
    except ValueError:
        raise SegmenterError(
            ErrorKind.INCOMPATIBLE_OPTIONS,
            f"doc_type must be 'plain' or 'pdf', got {req.doc_type!r}",
        ) from None
    report = clean(req.text, doc_type)
    return CleanResponse(text=report.output, actions=list(report.actions))


@app.post("/grs", response_model=GrsResponse, response_model_exclude_none=True)
def grs_endpoint(req: GrsRequest) -> GrsResponse:
    config = make_config(req.language)
    rules = [
        GoldenRule(id=r.id, description=r.description, input=r.input, expected=tuple(r.expected))
        for r in req.rules
    ]
    report = run_grs(config, rules)
    baseline_accuracy = None
    if req.baseline:
        baseline_accuracy = run_grs(config, rules, segmenter=naive_segment).accuracy
    return GrsResponse(
        total=report.total,
        passed=report.passed,
        accuracy=report.accuracy,
        failures=[
            GrsFailure(id=rid, got=list(got), expected=list(expected))
            for rid, got, expected in report.failures
        ],
        baseline_accuracy=baseline_accuracy,
    )
