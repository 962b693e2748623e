"""Catalog file parsing, normalization, and validation.

The catalog is a UTF-8 CSV with header exactly
`name,aspect,year,concern,environment,technique,medium,evaluation,url` plus an
optional trailing `license` column. Multi-valued cells use ";" separators and
the compact conventions of the printed catalog ("Ecli.", "S/I", "Exp.; Survey"
...), which normalization expands through a fixed dictionary.
"""

from __future__ import annotations

import csv
import datetime
import io
import re
from dataclasses import dataclass

from .errors import CatalogFormatError
from .model import slugify

REQUIRED_COLUMNS = (
    "name", "aspect", "year", "concern", "environment",
    "technique", "medium", "evaluation", "url",
)
OPTIONAL_COLUMNS = ("license",)

ASPECTS = ("Behavior", "Structure", "Evolution", "Combined")
MEDIA = ("SCS", "I3D")
EVALUATIONS = (
    "Experiment", "UsageScenario", "CaseStudy", "Survey",
    "Anecdotal", "Theoretical", "None",
)
LICENSES = ("Free", "Commercial", "Unknown")

YEAR_MIN = 1990

# Compact-notation expansion, applied per ";"-separated cell token.
ABBREVIATIONS = {
    "Ecli.": "Eclipse",
    "VS": "VisualStudio",
    "U.": "Unity",
    "Node-L": "Node-link",
    "Node-L.": "Node-link",
    "Aug. src.": "Augmented source code",
    "aug.src.": "Augmented source code",
    "Aug. source code": "Augmented source code",
    "Anim. node-link": "Animated node-link",
    "Exp.": "Experiment",
    "Usage Scen.": "UsageScenario",
    "Case Study": "CaseStudy",
    "N/A": "None",
    "E.-S.-B.": "Combined",
}

# The dual-medium marker expands to membership in both media.
DUAL_MEDIUM = "S/I"

_TOKEN_RE = re.compile(r"[a-z0-9]+")


@dataclass(frozen=True)
class RawRow:
    line: int  # 1-based line number in the file (header is line 1)
    name: str
    aspect: str
    year: str
    concern: str
    environment: str
    technique: str
    medium: str
    evaluation: str
    url: str
    license: str | None = None


@dataclass(frozen=True)
class ToolRecord:
    name: str
    slug: str
    aspect: str
    year: int
    concern: str
    concern_keywords: frozenset[str]
    environments: frozenset[str]
    techniques: frozenset[str]
    media: frozenset[str]
    evaluations: frozenset[str]
    url: str
    license: str | None = None

    def to_json(self) -> dict:
        return {
            "slug": self.slug,
            "name": self.name,
            "aspect": self.aspect,
            "year": self.year,
            "concern": self.concern,
            "concern_keywords": sorted(self.concern_keywords),
            "environments": sorted(self.environments),
            "techniques": sorted(self.techniques),
            "media": sorted(self.media),
            "evaluations": sorted(self.evaluations),
            "url": self.url,
            "license": self.license,
        }


def record_from_json(data: dict) -> ToolRecord:
    return ToolRecord(
        name=data["name"],
        slug=data["slug"],
        aspect=data["aspect"],
        year=int(data["year"]),
        concern=data["concern"],
        concern_keywords=frozenset(data["concern_keywords"]),
        environments=frozenset(data["environments"]),
        techniques=frozenset(data["techniques"]),
        media=frozenset(data["media"]),
        evaluations=frozenset(data["evaluations"]),
        url=data["url"],
        license=data.get("license"),
    )


@dataclass(frozen=True)
class CatalogIssue:
    row: int  # 1-based data row index, 0 for catalog-level issues
    severity: str  # "warning" | "error"
    message: str


def errors_only(issues: list[CatalogIssue]) -> list[CatalogIssue]:
    return [i for i in issues if i.severity == "error"]


# -- parsing -------------------------------------------------------------------

def parse_catalog(data: bytes | str) -> list[RawRow]:
    """Split catalog bytes into raw rows; header must match exactly."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise CatalogFormatError("empty file: missing header", line=1) from None
    has_license = tuple(header) == REQUIRED_COLUMNS + OPTIONAL_COLUMNS
    if not has_license and tuple(header) != REQUIRED_COLUMNS:
        raise CatalogFormatError(
            f"bad header {','.join(header)!r}; expected"
            f" {','.join(REQUIRED_COLUMNS)}[,license]",
            line=1,
        )
    expected = len(REQUIRED_COLUMNS) + (1 if has_license else 0)
    rows = []
    for line_no, fields in enumerate(reader, start=2):
        if not fields:
            continue
        if len(fields) != expected:
            raise CatalogFormatError(
                f"expected {expected} fields, found {len(fields)}", line=line_no
            )
        values = [f.strip() for f in fields]
        rows.append(
            RawRow(
                line=line_no,
                name=values[0],
                aspect=values[1],
                year=values[2],
                concern=values[3],
                environment=values[4],
                technique=values[5],
                medium=values[6],
                evaluation=values[7],
                url=values[8],
                license=values[9] if has_license and values[9] else None,
            )
        )
    return rows


# -- normalization ---------------------------------------------------------------

def _split_cell(cell: str) -> list[str]:
    return [part.strip() for part in cell.split(";") if part.strip()]


def _expand(token: str, row: int, issues: list[CatalogIssue]) -> str:
    if token in ABBREVIATIONS:
        return ABBREVIATIONS[token]
    # A period marks compact notation; unknown ones pass through verbatim.
    if "." in token:
        issues.append(
            CatalogIssue(
                row=row,
                severity="warning",
                message=f"unknown abbreviation {token!r} kept verbatim",
            )
        )
    if token and token[0].islower():
        token = token[0].upper() + token[1:]
    return token


def load_stopwords() -> frozenset[str]:
    from importlib.resources import files

    text = files("vison.data").joinpath("stopwords.txt").read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


def concern_tokens(concern: str, stopwords: frozenset[str]) -> frozenset[str]:
    return frozenset(_TOKEN_RE.findall(concern.lower())) - stopwords


def normalize_record(
    raw: RawRow,
    row_index: int,
    stopwords: frozenset[str],
    issues: list[CatalogIssue] | None = None,
) -> ToolRecord:
    """Expand one raw row into a ToolRecord; raises ValueError on bad enums."""
    issues = issues if issues is not None else []

    aspect = _expand(raw.aspect, row_index, issues)
    if aspect not in ASPECTS:
        raise ValueError(f"unknown aspect {raw.aspect!r}")

    try:
        year = int(raw.year)
    except ValueError:
        raise ValueError(f"year {raw.year!r} is not an integer") from None

    media: set[str] = set()
    for token in _split_cell(raw.medium):
        if token == DUAL_MEDIUM:
            media.update(MEDIA)
        else:
            expanded = _expand(token, row_index, issues)
            if expanded not in MEDIA:
                raise ValueError(f"unknown medium {token!r}")
            media.add(expanded)

    evaluations = set()
    for token in _split_cell(raw.evaluation):
        expanded = _expand(token, row_index, issues)
        if expanded not in EVALUATIONS:
            raise ValueError(f"unknown evaluation {token!r}")
        evaluations.add(expanded)

    license_value = None
    if raw.license:
        license_value = _expand(raw.license, row_index, issues)
        if license_value not in LICENSES:
            raise ValueError(f"unknown license {raw.license!r}")

    environments = frozenset(
        _expand(t, row_index, issues) for t in _split_cell(raw.environment)
    )
    techniques = frozenset(
        _expand(t, row_index, issues) for t in _split_cell(raw.technique)
    )

    return ToolRecord(
        name=raw.name,
        slug=slugify(raw.name) if raw.name else "",
        aspect=aspect,
        year=year,
        concern=raw.concern,
        concern_keywords=concern_tokens(raw.concern, stopwords),
        environments=environments,
        techniques=techniques,
        media=frozenset(media),
        evaluations=frozenset(evaluations),
        url=raw.url,
        license=license_value,
    )


def normalize_catalog(
    rows: list[RawRow], stopwords: frozenset[str] | None = None
) -> tuple[list[ToolRecord], list[CatalogIssue]]:
    """Normalize every row; rows with enum errors are dropped and reported."""
    stopwords = stopwords if stopwords is not None else load_stopwords()
    records: list[ToolRecord] = []
    issues: list[CatalogIssue] = []
    for index, raw in enumerate(rows, start=1):
        try:
            records.append(normalize_record(raw, index, stopwords, issues))
        except ValueError as exc:
            issues.append(CatalogIssue(row=index, severity="error", message=str(exc)))
    return records, issues


# -- validation -------------------------------------------------------------------

def validate_catalog(records: list[ToolRecord]) -> list[CatalogIssue]:
    """Catalog-level invariants; errors block ontology compilation."""
    issues: list[CatalogIssue] = []
    seen_names: dict[str, int] = {}
    seen_slugs: dict[str, int] = {}
    current_year = datetime.date.today().year
    for index, record in enumerate(records, start=1):
        if not record.name:
            issues.append(CatalogIssue(index, "error", "tool has no name (criterion C1)"))
        else:
            key = record.name.casefold()
            if key in seen_names:
                issues.append(
                    CatalogIssue(
                        index,
                        "error",
                        f"duplicate name {record.name!r} (also row {seen_names[key]};"
                        " criterion C1 requires distinct names)",
                    )
                )
            else:
                seen_names[key] = index
        if record.slug:
            if record.slug in seen_slugs:
                issues.append(
                    CatalogIssue(
                        index,
                        "error",
                        f"slug {record.slug!r} collides with row {seen_slugs[record.slug]}",
                    )
                )
            else:
                seen_slugs[record.slug] = index
        if not record.url:
            issues.append(
                CatalogIssue(
                    index,
                    "error",
                    "tool has no URL; criterion C2 requires public availability"
                    " on the internet",
                )
            )
        if not (YEAR_MIN <= record.year <= current_year):
            issues.append(
                CatalogIssue(
                    index,
                    "error",
                    f"year {record.year} outside [{YEAR_MIN}, {current_year}]",
                )
            )
        if not record.media:
            issues.append(CatalogIssue(index, "error", "medium cell is empty"))
        for dimension, values in (
            ("environment", record.environments),
            ("technique", record.techniques),
            ("evaluation", record.evaluations),
        ):
            if not values:
                issues.append(
                    CatalogIssue(index, "warning", f"{dimension} cell is empty")
                )
    return issues


def load_records(
    data: bytes | str, stopwords: frozenset[str] | None = None
) -> tuple[list[ToolRecord], list[CatalogIssue]]:
    """parse + normalize + validate in one pass."""
    rows = parse_catalog(data)
    records, issues = normalize_catalog(rows, stopwords)
    issues.extend(validate_catalog(records))
    return records, issues
