"""Rule-based temporal expression extraction (years, month+year, full dates)."""

from __future__ import annotations

import calendar
import re
from datetime import date
from typing import Any, Mapping, Optional

from ..model import LanguageEdition, TimeExpression
from .tables import load_stub_tables

_DEFAULT_PATTERNS: Mapping[str, Any] | None = None


def _default_patterns() -> Mapping[str, Any]:
    global _DEFAULT_PATTERNS
    if _DEFAULT_PATTERNS is None:
        _DEFAULT_PATTERNS = load_stub_tables().temporal_patterns
    return _DEFAULT_PATTERNS


_YEAR = r"([12][0-9]{3})"
_DAY = r"([0-3]?[0-9])"


def _compile(months: Mapping[str, int]):
    names = "|".join(sorted((re.escape(m) for m in months), key=len, reverse=True))
    month = rf"({names})"
    flags = re.IGNORECASE
    return [
        # 12 October 2003 / 12. Oktober 2003 / 12 de outubro de 2003
        ("dmy", re.compile(rf"\b{_DAY}\.?(?:\s+de)?\s+{month}(?:\s+de)?\s+{_YEAR}\b", flags)),
        # October 12, 2003
        ("mdy", re.compile(rf"\b{month}\s+{_DAY},?\s+{_YEAR}\b", flags)),
        # October 2003 / outubro de 2003
        ("my", re.compile(rf"\b{month}(?:\s+de)?\s+{_YEAR}\b", flags)),
        ("y", re.compile(rf"\b{_YEAR}\b", flags)),
    ]


def _month_span(year: int, month: int) -> tuple[date, date]:
    last = calendar.monthrange(year, month)[1]
    return date(year, month, 1), date(year, month, last)


def extract_temporal(sentence_text: str, lang: LanguageEdition,
                     patterns: Optional[Mapping[str, Any]] = None) -> list[TimeExpression]:
    """All day-normalized time expressions of a sentence, in order of appearance."""
    table = patterns if patterns is not None else _default_patterns()
    months = {name.lower(): number
              for name, number in table.get(lang.code, {}).get("months", {}).items()}
    if not months:
        months = {name.lower(): number
                  for name, number in table.get("en", {}).get("months", {}).items()}
    consumed: list[tuple[int, int]] = []
    found: list[tuple[int, TimeExpression]] = []
    for form, regex in _compile(months):
        for match in regex.finditer(sentence_text):
            span = match.span()
            if any(span[0] < c[1] and c[0] < span[1] for c in consumed):
                continue
            expression = _normalize(form, match, months)
            if expression is None:
                continue
            consumed.append(span)
            found.append((span[0], expression))
    return [expr for _, expr in sorted(found, key=lambda item: item[0])]


def _normalize(form: str, match: re.Match, months: Mapping[str, int]) -> Optional[TimeExpression]:
    surface = match.group(0)
    try:
        if form == "dmy":
            day, name, year = match.groups()
            start = end = date(int(year), months[name.lower()], int(day))
        elif form == "mdy":
            name, day, year = match.groups()
            start = end = date(int(year), months[name.lower()], int(day))
        elif form == "my":
            name, year = match.groups()
            start, end = _month_span(int(year), months[name.lower()])
        else:
            year = int(match.group(1))
            start, end = date(year, 1, 1), date(year, 12, 31)
    except ValueError:
        return None
    return TimeExpression(start_day=start, end_day=end, surface=surface)
