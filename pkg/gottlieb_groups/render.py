"""
Text and machine renderings of a GroupResult.

The machine format is one line, ``status|ambient|value|upper|generators|citation``;
the same result always renders to the same bytes.
"""

from typing import List, Optional

from gottlieb_groups.errors import GottliebError
from gottlieb_groups.fga import FgAbGroup, SubgroupSpec
from gottlieb_groups.generators import pretty
from gottlieb_groups.results import GroupResult

FORMATS = ("text", "machine")
EMPTY = "-"


def _type_text(spec: Optional[SubgroupSpec], iso: Optional[FgAbGroup]) -> str:
    if spec is None:
        return EMPTY
    return str(iso) if iso is not None else str(spec)


def _safe_type(result: GroupResult, upper: bool) -> Optional[FgAbGroup]:
    try:
        return result.upper_type() if upper else result.value_type()
    except GottliebError:
        return None


def value_text(result: GroupResult) -> str:
    return _type_text(result.value, _safe_type(result, upper=False))


def upper_text(result: GroupResult) -> str:
    return _type_text(result.upper, _safe_type(result, upper=True))


def generator_texts(result: GroupResult) -> List[str]:
    return [pretty(g) for g in result.generators()]


def _field(text: str) -> str:
    return text.replace("|", "/").replace("\n", " ")


def render_machine(result: GroupResult) -> str:
    ambient = str(result.ambient) if result.ambient is not None else EMPTY
    citation = result.citation or "; ".join(result.notes) or EMPTY
    fields = [
        result.status.value,
        ambient,
        value_text(result),
        upper_text(result),
        ";".join(generator_texts(result)) or EMPTY,
        citation,
    ]
    return "|".join(_field(f) for f in fields)


def render_text(result: GroupResult) -> str:
    lines = [f"{result.subject}: {result.status.value}"]
    if result.ambient is not None:
        lines.append(f"  ambient:    {result.ambient}")
    if result.is_exact:
        lines.append(f"  value:      {value_text(result)}  ({result.value})")
    else:
        if result.lower is not None:
            lines.append(f"  lower:      {value_text(result)}  ({result.value})")
        if result.upper is not None:
            lines.append(f"  upper:      {upper_text(result)}  ({result.upper})")
    generators = generator_texts(result)
    if generators:
        lines.append(f"  generators: {', '.join(generators)}")
    if result.citation:
        lines.append(f"  citation:   {result.citation}")
    for note in result.notes:
        lines.append(f"  note:       {note}")
    return "\n".join(lines)


def render(result: GroupResult, fmt: str = "text") -> str:
    if fmt == "machine":
        return render_machine(result)
    return render_text(result)
