"""
Validated queries and their dispatch to the group modules.
"""

from typing import Iterator, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field as ModelField, field_validator, model_validator
from sympy import isprime

from gottlieb_groups.cayley import g_group_kp2, p_group_kp2, pi_group_kp2
from gottlieb_groups.gottlieb import g_double_prime, g_group, g_group_local, g_prime
from gottlieb_groups.logging import setup_logger
from gottlieb_groups.projspace import Field, p_double_prime, p_group, p_prime, pi_group, space_name
from gottlieb_groups.results import GroupResult, answer, localize, not_covered
from gottlieb_groups.tables import Catalog

logger = setup_logger(__name__)

What = Literal["pi", "P", "Pprime", "Pdoubleprime", "G", "Gprime", "Gdoubleprime"]
Format = Literal["text", "machine"]

SYMBOLS = {
    "pi": "π",
    "P": "P",
    "Pprime": "P′",
    "Pdoubleprime": "P″",
    "G": "G",
    "Gprime": "G′",
    "Gdoubleprime": "G″",
}


def _check_prime(p: Optional[int]) -> Optional[int]:
    if p is not None and (p == 2 or not isprime(p)):
        raise ValueError(f"p = {p} must be an odd prime")
    return p


class Query(BaseModel):
    model_config = ConfigDict(frozen=True)
    what: What
    field: Field
    n: int = ModelField(ge=1)
    k: int = ModelField(ge=1)
    p: Optional[int] = None
    format: Format = "text"

    @field_validator("p")
    @classmethod
    def odd_prime(cls, p: Optional[int]) -> Optional[int]:
        return _check_prime(p)

    @model_validator(mode="after")
    def cayley_plane(self) -> "Query":
        if self.field is Field.K and self.n != 2:
            raise ValueError("the Cayley projective plane KP^n exists only for n = 2")
        return self

    @property
    def subject(self) -> str:
        return f"{SYMBOLS[self.what]}_{self.k}({space_name(self.field, self.n)})"


def _cayley(what: str, k: int, cat: Catalog) -> GroupResult:
    if what == "pi":
        return pi_group_kp2(k, cat)
    if what == "P":
        return p_group_kp2(k, cat)
    if what == "G":
        return g_group_kp2(k, cat)
    return not_covered(f"{SYMBOLS[what]}_{k}(KP^2)", "the γ- and i-parts are defined for F = R, C, H")


DISPATCH = {
    "pi": pi_group,
    "P": p_group,
    "Pprime": p_prime,
    "Pdoubleprime": p_double_prime,
    "G": g_group,
    "Gprime": g_prime,
    "Gdoubleprime": g_double_prime,
}


def evaluate(q: Query, cat: Catalog) -> GroupResult:
    """Answer a query; missing knowledge comes back as a not_covered result."""
    logger.debug(f"Evaluating {q}")
    if q.field is Field.K:
        result = _cayley(q.what, q.k, cat)
    elif q.what == "G" and q.p is not None:
        return g_group_local(q.field, q.n, q.k, q.p, cat)
    else:
        result = DISPATCH[q.what](q.field, q.n, q.k, cat)
    if q.p is None:
        return result
    subject = f"{result.subject[:-1]};{q.p})"
    return answer(subject, lambda: localize(result, q.p, subject))


# ---------------------------------------------------------------------------
# Dump
# ---------------------------------------------------------------------------

def parse_range(text: Optional[str], default: Tuple[int, int]) -> Tuple[int, int]:
    """``a..b``, ``a..`` (up to the default end) or a single ``a``."""
    if text is None:
        return default
    if ".." in text:
        low, high = text.split("..", 1)
        return int(low) if low else default[0], int(high) if high else default[1]
    return int(text), int(text)


class DumpFilter(BaseModel):
    model_config = ConfigDict(frozen=True)
    what: What
    field: Field
    n_range: Tuple[int, int]
    k_range: Tuple[int, int]
    p: Optional[int] = None
    format: Format = "text"

    @field_validator("p")
    @classmethod
    def odd_prime(cls, p: Optional[int]) -> Optional[int]:
        return _check_prime(p)

    @field_validator("n_range", "k_range")
    @classmethod
    def positive(cls, bounds: Tuple[int, int]) -> Tuple[int, int]:
        if bounds[0] < 1:
            raise ValueError(f"range {bounds[0]}..{bounds[1]} must start at 1 or above")
        return bounds

    def queries(self) -> Iterator[Query]:
        """Cells in (n, k) ascending order; KP^n only at n = 2."""
        n_low, n_high = self.n_range
        k_low, k_high = self.k_range
        for n in range(n_low, n_high + 1):
            if self.field is Field.K and n != 2:
                continue
            for k in range(k_low, k_high + 1):
                yield Query(what=self.what, field=self.field, n=n, k=k, p=self.p, format=self.format)


def dump(flt: DumpFilter, cat: Catalog) -> List[Tuple[Query, GroupResult]]:
    """Every covered cell of the filter."""
    rows = []
    for q in flt.queries():
        result = evaluate(q, cat)
        if result.is_covered:
            rows.append((q, result))
    logger.info(f"Dump {flt.what} {flt.field.value}: {len(rows)} covered cells")
    return rows
