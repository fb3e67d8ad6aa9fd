"""
Curated homotopy-group tables.

The catalog is a line-oriented UTF-8 file, one fact per line::

    kind|space|k|rank|torsion|generators|citation[|note]

kinds:

    sphere   π_k(S^n), space = n
    local    p-primary part of π_k(S^n), k written ``k@p``
    stem     stable stem: space = least n of the stable range, k = stem,
             generators written with template dimensions ``(n``/``(n+j``
    center   the Whitehead center P_k(S^n) as a subgroup of π_k(S^n)
    so/spin  π_k(SO(n)), π_k(Spin(n))
    kp2      π_k(KP^2); kp2ext records a 2-component known only up to extension

``torsion`` lists invariant factors separated by ``;``. ``generators`` lists
``expr:order`` items separated by ``;`` (order 0 for Z, ``?`` for a summand
without a named generator); either every item carries an order or none does,
in which case the canonical orders are used in turn. A ``note`` of
``secondary-source`` flags a value quoted from an external table. The first
record must be ``schema|<version>``.
"""

import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple, Union

import yaml
from sympy import factorial

from gottlieb_groups.errors import GottliebError, NotCoveredError
from gottlieb_groups.fga import (
    CyclicSummand,
    FgAbGroup,
    InvalidGroupError,
    SubgroupSpec,
    Whole,
    Zero,
    describe,
    gcd24,
    generated_by,
    p_component as group_p_component,
)
from gottlieb_groups.generators import (
    DimensionMismatchError,
    GeneratorExpr,
    Push,
    compose,
    degrees,
    check_dimensions,
    instantiate,
    parse_expr,
    pretty,
)
from gottlieb_groups.logging import setup_logger

logger = setup_logger(__name__)

SCHEMA_VERSION = 1
SECONDARY_SOURCE = "secondary-source"
RECORD_KINDS = ("sphere", "local", "stem", "center", "so", "spin", "kp2", "kp2ext")


class CatalogError(GottliebError):
    """Base class for catalog loading failures."""
    pass


class ParseError(CatalogError):
    """Raised for a malformed record; carries the 1-based line number."""
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DuplicateKeyError(CatalogError):
    def __init__(self, space: "SpaceId", k: Union[int, str], line: int):
        self.space = space
        self.k = k
        self.line = line
        super().__init__(f"line {line}: duplicate record for {space} in degree {k}")


class SchemaMismatchError(CatalogError):
    def __init__(self, found: Optional[str]):
        self.found = found
        super().__init__(f"Unsupported catalog schema {found!r}; expected schema|{SCHEMA_VERSION}")


class SpaceId(NamedTuple):
    kind: str
    n: int

    def __str__(self) -> str:
        return {
            "sphere": f"S^{self.n}",
            "so": f"SO({self.n})",
            "spin": f"Spin({self.n})",
            "su": f"SU({self.n})",
            "sp": f"Sp({self.n})",
            "kp2": "KP^2",
        }.get(self.kind, f"{self.kind}({self.n})")


def sphere(n: int) -> SpaceId:
    return SpaceId("sphere", n)


KP2 = SpaceId("kp2", 2)


@dataclass(frozen=True)
class TableEntry:
    space: SpaceId
    k: int
    group: FgAbGroup
    stable: bool
    citation: str
    prime: Optional[int] = None
    secondary_source: bool = False
    note: str = ""

    @property
    def generators(self) -> Tuple[Optional[GeneratorExpr], ...]:
        return self.group.generators

    @property
    def label(self) -> str:
        local = f";{self.prime}" if self.prime else ""
        return f"π_{self.k}({self.space}{local})"


@dataclass(frozen=True)
class StemRecord:
    stem: int
    min_n: int
    free_rank: int
    torsion: Tuple[int, ...]
    templates: Tuple[Tuple[str, int], ...]
    citation: str

    def entry(self, n: int) -> TableEntry:
        if self.templates:
            summands = [CyclicSummand(order, parse_expr(instantiate(t, n))) for t, order in self.templates]
            group = FgAbGroup(self.free_rank, self.torsion, tuple(summands))
        else:
            group = FgAbGroup(self.free_rank, self.torsion)
        return TableEntry(sphere(n), n + self.stem, group, True, self.citation)


@dataclass(frozen=True)
class CenterFact:
    """P_k(S^n) = G_k(S^n), given as a subgroup of π_k(S^n)."""
    n: int
    k: int
    spec: SubgroupSpec
    iso_type: FgAbGroup
    citation: str
    secondary_source: bool = False


EntryKey = Tuple[SpaceId, int, Optional[int]]


@dataclass(frozen=True)
class Catalog:
    entries: Dict[EntryKey, TableEntry] = field(default_factory=dict)
    stems: Dict[int, StemRecord] = field(default_factory=dict)
    centers: Dict[Tuple[int, int], CenterFact] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION
    checksum: str = ""
    source: Optional[Path] = None

    def __len__(self) -> int:
        return len(self.entries) + len(self.stems) + len(self.centers)

    def get(self, space: SpaceId, k: int, prime: Optional[int] = None) -> Optional[TableEntry]:
        return self.entries.get((space, k, prime))

    def records(self) -> Iterator[TableEntry]:
        yield from self.entries.values()


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def split_top(text: str, sep: str) -> List[str]:
    """Split on sep outside parentheses and quoted labels."""
    parts, depth, quoted, current = [], 0, False, []
    for ch in text:
        if ch == '"':
            quoted = not quoted
        elif not quoted and ch == "(":
            depth += 1
        elif not quoted and ch == ")":
            depth -= 1
        if ch == sep and depth == 0 and not quoted:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p.strip() for p in parts]


def _parse_int(text: str, line: int, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(line, f"{what} '{text}' is not an integer")


def _parse_degree(text: str, line: int) -> Tuple[int, Optional[int]]:
    if "@" in text:
        k, p = text.split("@", 1)
        return _parse_int(k, line, "degree"), _parse_int(p, line, "prime")
    return _parse_int(text, line, "degree"), None


def _parse_torsion(text: str, line: int) -> Tuple[int, ...]:
    if not text:
        return ()
    torsion = tuple(_parse_int(t, line, "torsion entry") for t in text.split(";"))
    for d in torsion:
        if d < 2:
            raise ParseError(line, f"torsion entry {d} < 2")
    for a, b in zip(torsion, torsion[1:]):
        if b % a:
            raise ParseError(line, f"torsion {list(torsion)} is not an invariant-factor chain ({a} does not divide {b})")
    return torsion


def _parse_expr(text: str, line: int) -> GeneratorExpr:
    try:
        return parse_expr(text)
    except GottliebError as e:
        raise ParseError(line, str(e))


def _parse_items(text: str, line: int) -> List[Tuple[str, Optional[int]]]:
    """Split a generator field into (expression text, order or None)."""
    items = []
    for item in split_top(text, ";") if text else []:
        head, sep, tail = item.rpartition(":")
        if sep and tail.strip().lstrip("-").isdigit() and '"' not in tail:
            items.append((head.strip(), int(tail)))
        else:
            items.append((item, None))
    return items


def _orders(items: List[Tuple[str, Optional[int]]], rank: int, torsion: Tuple[int, ...],
            line: int) -> List[int]:
    explicit = [order for _, order in items]
    if all(order is None for order in explicit):
        canonical = [0] * rank + list(torsion)
        if len(canonical) != len(items):
            raise ParseError(line, f"{len(items)} generators for {len(canonical)} cyclic summands")
        return canonical
    if any(order is None for order in explicit):
        raise ParseError(line, "either every generator carries an order or none does")
    return explicit


def _build_group(text: str, rank: int, torsion: Tuple[int, ...], line: int,
                 check=None) -> FgAbGroup:
    items = _parse_items(text, line)
    if not items:
        return FgAbGroup(rank, torsion)
    orders = _orders(items, rank, torsion, line)
    summands = []
    for (expr_text, _), order in zip(items, orders):
        expr = None if expr_text == "?" else _parse_expr(expr_text, line)
        if expr is not None and check is not None:
            try:
                check(expr)
            except GottliebError as e:
                raise ParseError(line, str(e))
        summands.append(CyclicSummand(order, expr))
    try:
        return FgAbGroup(rank, torsion, tuple(summands))
    except InvalidGroupError as e:
        raise ParseError(line, str(e))


def _check_in_kp2(k: int):
    def check(expr: GeneratorExpr) -> None:
        if not isinstance(expr, Push):
            raise DimensionMismatchError(expr, "not pushed into KP^2")
        source, _ = degrees(expr)
        if source != k:
            raise DimensionMismatchError(expr, f"degree {source}, expected {k}")
    return check


class _CatalogBuilder:
    def __init__(self):
        self.entries: Dict[EntryKey, TableEntry] = {}
        self.stems: Dict[int, StemRecord] = {}
        self.centers: Dict[Tuple[int, int], CenterFact] = {}

    def add_entry(self, entry: TableEntry, line: int) -> None:
        key = (entry.space, entry.k, entry.prime)
        if key in self.entries:
            raise DuplicateKeyError(entry.space, entry.k if entry.prime is None else f"{entry.k}@{entry.prime}", line)
        self.entries[key] = entry

    def record(self, fields: List[str], line: int) -> None:
        if len(fields) not in (7, 8):
            raise ParseError(line, f"expected 7 or 8 fields, found {len(fields)}")
        kind, space_text, degree_text, rank_text, torsion_text, generators, citation = fields[:7]
        note = fields[7] if len(fields) == 8 else ""
        if kind not in RECORD_KINDS:
            raise ParseError(line, f"unknown record kind '{kind}'")
        if not citation:
            raise ParseError(line, "empty citation")
        secondary = note == SECONDARY_SOURCE
        note = "" if secondary else note
        n = _parse_int(space_text, line, "space index")
        k, prime = _parse_degree(degree_text, line)
        rank = _parse_int(rank_text, line, "rank")
        if rank < 0:
            raise ParseError(line, f"negative rank {rank}")
        torsion = _parse_torsion(torsion_text, line)
        if prime is not None and kind not in ("local", "kp2ext"):
            raise ParseError(line, f"'{kind}' records take a plain degree, not {degree_text}")

        if kind in ("sphere", "local"):
            if kind == "local":
                if prime is None:
                    raise ParseError(line, "local records need a degree of the form k@p")
                for d in torsion:
                    if d != prime ** _p_adic_exponent(d, prime):
                        raise ParseError(line, f"torsion {d} is not a power of {prime}")
                if rank:
                    raise ParseError(line, "local records carry no free part")
            group = _build_group(generators, rank, torsion, line, lambda e: check_dimensions(e, k, n))
            self.add_entry(TableEntry(sphere(n), k, group, stable_range_check(n, k), citation,
                                      prime, secondary, note), line)
        elif kind == "stem":
            if n < k + 2:
                raise ParseError(line, f"stem {k} is stable from n = {k + 2}, not {n}")
            if k in self.stems:
                raise DuplicateKeyError(SpaceId("stem", n), k, line)
            templates = []
            items = _parse_items(generators, line)
            orders = _orders(items, rank, torsion, line) if items else []
            for (template, _), order in zip(items, orders):
                expr = _parse_expr(instantiate(template, n), line)
                try:
                    check_dimensions(expr, n + k, n)
                except GottliebError as e:
                    raise ParseError(line, str(e))
                templates.append((template, order))
            record = StemRecord(k, n, rank, torsion, tuple(templates), citation)
            try:
                record.entry(n)
            except InvalidGroupError as e:
                raise ParseError(line, str(e))
            self.stems[k] = record
        elif kind == "center":
            if (n, k) in self.centers:
                raise DuplicateKeyError(sphere(n), k, line)
            spec = self._center_spec(generators, rank, torsion, n, k, line)
            self.centers[(n, k)] = CenterFact(n, k, spec, FgAbGroup(rank, torsion), citation, secondary)
        elif kind in ("so", "spin"):
            group = _build_group(generators, rank, torsion, line)
            self.add_entry(TableEntry(SpaceId(kind, n), k, group, False, citation, None, secondary, note), line)
        else:
            if n != 2:
                raise ParseError(line, "only the Cayley plane KP^2 is tabulated")
            group = _build_group(generators, rank, torsion, line, _check_in_kp2(k))
            if kind == "kp2ext":
                prime = prime or 2
            self.add_entry(TableEntry(KP2, k, group, False, citation, prime, secondary, note), line)

    @staticmethod
    def _center_spec(text: str, rank: int, torsion: Tuple[int, ...], n: int, k: int,
                     line: int) -> SubgroupSpec:
        if text == "pi":
            return Whole()
        if not text:
            if rank or torsion:
                raise ParseError(line, "a nonzero center needs generating elements")
            return Zero()
        elements = []
        for item in split_top(text, ";"):
            expr = _parse_expr(item, line)
            try:
                check_dimensions(expr, k, n)
            except GottliebError as e:
                raise ParseError(line, str(e))
            elements.append(expr)
        return generated_by(*elements)

    def build(self, checksum: str, source: Optional[Path]) -> Catalog:
        return Catalog(self.entries, self.stems, self.centers, SCHEMA_VERSION, checksum, source)


def _p_adic_exponent(d: int, p: int) -> int:
    e = 0
    while d % p == 0:
        d //= p
        e += 1
    return e


def parse_catalog(text: str, source: Optional[Path] = None) -> Catalog:
    """Parse catalog text. An input without records is an empty catalog."""
    builder = _CatalogBuilder()
    schema_seen = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = split_top(line, "|")
        if fields[0] == "schema":
            if schema_seen:
                raise ParseError(number, "repeated schema line")
            if len(fields) != 2 or fields[1] != str(SCHEMA_VERSION):
                raise SchemaMismatchError(fields[1] if len(fields) > 1 else None)
            schema_seen = True
            continue
        if not schema_seen:
            raise SchemaMismatchError(None)
        builder.record(fields, number)
    checksum = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return builder.build(checksum, source)


def load_catalog(path: Union[str, Path]) -> Catalog:
    path = Path(path)
    logger.info(f"Loading catalog from {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise CatalogError(f"Cannot read catalog {path}: {e}")
    catalog = parse_catalog(text, path)
    logger.info(f"Loaded {len(catalog)} records from {path} (sha256 {catalog.checksum[:12]})")
    return catalog


# ---------------------------------------------------------------------------
# Lookups
# ---------------------------------------------------------------------------

def stable_range_check(n: int, k: int) -> bool:
    """True inside the Freudenthal range k ≤ 2n − 2."""
    return k <= 2 * n - 2


def _derived(n: int, k: int, group: FgAbGroup, citation: str) -> TableEntry:
    return TableEntry(sphere(n), k, group, stable_range_check(n, k), citation)


def pi_sphere(cat: Catalog, n: int, k: int) -> TableEntry:
    """π_k(S^n) from the catalog; never extrapolated beyond its records."""
    if n < 1 or k < 1:
        raise NotCoveredError(f"π_{k}(S^{n})", "degrees must be positive")
    if k < n:
        return _derived(n, k, FgAbGroup.zero(), "cellular approximation")
    if k == n:
        return _derived(n, k, FgAbGroup.cyclic(0, parse_expr(f"iota({n})")), "degree")
    if n == 1:
        return _derived(n, k, FgAbGroup.zero(), "universal cover of S^1 is contractible")
    if n == 2:
        upstairs = pi_sphere(cat, 3, k)
        return _derived(2, k, upstairs.group.mapped(_hopf_push),
                        f"Hopf fibration S^1 -> S^3 -> S^2; {upstairs.citation}")
    entry = cat.get(sphere(n), k)
    if entry is not None:
        return entry
    record = cat.stems.get(k - n)
    if record is not None and n >= record.min_n:
        return record.entry(n)
    raise NotCoveredError(f"π_{k}(S^{n})", "not in the catalog")


def _hopf_push(g: GeneratorExpr) -> GeneratorExpr:
    if g == parse_expr("iota(3)"):
        return parse_expr("eta(2)")
    return compose(parse_expr("eta(2)"), g)


def sphere_group(cat: Catalog, n: int, k: int) -> FgAbGroup:
    return pi_sphere(cat, n, k).group


def p_component(entry: TableEntry, p: int) -> FgAbGroup:
    """The p-primary part of an entry's group; a free part is dropped (see ``entry.group.free_rank``)."""
    if entry.prime is not None:
        if entry.prime != p:
            raise NotCoveredError(entry.label, f"only the {entry.prime}-component is recorded")
        return entry.group
    return group_p_component(entry.group, p)


def pi_sphere_local(cat: Catalog, n: int, k: int, p: int) -> TableEntry:
    """(π_k(S^n); p), from a full record or a p-local one."""
    local = cat.get(sphere(n), k, p)
    if local is not None:
        return local
    entry = pi_sphere(cat, n, k)
    return TableEntry(entry.space, k, p_component(entry, p), entry.stable, entry.citation, p,
                      entry.secondary_source, entry.note)


def center_fact(cat: Catalog, n: int, k: int) -> Optional[CenterFact]:
    return cat.centers.get((n, k))


def lie_group(cat: Catalog, kind: str, n: int, k: int) -> TableEntry:
    """π_k of SO(n)/Spin(n) (catalog) or SU(n)/Sp(n) (closed formulas)."""
    if kind == "su":
        return TableEntry(SpaceId("su", n), k, su_group(n, k), False, "Bott periodicity range and Kervaire/Matsunaga tables")
    if kind == "sp":
        return TableEntry(SpaceId("sp", n), k, sp_group(n, k), False, "symplectic group tables (Bott, Mimura-Toda)")
    entry = cat.get(SpaceId(kind, n), k)
    if entry is None:
        raise NotCoveredError(f"π_{k}({SpaceId(kind, n)})", "not in the catalog")
    return entry


def su_group(n: int, k: int) -> FgAbGroup:
    """π_k(SU(n)) for 2n−1 ≤ k ≤ 2n+5, k ≠ 2n+4."""
    j = k - (2 * n - 1)
    subject = f"π_{k}(SU({n}))"
    if n < 2:
        raise NotCoveredError(subject, "n must be at least 2")
    if j == 0:
        return FgAbGroup(1)
    if j == 1:
        return FgAbGroup.cyclic(int(factorial(n)))
    if j == 2:
        return FgAbGroup.cyclic(2) if n % 2 == 0 else FgAbGroup.zero()
    if j == 3:
        if n % 2:
            return FgAbGroup.cyclic(int(factorial(n + 1)) // 2)
        if n >= 4:
            return FgAbGroup.from_orders([int(factorial(n + 1)), 2])
    if j == 4:
        if n % 2 == 0:
            return FgAbGroup.cyclic(gcd24(24, n))
        if n >= 3:
            return FgAbGroup.cyclic(gcd24(24, n + 3) // 2)
    if j == 6:
        if n % 2:
            return FgAbGroup.cyclic(gcd24(24, n + 1))
        return FgAbGroup.cyclic(gcd24(24, n + 4) // 2)
    raise NotCoveredError(subject, "outside the tabulated range")


def sp_group(n: int, k: int) -> FgAbGroup:
    """π_k(Sp(n)) for 4n−2 ≤ k ≤ 4n+5, k ≠ 4n."""
    j = k - (4 * n - 1)
    subject = f"π_{k}(Sp({n}))"
    if n < 1:
        raise NotCoveredError(subject, "n must be positive")
    even = n % 2 == 0
    if j == -1:
        return FgAbGroup.zero()
    if j == 0:
        return FgAbGroup(1)
    if j == 2:
        return FgAbGroup.zero() if even else FgAbGroup.cyclic(2)
    if j == 3:
        order = int(factorial(2 * n + 1))
        return FgAbGroup.cyclic(order if even else 2 * order)
    if j == 4:
        return FgAbGroup.cyclic(2)
    if j == 5:
        return FgAbGroup.from_orders([2, 2] if even else [2])
    if j == 6:
        orders = [gcd24(24, n + 2), 2] if even else [gcd24(24, n + 2)]
        return FgAbGroup.from_orders(orders)
    raise NotCoveredError(subject, "outside the tabulated range")


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------

def _export_row(space: str, k, group: FgAbGroup, generators, citation: str) -> Dict:
    return {
        "space": space,
        "k": k,
        "group": str(group),
        "generators": [pretty(g) if g is not None else None for g in generators],
        "citation": citation,
    }


def export_rows(cat: Catalog) -> List[Dict]:
    rows = []
    for (space, k, prime), entry in sorted(cat.entries.items(), key=lambda item: (item[0][0], item[0][1], item[0][2] or 0)):
        rows.append(_export_row(f"{space}" + (f" ({prime}-primary)" if prime else ""), k, entry.group,
                                entry.generators if entry.group.summands else [], entry.citation))
    for stem, record in sorted(cat.stems.items()):
        entry = record.entry(record.min_n)
        rows.append(_export_row(f"S^n, n >= {record.min_n}", f"n+{stem}", entry.group,
                                entry.generators if record.templates else [], record.citation))
    for (n, k), fact in sorted(cat.centers.items()):
        elements = list(getattr(fact.spec, "elements", ()))
        rows.append({
            "space": f"P_k(S^{n})",
            "k": k,
            "group": describe(fact.iso_type.free_rank, fact.iso_type.torsion),
            "generators": [pretty(e) for e in elements] or [str(fact.spec)],
            "citation": fact.citation,
        })
    return rows


def export_catalog(cat: Catalog) -> str:
    """YAML dump of every record with fields space, k, group, generators, citation."""
    return yaml.safe_dump({"schema": cat.schema_version, "checksum": cat.checksum, "records": export_rows(cat)},
                          sort_keys=False, allow_unicode=True)
