"""
Self-check suites run by ``gottlieb selfcheck``.

Each suite counts passed checks and collects a line per failure. A check that
raises is a failure, never an abort of the whole run.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, List, Optional, Tuple

from gottlieb_groups.cayley import g_group_kp2, p_group_kp2, pi_group_kp2
from gottlieb_groups.errors import GottliebError, NotCoveredError
from gottlieb_groups.fga import (
    INFINITY,
    FgAbGroup,
    Multiple,
    SubgroupSpec,
    Whole,
    Zero,
    direct_sum,
    index,
    multiple_subgroup,
    resolve,
)
from gottlieb_groups.generators import parse_expr
from gottlieb_groups.gottlieb import all_rules as gottlieb_rules
from gottlieb_groups.gottlieb import g_group
from gottlieb_groups.logging import setup_logger
from gottlieb_groups.projspace import Field, decompose_pi, p_double_prime, p_group, p_prime
from gottlieb_groups.projspace import all_rules as projspace_rules
from gottlieb_groups.results import GroupResult
from gottlieb_groups.tables import Catalog, pi_sphere, sp_group, su_group
from gottlieb_groups.whitehead import Family, delta_order, delta_vs_whitehead_gap, whitehead_order_iota
from gottlieb_groups.whitehead import all_rules as whitehead_rules

logger = setup_logger(__name__)


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, ok: bool, label: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)

    def run(self, label: str, fn: Callable[[], bool]) -> None:
        """Run one check; an exception counts as a failure with its message."""
        try:
            ok = fn()
        except (GottliebError, ValueError, KeyError) as e:
            self.failures.append(f"{label}: {type(e).__name__}: {e}")
            return
        self.check(ok, label)


@dataclass
class SelfCheckReport:
    suites: List[SuiteReport]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def render(self, max_failures: int = 10) -> str:
        lines = []
        for s in self.suites:
            lines.append(f"{s.name}: {s.passed} passed, {s.failed} failed")
            for failure in s.failures[:max_failures]:
                lines.append(f"  FAIL {failure}")
            if s.failed > max_failures:
                lines.append(f"  ... {s.failed - max_failures} more")
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# fga oracle
# ---------------------------------------------------------------------------

def invariant_chains(max_order: int) -> Iterator[Tuple[int, ...]]:
    """Every d_1 | d_2 | ... with d_i ≥ 2 and product ≤ max_order, the trivial chain included."""
    def extend(prefix: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
        yield prefix
        step = prefix[-1] if prefix else 1
        first = prefix[-1] if prefix else 2
        for d in range(first, max_order // size + 1, step):
            yield from extend(prefix + (d,), size * d)

    yield from extend((), 1)


def brute_multiple_order(torsion: Tuple[int, ...], m: int) -> int:
    return len({tuple(m * x % d for x, d in zip(element, torsion))
                for element in product(*(range(d) for d in torsion))})


def fga_oracle(max_order: int = 200, max_multiple: int = 30) -> SuiteReport:
    report = SuiteReport("fga oracle")
    for torsion in invariant_chains(max_order):
        g = FgAbGroup(0, torsion)
        for m in range(1, max_multiple + 1):
            expected = brute_multiple_order(torsion, m)
            label = f"{m}·({g})"
            report.run(label, lambda: multiple_subgroup(g, m).order == expected
                       and index(g, Multiple(m)) == g.order // expected)
    return report


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def catalog_consistency(cat: Catalog) -> SuiteReport:
    report = SuiteReport("catalog consistency")
    for (space, k, prime), entry in sorted(cat.entries.items(), key=lambda item: (item[0][0], item[0][1], item[0][2] or 0)):
        label = entry.label
        report.check(bool(entry.citation), f"{label}: citation missing")
        torsion = entry.group.torsion
        report.check(all(b % a == 0 for a, b in zip(torsion, torsion[1:])), f"{label}: torsion not canonical")
        if space.kind != "sphere" or prime is not None:
            continue
        record = cat.stems.get(k - space.n)
        if record is not None and space.n >= record.min_n:
            stable = record.entry(space.n).group
            report.check(str(stable) == str(entry.group),
                         f"{label}: {entry.group} differs from the stable stem {stable}")
    for stem, record in sorted(cat.stems.items()):
        report.check(bool(record.citation), f"stem {stem}: citation missing")
    return report


# ---------------------------------------------------------------------------
# piecewise rules
# ---------------------------------------------------------------------------

def piecewise_exhaustiveness(limit: int) -> SuiteReport:
    report = SuiteReport("piecewise exhaustiveness")
    found = {**whitehead_rules(), **projspace_rules(), **gottlieb_rules()}
    for name, (rule_, var, envs) in sorted(found.items()):
        for env in envs:
            failures = rule_.check_exhaustive(limit, var, **env)
            report.check(not failures, f"{name} {env}: arms firing {failures[:5]}")
    return report


# ---------------------------------------------------------------------------
# [ι_n, α] against Δα
# ---------------------------------------------------------------------------

STEM_TEMPLATES = (
    "iota({n})",
    "eta({n})",
    "cmp(eta({n}),eta({n1}))",
    "nu({n})",
    "cmp(nu({n}),nu({n3}))",
    "sigma({n})",
)
SPECIAL_ELEMENTS = (
    (4, "E(nu'(3))"),
    (4, "cmp(nu(4),eta(7))"),
    (4, "cmp(E(nu'(3)),eta(7))"),
    (4, "cmp(nu(4),eta(7),eta(8))"),
    (4, "cmp(E(nu'(3)),eta(7),eta(8))"),
    (6, "wh(iota(6),iota(6))"),
    (8, "E(sigma'(7))"),
)


def _divides(small, large) -> bool:
    if small == INFINITY:
        return large == INFINITY
    if large == INFINITY:
        return True
    return large % small == 0


def _elements(limit: int) -> Iterator[Tuple[int, str]]:
    for n in range(2, limit + 1):
        for template in STEM_TEMPLATES:
            yield n, template.format(n=n, n1=n + 1, n3=n + 3)
    yield from SPECIAL_ELEMENTS


def order_division(limit: int) -> SuiteReport:
    report = SuiteReport("order division and gap")
    for n, text in _elements(limit):
        element = parse_expr(text)
        try:
            w = whitehead_order_iota(n, element)
            d = delta_order(Family.R, n, element)
        except NotCoveredError:
            continue
        label = f"n={n}, {text}: ♯[ι,α]={w}, ♯Δα={d}"
        report.check(_divides(w, d), f"{label}: no division")
        report.run(f"{label}: gap", lambda: delta_vs_whitehead_gap(n, element) == (w != d))
    return report


# ---------------------------------------------------------------------------
# golden values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Golden:
    label: str
    compute: Callable[[Catalog], GroupResult]
    spec: Optional[SubgroupSpec] = None
    iso: Optional[str] = None
    ambient: Optional[str] = None


def _matches(case: Golden, result: GroupResult) -> bool:
    if not result.is_covered:
        raise NotCoveredError(result.subject, "; ".join(result.notes))
    if not result.is_exact:
        return False
    ok = True
    if case.spec is not None:
        if result.ambient is None:
            ok = result.value == case.spec
        else:
            ok = resolve(result.value, result.ambient) == resolve(case.spec, result.ambient)
    if case.iso is not None:
        ok = ok and str(result.value_type()) == case.iso
    if case.ambient is not None:
        ok = ok and str(result.ambient) == case.ambient
    return ok


def _golden_cases() -> List[Golden]:
    R, C, H = Field.R, Field.C, Field.H
    cases = [
        Golden("P_2(RP^2) = 0", lambda c: p_group(R, 2, 2, c), Zero()),
        Golden("P_8(RP^4) ≅ Z_2", lambda c: p_group(R, 4, 8, c), iso="Z_2"),
        Golden("P_9(RP^4) ≅ Z_2", lambda c: p_group(R, 4, 9, c), iso="Z_2"),
        Golden("P_10(RP^4) ≅ Z_24", lambda c: p_group(R, 4, 10, c), iso="Z_24"),
        Golden("P_7(CP^2) = 0", lambda c: p_group(C, 2, 7, c), Zero()),
        Golden("P_11(HP^2) ≅ Z + Z_5", lambda c: p_group(H, 2, 11, c), iso="Z + Z_5"),
        Golden("P_15(HP^3) ≅ Z + Z_84 + (Z_2)^2", lambda c: p_group(H, 3, 15, c), iso="Z + Z_84 + (Z_2)^2"),
        Golden("G_5(CP^2) = 2π", lambda c: g_group(C, 2, 5, c), Multiple(2)),
        Golden("π_22(KP^2) ≅ Z_4", lambda c: pi_group_kp2(22, c), ambient="Z_4"),
        Golden("π_23(KP^2) ≅ Z + Z_120 + (Z_2)^2", lambda c: pi_group_kp2(23, c), ambient="Z + Z_120 + (Z_2)^2"),
        Golden("π_24(KP^2) ≅ (Z_2)^3", lambda c: pi_group_kp2(24, c), ambient="(Z_2)^3"),
        Golden("G_11(KP^2) ≅ Z_3", lambda c: g_group_kp2(11, c), Multiple(8), iso="Z_3"),
        Golden("P_11(KP^2) ≅ Z_3", lambda c: p_group_kp2(11, c), Multiple(8), iso="Z_3"),
        Golden("P_18(KP^2) ≅ Z_24", lambda c: p_group_kp2(18, c), iso="Z_24"),
        Golden("G_8(KP^2) = 0", lambda c: g_group_kp2(8, c), Zero()),
    ]
    cases += [Golden(f"P_{k}(RP^2) = π", lambda c, k=k: p_group(R, 2, k, c), Whole()) for k in range(3, 12)]
    cases += [Golden(f"P_{k}(HP^{n}) = 0", lambda c, n=n, k=k: p_group(H, n, k, c), Zero())
              for n in range(2, 10) for k in (5, 6)]
    cases += [Golden(f"P_14(HP^{n}) ≅ Z_12", lambda c, n=n: p_group(H, n, 14, c), iso="Z_12") for n in (3, 4, 5)]
    cases += [Golden(f"P_{k}(KP^2) = 0", lambda c, k=k: p_group_kp2(k, c), Zero()) for k in (9, 10, 12, 13, 14, 20)]
    for n in range(2, 16):
        cases.append(Golden(f"G_1(RP^{n})", lambda c, n=n: g_group(R, n, 1, c), Zero() if n % 2 == 0 else Whole()))
        top = Zero() if n % 2 == 0 else Whole() if n in (3, 7) else Multiple(2)
        cases.append(Golden(f"G_{n}(RP^{n})", lambda c, n=n: g_group(R, n, n, c), top))
    for n in range(2, 9):
        cases.append(Golden(f"G_2(CP^{n}) = 0", lambda c, n=n: g_group(C, n, 2, c), Zero()))
        cases.append(Golden(f"G_4(HP^{n}) = 0", lambda c, n=n: g_group(H, n, 4, c), Zero()))
    cases += [Golden(f"G_{k}(CP^2) = π", lambda c, k=k: g_group(C, 2, k, c), Whole()) for k in (10, 11, 12)]
    return cases


GOLDEN_CASES = _golden_cases()


def golden_values(cat: Catalog) -> SuiteReport:
    report = SuiteReport("golden values")
    for case in GOLDEN_CASES:
        report.run(case.label, lambda: _matches(case, case.compute(cat)))
    return report


# ---------------------------------------------------------------------------
# G ⊆ P
# ---------------------------------------------------------------------------

def _same_ambient(a: GroupResult, b: GroupResult) -> bool:
    return a.ambient is not None and b.ambient is not None and a.ambient.presentation() == b.ambient.presentation()


def _lattice_ok(g: GroupResult, p: GroupResult) -> bool:
    g.check()
    if not (g.is_covered and p.is_covered and _same_ambient(g, p)) or p.upper is None:
        return True
    p_upper = p.upper_subgroup()
    return all(p_upper.contains(s) for s in (g.value_subgroup(), g.upper_subgroup()) if s is not None)


def bound_lattice(cat: Catalog, max_n: int = 8, max_k: int = 22) -> SuiteReport:
    report = SuiteReport("bound lattice")
    for field_ in (Field.R, Field.C, Field.H):
        for n in range(2, max_n + 1):
            for k in range(1, max_k + 1):
                report.run(f"G_{k}({field_.symbol}^{n}) ⊆ P",
                           lambda: _lattice_ok(g_group(field_, n, k, cat), p_group(field_, n, k, cat)))
    for k in range(8, 22):
        report.run(f"G_{k}(KP^2) ⊆ P", lambda: _lattice_ok(g_group_kp2(k, cat), p_group_kp2(k, cat)))

    def g7_rp4() -> bool:
        g = g_group(Field.R, 4, 7, cat)
        if not g.is_covered or g.is_exact or g.upper is None:
            return False
        lower_ok = g.value_subgroup() == resolve(Multiple(12), g.ambient)
        upper = g.upper_subgroup()
        excluded = [parse_expr("gam(mul(6,nu(4)))"), parse_expr("gam(E(nu'(3)))")]
        return lower_ok and all(e not in upper for e in excluded)

    report.run("G_7(RP^4) between 12π and γ∗{3[ι_4,ι_4], 2Eν′}", g7_rp4)
    return report


# ---------------------------------------------------------------------------
# splittings
# ---------------------------------------------------------------------------

HOPF_SPLITTINGS = ((4, 7, 3), (8, 15, 7))


def _splits(p: GroupResult, p1: GroupResult, p2: GroupResult) -> bool:
    if not (p.is_exact and p1.is_exact and p2.is_exact):
        return True
    return str(p.value_type()) == str(direct_sum(p1.value_type(), p2.value_type()))


def decomposition_consistency(cat: Catalog, max_n: int = 8, max_k: int = 25) -> SuiteReport:
    report = SuiteReport("decomposition consistency")
    for field_ in (Field.R, Field.C, Field.H):
        for n in range(1, max_n + 1):
            for k in range(1, max_k + 1):
                try:
                    d = decompose_pi(field_, n, k, cat)
                except NotCoveredError:
                    continue
                label = f"π_{k}({field_.symbol}^{n})"
                expected = direct_sum(d.sphere_part.group, d.fiber_part.group)
                report.check(str(d.ambient) == str(expected), f"{label}: order of the direct sum")
                if field_ is not Field.H and k >= field_.d + 1:
                    report.check(d.fiber_part.group.is_trivial, f"{label}: fiber part nonzero")
    # π_k(S^{2m}) = π_k(S^{4m-1}) ⊕ π_{k-1}(S^{2m-1}) along the Hopf fibrations
    for base, total, fiber in HOPF_SPLITTINGS:
        for k in range(base + 1, max_k + 1):
            try:
                groups = (pi_sphere(cat, base, k).group, pi_sphere(cat, total, k).group,
                          pi_sphere(cat, fiber, k - 1).group)
            except NotCoveredError:
                continue
            report.check(str(groups[0]) == str(direct_sum(groups[1], groups[2])),
                         f"π_{k}(S^{base}) = {groups[0]} is not π_{k}(S^{total}) + π_{k-1}(S^{fiber})")
    for n in range(2, 10):
        for j in range(0, 11):
            k = 4 * n + 3 + j
            report.run(f"P_{k}(HP^{n}) = P′ + P″",
                       lambda: _splits(p_group(Field.H, n, k, cat), p_prime(Field.H, n, k, cat),
                                       p_double_prime(Field.H, n, k, cat)))
    return report


# ---------------------------------------------------------------------------
# Lie groups
# ---------------------------------------------------------------------------

def lie_cross_checks(cat: Catalog, limit: int = 200) -> SuiteReport:
    report = SuiteReport("Lie cross-checks")
    iota, eta, nu = "iota({s})", "eta({s})", "nu({s})"
    for m in range(2, limit + 1):
        s_c, s_h = 2 * m + 1, 4 * m + 3
        report.run(f"♯Δ_C ι_{s_c} = ♯π_{2 * m}(SU({m}))",
                   lambda: delta_order(Family.C, s_c, parse_expr(iota.format(s=s_c))) == su_group(m, 2 * m).order)
        report.run(f"♯Δ_C η_{s_c} | ♯π_{2 * m + 1}(SU({m}))",
                   lambda: _divides(delta_order(Family.C, s_c, parse_expr(eta.format(s=s_c))),
                                    su_group(m, 2 * m + 1).order))
        report.run(f"♯Δ_C ν_{s_c} | ♯π_{2 * m + 3}(SU({m}))",
                   lambda: _divides(delta_order(Family.C, s_c, parse_expr(nu.format(s=s_c))),
                                    su_group(m, 2 * m + 3).order))
        report.run(f"♯Δ_H ι_{s_h} = ♯π_{4 * m + 2}(Sp({m}))",
                   lambda: delta_order(Family.H, s_h, parse_expr(iota.format(s=s_h))) == sp_group(m, 4 * m + 2).order)
        report.run(f"♯Δ_H ν_{s_h} | ♯π_{4 * m + 5}(Sp({m}))",
                   lambda: _divides(delta_order(Family.H, s_h, parse_expr(nu.format(s=s_h))),
                                    sp_group(m, 4 * m + 5).order))
    # Δ: π_k(S^n) -> π_{k-1}(SO(n)); element orders divide the exponent of the target
    for (space, k, prime), entry in sorted(cat.entries.items(), key=lambda item: (item[0][0], item[0][1], item[0][2] or 0)):
        if space.kind != "so" or prime is not None:
            continue
        n = space.n
        try:
            source = pi_sphere(cat, n, k + 1).group
        except NotCoveredError:
            continue
        target = entry.group
        for generator in source.generators:
            if generator is None:
                continue
            try:
                d = delta_order(Family.R, n, generator)
            except NotCoveredError:
                continue
            label = f"♯Δ({generator}) = {d} in π_{k}(SO({n})) = {target}"
            if d == INFINITY:
                report.check(target.free_rank > 0, label)
            else:
                report.check(d == 1 or bool(target.torsion) and target.torsion[-1] % d == 0, label)
    return report


# ---------------------------------------------------------------------------

def run_selfcheck(cat: Catalog, limit: int = 1000) -> SelfCheckReport:
    """Run every suite; ``limit`` bounds the n-scans of the piecewise and order checks."""
    suites = [
        fga_oracle(),
        catalog_consistency(cat),
        piecewise_exhaustiveness(limit),
        order_division(limit),
        golden_values(cat),
        bound_lattice(cat),
        decomposition_consistency(cat),
        lie_cross_checks(cat),
    ]
    report = SelfCheckReport(suites)
    for s in suites:
        logger.info(f"selfcheck {s.name}: {s.passed} passed, {s.failed} failed")
    return report
