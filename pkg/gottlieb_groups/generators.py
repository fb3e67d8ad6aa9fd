"""
Generator expressions: named elements of homotopy groups of spheres and the
operations that build new elements from them.

Expressions are written in a small prefix grammar, used both in the catalog
file and in the rule tables:

    atom        name(dim) | name(dim@p)        e.g. nu(4), alpha1(3@5)
    E(x)        suspension
    cmp(a,b,..) composite a∘b∘..
    wh(a,b)     Whitehead product
    mul(m,x)    integer multiple
    sum(a,b,..) sum of elements in the same group
    gam(x)      push along the quotient map γ_n
    inc(x)      push along the bottom-cell inclusion i_F
    pr(x)       push along the top-cell collapse q_n
    H(x)        0-th Hopf-Hilton invariant
    alias("label", x)  x, printed as label

Inside stable-stem templates a dimension may be written ``n`` or ``n+3``;
``instantiate`` substitutes the sphere dimension before parsing.
"""

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from gottlieb_groups.errors import GottliebError
from gottlieb_groups.logging import setup_logger

logger = setup_logger(__name__)


class ExpressionSyntaxError(GottliebError, ValueError):
    """Raised when a generator expression cannot be parsed."""
    def __init__(self, text: str, message: str):
        self.text = text
        super().__init__(f"Cannot parse generator expression '{text}': {message}")


class DimensionMismatchError(GottliebError, ValueError):
    """Raised when the dimensions inside an expression do not fit together."""
    def __init__(self, expr: "GeneratorExpr", message: str):
        self.expr = expr
        super().__init__(f"Inconsistent dimensions in {expr}: {message}")


# Stem (degree shift) of each named sphere element. The alpha family is handled
# separately since its stem depends on the prime.
STEMS: Dict[str, int] = {
    "iota": 0,
    "eta": 1,
    "nu": 3, "nu'": 3, "omega": 3,
    "sigma": 7, "sigma'": 7, "sigma''": 7, "sigma'''": 7,
    "eps": 8, "nubar": 8,
    "mu": 9,
    "eps'": 10, "beta1": 10,
    "mu'": 11, "zeta": 11,
    "kappa": 14,
    "epsbar": 15, "rho": 15, "rho''": 15,
    "epsbar'": 17, "mubar": 17,
    "mubar'": 19, "xi": 18,
    "sigmabar": 19, "zetabar": 19,
    "kappabar": 20,
}

ALPHA_PATTERN = re.compile(r"^alpha(\d+)('?)$")
DEFAULT_ALPHA_PRIME = 3

OPERATORS = {"E", "cmp", "wh", "mul", "sum", "gam", "inc", "pr", "H", "alias"}
PUSH_KINDS = ("gam", "inc", "pr")


def atom_stem(name: str, prime: Optional[int] = None) -> int:
    """Degree shift of a named element, e.g. 3 for ν and 2i(p-1)-1 for α_i."""
    if name in STEMS:
        return STEMS[name]
    match = ALPHA_PATTERN.match(name)
    if match:
        i = int(match.group(1))
        p = prime or DEFAULT_ALPHA_PRIME
        return 2 * i * (p - 1) - 1
    raise KeyError(name)


def is_known_atom(name: str) -> bool:
    return name in STEMS or ALPHA_PATTERN.match(name) is not None


@dataclass(frozen=True)
class Atom:
    name: str
    dim: int
    prime: Optional[int] = None

    def __str__(self) -> str:
        if self.prime is not None:
            return f"{self.name}({self.dim}@{self.prime})"
        return f"{self.name}({self.dim})"


@dataclass(frozen=True)
class Suspension:
    child: "GeneratorExpr"

    def __str__(self) -> str:
        return f"E({self.child})"


@dataclass(frozen=True)
class Compose:
    parts: Tuple["GeneratorExpr", ...]

    def __str__(self) -> str:
        return "cmp(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Whitehead:
    left: "GeneratorExpr"
    right: "GeneratorExpr"

    def __str__(self) -> str:
        return f"wh({self.left},{self.right})"


@dataclass(frozen=True)
class Scalar:
    factor: int
    child: "GeneratorExpr"

    def __str__(self) -> str:
        return f"mul({self.factor},{self.child})"


@dataclass(frozen=True)
class Sum:
    terms: Tuple["GeneratorExpr", ...]

    def __str__(self) -> str:
        return "sum(" + ",".join(str(t) for t in self.terms) + ")"


@dataclass(frozen=True)
class Push:
    kind: str
    child: "GeneratorExpr"

    def __str__(self) -> str:
        return f"{self.kind}({self.child})"


@dataclass(frozen=True)
class HopfInvariant:
    child: "GeneratorExpr"

    def __str__(self) -> str:
        return f"H({self.child})"


@dataclass(frozen=True)
class Alias:
    label: str
    child: "GeneratorExpr"

    def __str__(self) -> str:
        return f'alias("{self.label}",{self.child})'


GeneratorExpr = Union[Atom, Suspension, Compose, Whitehead, Scalar, Sum, Push, HopfInvariant, Alias]


def compose(*parts: GeneratorExpr) -> GeneratorExpr:
    """Build a composite, flattening nested composites."""
    flat: List[GeneratorExpr] = []
    for part in parts:
        if isinstance(part, Compose):
            flat.extend(part.parts)
        else:
            flat.append(part)
    if len(flat) == 1:
        return flat[0]
    return Compose(tuple(flat))


def scalar(factor: int, child: GeneratorExpr) -> GeneratorExpr:
    if factor == 1:
        return child
    return Scalar(factor, child)


def push(kind: str, child: GeneratorExpr) -> GeneratorExpr:
    if kind not in PUSH_KINDS:
        raise ValueError(f"Unknown push kind: {kind}")
    return Push(kind, child)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

TOKEN_PATTERN = re.compile(
    r"""\s*(?:
        (?P<string>"[^"]*")
      | (?P<int>-?\d+)
      | (?P<name>[A-Za-z][A-Za-z0-9]*'*)
      | (?P<punct>[(),@])
    )""",
    re.VERBOSE,
)
TEMPLATE_DIM = re.compile(r"\(n(?:\+(\d+))?(?=[)@])")


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = TOKEN_PATTERN.match(stripped, position)
        if not match or match.end() == position:
            raise ExpressionSyntaxError(text, f"unexpected character at offset {position}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.position = 0

    def peek(self) -> Optional[Tuple[str, str]]:
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def take(self, kind: str, value: Optional[str] = None) -> str:
        token = self.peek()
        if token is None or token[0] != kind or (value is not None and token[1] != value):
            expected = value or kind
            raise ExpressionSyntaxError(self.text, f"expected {expected}, found {token[1] if token else 'end of input'}")
        self.position += 1
        return token[1]

    def parse(self) -> GeneratorExpr:
        expr = self.expression()
        if self.peek() is not None:
            raise ExpressionSyntaxError(self.text, f"trailing input '{self.peek()[1]}'")
        return expr

    def expression(self) -> GeneratorExpr:
        name = self.take("name")
        self.take("punct", "(")
        if name in OPERATORS:
            expr = self.operator(name)
        else:
            expr = self.atom(name)
        self.take("punct", ")")
        return expr

    def arguments(self) -> List[GeneratorExpr]:
        args = [self.expression()]
        while self.peek() == ("punct", ","):
            self.take("punct", ",")
            args.append(self.expression())
        return args

    def operator(self, name: str) -> GeneratorExpr:
        if name == "mul":
            factor = int(self.take("int"))
            self.take("punct", ",")
            return Scalar(factor, self.expression())
        if name == "alias":
            label = self.take("string")[1:-1]
            self.take("punct", ",")
            return Alias(label, self.expression())
        args = self.arguments()
        if name == "cmp":
            if len(args) < 2:
                raise ExpressionSyntaxError(self.text, "cmp needs at least two operands")
            return compose(*args)
        if name == "sum":
            return Sum(tuple(args))
        if name == "wh":
            if len(args) != 2:
                raise ExpressionSyntaxError(self.text, "wh takes exactly two operands")
            return Whitehead(args[0], args[1])
        if len(args) != 1:
            raise ExpressionSyntaxError(self.text, f"{name} takes one operand")
        if name == "E":
            return Suspension(args[0])
        if name == "H":
            return HopfInvariant(args[0])
        return Push(name, args[0])

    def atom(self, name: str) -> GeneratorExpr:
        if not is_known_atom(name):
            raise ExpressionSyntaxError(self.text, f"unknown element '{name}'")
        dim = int(self.take("int"))
        prime = None
        if self.peek() == ("punct", "@"):
            self.take("punct", "@")
            prime = int(self.take("int"))
        return Atom(name, dim, prime)


def parse_expr(text: str) -> GeneratorExpr:
    """Parse a prefix-notation generator expression."""
    return _Parser(text.strip()).parse()


def instantiate(template: str, n: int) -> str:
    """Replace the template dimensions ``n`` / ``n+j`` by concrete values."""
    return TEMPLATE_DIM.sub(lambda m: f"({n + int(m.group(1) or 0)}", template)


# ---------------------------------------------------------------------------
# Dimensions
# ---------------------------------------------------------------------------

def degrees(expr: GeneratorExpr) -> Tuple[int, Optional[int]]:
    """Return ``(k, n)`` such that expr lies in π_k(S^n).

    ``n`` is None once the element has been pushed into a projective space.
    """
    if isinstance(expr, Atom):
        return expr.dim + atom_stem(expr.name, expr.prime), expr.dim
    if isinstance(expr, Suspension):
        source, target = degrees(expr.child)
        if target is None:
            raise DimensionMismatchError(expr, "suspension of an element that is not in a sphere")
        return source + 1, target + 1
    if isinstance(expr, Compose):
        source, target = degrees(expr.parts[-1])
        for left in reversed(expr.parts[:-1]):
            left_source, left_target = degrees(left)
            if target != left_source:
                raise DimensionMismatchError(expr, f"{left} starts at S^{left_source}, not S^{target}")
            target = left_target
        return source, target
    if isinstance(expr, Whitehead):
        left_source, left_target = degrees(expr.left)
        right_source, right_target = degrees(expr.right)
        if left_target != right_target:
            raise DimensionMismatchError(expr, "Whitehead product of elements in different groups")
        return left_source + right_source - 1, left_target
    if isinstance(expr, (Scalar, Alias)):
        return degrees(expr.child)
    if isinstance(expr, Sum):
        found = {degrees(term) for term in expr.terms}
        if len(found) != 1:
            raise DimensionMismatchError(expr, "summands live in different groups")
        return found.pop()
    if isinstance(expr, Push):
        source, _ = degrees(expr.child)
        return source, None
    if isinstance(expr, HopfInvariant):
        source, target = degrees(expr.child)
        if target is None:
            raise DimensionMismatchError(expr, "Hopf invariant of an element that is not in a sphere")
        return source, 2 * target - 1
    raise TypeError(f"Not a generator expression: {expr!r}")


def check_dimensions(expr: GeneratorExpr, k: int, n: Optional[int]) -> None:
    source, target = degrees(expr)
    if source != k or (n is not None and target != n):
        raise DimensionMismatchError(expr, f"lies in π_{source}(S^{target}), expected π_{k}(S^{n})")


# ---------------------------------------------------------------------------
# Linear structure
# ---------------------------------------------------------------------------

def expand(expr: GeneratorExpr) -> Dict[str, int]:
    """Write expr as an integer combination of atomic terms.

    Multiples, sums and aliases are moved outward through pushes, suspensions
    and the left factor of a composite. Keys are the canonical strings of the
    atomic terms.
    """
    if isinstance(expr, Alias):
        return expand(expr.child)
    if isinstance(expr, Scalar):
        return {key: expr.factor * coef for key, coef in expand(expr.child).items()}
    if isinstance(expr, Sum):
        total: Dict[str, int] = {}
        for term in expr.terms:
            for key, coef in expand(term).items():
                total[key] = total.get(key, 0) + coef
        return {key: coef for key, coef in total.items() if coef}
    if isinstance(expr, (Suspension, Push)):
        wrap = (lambda t: Suspension(t)) if isinstance(expr, Suspension) else (lambda t: Push(expr.kind, t))
        return _rewrap(expr.child, wrap)
    if isinstance(expr, Compose):
        rest = expr.parts[1:]
        return _rewrap(expr.parts[0], lambda t: compose(t, *rest))
    return {str(expr): 1}


def _rewrap(child: GeneratorExpr, wrap) -> Dict[str, int]:
    if not _is_linear(child):
        return {str(wrap(child)): 1}
    result: Dict[str, int] = {}
    for key, coef in expand(child).items():
        wrapped = str(wrap(parse_expr(key)))
        result[wrapped] = result.get(wrapped, 0) + coef
    return result


def _is_linear(expr: GeneratorExpr) -> bool:
    if isinstance(expr, (Alias, Scalar, Sum)):
        return True
    if isinstance(expr, (Suspension, Push)):
        return _is_linear(expr.child)
    if isinstance(expr, Compose):
        return _is_linear(expr.parts[0])
    return False


def combination(pairs: List[Tuple[int, GeneratorExpr]]) -> Optional[GeneratorExpr]:
    """Build the expression Σ c·g from (coefficient, generator) pairs."""
    terms = [scalar(c, g) for c, g in pairs if c]
    if not terms:
        return None
    if len(terms) == 1:
        return terms[0]
    return Sum(tuple(terms))


# ---------------------------------------------------------------------------
# Display
# ---------------------------------------------------------------------------

GREEK = {
    "iota": "ι", "eta": "η", "nu": "ν", "sigma": "σ", "eps": "ε", "mu": "μ",
    "kappa": "κ", "zeta": "ζ", "rho": "ρ", "xi": "ξ", "omega": "ω",
    "nubar": "ν̄", "epsbar": "ε̄", "mubar": "μ̄", "sigmabar": "σ̄", "zetabar": "ζ̄", "kappabar": "κ̄",
    "beta1": "β_1",
}


def _pretty_name(atom: Atom) -> str:
    base = atom.name.rstrip("'")
    primes = "′" * (len(atom.name) - len(base))
    match = ALPHA_PATTERN.match(atom.name)
    if match:
        index = match.group(1)
        sub = f"{index},{atom.prime}" if atom.prime and atom.prime != DEFAULT_ALPHA_PRIME else index
        return f"α{primes}_{sub}({atom.dim})"
    if base == "beta1":
        return f"β_1({atom.dim})"
    symbol = GREEK.get(base, base)
    if primes:
        # ν′, σ′, ε′ ... live on one fixed sphere
        return f"{symbol}{primes}"
    return f"{symbol}_{atom.dim}"


def pretty(expr: GeneratorExpr) -> str:
    """Human-readable rendering using the usual Greek names."""
    if isinstance(expr, Atom):
        return _pretty_name(expr)
    if isinstance(expr, Suspension):
        inner = pretty(expr.child)
        return f"E{inner}" if isinstance(expr.child, (Atom, Suspension)) else f"E({inner})"
    if isinstance(expr, Compose):
        return "".join(_wrapped(p) for p in expr.parts)
    if isinstance(expr, Whitehead):
        return f"[{pretty(expr.left)},{pretty(expr.right)}]"
    if isinstance(expr, Scalar):
        return f"{expr.factor}{_wrapped(expr.child)}"
    if isinstance(expr, Sum):
        text = pretty(expr.terms[0])
        for term in expr.terms[1:]:
            rendered = pretty(term)
            text += rendered if rendered.startswith("-") else f"+{rendered}"
        return text
    if isinstance(expr, Push):
        symbol = {"gam": "γ", "inc": "i", "pr": "q"}[expr.kind]
        return f"{symbol}{_wrapped(expr.child)}"
    if isinstance(expr, HopfInvariant):
        return f"h0({pretty(expr.child)})"
    if isinstance(expr, Alias):
        return expr.label
    raise TypeError(f"Not a generator expression: {expr!r}")


def _wrapped(expr: GeneratorExpr) -> str:
    text = pretty(expr)
    if isinstance(expr, (Sum, Scalar)):
        return f"({text})"
    return text
