"""Exact coefficient fields, sparse multivariate polynomials, and monomial orders.

Polynomials are plain dicts mapping dense exponent tuples to nonzero field
elements (Fraction for the rationals, int in [1, p) for a prime field).  The
zero polynomial is the empty dict.  All arithmetic goes through a
FieldDescriptor so there is no floating point anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import GradingError, HomogeneityError, InputError

Mono = tuple[int, ...]
Multidegree = tuple[int, ...]
PolyDict = dict  # Mono -> coefficient

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class FieldDescriptor:
    """An exact coefficient field: the rationals or a prime field GF(p)."""

    kind: str  # "rational" | "prime"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("rational", "prime"):
            raise InputError(f"unknown field kind {self.kind!r}")
        if self.kind == "prime":
            if self.p is None or self.p < 2 or not _is_prime(self.p):
                raise InputError(f"characteristic must be prime, got {self.p}")
        elif self.p is not None:
            raise InputError("rational field takes no characteristic")

    # -- arithmetic ---------------------------------------------------------
    def of(self, x) -> object:
        """Map an int or Fraction into the field."""
        if self.kind == "prime":
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise InputError(
                        f"denominator of {x} is divisible by the characteristic {self.p}"
                    )
                return self.mul(x.numerator % self.p, self.inv(x.denominator % self.p))
            return x % self.p
        return Fraction(x)

    @property
    def zero(self):
        return 0 if self.kind == "prime" else Fraction(0)

    @property
    def one(self):
        return 1 if self.kind == "prime" else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "prime" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "prime" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "prime" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "prime" else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        return pow(a, -1, self.p) if self.kind == "prime" else 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def descriptor_json(self) -> object:
        return "q" if self.kind == "rational" else f"p:{self.p}"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


QQ = FieldDescriptor("rational")
DEFAULT_FIELD = FieldDescriptor("prime", 32003)


# -- monomials ---------------------------------------------------------------

def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    """Exponent vector of x^a / x^b (caller guarantees divisibility)."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Mono, b: Mono) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# -- term orders -------------------------------------------------------------

@dataclass(frozen=True)
class TermOrder:
    """Weight order (weights >= 1) refined by graded reverse-lexicographic.

    Comparison key: weighted degree, then total degree, then revlex (the
    monomial whose last differing exponent is smaller is the larger one).
    This is a multiplicative well-order because every weight is positive.
    """

    weights: tuple[int, ...]

    def __post_init__(self):
        if any(w < 1 for w in self.weights):
            raise InputError(f"order weights must be >= 1, got {self.weights}")

    def wdeg(self, e: Mono) -> int:
        return sum(w * x for w, x in zip(self.weights, e))

    def key(self, e: Mono):
        return (self.wdeg(e), sum(e), tuple(-x for x in reversed(e)))

    # degree used for S-pair scheduling; equals wdeg for plain orders
    selection_degree = wdeg


@dataclass(frozen=True)
class EliminationOrder:
    """Block order eliminating the last variable, refined by an inner order.

    Used for ideal intersections: the auxiliary variable dominates, so the
    intersection is read off the basis elements free of it.
    """

    inner: TermOrder

    def wdeg(self, e: Mono) -> int:
        return self.inner.wdeg(e[:-1])

    def key(self, e: Mono):
        return (e[-1], self.inner.key(e[:-1]))

    selection_degree = wdeg


def compare_monomials(order, m1: Mono, m2: Mono) -> int:
    """Return LT, EQ or GT comparing m1 against m2 under the order."""
    if len(m1) != len(m2):
        raise InputError("cannot compare exponent vectors of different length")
    k1, k2 = order.key(m1), order.key(m2)
    if k1 < k2:
        return LT
    if k1 > k2:
        return GT
    return EQ


# -- polynomial dict arithmetic ----------------------------------------------

def padd(f: PolyDict, g: PolyDict, K: FieldDescriptor) -> PolyDict:
    out = dict(f)
    for m, c in g.items():
        s = K.add(out.get(m, K.zero), c)
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def pneg(f: PolyDict, K: FieldDescriptor) -> PolyDict:
    return {m: K.neg(c) for m, c in f.items()}


def psub(f: PolyDict, g: PolyDict, K: FieldDescriptor) -> PolyDict:
    return padd(f, pneg(g, K), K)


def pscale(f: PolyDict, c, K: FieldDescriptor) -> PolyDict:
    if not c:
        return {}
    return {m: K.mul(v, c) for m, v in f.items()}


def term_mul(f: PolyDict, mono: Mono, c, K: FieldDescriptor) -> PolyDict:
    """Multiply f by the single term c*x^mono."""
    if not c:
        return {}
    return {mono_mul(m, mono): K.mul(v, c) for m, v in f.items()}


def pmul(f: PolyDict, g: PolyDict, K: FieldDescriptor) -> PolyDict:
    out: PolyDict = {}
    for m, c in f.items():
        for m2, c2 in g.items():
            mm = mono_mul(m, m2)
            s = K.add(out.get(mm, K.zero), K.mul(c, c2))
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
    return out


def pconst(c, n: int, K: FieldDescriptor) -> PolyDict:
    """The constant polynomial c in n variables."""
    c = K.of(c)
    return {(0,) * n: c} if c else {}


def is_constant(f: PolyDict) -> bool:
    """True iff f is a nonzero constant."""
    return len(f) == 1 and not any(next(iter(f)))


# -- the ring ----------------------------------------------------------------

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^]))"
)


@dataclass(frozen=True)
class MultigradedRing:
    """A polynomial ring graded by Z^r through per-variable multidegrees.

    `degrees[i]` is the multidegree of `variables[i]`; all rows must share
    the length r.  The ring object is immutable and hashable, so analyses
    keyed on it can be cached safely.
    """

    variables: tuple[str, ...]
    degrees: tuple[Multidegree, ...]
    field: FieldDescriptor = DEFAULT_FIELD

    def __post_init__(self):
        if not self.variables:
            raise InputError("ring needs at least one variable")
        if len(self.degrees) != len(self.variables):
            raise InputError("one multidegree per variable required")
        r = len(self.degrees[0]) if self.degrees else 0
        if r < 1 or any(len(d) != r for d in self.degrees):
            raise InputError("ragged degree matrix")
        if len(set(self.variables)) != len(self.variables):
            raise InputError("duplicate variable names")
        for v in self.variables:
            if not _NAME_RE.fullmatch(v):
                raise InputError(f"bad variable name {v!r}")

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def r(self) -> int:
        return len(self.degrees[0])

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None

    def mono_degree(self, e: Mono) -> Multidegree:
        return tuple(
            sum(self.degrees[i][k] * e[i] for i in range(self.n))
            for k in range(self.r)
        )

    def vdegs(self, v: Multidegree) -> tuple[int, ...]:
        """Coarse degree of every variable under the coarsening vector v."""
        if len(v) != self.r:
            raise InputError("coarsening vector has wrong length")
        return tuple(sum(a * b for a, b in zip(d, v)) for d in self.degrees)

    def order(self, v: Multidegree) -> TermOrder:
        w = self.vdegs(v)
        if any(x < 1 for x in w):
            raise GradingError(f"vector {v} is not a positive coarsening (vdegs {w})")
        return TermOrder(w)

    # -- text syntax ---------------------------------------------------------
    def parse(self, text: str) -> PolyDict:
        """Parse `2*x0^2*y1 - y0*y1` style polynomial text."""
        K = self.field
        pos, out = 0, {}
        sign = 1
        term_coeff, term_mono, in_term = None, None, False

        def flush():
            nonlocal term_coeff, term_mono, in_term, sign
            if not in_term:
                return
            c = K.of(sign) if term_coeff is None else K.of(sign * term_coeff)
            m = term_mono or (0,) * self.n
            cur = K.add(out.get(m, K.zero), c)
            if cur:
                out[m] = cur
            else:
                out.pop(m, None)
            term_coeff, term_mono, in_term, sign = None, None, False, 1

        tokens = []
        while pos < len(text):
            mo = _TOKEN_RE.match(text, pos)
            if not mo:
                if text[pos:].strip():
                    raise InputError(f"cannot parse polynomial near {text[pos:]!r}")
                break
            tokens.append(mo)
            pos = mo.end()

        i = 0
        while i < len(tokens):
            tok = tokens[i]
            if tok.group("op") in ("+", "-"):
                flush()
                if tok.group("op") == "-":
                    sign = -sign
                i += 1
                continue
            if tok.group("op") == "*":
                if not in_term:
                    raise InputError("misplaced '*'")
                i += 1
                continue
            if tok.group("op") == "^":
                raise InputError("misplaced '^'")
            if tok.group("num"):
                val = tok.group("num")
                q = Fraction(val) if "/" in val else int(val)
                term_coeff = q if term_coeff is None else term_coeff * q
                in_term = True
                i += 1
                continue
            name = tok.group("name")
            j = self.var_index(name)
            exp = 1
            if i + 2 < len(tokens) and tokens[i + 1].group("op") == "^":
                nxt = tokens[i + 2].group("num")
                if nxt is None or "/" in nxt:
                    raise InputError("exponent must be a nonnegative integer")
                exp = int(nxt)
                i += 2
            e = list(term_mono or (0,) * self.n)
            e[j] += exp
            term_mono = tuple(e)
            in_term = True
            i += 1
        flush()
        return out

    def poly_str(self, f: PolyDict) -> str:
        """Canonical display form: terms in descending degree-revlex order."""
        if not f:
            return "0"
        parts = []
        for m in sorted(f, key=lambda e: (sum(e), tuple(-x for x in reversed(e))), reverse=True):
            c = f[m]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.variables, m)
                if k
            )
            if not mono:
                body = str(abs(c)) if self.field.kind == "rational" else str(c)
            elif self.field.kind == "rational":
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            else:
                body = mono if c == 1 else f"{c}*{mono}"
            neg = self.field.kind == "rational" and c < 0
            parts.append(("- " if neg else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def multidegree_of(self, f: PolyDict) -> Multidegree:
        """Common multidegree of all terms of a nonzero homogeneous f."""
        if not f:
            raise HomogeneityError("the zero polynomial has no well-defined degree")
        degs = {self.mono_degree(m) for m in f}
        if len(degs) > 1:
            raise HomogeneityError(f"polynomial is not homogeneous: degrees {sorted(degs)}")
        return next(iter(degs))

    def is_homogeneous(self, f: PolyDict) -> bool:
        return len({self.mono_degree(m) for m in f}) <= 1

    def homogeneous_components(self, f: PolyDict) -> list[PolyDict]:
        """Split f into its multihomogeneous components (sorted by degree)."""
        comps: dict[Multidegree, PolyDict] = {}
        for m, c in f.items():
            comps.setdefault(self.mono_degree(m), {})[m] = c
        return [comps[d] for d in sorted(comps)]


def GradingErrorFor(v, w):
    from .errors import GradingError

    return GradingError(f"vector {v} is not a positive coarsening (vdegs {w})")


@lru_cache(maxsize=None)
def monomials_of_weight(weights: tuple[int, ...], target: int) -> tuple[Mono, ...]:
    """All exponent tuples e with sum(e_i * weights_i) == target (weights >= 1)."""
    if target < 0:
        return ()
    if not weights:
        return ((),) if target == 0 else ()
    head, rest = weights[0], weights[1:]
    out = []
    k = 0
    while k * head <= target:
        for tail in monomials_of_weight(rest, target - k * head):
            out.append((k,) + tail)
        k += 1
    return tuple(out)
