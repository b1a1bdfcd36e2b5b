"""Sparse multivariate polynomials with exact Q(sqrt(d)) coefficients.

Indeterminates are fixed per ring and tagged either FIELD (a field variable
u^i of the operator) or PARAM (a formal parameter such as alpha, f23 or a
pencil weight lambda).  Monomials are exponent tuples; the canonical order
is graded lexicographic with field variables first, parameters after, in
declaration order.  Zero coefficients are never stored.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ParseError, ShapeMismatchError, UnknownIndeterminateError
from .scalars import Scalar, parse_scalar, validate_field_tag

FIELD = "field"
PARAM = "param"


class PolyRing:
    __slots__ = ("names", "kinds", "d", "_index", "_zero_exp")

    def __init__(self, field_vars: Iterable[str], params: Iterable[str] = (), d: int = 0):
        names = tuple(field_vars) + tuple(params)
        kinds = (FIELD,) * len(tuple(field_vars)) + (PARAM,) * len(tuple(params))
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate indeterminate names in {names}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "kinds", kinds)
        object.__setattr__(self, "d", validate_field_tag(d))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})
        object.__setattr__(self, "_zero_exp", (0,) * len(names))

    def __setattr__(self, *_):
        raise AttributeError("PolyRing is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.kinds == other.kinds
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.names, self.kinds, self.d))

    def __repr__(self):
        return f"PolyRing(names={self.names}, d={self.d})"

    @property
    def nvars(self) -> int:
        return len(self.names)

    def field_indices(self) -> tuple:
        return tuple(i for i, k in enumerate(self.kinds) if k == FIELD)

    def param_indices(self) -> tuple:
        return tuple(i for i, k in enumerate(self.kinds) if k == PARAM)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownIndeterminateError(f"{name!r} not in ring {self.names}")

    def var(self, name: str) -> "Poly":
        i = self.index(name)
        exp = list(self._zero_exp)
        exp[i] = 1
        return Poly(self, {tuple(exp): Scalar(1)})

    def const(self, value) -> "Poly":
        s = Scalar.of(value)
        if not s:
            return Poly(self, {})
        return Poly(self, {self._zero_exp: s})

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return self.const(1)

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)

    def extend_params(self, extra: Iterable[str]) -> "PolyRing":
        fields = [n for n, k in zip(self.names, self.kinds) if k == FIELD]
        params = [n for n, k in zip(self.names, self.kinds) if k == PARAM]
        return PolyRing(fields, params + list(extra), d=self.d)


def _grlex_key(exp):
    return (sum(exp), exp)


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, Scalar]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", {e: c for e, c in terms.items() if c})

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # -- coercion ------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ShapeMismatchError("polynomials from different rings")
            return other
        return self.ring.const(other)

    # -- predicates ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Scalar:
        if not self.terms:
            return Scalar(0)
        if not self.is_constant():
            raise ShapeMismatchError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def degree_on(self, indices) -> int:
        if not self.terms:
            return 0
        return max(sum(e[i] for i in indices) for e in self.terms)

    def depends_on(self, index: int) -> bool:
        return any(e[index] for e in self.terms)

    def is_u_free(self) -> bool:
        return not any(
            e[i] for e in self.terms for i in self.ring.field_indices()
        )

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            c = c if s is None else s + c
            if c:
                terms[e] = c
            elif s is not None:
                del terms[e]
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            s = Scalar.of(other)
            if not s:
                return self.ring.zero
            return Poly(self.ring, {e: c * s for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                c = c if s is None else s + c
                if c:
                    out[e] = c
                elif s is not None:
                    del out[e]
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("poly powers must be non-negative integers")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- calculus and substitution --------------------------------------

    def partial(self, var) -> "Poly":
        i = var if isinstance(var, int) else self.ring.index(var)
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            if not k:
                continue
            de = list(e)
            de[i] = k - 1
            de = tuple(de)
            c2 = c * k
            s = out.get(de)
            c2 = c2 if s is None else s + c2
            if c2:
                out[de] = c2
            elif s is not None:
                del out[de]
        return Poly(self.ring, out)

    def subs(self, mapping: Mapping) -> "Poly":
        """Substitute ring elements for indeterminates (same ring)."""
        sub = {}
        for key, val in mapping.items():
            i = key if isinstance(key, int) else self.ring.index(key)
            sub[i] = val if isinstance(val, Poly) else self.ring.const(val)
        out = self.ring.zero
        pow_cache: dict = {}
        for e, c in self.terms.items():
            term = self.ring.const(c)
            for i, k in enumerate(e):
                if not k:
                    continue
                if i in sub:
                    key = (i, k)
                    if key not in pow_cache:
                        pow_cache[key] = sub[i] ** k
                    term = term * pow_cache[key]
                else:
                    mono = [0] * self.ring.nvars
                    mono[i] = k
                    term = term * Poly(self.ring, {tuple(mono): Scalar(1)})
            out = out + term
        return out

    def coefficient_of_var(self, var) -> "Poly":
        """Coefficient of the degree-1 power of `var` (other vars kept)."""
        return self.coefficient_of_power(var, 1)

    def coefficient_of_power(self, var, k: int) -> "Poly":
        i = var if isinstance(var, int) else self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                de = list(e)
                de[i] = 0
                out[tuple(de)] = c
        return Poly(self.ring, out)

    def at_zero(self, indices) -> "Poly":
        """Restriction setting the listed indeterminates to zero."""
        idx = set(indices)
        return Poly(
            self.ring,
            {e: c for e, c in self.terms.items() if not any(e[i] for i in idx)},
        )

    # -- formatting ----------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: _grlex_key(ec[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}"
                for n, k in zip(self.ring.names, e)
                if k
            )
            cs = str(c)
            negative = cs.startswith("-") and ("+" not in cs[1:] and "-" not in cs[1:])
            if mono:
                if c == Scalar(1):
                    body = mono
                elif c == Scalar(-1):
                    body = f"-{mono}"
                elif negative or ("+" not in cs and "-" not in cs[1:]):
                    body = f"{cs}*{mono}"
                else:
                    body = f"({cs})*{mono}"
            else:
                body = cs if (negative or ("+" not in cs and "-" not in cs[1:])) else f"({cs})"
            if pieces and not body.startswith("-"):
                pieces.append("+" + body)
            else:
                pieces.append(body)
        return "".join(pieces)

    def __repr__(self):
        return f"Poly({self})"

    def latex(self) -> str:
        if not self.terms:
            return "0"
        def mono_latex(e):
            parts = []
            for n, k in zip(self.ring.names, e):
                if not k:
                    continue
                name = _latex_name(n)
                parts.append(name if k == 1 else f"{name}^{{{k}}}")
            return " ".join(parts)

        pieces = []
        for e, c in self.sorted_terms():
            mono = mono_latex(e)
            if not mono:
                body = c.latex()
            elif c == Scalar(1):
                body = mono
            elif c == Scalar(-1):
                body = f"-{mono}"
            else:
                cl = c.latex()
                if "+" in cl[1:] or "-" in cl[1:]:
                    cl = f"\\left({cl}\\right)"
                body = f"{cl} {mono}"
            if pieces and not body.startswith("-"):
                pieces.append("+" + body)
            else:
                pieces.append(body)
        return "".join(pieces)


def _latex_name(name: str) -> str:
    if name.startswith("u") and name[1:].isdigit():
        return f"u^{{{name[1:]}}}"
    if name.startswith("f") and name[1:].isdigit():
        return f"f^{{{name[1:]}}}"
    if name in ("alpha", "beta", "gamma", "delta", "lambda"):
        return "\\" + name
    return name


# -- parsing -------------------------------------------------------------


def _split_top_level(s: str, seps: str):
    """Split on separators not nested inside parentheses, keeping signs."""
    chunks = []
    depth = 0
    start = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in seps and i > start:
            chunks.append(s[start:i])
            start = i + (0 if ch in "+-" else 1)
            if ch in "+-":
                start = i
    chunks.append(s[start:])
    return chunks


def parse_poly(ring: PolyRing, text: str) -> Poly:
    """Parse a signed sum of terms "coef*var1^e1*var2^e2".

    Bare variable names, parenthesised scalar coefficients and sqrt(d)
    factors are accepted; whitespace is ignored.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial literal")
    total = ring.zero
    # carve into signed terms at top-level +/- (not following * or ( or ^ ...)
    terms = []
    depth = 0
    start = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start and s[i - 1] not in "*/^(+-":
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    for term in terms:
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if not term:
            raise ParseError(f"dangling sign in {text!r}")
        value = ring.const(sign)
        for factor in _split_top_level(term, "*"):
            if not factor:
                raise ParseError(f"empty factor in {term!r}")
            value = value * _parse_factor(ring, factor, text)
        total = total + value
    return total


def _parse_factor(ring: PolyRing, factor: str, context: str) -> Poly:
    if factor.startswith("(") and factor.endswith(")"):
        return ring.const(parse_scalar(factor[1:-1]))
    if factor.startswith("sqrt(") and factor.endswith(")"):
        return ring.const(parse_scalar(factor))
    name, caret, exp = factor.partition("^")
    if caret:
        if not exp.isdigit():
            raise ParseError(f"bad exponent in {factor!r} ({context!r})")
        power = int(exp)
    else:
        power = 1
    if re.fullmatch(r"-?\d+(/\d+)?", name):
        return ring.const(Fraction(name)) ** power
    if name in ring._index:
        return ring.var(name) ** power
    raise UnknownIndeterminateError(f"{name!r} not in ring {ring.names} ({context!r})")
