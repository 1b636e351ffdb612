"""Multilinear noncommutative polynomials in x1..xm.

A multilinear polynomial is a sum over permutations s of {1..m} of terms
a_s * x_{s(1)} * ... * x_{s(m)}, so the representation indexes sparse
coefficients by permutation image tuples.  Non-multilinear input is
impossible to represent and is rejected by the parser.

Text grammar (whitespace-insensitive except as a monomial separator):

    poly     := term (("+" | "-") term)* | "0"
    term     := [coeff ["*"]] monomial
    coeff    := integer | integer "/" posinteger
    monomial := var (("*" | ws) var)*
    var      := "x" posinteger

A leading "-" on the first term is permitted.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator, Optional

from .errors import (
    BadFamilyParams,
    DivisionByZero,
    FieldMismatch,
    NotMultilinear,
    ParseError,
    VariableGap,
)
from .scalars import FieldSpec, Scalar

__all__ = [
    "MultilinearPoly",
    "Permutation",
    "parse_poly",
    "perm_sign",
    "builtin",
    "BUILTIN_FAMILIES",
    "commutator",
    "standard_polynomial",
    "jordan_central",
    "single_variable",
    "zero_poly",
    "random_poly",
]

Permutation = tuple  # of int, the image sequence (s(1), ..., s(m))


def perm_sign(perm: Permutation) -> int:
    """Sign of a permutation given as its image tuple."""
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


class MultilinearPoly:
    """Sparse permutation-indexed multilinear polynomial over a fixed field.

    ``terms`` maps image tuples to nonzero coefficients; an absent key is a
    zero coefficient.  Instances are immutable after construction.
    """

    __slots__ = ("arity", "field", "terms")

    def __init__(self, arity: int, field: FieldSpec, terms: dict):
        if arity < 1:
            raise ValueError(f"arity must be positive, got {arity}")
        expected = set(range(1, arity + 1))
        clean = {}
        for perm, coeff in terms.items():
            perm = tuple(perm)
            if set(perm) != expected or len(perm) != arity:
                raise ValueError(f"{perm} is not a permutation of 1..{arity}")
            if not isinstance(coeff, Scalar):
                coeff = field.from_int(coeff)
            if coeff.field != field:
                raise FieldMismatch(f"coefficient over {coeff.field}, poly over {field}")
            if coeff:
                clean[perm] = coeff
        self.arity = arity
        self.field = field
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, perm: Permutation) -> Scalar:
        return self.terms.get(tuple(perm), self.field.zero)

    def sorted_terms(self) -> Iterator[tuple]:
        """(permutation, coefficient) pairs in lexicographic permutation order."""
        for perm in sorted(self.terms):
            yield perm, self.terms[perm]

    def __eq__(self, other):
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.field == other.field
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for perm, coeff in self.sorted_terms():
            mono = "*".join(f"x{k}" for k in perm)
            text, negative = _coeff_text(coeff)
            body = mono if text is None else f"{text}*{mono}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"{'-' if negative else '+'} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"MultilinearPoly({self.arity}, {self.field}, {str(self)!r})"


def _coeff_text(coeff: Scalar) -> tuple:
    """(magnitude text or None when it is 1, is_negative) for formatting."""
    v = coeff.value
    if coeff.field.characteristic() == 0:
        negative = v < 0
        mag = -v if negative else v
        return (None if mag == 1 else str(mag)), negative
    return (None if v == 1 else str(v)), False


# -- parser ----------------------------------------------------------------

_TOKEN_KINDS = ("INT", "VAR", "PLUS", "MINUS", "STAR", "SLASH", "END")


class _Token:
    __slots__ = ("kind", "value", "pos", "text")

    def __init__(self, kind, value, pos, text):
        self.kind = kind
        self.value = value
        self.pos = pos
        self.text = text


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "+":
            tokens.append(_Token("PLUS", None, i, c))
            i += 1
        elif c == "-":
            tokens.append(_Token("MINUS", None, i, c))
            i += 1
        elif c == "*":
            tokens.append(_Token("STAR", None, i, c))
            i += 1
        elif c == "/":
            tokens.append(_Token("SLASH", None, i, c))
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", int(text[i:j]), i, text[i:j]))
            i = j
        elif c == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("variable needs an index, like x1", i)
            idx = int(text[i + 1:j])
            if idx < 1:
                raise ParseError(f"variable index must be >= 1, got x{idx}", i)
            tokens.append(_Token("VAR", idx, i, text[i:j]))
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(_Token("END", None, n, ""))
    return tokens


class _Parser:
    def __init__(self, text: str, field: FieldSpec):
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def take(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def parse(self) -> MultilinearPoly:
        # whole-polynomial "0" is the only bare-integer form
        if (
            self.peek().kind == "INT"
            and self.peek().value == 0
            and self.tokens[self.k + 1].kind == "END"
        ):
            return MultilinearPoly(1, self.field, {})
        monomials = []  # (index list, Scalar coefficient)
        sign = 1
        if self.peek().kind == "MINUS":
            self.take()
            sign = -1
        elif self.peek().kind == "PLUS":
            self.take()
        monomials.append(self.parse_term(sign))
        while self.peek().kind in ("PLUS", "MINUS"):
            sign = 1 if self.take().kind == "PLUS" else -1
            monomials.append(self.parse_term(sign))
        if self.peek().kind != "END":
            raise ParseError(f"unexpected {self.peek().text!r}", self.peek().pos)
        return self.build(monomials)

    def parse_term(self, sign: int) -> tuple:
        coeff = self.field.one
        if self.peek().kind == "INT":
            num = self.take().value
            den = 1
            if self.peek().kind == "SLASH":
                self.take()
                tok = self.take()
                if tok.kind != "INT":
                    raise ParseError("expected denominator after /", tok.pos)
                den = tok.value
            coeff = self._coefficient(num, den)
            if self.peek().kind == "STAR":
                self.take()
        if sign < 0:
            coeff = -coeff
        tok = self.peek()
        if tok.kind != "VAR":
            raise ParseError("expected a variable like x1", tok.pos)
        indices = []
        while True:
            tok = self.peek()
            if tok.kind == "VAR":
                indices.append(self.take().value)
            elif tok.kind == "STAR":
                self.take()
                tok = self.peek()
                if tok.kind != "VAR":
                    raise ParseError("expected a variable after *", tok.pos)
            else:
                break
        return indices, coeff

    def _coefficient(self, num: int, den: int) -> Scalar:
        if den == 0 and self.field.characteristic() == 0:
            raise DivisionByZero(f"zero denominator in coefficient {num}/{den}")
        return self.field.from_int(num) / self.field.from_int(den)

    def build(self, monomials: list) -> MultilinearPoly:
        seen = set()
        for indices, _ in monomials:
            dupes = {k for k in indices if indices.count(k) > 1}
            if dupes:
                mono = "*".join(f"x{k}" for k in indices)
                raise NotMultilinear(
                    f"monomial {mono} repeats x{min(dupes)}", mono
                )
            seen.update(indices)
        m = max(seen)
        missing = set(range(1, m + 1)) - seen
        if missing:
            raise VariableGap(
                f"variables x1..x{m} must all occur; missing x{min(missing)}"
            )
        terms: dict = {}
        for indices, coeff in monomials:
            if len(indices) != m:
                mono = "*".join(f"x{k}" for k in indices)
                absent = min(set(range(1, m + 1)) - set(indices))
                raise NotMultilinear(
                    f"monomial {mono} does not use x{absent}", mono
                )
            key = tuple(indices)
            prior = terms.get(key)
            terms[key] = coeff if prior is None else prior + coeff
        return MultilinearPoly(m, self.field, terms)


def parse_poly(text: str, field: FieldSpec) -> MultilinearPoly:
    """Parse the grammar at the top of this module.

    The arity is the number of distinct variables, which must be exactly
    x1..xm; every monomial must use each of them exactly once.  Like terms
    are combined and cancellations dropped, so "x1*x2 - x1*x2" is the zero
    polynomial of arity 2.  The bare input "0" denotes the zero polynomial
    of arity 1.
    """
    return _Parser(text, field).parse()


# -- builtin families --------------------------------------------------------

BUILTIN_FAMILIES = ("commutator", "standard:<m>", "jordan-central", "single", "zero:<m>")


def commutator(field: FieldSpec) -> MultilinearPoly:
    """x1*x2 - x2*x1."""
    return MultilinearPoly(2, field, {(1, 2): field.one, (2, 1): -field.one})


def standard_polynomial(m: int, field: FieldSpec) -> MultilinearPoly:
    """Alternating sum of all m! monomials: sum_s sign(s) x_{s(1)}..x_{s(m)}."""
    if m < 1:
        raise BadFamilyParams(f"standard polynomial needs m >= 1, got {m}")
    one = field.one
    return MultilinearPoly(
        m,
        field,
        {perm: perm_sign(perm) * one for perm in permutations(range(1, m + 1))},
    )


def jordan_central(field: FieldSpec) -> MultilinearPoly:
    """[x1,x2]*[x3,x4] + [x3,x4]*[x1,x2], expanded to its 8 monomials."""
    one = field.one
    terms: dict = {}
    commutator_pairs = [((1, 2), one), ((2, 1), -one)]
    for (a, ca) in commutator_pairs:
        for (b, cb) in [((3, 4), one), ((4, 3), -one)]:
            coeff = ca * cb
            for left, right in ((a, b), (b, a)):
                key = left + right
                prior = terms.get(key, field.zero)
                terms[key] = prior + coeff
    return MultilinearPoly(4, field, terms)


def single_variable(field: FieldSpec) -> MultilinearPoly:
    """x1."""
    return MultilinearPoly(1, field, {(1,): field.one})


def zero_poly(m: int, field: FieldSpec) -> MultilinearPoly:
    if m < 1:
        raise BadFamilyParams(f"zero polynomial needs m >= 1, got {m}")
    return MultilinearPoly(m, field, {})


def builtin(name: str, field: FieldSpec) -> MultilinearPoly:
    """Look up a builtin family by its CLI name, e.g. "standard:4"."""
    head, _, param = name.partition(":")
    if head == "commutator":
        if param:
            raise BadFamilyParams("commutator takes no parameter")
        return commutator(field)
    if head == "standard":
        return standard_polynomial(_family_int(name, param), field)
    if head == "jordan-central":
        if param:
            raise BadFamilyParams("jordan-central takes no parameter")
        return jordan_central(field)
    if head == "single":
        if param:
            raise BadFamilyParams("single takes no parameter")
        return single_variable(field)
    if head == "zero":
        return zero_poly(_family_int(name, param), field)
    raise BadFamilyParams(
        f"unknown builtin {name!r}; families: {', '.join(BUILTIN_FAMILIES)}"
    )


def _family_int(name: str, param: str) -> int:
    try:
        return int(param)
    except ValueError:
        raise BadFamilyParams(f"{name!r} needs an integer parameter") from None


# -- reproducible random polynomials ----------------------------------------


def _splitmix64(seed: int) -> Iterator[int]:
    """SplitMix64: z += 0x9E3779B97F4A7C15; mix with shifts 30/27/31 and
    multipliers 0xBF58476D1CE4E5B9, 0x94D049BB133111EB.  Fully specified so
    fixtures reproduce across implementations."""
    mask = (1 << 64) - 1
    z = seed & mask
    while True:
        z = (z + 0x9E3779B97F4A7C15) & mask
        w = z
        w = ((w ^ (w >> 30)) * 0xBF58476D1CE4E5B9) & mask
        w = ((w ^ (w >> 27)) * 0x94D049BB133111EB) & mask
        yield w ^ (w >> 31)


def random_poly(m: int, field: FieldSpec, seed: int, coeff_bound: int) -> MultilinearPoly:
    """Deterministic random polynomial for differential test fixtures.

    Walks the m! permutations in lexicographic order, drawing one SplitMix64
    value per permutation; the coefficient is (value mod (2*bound+1)) - bound,
    an integer in [-bound, bound] embedded into the field.
    """
    if m < 1:
        raise ValueError(f"arity must be positive, got {m}")
    if coeff_bound < 1:
        raise ValueError(f"coefficient bound must be >= 1, got {coeff_bound}")
    gen = _splitmix64(seed)
    span = 2 * coeff_bound + 1
    terms = {}
    for perm in permutations(range(1, m + 1)):
        c = next(gen) % span - coeff_bound
        if c:
            terms[perm] = field.from_int(c)
    return MultilinearPoly(m, field, terms)
