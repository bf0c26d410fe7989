"""Exact scalars over the ground ring Z[q, q^-1, Q_1, ..., Q_r].

A scalar is a sparse Laurent polynomial: each term maps an exponent vector
(e_q, e_Q1, ..., e_Qr) to a plain Python integer coefficient.  The
q-exponent may be negative, the Q-exponents may not.  Rationals only ever
appear after specialising q and the Q's at concrete rational points.

All values are immutable after construction and all operations are pure,
so scalars are safe to share between threads.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from random import Random

__all__ = [
    "ContextMismatch",
    "ScalarContext",
    "ExactScalar",
    "Specialization",
]


class ContextMismatch(ValueError):
    """Scalars from incompatible contexts (different r) were combined."""


def _term_sort_key(exps):
    # canonical order: Q-exponents first, then the q-exponent; this matches
    # the documented text form `1*q^-1 - 1*q^1 + 2*Q1^1*Q2^1`
    return exps[1:] + exps[:1]


class ScalarContext:
    """Fixes the number r >= 1 of cyclotomic parameters Q_1..Q_r."""

    __slots__ = ("r",)

    def __init__(self, r: int):
        if r < 1:
            raise ValueError(f"need r >= 1, got {r}")
        self.r = int(r)

    def compatible(self, other: "ScalarContext") -> None:
        if self.r != other.r:
            raise ContextMismatch(f"scalar contexts disagree: r={self.r} vs r={other.r}")

    # -- constructors --------------------------------------------------

    def zero(self) -> "ExactScalar":
        return ExactScalar(self, {})

    def from_int(self, k: int) -> "ExactScalar":
        if k == 0:
            return self.zero()
        return ExactScalar(self, {(0,) * (self.r + 1): int(k)})

    def one(self) -> "ExactScalar":
        return self.from_int(1)

    def q(self, e: int = 1) -> "ExactScalar":
        exps = [0] * (self.r + 1)
        exps[0] = int(e)
        return ExactScalar(self, {tuple(exps): 1})

    def Q(self, k: int, e: int = 1) -> "ExactScalar":
        if not 1 <= k <= self.r:
            raise ValueError(f"Q index {k} out of range 1..{self.r}")
        if e < 0:
            raise ValueError("Q-exponents must be non-negative")
        exps = [0] * (self.r + 1)
        exps[k] = int(e)
        return ExactScalar(self, {tuple(exps): 1})

    def from_terms(self, terms) -> "ExactScalar":
        out: dict = {}
        for exps, c in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.r + 1:
                raise ValueError("exponent vector has wrong length")
            if any(e < 0 for e in exps[1:]):
                raise ValueError("Q-exponents must be non-negative")
            if c:
                out[exps] = out.get(exps, 0) + int(c)
        return ExactScalar(self, {e: c for e, c in out.items() if c})

    def elementary_symmetric(self, k: int) -> "ExactScalar":
        """e_k(Q_1, ..., Q_r); e_0 = 1."""
        if k == 0:
            return self.one()
        if not 0 <= k <= self.r:
            raise ValueError(f"elementary symmetric degree {k} out of range")
        terms = {}
        for subset in combinations(range(1, self.r + 1), k):
            exps = [0] * (self.r + 1)
            for i in subset:
                exps[i] = 1
            terms[tuple(exps)] = 1
        return ExactScalar(self, terms)

    def random_scalar(self, rng: Random, max_terms: int = 4,
                      coeff_bound: int = 9, exp_bound: int = 3) -> "ExactScalar":
        terms = {}
        for _ in range(rng.randint(0, max_terms)):
            exps = (rng.randint(-exp_bound, exp_bound),) + tuple(
                rng.randint(0, exp_bound) for _ in range(self.r))
            terms[exps] = terms.get(exps, 0) + rng.randint(-coeff_bound, coeff_bound)
        return self.from_terms(terms)

    # -- parsing --------------------------------------------------------

    def from_json(self, data) -> "ExactScalar":
        if isinstance(data, str):
            data = json.loads(data)
        terms = {}
        for t in data["terms"]:
            qs = list(t.get("Q", [0] * self.r))
            if len(qs) != self.r:
                raise ValueError("Q exponent list has wrong length")
            exps = (int(t["q"]),) + tuple(int(e) for e in qs)
            terms[exps] = terms.get(exps, 0) + int(t["c"])
        return self.from_terms(terms)

    _FACTOR = re.compile(r"^(q|Q(\d+))\^(-?\d+)$")

    def parse(self, text: str) -> "ExactScalar":
        """Inverse of ExactScalar.text()."""
        text = text.strip()
        if text == "0":
            return self.zero()
        terms: dict = {}
        # terms are joined by " + " / " - "; a leading sign has no space
        lead = "+"
        if text.startswith("-"):
            lead = "-"
            text = text[1:].lstrip()
        chunks = [lead] + re.split(r"\s+([+-])\s+", text)
        for sign, body in zip(chunks[0::2], chunks[1::2]):
            factors = body.split("*")
            coeff = int(factors[0])
            if sign == "-":
                coeff = -coeff
            exps = [0] * (self.r + 1)
            for f in factors[1:]:
                mt = self._FACTOR.match(f)
                if not mt:
                    raise ValueError(f"bad scalar factor {f!r}")
                e = int(mt.group(3))
                if mt.group(1) == "q":
                    exps[0] += e
                else:
                    k = int(mt.group(2))
                    if not 1 <= k <= self.r:
                        raise ValueError(f"Q index {k} out of range")
                    exps[k] += e
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coeff
        return self.from_terms(terms)

    def __repr__(self):
        return f"ScalarContext(r={self.r})"

    def __eq__(self, other):
        return isinstance(other, ScalarContext) and other.r == self.r

    def __hash__(self):
        return hash(("ScalarContext", self.r))


class ExactScalar:
    """A sparse Laurent polynomial in q with polynomial Q-dependence.

    Never mutated after construction; the term dict never stores zeros.
    """

    __slots__ = ("ctx", "_terms")

    def __init__(self, ctx: ScalarContext, terms: dict):
        self.ctx = ctx
        self._terms = terms

    # -- inspection -----------------------------------------------------

    def terms(self):
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0,) * (self.ctx.r + 1): 1}

    def __bool__(self):
        return bool(self._terms)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ExactScalar):
            self.ctx.compatible(other.ctx)
            return other
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        return ExactScalar(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(self.ctx, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                nc = out.get(key, 0) + c1 * c2
                if nc:
                    out[key] = nc
                else:
                    del out[key]
        return ExactScalar(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers only exist for monomials in q")
        out = self.ctx.one()
        for _ in range(k):
            out = out * self
        return out

    def q_shift(self, e: int) -> "ExactScalar":
        """Multiply by q^e (e may be negative)."""
        if e == 0:
            return self
        return ExactScalar(self.ctx, {
            (exps[0] + e,) + exps[1:]: c for exps, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        self.ctx.compatible(other.ctx)
        return self._terms == other._terms

    def __hash__(self):
        return hash((self.ctx.r, tuple(sorted(self._terms.items()))))

    # -- evaluation -----------------------------------------------------

    def specialize(self, s: "Specialization") -> Fraction:
        if len(s.Q_values) != self.ctx.r:
            raise ValueError(
                f"specialization has {len(s.Q_values)} Q-values, need {self.ctx.r}")
        total = Fraction(0)
        for exps, c in self._terms.items():
            v = Fraction(c) * (Fraction(s.q_value) ** exps[0])
            for Qv, e in zip(s.Q_values, exps[1:]):
                if e:
                    v *= Fraction(Qv) ** e
            total += v
        return total

    # -- serialization ----------------------------------------------------

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms, key=_term_sort_key):
            c = self._terms[exps]
            factors = []
            if exps[0]:
                factors.append(f"q^{exps[0]}")
            for k in range(1, self.ctx.r + 1):
                if exps[k]:
                    factors.append(f"Q{k}^{exps[k]}")
            body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"terms": [
            {"c": str(self._terms[e]), "q": e[0], "Q": list(e[1:])}
            for e in sorted(self._terms, key=_term_sort_key)]}

    def __repr__(self):
        return f"ExactScalar({self.text()})"


@dataclass(frozen=True)
class Specialization:
    """Rational evaluation point for (q, Q_1, ..., Q_r); q must be nonzero."""

    q_value: Fraction
    Q_values: tuple

    def __post_init__(self):
        object.__setattr__(self, "q_value", Fraction(self.q_value))
        object.__setattr__(self, "Q_values",
                           tuple(Fraction(v) for v in self.Q_values))
        if self.q_value == 0:
            raise ValueError("q must be specialized to a nonzero value")

    @property
    def r(self) -> int:
        return len(self.Q_values)

    @classmethod
    def random(cls, r: int, rng: Random) -> "Specialization":
        """Pairwise-distinct nonzero points, |q| != 1, suitable for rank
        certification (distinctness keeps the point generic)."""
        seen = set()
        vals = []
        while len(vals) < r + 1:
            v = Fraction(rng.randint(2, 97), rng.randint(1, 13))
            if v in seen or v == 1:
                continue
            seen.add(v)
            vals.append(v)
        return cls(q_value=vals[0], Q_values=tuple(vals[1:]))

    def to_json(self) -> dict:
        return {"q": str(self.q_value), "Q": [str(v) for v in self.Q_values]}
