"""Exact arithmetic in the Ariki-Koike algebra on its normal-form basis.

Elements are stored as sparse combinations of basis monomials
L_1^{c_1} ... L_n^{c_n} T_w with 0 <= c_i < r and w a permutation.  The
multiplication primitive is left multiplication by a single generator:

  * T_0 = L_1 bumps the first exponent; the cyclotomic relation
    (L_1 - Q_1)...(L_1 - Q_r) = 0 rewrites an overflowing power.
  * T_j (j >= 1) is pushed right through the L-part with a precomputed
    exchange table for T_j L_j^a L_{j+1}^b (a Bernstein-Lusztig-style
    string formula whose output exponents never exceed max(a, b)), then
    absorbed into the T-part by the standard-basis rule.

General products expand the left factor into generator words.  Correctness
is established by the relation / associativity / closure-dimension test
suite rather than by a confluence proof.

Contexts memoise term-level products behind an RLock, so a context and the
elements created under it are safe for concurrent read use from multiple
threads.
"""

from __future__ import annotations

import json
import re
import threading
from fractions import Fraction
from math import factorial
from random import Random

from .linalg import ResourceLimit, RowSpace
from .ring import ExactScalar, ScalarContext, Specialization
from .symgrp import (CompositionBlocks, Perm, all_permutations, compose,
                     double_cosets, identity, invert, length, reduced_word,
                     transposition, young_subgroup)
from .tableaux import Multicomposition, bracket_reversed, w_lambda

__all__ = ["AlgebraContext", "AKElement"]


class AlgebraContext:
    """Shared data for one Ariki-Koike algebra: rank n, level r, the
    scalar context, and the two convention flags.

    m_convention: weighting of Young-subgroup sums ("plain" = unit
    coefficients, "qlen" = q^{l(w)}).  y_convention: weighting of the
    sums used on the y-side ("plain", or "signed" = (-q)^{-l(w)}).
    """

    def __init__(self, n: int, r: int,
                 m_convention: str = "plain", y_convention: str = "plain"):
        if n < 1 or r < 1:
            raise ValueError("need n >= 1 and r >= 1")
        if m_convention not in ("plain", "qlen"):
            raise ValueError(f"unknown m_convention {m_convention!r}")
        if y_convention not in ("plain", "signed"):
            raise ValueError(f"unknown y_convention {y_convention!r}")
        self.n = n
        self.r = r
        self.m_convention = m_convention
        self.y_convention = y_convention
        self.scalars = ScalarContext(r)
        self._lock = threading.RLock()
        self._exchange = {}      # (a, b) -> (A, B) monomial dicts
        self._lmul_terms = {}    # (j, c, w) -> tuple of ((c', w'), scalar)
        self._words = {}         # w -> reduced word
        self._basis = None
        self._basis_index = None
        self._rmat_cache = {}    # specialization -> per-generator matrices

    # -- bookkeeping -----------------------------------------------------

    def compatible(self, other: "AlgebraContext"):
        if self is other:
            return
        if (self.n, self.r, self.m_convention, self.y_convention) != \
                (other.n, other.r, other.m_convention, other.y_convention):
            raise ValueError("algebra contexts differ")

    def dimension(self) -> int:
        return self.r ** self.n * factorial(self.n)

    def basis_monomials(self):
        """All (c, w) keys in a fixed deterministic order."""
        if self._basis is None:
            def exps(k):
                if k == 0:
                    yield ()
                    return
                for rest in exps(k - 1):
                    for e in range(self.r):
                        yield rest + (e,)
            with self._lock:
                self._basis = [(c, w) for c in exps(self.n)
                               for w in all_permutations(self.n)]
                self._basis_index = {key: i for i, key in enumerate(self._basis)}
        return self._basis

    def basis_index(self):
        self.basis_monomials()
        return self._basis_index

    def word(self, w: Perm):
        with self._lock:
            word = self._words.get(w)
            if word is None:
                word = reduced_word(w)
                self._words[w] = word
        return word

    # -- element constructors ---------------------------------------------

    def zero(self) -> "AKElement":
        return AKElement(self, {})

    def basis_element(self, c, w) -> "AKElement":
        c = tuple(int(x) for x in c)
        if len(c) != self.n or any(not 0 <= e < self.r for e in c):
            raise ValueError(f"bad exponent vector {c}")
        if len(w) != self.n:
            raise ValueError("permutation size disagrees with n")
        return AKElement(self, {(c, tuple(w)): self.scalars.one()})

    def one(self) -> "AKElement":
        return self.basis_element((0,) * self.n, identity(self.n))

    def T(self, arg) -> "AKElement":
        """T_w for a permutation, or the generator T_j for an index."""
        if isinstance(arg, int):
            if arg == 0:
                return self.jucys_murphy(1)
            return self.basis_element((0,) * self.n,
                                      transposition(self.n, arg))
        return self.basis_element((0,) * self.n, tuple(arg))

    def jucys_murphy(self, i: int) -> "AKElement":
        """L_i, itself a basis monomial."""
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")
        c = [0] * self.n
        c[i - 1] = 1
        if self.r == 1:
            # the exponent overflows immediately; reduce through the engine
            e = self.one()
            e = e._lmul_L(i)
            return e
        return self.basis_element(c, identity(self.n))

    def unscaled_jm(self, i: int) -> "AKElement":
        """The unscaled commuting family M_1 = T_0, M_i = T_{i-1} M_{i-1}
        T_{i-1}, i.e. M_i = q^{i-1} L_i.

        Symmetric polynomials in the M_i commute with the Iwahori-Hecke
        subalgebra under this presentation's quadratic relation; the L_i
        rescaling destroys that, and with it the vanishing lemma for the
        u-products.  All pi / u / x / y / v elements are therefore built
        from the M_i.
        """
        return self.jucys_murphy(i).scale(self.scalars.q(i - 1))

    def from_scalar(self, s) -> "AKElement":
        if isinstance(s, int):
            s = self.scalars.from_int(s)
        return AKElement(self, {((0,) * self.n, identity(self.n)): s}) \
            if not s.is_zero() else self.zero()

    # -- exchange table -----------------------------------------------------

    def exchange(self, a: int, b: int):
        """T_j L_j^a L_{j+1}^b = sum A[(x,y)] L_j^x L_{j+1}^y T_j
                                 + sum B[(x,y)] L_j^x L_{j+1}^y.

        Built by the two one-step rules
            T u = q v T - (q^2 - 1) v,   T v = q^-1 u T + (q - q^-1) v,
        which close on monomials with exponents bounded by max(a, b).
        """
        with self._lock:
            cached = self._exchange.get((a, b))
            if cached is not None:
                return cached
            S = self.scalars
            q1 = S.q(1)
            qm1 = S.q(-1)
            csq = S.q(2) - S.one()            # q^2 - 1
            cqq = q1 - qm1                    # q - q^-1
            A = {(0, 0): S.one()}
            B = {}

            def mul_mon(table, dx, dy, scal):
                out = {}
                for (x, y), coeff in table.items():
                    key = (x + dx, y + dy)
                    cur = out.get(key, S.zero()) + coeff * scal
                    if not cur.is_zero():
                        out[key] = cur
                    elif key in out:
                        del out[key]
                return out

            def add_into(dst, src):
                for key, coeff in src.items():
                    cur = dst.get(key, S.zero()) + coeff
                    if not cur.is_zero():
                        dst[key] = cur
                    else:
                        dst.pop(key, None)

            for _ in range(a):
                newA = mul_mon(A, 0, 1, q1)
                newB = mul_mon(A, 0, 1, -csq)
                add_into(newB, mul_mon(B, 1, 0, S.one()))
                A, B = newA, newB
            for _ in range(b):
                newA = mul_mon(A, 1, 0, qm1)
                newB = mul_mon(A, 0, 1, cqq)
                add_into(newB, mul_mon(B, 0, 1, S.one()))
                A, B = newA, newB

            bound = max(a, b)
            for table in (A, B):
                for (x, y) in table:
                    if x > bound or y > bound:
                        raise AssertionError(
                            f"exchange table escaped its string bound at {(a, b)}")
            self._exchange[(a, b)] = (A, B)
            return A, B

    # -- term-level left multiplication ---------------------------------------

    def _lmul_term(self, j: int, c, w):
        """T_j * (L^c T_w) as a tuple of ((c', w'), scalar)."""
        key = (j, c, w)
        with self._lock:
            cached = self._lmul_terms.get(key)
        if cached is not None:
            return cached
        S = self.scalars
        out = {}

        def emit(ck, wk, scal):
            cur = out.get((ck, wk), S.zero()) + scal
            if cur.is_zero():
                out.pop((ck, wk), None)
            else:
                out[(ck, wk)] = cur

        if j == 0:
            c1 = c[0] + 1
            if c1 < self.r:
                emit((c1,) + c[1:], w, S.one())
            else:
                # L_1^r = e_1 L_1^{r-1} - e_2 L_1^{r-2} + ... -+ e_r
                for k in range(1, self.r + 1):
                    coeff = S.elementary_symmetric(k)
                    if k % 2 == 0:
                        coeff = -coeff
                    emit((self.r - k,) + c[1:], w, coeff)
        else:
            a, b = c[j - 1], c[j]
            A, B = self.exchange(a, b)
            up = w[j - 1] < w[j]
            wswap = w[:j - 1] + (w[j], w[j - 1]) + w[j + 1:]
            cq = S.q(1) - S.q(-1)
            for (x, y), coeff in A.items():
                ck = c[:j - 1] + (x, y) + c[j + 1:]
                # T_j T_w: either lengths add or the quadratic relation fires
                emit(ck, wswap, coeff)
                if not up:
                    emit(ck, w, coeff * cq)
            for (x, y), coeff in B.items():
                ck = c[:j - 1] + (x, y) + c[j + 1:]
                emit(ck, w, coeff)
        result = tuple(out.items())
        with self._lock:
            self._lmul_terms[key] = result
        return result

    # -- right multiplication matrices at a specialization --------------------

    def right_gen_matrices(self, spec: Specialization):
        """For each generator index j, the matrix of right multiplication
        by T_j on the specialized basis (rows indexed like basis_monomials)."""
        with self._lock:
            cached = self._rmat_cache.get(spec)
        if cached is not None:
            return cached
        basis = self.basis_monomials()
        index = self.basis_index()
        mats = []
        for j in range(self.n):
            rows = []
            gen = self.T(j)
            for (c, w) in basis:
                e = self.basis_element(c, w) * gen
                rows.append(e.specialize_vector(spec))
            mats.append(rows)
        with self._lock:
            self._rmat_cache[spec] = mats
        return mats

    # -- distinguished elements ----------------------------------------------

    def young_sum(self, composition, weight=None) -> "AKElement":
        """Sum of T_w over the Young subgroup, with the context's
        m-convention weighting unless an explicit weight is requested."""
        weight = weight or self.m_convention
        S = self.scalars
        terms = {}
        zero = (0,) * self.n
        for w in young_subgroup(CompositionBlocks(composition)):
            if weight == "plain":
                coeff = S.one()
            elif weight == "qlen":
                coeff = S.q(length(w))
            elif weight == "signed":
                lw = length(w)
                coeff = S.q(-lw) if lw % 2 == 0 else -S.q(-lw)
            else:
                raise ValueError(f"unknown weight {weight!r}")
            terms[(zero, w)] = coeff
        return AKElement(self, terms)

    def coset_sum(self, left_comp, d: Perm, right_comp, weight=None) -> "AKElement":
        """Sum of T_w over the double coset S_left d S_right.

        The explicit weight "unit" gives plain unit coefficients (the
        public double-coset-sum contract); otherwise the m-convention
        applies."""
        weight = weight or ("unit" if self.m_convention == "plain" else self.m_convention)
        lgrp = young_subgroup(CompositionBlocks(left_comp))
        rgrp = young_subgroup(CompositionBlocks(right_comp))
        members = {compose(compose(u, d), v) for u in lgrp for v in rgrp}
        S = self.scalars
        zero = (0,) * self.n
        terms = {}
        for w in sorted(members):
            if weight in ("unit", "plain"):
                coeff = S.one()
            elif weight == "qlen":
                coeff = S.q(length(w))
            else:
                raise ValueError(f"unknown weight {weight!r}")
            terms[(zero, w)] = coeff
        return AKElement(self, terms)

    def double_coset_sum(self, left_comp, d: Perm, right_comp) -> "AKElement":
        """Unit-coefficient sum over the double coset of d; d is
        normalised internally to the distinguished representative."""
        for rep, members in double_cosets(CompositionBlocks(left_comp),
                                          CompositionBlocks(right_comp)):
            if d in members:
                return self.coset_sum(left_comp, rep, right_comp, weight="unit")
        raise ValueError("element does not belong to any double coset")

    def pi(self, a: int, x: ExactScalar) -> "AKElement":
        """pi_a(x) = (M_1 - x)(M_2 - x)...(M_a - x); pi_0 = 1."""
        out = self.one()
        for j in range(1, a + 1):
            out = out * (self.unscaled_jm(j) - self.from_scalar(1) * x)
        return out

    def _check_bracket(self, bracket):
        bracket = tuple(int(x) for x in bracket)
        if len(bracket) != self.r + 1 or bracket[0] != 0 or bracket[-1] != self.n:
            raise ValueError(f"bad bracket {bracket} for (n={self.n}, r={self.r})")
        if any(a > b for a, b in zip(bracket, bracket[1:])):
            raise ValueError(f"bracket {bracket} is not monotone")
        return bracket

    def u_plus(self, bracket) -> "AKElement":
        bracket = self._check_bracket(bracket)
        out = self.one()
        for i in range(1, self.r):
            out = out * self.pi(bracket[i], self.scalars.Q(i + 1))
        return out

    def u_minus(self, bracket) -> "AKElement":
        bracket = self._check_bracket(bracket)
        out = self.one()
        for i in range(1, self.r):
            out = out * self.pi(bracket[i], self.scalars.Q(self.r - i))
        return out

    def v_element(self, bracket) -> "AKElement":
        """v_a = u+_a T_{w_a} u-_{a'} with w_a the block-reversal element."""
        bracket = self._check_bracket(bracket)
        sizes = [bracket[i + 1] - bracket[i] for i in range(self.r)]
        wa, _ = w_lambda(Multicomposition([(s,) for s in sizes], m=(1,) * self.r))
        return self.u_plus(bracket) * self.T(wa) * self.u_minus(bracket_reversed(bracket))

    def x_element(self, lam: Multicomposition) -> "AKElement":
        """x_lam = u+_{[lam]} * m_{bar lam}."""
        if lam.n != self.n or lam.r != self.r:
            raise ValueError("weight does not match the algebra context")
        return self.u_plus(lam.bracket()) * self.young_sum(lam.bar())

    def y_element(self, lam: Multicomposition) -> "AKElement":
        """y_lam = u-_{[lam]} * (y-convention sum over the bar shape)."""
        if lam.n != self.n:
            raise ValueError("weight does not match the algebra context")
        weight = "plain" if self.y_convention == "plain" else "signed"
        return self.u_minus(lam.bracket()) * self.young_sum(lam.bar(), weight=weight)

    def m_element(self, lam) -> "AKElement":
        """The Young-subgroup sum of a multicomposition's bar (or of a
        plain composition)."""
        if isinstance(lam, Multicomposition):
            return self.young_sum(lam.bar())
        return self.young_sum(tuple(lam))

    # -- global sanity oracle --------------------------------------------------

    def regular_closure_dim(self, seed: int = 0, spec: Specialization | None = None,
                            max_dim: int = 10_000) -> int:
        """Dimension of the span of all generator products starting from 1,
        at a generic specialization.  Must equal r^n * n!."""
        D = self.dimension()
        if D > max_dim:
            raise ResourceLimit(f"closure dimension {D} exceeds limit {max_dim}")
        if spec is None:
            spec = Specialization.random(self.r, Random(seed))
        space = RowSpace(D)
        start = self.one()
        space.add(start.specialize_vector(spec))
        queue = [start]
        while queue:
            e = queue.pop()
            for j in range(self.n):
                f = e.lmul_gen(j)
                if space.add(f.specialize_vector(spec)):
                    queue.append(f)
        return space.rank

    def relation_reports(self) -> dict:
        """Each defining relation checked as an identity of left
        multiplication operators on every basis monomial."""
        S = self.scalars
        q1, qm1 = S.q(1), S.q(-1)
        names = ["cyclotomic", "quadratic", "braid_zero", "braid_adjacent",
                 "commute_far_T0", "commute_far"]
        results = {name: True for name in names}

        def word_apply(idxs, e):
            for j in reversed(idxs):
                e = e.lmul_gen(j)
            return e

        for (c, w) in self.basis_monomials():
            b = self.basis_element(c, w)
            e = b
            for k in range(self.r, 0, -1):
                e = e.lmul_gen(0) - e * S.Q(k)
            if not e.is_zero():
                results["cyclotomic"] = False
            for i in range(1, self.n):
                ti = b.lmul_gen(i)
                if not (ti.lmul_gen(i) - ti * (q1 - qm1) - b).is_zero():
                    results["quadratic"] = False
            if self.n >= 2:
                if word_apply([0, 1, 0, 1], b) != word_apply([1, 0, 1, 0], b):
                    results["braid_zero"] = False
            for i in range(1, self.n - 1):
                if word_apply([i, i + 1, i], b) != word_apply([i + 1, i, i + 1], b):
                    results["braid_adjacent"] = False
            for j in range(2, self.n):
                if word_apply([0, j], b) != word_apply([j, 0], b):
                    results["commute_far_T0"] = False
            for i in range(1, self.n):
                for j in range(i + 2, self.n):
                    if word_apply([i, j], b) != word_apply([j, i], b):
                        results["commute_far"] = False
        return results

    # -- parsing ------------------------------------------------------------

    _TERM = re.compile(
        r"\((?P<coeff>[^()]*)\)\s*\*\s*(?P<ls>(?:L\d+\^\d+\*?)+)\s*\*\s*"
        r"T\[(?P<w>[\d,\s]*)\]")

    def parse(self, text: str) -> "AKElement":
        text = text.strip()
        if text == "0":
            return self.zero()
        terms = {}
        matches = list(self._TERM.finditer(text))
        rebuilt = " + ".join(m.group(0) for m in matches)
        if not matches or rebuilt != text:
            raise ValueError(f"bad element text {text!r}")
        for mt in matches:
            coeff = self.scalars.parse(mt.group("coeff"))
            c = [0] * self.n
            for piece in mt.group("ls").split("*"):
                lm = re.match(r"^L(\d+)\^(\d+)$", piece)
                if not lm:
                    raise ValueError(f"bad L factor {piece!r}")
                c[int(lm.group(1)) - 1] = int(lm.group(2))
            w = tuple(int(x) for x in mt.group("w").split(","))
            key = (tuple(c), w)
            terms[key] = terms.get(key, self.scalars.zero()) + coeff
        return AKElement(self, {k: v for k, v in terms.items() if not v.is_zero()})

    def from_json(self, data) -> "AKElement":
        if isinstance(data, str):
            data = json.loads(data)
        terms = {}
        for t in data["terms"]:
            key = (tuple(int(x) for x in t["c"]), tuple(int(x) for x in t["w"]))
            coeff = self.scalars.from_json(t["coeff"])
            terms[key] = terms.get(key, self.scalars.zero()) + coeff
        return AKElement(self, {k: v for k, v in terms.items() if not v.is_zero()})

    def random_element(self, rng: Random, max_terms: int = 3) -> "AKElement":
        basis = self.basis_monomials()
        out = self.zero()
        for _ in range(rng.randint(0, max_terms)):
            c, w = basis[rng.randrange(len(basis))]
            out = out + AKElement(self, {(c, w): self.scalars.random_scalar(rng)})
        return out

    def __repr__(self):
        return (f"AlgebraContext(n={self.n}, r={self.r}, "
                f"m={self.m_convention!r}, y={self.y_convention!r})")


class AKElement:
    """A normal-form element; immutable after construction."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: dict):
        self.ctx = ctx
        self.terms = terms

    # -- ring structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "AKElement") -> "AKElement":
        self.ctx.compatible(other.ctx)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            cur = out.get(key)
            cur = coeff if cur is None else cur + coeff
            if cur.is_zero():
                out.pop(key, None)
            else:
                out[key] = cur
        return AKElement(self.ctx, out)

    def __neg__(self):
        return AKElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar) -> "AKElement":
        if isinstance(scalar, int):
            scalar = self.ctx.scalars.from_int(scalar)
        if scalar.is_zero():
            return self.ctx.zero()
        return AKElement(self.ctx,
                         {k: v * scalar for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            return self.scale(other)
        self.ctx.compatible(other.ctx)
        out = self.ctx.zero()
        n = self.ctx.n
        for (c, w), coeff in sorted(self.terms.items()):
            e = other
            for j in reversed(self.ctx.word(w)):
                e = e.lmul_gen(j)
            for i in range(n, 0, -1):
                for _ in range(c[i - 1]):
                    e = e._lmul_L(i)
            out = out + e.scale(coeff)
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AKElement):
            return NotImplemented
        self.ctx.compatible(other.ctx)
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted((k, tuple(sorted(v.terms().items())))
                                 for k, v in self.terms.items())))

    # -- generator multiplication --------------------------------------------

    def lmul_gen(self, j: int) -> "AKElement":
        """Left multiplication by the generator T_j (T_0 = L_1)."""
        if not 0 <= j <= self.ctx.n - 1:
            raise ValueError(f"generator index {j} out of range")
        out = {}
        S = self.ctx.scalars
        for (c, w), coeff in self.terms.items():
            for key, scal in self.ctx._lmul_term(j, c, w):
                cur = out.get(key, S.zero()) + coeff * scal
                if cur.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = cur
        return AKElement(self.ctx, out)

    def _lmul_L(self, i: int) -> "AKElement":
        """Left multiplication by L_i = q^{-(i-1)} T_{i-1}..T_1 T_0 T_1..T_{i-1}."""
        word = list(range(i - 1, 0, -1)) + [0] + list(range(1, i))
        e = self
        for j in reversed(word):
            e = e.lmul_gen(j)
        return e.scale(self.ctx.scalars.q(-(i - 1))) if i > 1 else e

    def mul_gen(self, j: int, side: str = "right") -> "AKElement":
        """Multiplication by a single generator on the chosen side."""
        if side not in ("left", "right"):
            raise ValueError(f"unknown side {side!r}")
        if side == "left":
            return self.lmul_gen(j)
        if j == 0:
            return self * self.ctx.jucys_murphy(1)
        S = self.ctx.scalars
        cq = S.q(1) - S.q(-1)
        out = {}

        def emit(key, scal):
            cur = out.get(key, S.zero()) + scal
            if cur.is_zero():
                out.pop(key, None)
            else:
                out[key] = cur

        for (c, w), coeff in self.terms.items():
            winv = invert(w)
            up = winv[j - 1] < winv[j]
            wnew = tuple(j + 1 if x == j else j if x == j + 1 else x for x in w)
            emit((c, wnew), coeff)
            if not up:
                emit((c, w), coeff * cq)
        return AKElement(self.ctx, out)

    # -- evaluation -----------------------------------------------------------

    def specialize_vector(self, spec: Specialization):
        index = self.ctx.basis_index()
        vec = [Fraction(0)] * len(index)
        for key, coeff in self.terms.items():
            vec[index[key]] = coeff.specialize(spec)
        return vec

    # -- serialization ----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (c, w), coeff in self.sorted_terms():
            ls = "*".join(f"L{i + 1}^{e}" for i, e in enumerate(c))
            parts.append(f"({coeff.text()}) * {ls} * T[{','.join(map(str, w))}]")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"terms": [{"coeff": coeff.to_json(), "c": list(c), "w": list(w)}
                          for (c, w), coeff in self.sorted_terms()]}

    def __repr__(self):
        return f"AKElement({self.text()})"
