"""The cyclotomic q-Schur layer.

Permutation-module homomorphisms are represented by the image of the
cyclic generator x_mu; the module generator z_lam, the semistandard basis
vectors h_A, exact independence certification, the weight idempotents and
the E/F ladder operators all live here.

Independence of the basis maps is certified per type block: maps whose
images lie in different weight summands never mix, so the certified rank
is the sum over types mu of the exact rank of {h_A : A of type mu},
computed after specialising the coefficients at random rational points
(specialisation can only lose rank, so full rank is a proof and a
failure is inconclusive; the driver retries at fresh points).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .hecke import AKElement, AlgebraContext
from .linalg import ResourceLimit, RowSpace, nullspace, rank_exact
from .ring import Specialization
from .symgrp import (CompositionBlocks, compose, invert, length,
                     young_subgroup)
from .tableaux import (MultiShape, Multicomposition, TypedTableau,
                       enumerate_multicompositions, enumerate_ssyt, one_A,
                       w_lambda)

__all__ = [
    "SchurContext",
    "ModuleElement",
    "WeylBasisVector",
    "EFIndex",
    "FALLBACK_FLAGS",
    "ConventionError",
    "validated_ef_conventions",
    "verify_basis_with_fallback",
]

#: the recorded fallback convention flags, tried iff the literal pair fails
FALLBACK_FLAGS = ("qlen", "signed")


@dataclass(frozen=True)
class ModuleElement:
    """An element of the permutation module of the tagged weight."""

    weight: Multicomposition
    elem: AKElement


@dataclass(frozen=True)
class WeylBasisVector:
    """One basis vector: the value at 1 of the map indexed by (mu, A)."""

    lam: Multicomposition
    mu: Multicomposition
    tableau: TypedTableau
    elem: AKElement


@dataclass(frozen=True)
class EFIndex:
    """A ladder index (i, k): row i of component k, not the final slot."""

    i: int
    k: int


class SchurContext:
    """Weights Lambda_{n,r}(m) over one Ariki-Koike algebra instance.

    All cached values (x and z elements, module spans, word tables) are
    immutable and keyed deterministically, so concurrent readers at worst
    recompute an identical value; the underlying algebra context carries
    the only synchronised caches.
    """

    def __init__(self, n: int, r: int, m,
                 m_convention: str = "plain", y_convention: str = "plain"):
        self.shape = MultiShape(tuple(m))
        if self.shape.r != r:
            raise ValueError("m must have r components")
        self.n = n
        self.r = r
        self.algebra = AlgebraContext(n, r, m_convention=m_convention,
                                      y_convention=y_convention)
        self._weights = None
        self._partitions = None
        self._x_cache = {}
        self._z_cache = {}
        self._span_cache = {}
        self._right_words = None

    @property
    def m(self):
        return self.shape.m

    def flags(self) -> dict:
        return {"m_convention": self.algebra.m_convention,
                "y_convention": self.algebra.y_convention}

    # -- weights ---------------------------------------------------------

    def weights(self):
        if self._weights is None:
            self._weights = enumerate_multicompositions(self.n, self.shape)
        return self._weights

    def partitions(self):
        if self._partitions is None:
            self._partitions = enumerate_multicompositions(
                self.n, self.shape, partitions_only=True)
        return self._partitions

    def weight(self, parts) -> Multicomposition:
        return Multicomposition(parts, m=self.m)

    # -- distinguished elements -------------------------------------------

    def x_element(self, mu: Multicomposition) -> AKElement:
        key = mu.parts
        if key not in self._x_cache:
            self._x_cache[key] = self.algebra.x_element(mu)
        return self._x_cache[key]

    def x_module(self, mu: Multicomposition) -> ModuleElement:
        return ModuleElement(mu, self.x_element(mu))

    def z_element(self, lam: Multicomposition) -> AKElement:
        """z_lam evaluated at the unit: x_lam T_{w_lam} y_{lam'}."""
        key = lam.parts
        if key not in self._z_cache:
            if not lam.is_partition():
                raise ValueError("z is defined for multipartitions")
            w, _ = w_lambda(lam)
            z = self.x_element(lam) * self.algebra.T(w) \
                * self.algebra.y_element(lam.dual())
            self._z_cache[key] = z
        return self._z_cache[key]

    def basis_vector(self, lam: Multicomposition, mu: Multicomposition,
                     A: TypedTableau) -> WeylBasisVector:
        """h_A = (sum over the double coset of 1_A) u+_{[lam]} T_{w_lam}
        y_{lam'}; for the superstandard tableau this equals z_lam."""
        if A.shape != lam or A.type_weight() != mu:
            raise ValueError("tableau does not match (lam, mu)")
        if not A.is_semistandard():
            raise ValueError("tableau is not semistandard")
        d = one_A(A)
        cs = self.algebra.coset_sum(mu.bar(), d, lam.bar())
        w, _ = w_lambda(lam)
        h = cs * self.algebra.u_plus(lam.bracket()) * self.algebra.T(w) \
            * self.algebra.y_element(lam.dual())
        return WeylBasisVector(lam, mu, A, h)

    def tableaux_by_type(self, lam: Multicomposition):
        """All semistandard lam-tableaux grouped by their type weight."""
        groups = {}
        for A in enumerate_ssyt(lam, self.shape):
            groups.setdefault(A.type_weight(), []).append(A)
        return groups

    def weyl_dim_count(self, lam: Multicomposition) -> int:
        """Tableau-counting oracle for the module dimension."""
        return len(enumerate_ssyt(lam, self.shape))

    # -- independence certification ------------------------------------------

    def verify_basis_independence(self, lam: Multicomposition, seed: int = 0,
                                  spec: Specialization | None = None,
                                  retries: int = 3,
                                  max_dim: int = 10_000) -> dict:
        """Certify that the basis vectors of lam have full rank.

        Rank is computed per type block and summed; certification succeeds
        when the total equals the tableau count.  Specialisation failures
        are retried at fresh random points before reporting "not
        certified" (an inconclusive outcome, never a disproof).
        """
        if self.algebra.dimension() > max_dim:
            raise ResourceLimit("algebra dimension exceeds the configured limit")
        groups = self.tableaux_by_type(lam)
        count = sum(len(v) for v in groups.values())
        vectors = {mu.parts: [self.basis_vector(lam, mu, A).elem for A in As]
                   for mu, As in groups.items()}
        rng = Random(seed)
        attempts = 0
        report = None
        while attempts < (1 if spec is not None else 1 + retries):
            attempts += 1
            point = spec if spec is not None else Specialization.random(self.r, rng)
            rank = 0
            blocks = []
            for mu, As in sorted(groups.items(), key=lambda kv: kv[0].parts):
                rows = [h.specialize_vector(point) for h in vectors[mu.parts]]
                blk = rank_exact(rows)
                rank += blk
                blocks.append({"mu": mu.to_json(), "size": len(As), "rank": blk})
            report = {
                "lambda": lam.to_json(),
                "count": count,
                "rank": rank,
                "certified": rank == count == self.weyl_dim_count(lam),
                "flags": self.flags(),
                "specialization": point.to_json(),
                "attempts": attempts,
                "blocks": blocks,
            }
            if report["certified"]:
                break
        return report

    # -- module spans and membership -------------------------------------------

    def _right_word(self, c, w):
        """Generator word for right multiplication by L^c T_w, plus the
        q-exponent shift the L normalisation contributes."""
        if self._right_words is None:
            self._right_words = {}
        key = (c, w)
        cached = self._right_words.get(key)
        if cached is None:
            letters = []
            shift = 0
            for i in range(1, self.n + 1):
                pal = list(range(i - 1, 0, -1)) + [0] + list(range(1, i))
                for _ in range(c[i - 1]):
                    letters.extend(pal)
                    shift -= i - 1
            letters.extend(self.algebra.word(w))
            cached = (tuple(letters), shift)
            self._right_words[key] = cached
        return cached

    def _apply_right(self, vec, c, w, spec, mats):
        letters, shift = self._right_word(c, w)
        for j in letters:
            mat = mats[j]
            out = [Fraction(0)] * len(vec)
            for i, vi in enumerate(vec):
                if vi:
                    row = mat[i]
                    for k, mv in enumerate(row):
                        if mv:
                            out[k] += vi * mv
            vec = out
        if shift:
            factor = Fraction(spec.q_value) ** shift
            vec = [v * factor for v in vec]
        return vec

    def module_span(self, mu: Multicomposition, spec: Specialization) -> RowSpace:
        """Row space of the right ideal generated by x_mu, specialised."""
        key = (mu.parts, spec)
        cached = self._span_cache.get(key)
        if cached is not None:
            return cached
        mats = self.algebra.right_gen_matrices(spec)
        D = self.algebra.dimension()
        space = RowSpace(D)
        xvec = self.x_element(mu).specialize_vector(spec)
        space.add(xvec)
        queue = [xvec]
        while queue:
            v = queue.pop()
            for j in range(self.n):
                nxt = self._apply_right_gen(v, j, spec, mats)
                if space.add(nxt):
                    queue.append(nxt)
        self._span_cache[key] = space
        return space

    def _apply_right_gen(self, vec, j, spec, mats):
        mat = mats[j]
        out = [Fraction(0)] * len(vec)
        for i, vi in enumerate(vec):
            if vi:
                for k, mv in enumerate(mat[i]):
                    if mv:
                        out[k] += vi * mv
        return out

    def certify_membership(self, me: ModuleElement, spec: Specialization) -> bool:
        """One-sided membership certificate e in x_mu H at the point."""
        return self.module_span(me.weight, spec).contains(
            me.elem.specialize_vector(spec))

    # -- idempotents ------------------------------------------------------------

    def idempotent_apply(self, lam: Multicomposition,
                         me: ModuleElement) -> ModuleElement:
        """The weight projector: identity on the lam summand, zero elsewhere."""
        if lam.m != self.m:
            raise ValueError("weight bookkeeping disagrees with the context")
        if me.weight == lam:
            return me
        return ModuleElement(lam, self.algebra.zero())

    # -- E/F ladder operators -----------------------------------------------------

    def ef_indices(self, bounds: MultiShape | None = None):
        """Gamma'(m): all (i, k) except the very last slot (m_r, r)."""
        bounds = bounds or self.shape
        out = [EFIndex(i, k) for k in range(1, bounds.r + 1)
               for i in range(1, bounds.m[k - 1] + 1)]
        return [idx for idx in out
                if (idx.i, idx.k) != (bounds.m[-1], bounds.r)]

    def _flat_pos(self, idx: EFIndex) -> int:
        return self.shape.flatten_symbol((idx.i, idx.k))

    def weight_step(self, mu: Multicomposition, idx: EFIndex, sign: int):
        """mu +- alpha_(i,k) as a weight, or None when it leaves Lambda."""
        flat = list(mu.bar())
        p = self._flat_pos(idx) - 1
        flat[p] += sign
        flat[p + 1] -= sign
        if flat[p] < 0 or flat[p + 1] < 0:
            return None
        parts = []
        pos = 0
        for mk in self.m:
            parts.append(flat[pos:pos + mk])
            pos += mk
        return Multicomposition(parts, m=self.m)

    def _coset_factor(self, target: Multicomposition, source: Multicomposition,
                      star: str, reps_side: str) -> AKElement:
        """sum over X of q^{l(x)} T_{x*} for the distinguished coset
        representatives of the intersection inside the target bar group."""
        tgt = young_subgroup(CompositionBlocks(target.bar()))
        src = set(young_subgroup(CompositionBlocks(source.bar())))
        inter = [w for w in tgt if w in src]
        # group the target subgroup into right (or left) cosets of the
        # intersection and keep each coset's shortest element
        reps = []
        seen = set()
        for w in sorted(tgt, key=lambda w: (length(w), w)):
            if w in seen:
                continue
            if reps_side == "right":
                coset = {compose(h, w) for h in inter}
            else:
                coset = {compose(w, h) for h in inter}
            seen |= coset
            reps.append(w)
        S = self.algebra.scalars
        out = self.algebra.zero()
        for x in reps:
            t = self.algebra.T(invert(x) if star == "inverse" else x)
            out = out + t.scale(S.q(length(x)))
        return out

    def ef_image_of_x(self, idx: EFIndex, kind: str, mu: Multicomposition,
                      star: str = "inverse", reps_side: str = "right") -> AKElement:
        """The image of x_mu under E_(i,k) or F_(i,k) (zero when the
        target weight leaves the weight set)."""
        if kind not in ("E", "F"):
            raise ValueError("kind must be 'E' or 'F'")
        sign = 1 if kind == "E" else -1
        target = self.weight_step(mu, idx, sign)
        if target is None:
            return self.algebra.zero()
        S = self.algebra.scalars
        p = self._flat_pos(idx)
        flat = mu.bar()
        exp = 1 - (flat[p] if kind == "E" else flat[p - 1])
        factor = self._coset_factor(target, mu, star, reps_side)
        out = factor.scale(S.q(exp))
        if kind == "E" and idx.i == self.m[idx.k - 1]:
            # boundary: one extra cyclotomic factor joins the u+ part
            N = mu.bracket()[idx.k]
            out = out * (self.algebra.unscaled_jm(N + 1)
                         - self.algebra.from_scalar(1) * S.Q(idx.k + 1))
        return out * self.x_element(mu)

    def ef_apply(self, idx: EFIndex, kind: str, me: ModuleElement,
                 star: str = "inverse", reps_side: str = "right") -> ModuleElement:
        """Apply the ladder operator to a tagged module element."""
        sign = 1 if kind == "E" else -1
        target = self.weight_step(me.weight, idx, sign)
        if target is None:
            return ModuleElement(me.weight, self.algebra.zero())
        if kind not in ("E", "F"):
            raise ValueError("kind must be 'E' or 'F'")
        S = self.algebra.scalars
        p = self._flat_pos(idx)
        flat = me.weight.bar()
        exp = 1 - (flat[p] if kind == "E" else flat[p - 1])
        factor = self._coset_factor(target, me.weight, star, reps_side)
        g = factor.scale(S.q(exp))
        if kind == "E" and idx.i == self.m[idx.k - 1]:
            N = me.weight.bracket()[idx.k]
            g = g * (self.algebra.unscaled_jm(N + 1)
                     - self.algebra.from_scalar(1) * S.Q(idx.k + 1))
        return ModuleElement(target, g * me.elem)

    def ef_convention_report(self, specs, star: str = "inverse",
                             reps_side: str = "right") -> dict:
        """Certify E/F images of every x_mu as module homomorphisms
        (membership of the image in the target ideal) at each point.

        A failed combination is reported loudly; nothing is silently
        accepted."""
        checks = []
        ok = True
        for spec in specs:
            for mu in self.weights():
                for idx in self.ef_indices():
                    for kind in ("E", "F"):
                        sign = 1 if kind == "E" else -1
                        target = self.weight_step(mu, idx, sign)
                        img = self.ef_image_of_x(idx, kind, mu,
                                                 star=star, reps_side=reps_side)
                        if target is None:
                            passed = img.is_zero()
                        else:
                            passed = self.module_span(target, spec).contains(
                                img.specialize_vector(spec))
                        ok = ok and passed
                        if not passed:
                            checks.append({"mu": mu.to_json(),
                                           "idx": [idx.i, idx.k],
                                           "kind": kind,
                                           "specialization": spec.to_json()})
        return {"star": star, "reps_side": reps_side,
                "validated": ok, "failures": checks}

    # -- independent hom-space oracle ------------------------------------------------

    def hom_space_images(self, mu: Multicomposition, nu: Multicomposition,
                         spec: Specialization):
        """Basis of images-of-x_mu for Hom(M^mu, M^nu) at the point.

        An image v must lie in the nu ideal and satisfy v * Ann(x_mu) = 0;
        the second condition makes h -> v h well defined on x_mu H."""
        D = self.algebra.dimension()
        mats = self.algebra.right_gen_matrices(spec)
        basis = self.algebra.basis_monomials()
        xvec = self.x_element(mu).specialize_vector(spec)
        # annihilator of x_mu: kernel of h -> x_mu h (columns = x_mu * b_j)
        cols = [self._apply_right(list(xvec), c, w, spec, mats)
                for (c, w) in basis]
        ann = nullspace([[cols[j][i] for j in range(D)] for i in range(D)], D)
        span_nu = self.module_span(nu, spec).basis()
        if not span_nu:
            return []
        # constrain coefficients t with sum_i t_i (u_i * a) = 0 for all a
        rows = []
        for a in ann:
            prods = []
            for u in span_nu:
                acc = [Fraction(0)] * D
                for j, aj in enumerate(a):
                    if aj:
                        c, w = basis[j]
                        ub = self._apply_right(list(u), c, w, spec, mats)
                        acc = [x + aj * y for x, y in zip(acc, ub)]
                prods.append(acc)
            for coord in range(D):
                rows.append([prods[i][coord] for i in range(len(span_nu))])
        if not rows:
            ts = [[Fraction(1) if i == j else Fraction(0)
                   for j in range(len(span_nu))] for i in range(len(span_nu))]
        else:
            ts = nullspace(rows, len(span_nu))
        images = []
        for t in ts:
            v = [Fraction(0)] * D
            for ti, u in zip(t, span_nu):
                if ti:
                    v = [x + ti * y for x, y in zip(v, u)]
            images.append(v)
        return images

    def cellular_hom_dimension(self, mu: Multicomposition,
                               nu: Multicomposition) -> int:
        """Tableau-counting prediction for dim Hom(M^mu, M^nu)."""
        total = 0
        for lam in self.partitions():
            total += (len(enumerate_ssyt(lam, self.shape, nu))
                      * len(enumerate_ssyt(lam, self.shape, mu)))
        return total


class ConventionError(RuntimeError):
    """No ladder-operator convention combination certified; carries the
    per-combination failure reports."""

    def __init__(self, reports):
        super().__init__(
            "no E/F convention combination passed the hom-membership suite: "
            + repr(reports))
        self.reports = reports


def validated_ef_conventions(sc: SchurContext, specs) -> dict:
    """Pick the first (star, reps side) combination whose E/F images are
    certified module homomorphisms at every given point.

    The documented default is tried first; if nothing passes, the failure
    is raised loudly with all reports attached.
    """
    reports = []
    for star, side in (("inverse", "right"), ("plain", "right"),
                       ("inverse", "left"), ("plain", "left")):
        rep = sc.ef_convention_report(specs, star=star, reps_side=side)
        reports.append(rep)
        if rep["validated"]:
            return rep
    raise ConventionError(reports)


def verify_basis_with_fallback(n: int, r: int, m, lam_parts, seed: int = 0,
                               retries: int = 3, max_dim: int = 10_000) -> dict:
    """Run the independence certification under the literal convention
    flags first; on failure, rerun under the recorded fallback flags.
    The report always states which flags were used."""
    literal = SchurContext(n, r, m)
    lam = literal.weight(lam_parts)
    report = literal.verify_basis_independence(lam, seed=seed, retries=retries,
                                               max_dim=max_dim)
    report["literal_flags"] = True
    if not report["certified"]:
        fb = SchurContext(n, r, m, m_convention=FALLBACK_FLAGS[0],
                          y_convention=FALLBACK_FLAGS[1])
        fb_report = fb.verify_basis_independence(fb.weight(lam_parts), seed=seed,
                                                 retries=retries, max_dim=max_dim)
        fb_report["literal_flags"] = False
        fb_report["literal_report"] = report
        return fb_report
    return report
