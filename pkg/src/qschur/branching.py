"""Restriction and the branching filtration.

A branch context restricts modules of rank n+1 down to rank n: the
bookkeeping m (every m_k >= n+1) loses one row in its last component,
weights in the image of the row-appending embedding select the restricted
basis, and the removable nodes of lam cut that basis into the layers of
the filtration.  The layer checks certify, at generic specialisations,
that each layer quotient matches the smaller module's tableau count, that
the ladder operators respect the layer order (shape dominance), and that
the marked tableau of each layer is annihilated into the next layer by
every raising operator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import RowSpace, solve_in_span
from .ring import Specialization
from .schur import EFIndex, ModuleElement, SchurContext
from .tableaux import (MultiShape, Multicomposition, TypedTableau,
                       dominance_multiweight, enumerate_ssyt, remove_node,
                       removable_nodes, t_lambda_x)

__all__ = ["BranchContext", "FiltrationLayer"]


@dataclass(frozen=True)
class FiltrationLayer:
    """Layer i of the filtration: all labels at positions >= i, and the
    quotient labels whose marked entry sits exactly at node i."""

    index: int
    node: tuple
    members: tuple
    quotient: tuple


class BranchContext:
    """Restriction data for one multipartition of n+1 boxes."""

    def __init__(self, n: int, r: int, m, lam_parts,
                 m_convention: str = "plain", y_convention: str = "plain"):
        m = tuple(int(x) for x in m)
        if any(mk < n + 1 for mk in m):
            raise ValueError("every component bound must be at least n+1")
        self.n = n
        self.r = r
        self.big = SchurContext(n + 1, r, m, m_convention=m_convention,
                                y_convention=y_convention)
        self.mprime = m[:-1] + (m[-1] - 1,)
        self.small_shape = MultiShape(self.mprime)
        self.lam = self.big.weight(lam_parts)
        if not self.lam.is_partition():
            raise ValueError("the branching weight must be a multipartition")
        # filtration order: nodes counted from the top down (first node =
        # the greatest one).  Under the ascending enumeration the spans
        # fail to be submodules: ladder images flow toward larger stripped
        # shapes, which live at later positions of this list.
        self.nodes = list(reversed(removable_nodes(self.lam)))
        self._labels = None
        self._vectors = {}

    @property
    def m(self):
        return self.big.m

    # -- the restricted basis ------------------------------------------------

    def in_gamma_image(self, mu: Multicomposition) -> bool:
        return mu.parts[-1][-1] == 1

    def restriction_labels(self):
        """All (mu, A) of the restricted module, deterministic order."""
        if self._labels is None:
            out = []
            for A in enumerate_ssyt(self.lam, self.big.shape):
                mu = A.type_weight()
                if self.in_gamma_image(mu):
                    out.append((mu, A))
            self._labels = out
        return self._labels

    def marked_node(self, A: TypedTableau):
        """The node carrying the maximal symbol (m_r, r); unique for
        restriction labels."""
        top = (self.m[-1], self.r)
        spots = A.positions_of(top)
        if len(spots) != 1:
            raise ValueError("label does not carry exactly one marked entry")
        return spots[0]

    def layer_index(self, A: TypedTableau) -> int:
        return self.nodes.index(self.marked_node(A)) + 1

    def filtration_layers(self):
        labels = self.restriction_labels()
        layers = []
        for i, node in enumerate(self.nodes, start=1):
            members = tuple(lab for lab in labels
                            if self.layer_index(lab[1]) >= i)
            quotient = tuple(lab for lab in labels
                             if self.layer_index(lab[1]) == i)
            layers.append(FiltrationLayer(i, node, members, quotient))
        return layers

    # -- combinatorial half -----------------------------------------------------

    def strip_marked(self, A: TypedTableau) -> TypedTableau:
        """Remove the marked box: a semistandard tableau of the smaller
        shape over the reduced bookkeeping."""
        node = self.marked_node(A)
        small = remove_node(self.lam, node, m=self.lam.m)
        small = Multicomposition([list(c) for c in small.parts], m=self.mprime)
        entries = []
        for c, comp in enumerate(small.parts, start=1):
            rows = []
            for a, w in enumerate(comp, start=1):
                rows.append([A.entry(a, b, c) for b in range(1, w + 1)])
            entries.append(rows)
        return TypedTableau(small, self.small_shape, entries)

    def branch_dim_identity(self, check_bijection: bool = True) -> dict:
        """Layer quotient sizes against the smaller module's tableau
        counts, through the explicit strip-the-marked-box bijection."""
        layers = self.filtration_layers()
        small = SchurContext(self.n, self.r, self.mprime,
                             m_convention=self.big.algebra.m_convention,
                             y_convention=self.big.algebra.y_convention)
        out_layers = []
        holds = True
        for layer in layers:
            lam_small = remove_node(self.lam, layer.node, m=self.lam.m)
            lam_small = Multicomposition(
                [list(c) for c in lam_small.parts], m=self.mprime)
            wd = small.weyl_dim_count(lam_small)
            qd = len(layer.quotient)
            match = wd == qd
            if check_bijection:
                stripped = {self.strip_marked(A) for _, A in layer.quotient}
                target = set(enumerate_ssyt(lam_small, self.small_shape))
                match = match and stripped == target \
                    and len(stripped) == len(layer.quotient)
            holds = holds and match
            out_layers.append({"node": list(layer.node),
                               "quotient_dim": qd,
                               "weyl_dim": wd,
                               "match": match})
        total = len(self.restriction_labels())
        holds = holds and total == sum(l["quotient_dim"] for l in out_layers)
        return {"lambda": self.lam.to_json(), "layers": out_layers,
                "identity_holds": holds}

    # -- algebraic half ------------------------------------------------------------

    def basis_element(self, mu: Multicomposition, A: TypedTableau):
        key = (mu.parts, A.entries)
        if key not in self._vectors:
            self._vectors[key] = self.big.basis_vector(self.lam, mu, A).elem
        return self._vectors[key]

    def small_ef_indices(self):
        """Gamma'(m'): the ladder indices of the restricted algebra."""
        return self.big.ef_indices(self.small_shape)

    def _span_of_labels(self, labels, weight, spec):
        space = RowSpace(self.big.algebra.dimension())
        for mu, A in labels:
            if mu == weight:
                space.add(self.basis_element(mu, A).specialize_vector(spec))
        return space

    def tau_of_layer(self, i: int) -> Multicomposition:
        """The type of the marked tableau of layer i."""
        return t_lambda_x(self.lam, self.nodes[i - 1],
                          self.big.shape).type_weight()

    def highest_weight_check(self, i: int, spec: Specialization,
                             conventions_validated: bool = True) -> dict:
        """Every raising operator of the restricted algebra sends the
        layer's marked vector into the span of the deeper layers."""
        if not conventions_validated:
            return {"layer": i, "certified": False,
                    "reason": "ladder conventions failed validation"}
        node = self.nodes[i - 1]
        X = t_lambda_x(self.lam, node, self.big.shape)
        tau = X.type_weight()
        hX = ModuleElement(tau, self.basis_element(tau, X))
        deeper = [lab for lab in self.restriction_labels()
                  if self.layer_index(lab[1]) >= i + 1]
        checks = []
        certified = True
        for idx in self.small_ef_indices():
            image = self.big.ef_apply(idx, "E", hX)
            entry = {"idx": [idx.i, idx.k]}
            if image.elem.is_zero():
                entry["status"] = "zero_exact"
            else:
                span = self._span_of_labels(deeper, image.weight, spec)
                inside = span.contains(image.elem.specialize_vector(spec))
                entry["status"] = "in_deeper_span" if inside else "FAILED"
                certified = certified and inside
            checks.append(entry)
        return {"layer": i, "node": list(node), "tau": tau.to_json(),
                "checks": checks, "certified": certified}

    def triangularity_check(self, idx: EFIndex, kind: str, mu: Multicomposition,
                            A: TypedTableau, spec: Specialization) -> dict:
        """Expand the ladder image of h_A in the restricted basis and
        assert every contributing tableau dominates A after stripping."""
        me = ModuleElement(mu, self.basis_element(mu, A))
        image = self.big.ef_apply(idx, kind, me)
        base_shape = self.strip_marked(A).shape
        report = {"idx": [idx.i, idx.k], "kind": kind, "mu": mu.to_json()}
        if image.elem.is_zero():
            report["status"] = "zero"
            report["dominance_holds"] = True
            return report
        target = image.weight
        basis_labels = [(nu, B) for (nu, B) in self.restriction_labels()
                        if nu == target]
        rows = [self.basis_element(nu, B).specialize_vector(spec)
                for nu, B in basis_labels]
        status, coeffs = solve_in_span(rows, image.elem.specialize_vector(spec))
        if status != "ok":
            # rank defects and escapes are reported, never ignored
            report["status"] = status
            report["dominance_holds"] = False
            return report
        report["status"] = "expanded"
        holds = True
        support = []
        for (nu, B), c in zip(basis_labels, coeffs):
            if c:
                dom = dominance_multiweight(
                    Multicomposition([list(p) for p in self.strip_marked(B).shape.parts],
                                     m=self.mprime),
                    Multicomposition([list(p) for p in base_shape.parts],
                                     m=self.mprime))
                support.append({"B_type": nu.to_json(), "dominates": dom})
                holds = holds and dom
        report["support"] = support
        report["dominance_holds"] = holds
        return report
