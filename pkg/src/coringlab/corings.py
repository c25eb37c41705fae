"""Corings with a grouplike element over a finite-dimensional base.

A coring is handed to the constructor as raw data — base algebra,
carrier dimension, commuting left/right base actions, coproduct into
the carrier's tensor square over the base, counit, grouplike vector —
and every axiom is checked exactly before the constructor returns, so a
CoringWithGrouplike value in hand is itself a certificate.

Three builders produce the corings the theory needs: the endomorphism
coring of a depth-two extension (with its f2 certificate), the
canonical coring on A (x)_B A, and the coalgebra of a Hopf algebra
viewed as a coring over the ground field.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebras import Extension, FinDimAlgebra, HopfData, centralizer, one_dim_algebra, subalgebra_on
from .errors import AxiomError, NoD2CertificateError, NotWellDefinedError
from .homspaces import BimoduleHomSpace, build_hom, outer_left_action, outer_right_action
from .linalg import (
    Matrix,
    QuotientSpace,
    Subspace,
    induced_map,
    inverse,
    kernel_rows_with_free,
    member_coords,
    mul_mod,
    rank_of,
    trivial_quotient,
)
from .reporting import Report
from .tensors import balanced_pair, balanced_power, build_power, embed_pure, mult_at


class CoringWithGrouplike:
    """Verified (base, carrier, actions, coproduct, counit, grouplike) data.

    ``left_mats[j]`` / ``right_mats[j]`` are the carrier matrices of the
    j-th base basis element acting on the left / right.  ``coproduct``
    maps carrier coordinates into ``power(2)`` coordinates, ``counit``
    maps them to base coordinates.
    """

    __slots__ = ("base", "carrier_dim", "left_mats", "right_mats", "coproduct",
                 "counit", "grouplike", "_powers")

    def __init__(self, base: FinDimAlgebra, carrier_dim: int, left_mats,
                 right_mats, coproduct: Matrix, counit: Matrix, grouplike,
                 powers=None):
        self.base = base
        self.carrier_dim = int(carrier_dim)
        self.left_mats = list(left_mats)
        self.right_mats = list(right_mats)
        self.coproduct = coproduct
        self.counit = counit
        self.grouplike = np.asarray(grouplike, dtype=np.int64) % base.p
        self._powers = dict(powers) if powers else {}
        failures = self._axiom_failures()
        if failures:
            raise AxiomError("coring axioms violated: " + "; ".join(failures))

    @property
    def p(self) -> int:
        return self.base.p

    def left_action(self, coords) -> Matrix:
        """Carrier matrix of the base element with the given coordinates."""
        return self._combine(coords, self.left_mats)

    def right_action(self, coords) -> Matrix:
        return self._combine(coords, self.right_mats)

    def _combine(self, coords, mats) -> Matrix:
        c = self.carrier_dim
        coords = np.asarray(coords, dtype=np.int64).reshape(1, -1) % self.p
        stack = np.stack([m.a for m in mats]).reshape(len(mats), c * c)
        return Matrix(self.p, mul_mod(coords, stack, self.p).reshape(c, c))

    def power(self, n: int) -> QuotientSpace:
        """The carrier's n-fold tensor power over the base, cached."""
        if n < 1:
            raise ValueError("coring tensor powers start at n = 1")
        q = self._powers.get(n)
        if q is None:
            q = balanced_power(self.p, self.carrier_dim,
                               [m.a for m in self.right_mats],
                               [m.a for m in self.left_mats], n)
            self._powers[n] = q
        return q

    # -- construction-time verification ------------------------------------

    def _axiom_failures(self) -> list[str]:
        p = self.p
        c = self.carrier_dim
        db = self.base.dim
        if len(self.left_mats) != db or len(self.right_mats) != db:
            raise AxiomError("one action matrix per base basis element is required")
        for m in self.left_mats + self.right_mats:
            if m.shape != (c, c):
                raise AxiomError(f"action matrix shape {m.shape}, expected {(c, c)}")
        sq = self.power(2)
        if self.coproduct.shape != (sq.dim, c):
            raise AxiomError(
                f"coproduct shape {self.coproduct.shape}, expected {(sq.dim, c)}")
        if self.counit.shape != (db, c):
            raise AxiomError(f"counit shape {self.counit.shape}, expected {(db, c)}")
        if self.grouplike.shape != (c,):
            raise AxiomError(f"grouplike has length {self.grouplike.shape}, expected {c}")

        fails = []
        ident = Matrix.identity(p, c)
        if self.left_action(self.base.unit) != ident:
            fails.append("left action is not unital")
        if self.right_action(self.base.unit) != ident:
            fails.append("right action is not unital")
        for i in range(db):
            for j in range(db):
                prod = self.base.tensor[i, j]
                if self.left_action(prod) != self.left_mats[i] @ self.left_mats[j]:
                    fails.append(f"left action not multiplicative (i={i}, j={j})")
                if self.right_action(prod) != self.right_mats[j] @ self.right_mats[i]:
                    fails.append(f"right action not antimultiplicative (i={i}, j={j})")
                if self.left_mats[i] @ self.right_mats[j] != self.right_mats[j] @ self.left_mats[i]:
                    fails.append(f"left and right actions do not commute (i={i}, j={j})")
        if fails:
            # bimodule structure is broken; the quotient checks below would
            # only cascade
            return fails

        eye_c = np.eye(c, dtype=np.int64)
        eps = self.counit.a
        try:
            for j in range(db):
                e_j = np.zeros(db, dtype=np.int64)
                e_j[j] = 1
                lq = induced_map(sq, sq, Matrix(p, np.kron(self.left_mats[j].a, eye_c)))
                if self.coproduct @ self.left_mats[j] != lq @ self.coproduct:
                    fails.append(f"coproduct is not left-linear over the base (index {j})")
                rq = induced_map(sq, sq, Matrix(p, np.kron(eye_c, self.right_mats[j].a)))
                if self.coproduct @ self.right_mats[j] != rq @ self.coproduct:
                    fails.append(f"coproduct is not right-linear over the base (index {j})")
                if self.counit @ self.left_mats[j] != self.base.left_mul(e_j) @ self.counit:
                    fails.append(f"counit is not left-linear over the base (index {j})")
                if self.counit @ self.right_mats[j] != self.base.right_mul(e_j) @ self.counit:
                    fails.append(f"counit is not right-linear over the base (index {j})")

            cube = self.power(3)
            cop_amb = mul_mod(sq.section.a, self.coproduct.a, p)
            expand_first = induced_map(sq, cube, Matrix(p, np.kron(cop_amb, eye_c)))
            expand_second = induced_map(sq, cube, Matrix(p, np.kron(eye_c, cop_amb)))
            if expand_first @ self.coproduct != expand_second @ self.coproduct:
                fails.append("coproduct is not coassociative")

            carrier = trivial_quotient(p, c)
            left_amb = np.zeros((c, c * c), dtype=np.int64)
            right_amb = np.zeros((c, c * c), dtype=np.int64)
            for j in range(db):
                left_amb = (left_amb + np.kron(eps[j : j + 1, :], self.left_mats[j].a)) % p
                right_amb = (right_amb + np.kron(self.right_mats[j].a, eps[j : j + 1, :])) % p
            if induced_map(sq, carrier, Matrix(p, left_amb)) @ self.coproduct != ident:
                fails.append("left counit law fails")
            if induced_map(sq, carrier, Matrix(p, right_amb)) @ self.coproduct != ident:
                fails.append("right counit law fails")
        except NotWellDefinedError as err:
            fails.append(f"structure maps do not descend to the base quotient: {err}")

        g = self.grouplike
        if not np.array_equal(self.coproduct.apply(g), sq.project(np.kron(g, g))):
            fails.append("grouplike does not split under the coproduct")
        if not np.array_equal(self.counit.apply(g), self.base.unit):
            fails.append("counit of the grouplike is not one")
        return fails


# ---------------------------------------------------------------------------
# the endomorphism coring and its depth-two certificate


@dataclass
class D2Certificate:
    """Outcome of the f2 bijectivity test, plus the spaces it was built on."""

    extension: Extension
    s_space: BimoduleHomSpace
    r_space: Subspace
    hom_space: BimoduleHomSpace
    square: QuotientSpace
    left_mats: list
    right_mats: list
    f2: Matrix
    s_dim: int
    r_dim: int
    square_dim: int
    hom_dim: int
    bijective: bool


def _endo_action_mats(e: Extension, s_space: BimoduleHomSpace, r_space: Subspace):
    """Matrices of r . alpha = lambda_r o alpha and alpha . r = rho_r o alpha
    on S coordinates, one per centralizer basis element."""
    a = e.ambient
    p = a.p
    left, right = [], []
    for r in r_space.rows:
        lam = a.left_mul(r)
        rho = a.right_mul(r)
        lcols = [s_space.coords_of(lam @ mat) for mat in s_space.basis]
        rcols = [s_space.coords_of(rho @ mat) for mat in s_space.basis]
        left.append(Matrix(p, np.stack(lcols, axis=1)))
        right.append(Matrix(p, np.stack(rcols, axis=1)))
    return left, right


def build_f2(e: Extension) -> D2Certificate:
    """Evaluate alpha (x) beta |-> (x (x) y |-> alpha(x) beta(y)) and test rank."""
    a = e.ambient
    p = a.p
    s_space = build_hom(e, build_power(e, 1))
    r_space = centralizer(e)
    left_mats, right_mats = _endo_action_mats(e, s_space, r_space)
    square = balanced_power(p, s_space.dim,
                            [m.a for m in right_mats], [m.a for m in left_mats], 2)
    power2 = build_power(e, 2)
    hom_space = build_hom(e, power2)
    cols = []
    for alpha in s_space.basis:
        for beta in s_space.basis:
            pair = mul_mod(a.mult.a, np.kron(alpha.a, beta.a) % p, p)
            cols.append(hom_space.coords_of(Matrix(p, mul_mod(pair, power2.space.section.a, p))))
    on_pure = np.stack(cols, axis=1)
    rel = square.relations.rows
    if rel.shape[0] and mul_mod(on_pure, rel.T, p).any():
        raise NotWellDefinedError("f2 does not vanish on the tensor-over-R relations")
    f2 = Matrix(p, mul_mod(on_pure, square.section.a, p))
    bijective = hom_space.dim == square.dim and rank_of(f2.a, p) == square.dim
    return D2Certificate(
        extension=e, s_space=s_space, r_space=r_space, hom_space=hom_space,
        square=square, left_mats=left_mats, right_mats=right_mats, f2=f2,
        s_dim=s_space.dim, r_dim=r_space.dim, square_dim=square.dim,
        hom_dim=hom_space.dim, bijective=bijective)


def endo_coring(e: Extension, cert: D2Certificate | None = None) -> CoringWithGrouplike:
    """The coring of B-bimodule endomorphisms of A over the centralizer.

    Requires the depth-two certificate; the coproduct is obtained by
    pulling alpha o (multiplication) back through f2.  A certificate
    already in hand can be passed in to avoid rebuilding it.
    """
    if cert is None:
        cert = build_f2(e)
    if not cert.bijective:
        raise NoD2CertificateError(
            f"f2 is {cert.hom_dim} x {cert.square_dim} with rank "
            f"{rank_of(cert.f2.a, e.ambient.p)}; the depth-two certificate fails")
    a = e.ambient
    p = a.p
    base, _ = subalgebra_on(a, cert.r_space, [f"r{i}" for i in range(cert.r_dim)])
    f2_inv = inverse(cert.f2)
    mu = mul_mod(a.mult.a, cert.hom_space.source.space.section.a, p)
    cop_cols = []
    for alpha in cert.s_space.basis:
        after_mult = Matrix(p, mul_mod(alpha.a, mu, p))
        cop_cols.append(f2_inv.apply(cert.hom_space.coords_of(after_mult)))
    coproduct = Matrix(p, np.stack(cop_cols, axis=1))
    eps_cols = []
    for alpha in cert.s_space.basis:
        at_unit = cert.r_space.coords_of(alpha.apply(a.unit))
        if at_unit is None:
            raise AssertionError("evaluation at the unit lands in the centralizer")
        eps_cols.append(at_unit)
    counit = Matrix(p, np.stack(eps_cols, axis=1))
    grouplike = cert.s_space.coords_of(Matrix.identity(p, a.dim))
    coring = CoringWithGrouplike(base, cert.s_dim, cert.left_mats, cert.right_mats,
                                 coproduct, counit, grouplike,
                                 powers={2: cert.square})
    # the two splitting laws particular to this coring
    for i, r in enumerate(cert.r_space.rows):
        lam = cert.s_space.coords_of(a.left_mul(r))
        if not np.array_equal(coproduct.apply(lam),
                              cert.square.project(np.kron(lam, grouplike))):
            raise AxiomError(
                f"coproduct of a left multiplication is not lambda (x) identity (index {i})")
        rho = cert.s_space.coords_of(a.right_mul(r))
        if not np.array_equal(coproduct.apply(rho),
                              cert.square.project(np.kron(grouplike, rho))):
            raise AxiomError(
                f"coproduct of a right multiplication is not identity (x) rho (index {i})")
    return coring


def sweedler_coring(e: Extension) -> CoringWithGrouplike:
    """A (x)_B A as a coring over A, with x (x) y |-> x (x) 1 (x) y."""
    a = e.ambient
    p = a.p
    d = a.dim
    t2 = build_power(e, 2)
    q = t2.space
    eye_d = np.eye(d, dtype=np.int64)
    left_mats = [outer_left_action(e, t2, eye_d[j]) for j in range(d)]
    right_mats = [outer_right_action(e, t2, eye_d[j]) for j in range(d)]
    sq = balanced_power(p, q.dim, [m.a for m in right_mats], [m.a for m in left_mats], 2)
    into_left = mul_mod(q.projection.a, np.kron(eye_d, a.unit.reshape(d, 1)), p)
    into_right = mul_mod(q.projection.a, np.kron(a.unit.reshape(d, 1), eye_d), p)
    coproduct = induced_map(q, sq, Matrix(p, np.kron(into_left, into_right)))
    counit = mult_at(t2, build_power(e, 1), 1)
    grouplike = embed_pure(t2, [a.unit, a.unit])
    return CoringWithGrouplike(a, q.dim, left_mats, right_mats, coproduct,
                               counit, grouplike, powers={2: sq})


def hopf_coring(h: HopfData) -> CoringWithGrouplike:
    """The underlying coalgebra of a Hopf algebra, as a coring over the
    ground field with the unit as grouplike."""
    base = one_dim_algebra(h.algebra.field)
    p = h.algebra.p
    d = h.algebra.dim
    ident = Matrix.identity(p, d)
    sq = balanced_power(p, d, [ident.a], [ident.a], 2)
    coproduct = Matrix(p, mul_mod(sq.projection.a, h.coproduct.a, p))
    return CoringWithGrouplike(base, d, [ident], [ident], coproduct,
                               Matrix(p, h.counit.a), h.algebra.unit,
                               powers={2: sq})


def smash_check(e: Extension) -> Report:
    """Compare A (x)_R S with the right-B-linear endomorphisms of A via
    a (x) alpha |-> lambda_a o alpha; report dimensions and bijectivity."""
    a = e.ambient
    p = a.p
    d = a.dim
    rep = Report("smash-product")
    s_space = build_hom(e, build_power(e, 1))
    r_space = centralizer(e)
    left_mats, _ = _endo_action_mats(e, s_space, r_space)
    mixed = balanced_pair(p, d, s_space.dim,
                          [a.right_mul(r).a for r in r_space.rows],
                          [m.a for m in left_mats])
    eye_d = np.eye(d, dtype=np.int64)
    blocks = []
    for b in e.sub_images():
        rb = a.right_mul(b).a
        m = (np.kron(eye_d, rb.T) - np.kron(rb, eye_d)) % p
        if m.any():
            blocks.append(m)
    if blocks:
        end_rows, end_free = kernel_rows_with_free(np.vstack(blocks), p)
    else:
        end_rows = np.eye(d * d, dtype=np.int64)
        end_free = tuple(range(d * d))
    end_dim = end_rows.shape[0]
    cols = []
    for i in range(d):
        lam = a.left_mul(eye_d[i]).a
        for mat in s_space.basis:
            coords = member_coords(end_rows, end_free, mul_mod(lam, mat.a, p).reshape(-1), p)
            if coords is None:
                raise AssertionError("lambda compositions stay right-linear over the sub")
            cols.append(coords)
    on_pure = np.stack(cols, axis=1)
    rel = mixed.relations.rows
    descends = not (rel.shape[0] and mul_mod(on_pure, rel.T, p).any())
    rep.add("map descends to the tensor over the centralizer", descends)
    smash = mul_mod(on_pure, mixed.section.a, p)
    rank = rank_of(smash, p)
    rep.add("smash map bijective", mixed.dim == end_dim and rank == end_dim,
            tensor_dim=mixed.dim, endo_dim=end_dim, rank=rank)
    return rep
