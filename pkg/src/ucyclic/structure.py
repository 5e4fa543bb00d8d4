"""Canonical generator towers, freeness, rank and spanning sets, enumeration.

The canonical form of a code lifts each torsion generator that contributes new
content to a codeword of matching u-valuation, then reduces every higher
u-layer of each lifted generator below the degree of the torsion generator at
that layer.  Reconstruction equality against the original footprint is
asserted on every extraction, so the normalization can never silently change
the code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

import numpy as np

from . import linalg
from .chainring import RkPoly
from .code import CyclicCode, TorsionTower, code_from_generators
from .gfp import FpPoly, PrimeParams, factor_xn_minus_1

__all__ = [
    "CanonicalForm", "SpanningSet", "ConstraintCheck", "ConstraintReport",
    "canonical_form", "is_free", "collapse_coprime", "verify_constraints",
    "rank", "minimal_spanning_set", "cardinality_formula_check",
    "enumerate_coprime",
    "SHAPE_PRINCIPAL", "SHAPE_PRINCIPAL_DIVIDING", "SHAPE_TWO_GENERATOR",
    "SHAPE_FULL_TOWER",
]

SHAPE_PRINCIPAL = "Principal"
SHAPE_PRINCIPAL_DIVIDING = "PrincipalDividing"
SHAPE_TWO_GENERATOR = "TwoGenerator"
SHAPE_FULL_TOWER = "FullTower"


@dataclass(frozen=True)
class CanonicalForm:
    """Torsion tower plus one lifted generator per level that adds content.

    lifted[i] is None when level i repeats the level above it (its torsion
    generator equals the previous one, reading x^n - 1 before level 0).
    """

    tower: TorsionTower
    lifted: tuple
    shape: str

    @property
    def present_levels(self) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.lifted) if g is not None)

    @property
    def generators(self) -> tuple[RkPoly, ...]:
        return tuple(g for g in self.lifted if g is not None)


@dataclass(frozen=True)
class SpanningSet:
    """A minimal spanning set of the code as an R_k-module."""

    elements: tuple[RkPoly, ...]

    @property
    def cardinality(self) -> int:
        return len(self.elements)


def _xn1(params: PrimeParams) -> FpPoly:
    return FpPoly.xn_minus_1(params.n, params.p)


def _valuation_subspace(code: CyclicCode, i: int) -> np.ndarray:
    """Rows spanning {c in C : u-valuation(c) >= i} inside F_p^(kn)."""
    p, k, n = code.params.p, code.params.k, code.params.n
    if code.dim == 0:
        return np.zeros((0, k * n), dtype=np.int64)
    low = [c for c in range(k * n) if c % k < i]
    lam = linalg.nullspace(code.footprint[:, low].T, p)
    return (lam @ code.footprint) % p


def _lift_level(code: CyclicCode, i: int, gen_i: FpPoly) -> RkPoly:
    """A codeword of u-valuation exactly i whose layer i equals gen_i."""
    params = code.params
    clean = RkPoly.from_fp(gen_i, params, level=i)
    if code.contains(clean):
        return clean
    p, k, n = params.p, params.k, params.n
    V = _valuation_subspace(code, i)
    cols = [c for c in range(k * n) if c % k == i]
    target = np.array(gen_i.padded(n), dtype=np.int64)
    mu = linalg.solve(V[:, cols].T, target, p)
    assert mu is not None, "torsion generator not reachable at its own level"
    vec = (mu @ V) % p
    return RkPoly.from_vector(vec.tolist(), params)


def canonical_form(code: CyclicCode) -> CanonicalForm:
    """Extract the canonical tower of lifted generators for the code."""
    params = code.params
    tower = code.torsion_tower()
    xn1 = _xn1(params)
    present = []
    for i, g in enumerate(tower.gens):
        prev = tower.gens[i - 1] if i else xn1
        if g != prev:
            present.append(i)
    lifted: list[RkPoly | None] = [None] * params.k
    for i in reversed(present):
        w = _lift_level(code, i, tower.gens[i])
        # reduce higher layers below the degree of the torsion generator there
        for j in range(i + 1, params.k):
            layer = w.ulayers[j]
            gj = tower.gens[j]
            if layer.degree >= gj.degree:
                q, _ = divmod(layer, gj)
                lvl = max(l for l in present if i <= l <= j)
                base = w if lvl == i else lifted[lvl]
                w = (w - RkPoly.from_fp(q, params).mul_mod(base.times_u(j - lvl))).mod_xn()
        assert w.u_valuation() == i and w.ulayers[i] == tower.gens[i]
        lifted[i] = w
    gens = [g for g in lifted if g is not None]
    assert code_from_generators(params, gens) == code, \
        "lifted generators do not reconstruct the code"
    shape = _classify_shape(code, tower, present, lifted)
    return CanonicalForm(tower, tuple(lifted), shape)


def _classify_shape(code, tower, present, lifted) -> str:
    params = code.params
    if code.dim == 0:
        return SHAPE_FULL_TOWER
    if params.coprime:
        return SHAPE_PRINCIPAL
    if len(present) == 1:
        i = present[0]
        if i == 0 and lifted[0].divides(RkPoly.from_fp(_xn1(params), params)):
            return SHAPE_PRINCIPAL_DIVIDING
        return SHAPE_PRINCIPAL
    if len(present) == 2:
        return SHAPE_TWO_GENERATOR
    return SHAPE_FULL_TOWER


def is_free(code: CyclicCode) -> tuple[bool, RkPoly | None]:
    """Whether the code is a free R_k-module, with the principal witness.

    Free means all torsion generators coincide; the witness is then the single
    lifted generator and it must divide x^n - 1 in R_k, which is asserted.
    The zero code is free of rank 0 and has no witness.
    """
    tower = code.torsion_tower()
    if any(g != tower.gens[0] for g in tower.gens):
        return False, None
    if code.dim == 0:
        return True, None
    cf = canonical_form(code)
    witness = cf.lifted[0]
    assert witness is not None
    assert witness.divides(RkPoly.from_fp(_xn1(code.params), code.params)), \
        "free witness fails to divide x^n - 1 in R_k"
    return True, witness


def collapse_coprime(code: CyclicCode) -> RkPoly:
    """Single generator sum(u^i * tower_i) for gcd(n, p) = 1; footprint-checked."""
    params = code.params
    if not params.coprime:
        raise ValueError("collapse requires n coprime to p")
    tower = code.torsion_tower()
    h = RkPoly(tuple(tower.gens), params).mod_xn()
    assert code_from_generators(params, [h]) == code, \
        "collapsed generator does not reproduce the code"
    return h


@dataclass(frozen=True)
class ConstraintCheck:
    """One mixing-layer divisibility condition of the canonical form.

    level/layer locate the mixing polynomial (layer > level of the lifted
    generator at `level`).  chain_cofactors_ok divides by the mixed cofactor
    product prod_t (x^n-1)/tower_t for t = level..layer-1;
    repeated_cofactors_ok uses ((x^n-1)/tower_level)^(layer-level) instead.
    """

    level: int
    layer: int
    mixing: FpPoly
    vacuous: bool
    chain_cofactors_ok: bool
    repeated_cofactors_ok: bool
    deg_mixing: object
    deg_bound: int


@dataclass(frozen=True)
class ConstraintReport:
    shape: str
    chain_ok: bool
    checks: tuple[ConstraintCheck, ...]

    @property
    def all_chain_cofactors_ok(self) -> bool:
        return all(c.chain_cofactors_ok for c in self.checks)


def verify_constraints(code: CyclicCode) -> ConstraintReport:
    """Divisibility report for the canonical form's mixing layers.

    The torsion chain itself is mandatory (asserted inside torsion_tower); the
    mixing-layer conditions are evaluated and reported in both readings, never
    enforced.  The zero code yields an empty report.
    """
    cf = canonical_form(code)
    tower = cf.tower
    if code.dim == 0:
        return ConstraintReport(cf.shape, True, ())
    params = code.params
    xn1 = _xn1(params)
    checks = []
    for s in cf.present_levels:
        g_s = cf.lifted[s]
        for j in range(s + 1, params.k):
            m = g_s.ulayers[j]
            gj = tower.gens[j]
            if m.is_zero:
                checks.append(ConstraintCheck(s, j, m, True, True, True,
                                              m.degree, gj.degree))
                continue
            mixed = m
            for t in range(s, j):
                mixed = mixed * (xn1 // tower.gens[t])
            chain_ok = (mixed % gj).is_zero
            cof = xn1 // tower.gens[s]
            repeated = m
            for _ in range(j - s):
                repeated = repeated * cof
            repeated_ok = (repeated % gj).is_zero
            checks.append(ConstraintCheck(s, j, m, False, chain_ok, repeated_ok,
                                          m.degree, gj.degree))
    return ConstraintReport(cf.shape, True, tuple(checks))


def rank(code: CyclicCode) -> int:
    """n minus the degree of the top torsion generator; 0 for the zero code."""
    if code.dim == 0:
        return 0
    return code.params.n - code.torsion_tower().gens[-1].degree


def minimal_spanning_set(code: CyclicCode) -> SpanningSet:
    """x^j-multiples of the lifted generators, one run per torsion degree gap.

    Level i contributes x^j * G_i for j below (previous tower degree - its
    own), reading n in front of level 0.  Both the R_k-span equality and
    leave-one-out minimality are asserted.
    """
    if code.dim == 0:
        raise ValueError("zero code has no spanning set")
    params = code.params
    cf = canonical_form(code)
    degs = cf.tower.degrees
    elements = []
    for i in range(params.k):
        count = (params.n if i == 0 else degs[i - 1]) - degs[i]
        for j in range(count):
            elements.append(cf.lifted[i].shift_x(j).mod_xn())
    assert len(elements) == params.n - degs[-1]
    assert _module_span(params, elements) == code, "spanning set misses the code"
    for drop in range(len(elements)):
        rest = elements[:drop] + elements[drop + 1:]
        assert _module_span(params, rest) != code, \
            "spanning set is not minimal"
    return SpanningSet(tuple(elements))


def _module_span(params: PrimeParams, elements) -> CyclicCode:
    """The R_k-linear span (no x-multiples) of the elements, as a code object.

    Span rows are u^m * e over F_p; closure assertions are skipped since a
    bare module span need not be an ideal.
    """
    rows = []
    for e in elements:
        v = np.array(e.to_vector(), dtype=np.int64)
        for _ in range(params.k):
            rows.append(v)
            n, k = params.n, params.k
            m = v.reshape(n, k)
            out = np.zeros_like(m)
            out[:, 1:] = m[:, :-1]
            v = out.reshape(-1)
    M = linalg.as_matrix(rows, params.k * params.n, params.p)
    R, piv = linalg.rref(M, params.p)
    return CyclicCode(params, (), R, piv)


def cardinality_formula_check(code: CyclicCode) -> tuple[int, int, bool]:
    """(dim, formula exponent, equal): log_p |C| against the tower degrees.

    For k = 2 the tower formula specializes to 2n - 2r on free codes and to
    2n - r - t otherwise.
    """
    tower = code.torsion_tower()
    n = code.params.n
    rhs = sum(n - d for d in tower.degrees)
    return code.dim, rhs, code.dim == rhs


def enumerate_coprime(params: PrimeParams, cap: int = 1 << 20) -> list[CyclicCode]:
    """Every cyclic code of length n over R_k when gcd(n, p) = 1.

    One chain per componentwise-monotone exponent vector over the squarefree
    factorization of x^n - 1: each irreducible factor appears in the bottom
    t levels of the tower for some threshold t in [0, k].  Codes are
    deduplicated by footprint and sorted by (dim, footprint bytes), with the
    zero code last.
    """
    if not params.coprime:
        raise ValueError("enumeration implemented for coprime case only")
    facs = [q for q, _ in factor_xn_minus_1(params)]
    count = (params.k + 1) ** len(facs)
    if count > cap:
        raise ValueError(f"divisor-chain count too large: {count} chains exceed cap {cap}")
    xn1 = _xn1(params)
    seen: dict[bytes, CyclicCode] = {}
    for thresholds in itertools.product(range(params.k + 1), repeat=len(facs)):
        gens = []
        for i in range(params.k):
            g = prod((q for q, t in zip(facs, thresholds) if t > i),
                     start=FpPoly.one(params.p))
            if g != xn1:
                gens.append(RkPoly.from_fp(g, params, level=i))
        code = code_from_generators(params, gens)
        seen.setdefault(code.footprint_bytes(), code)
    codes = sorted((c for c in seen.values() if c.dim > 0),
                   key=lambda c: (c.dim, c.footprint_bytes()))
    zero = [c for c in seen.values() if c.dim == 0]
    return codes + zero
