"""Cyclic codes over R_k as ideals of R_k[x]/(x^n - 1).

A code is pinned down by its footprint: the reduced row echelon basis of the
code viewed as an F_p-subspace of F_p^(kn), with coordinate i, layer j in
column i*k + j.  The footprint is canonical, so it is the equality, hashing
and sorting key; the stored generator list is presentation only.  Every
construction asserts closure of the footprint under the cyclic shift
(x-multiplication) and under u-multiplication.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import linalg
from .chainring import RkPoly
from .gfp import FpPoly, PrimeParams, fp_cyclic_min_weight, poly_gcd

__all__ = ["CyclicCode", "TorsionTower", "code_from_generators",
           "code_to_json", "code_from_json", "load_code_file"]


def _shift_x(vec: np.ndarray, k: int) -> np.ndarray:
    # multiply by x mod x^n - 1: coordinate blocks rotate one step
    return np.roll(vec, k)


def _shift_u(vec: np.ndarray, n: int, k: int) -> np.ndarray:
    # multiply by u: layers shift up inside each coordinate block
    m = vec.reshape(n, k)
    out = np.zeros_like(m)
    out[:, 1:] = m[:, :-1]
    return out.reshape(-1)


@dataclass(frozen=True)
class TorsionTower:
    """Monic generators of the torsion codes Tor_0 .. Tor_(k-1) over F_p.

    Tor_i collects the layer-i polynomials of codewords with u-valuation >= i;
    it is a cyclic code over F_p and its monic generator divides the one below
    it.  The zero cyclic code has generator x^n - 1.
    """

    params: PrimeParams
    gens: tuple[FpPoly, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        """(r_1, ..., r_k) with r_{i+1} = degree of tower generator i."""
        return tuple(g.degree for g in self.gens)

    @property
    def dim(self) -> int:
        return sum(self.params.n - g.degree for g in self.gens)


class CyclicCode:
    """An ideal of R_k[x]/(x^n - 1); immutable once constructed."""

    __slots__ = ("params", "generators", "footprint", "pivots", "dim", "_tower")

    def __init__(self, params: PrimeParams, generators, footprint: np.ndarray, pivots):
        self.params = params
        self.generators = tuple(generators)
        footprint = np.ascontiguousarray(footprint, dtype=np.int64)
        footprint.flags.writeable = False
        self.footprint = footprint
        self.pivots = list(pivots)
        self.dim = int(footprint.shape[0])
        self._tower = None

    # -- construction ---------------------------------------------------

    @classmethod
    def from_rows(cls, params: PrimeParams, rows, generators=None) -> "CyclicCode":
        """Build from spanning F_p row vectors; asserts shift and u closure."""
        k, n = params.k, params.n
        M = linalg.as_matrix(list(rows), k * n, params.p)
        R, piv = linalg.rref(M, params.p)
        if generators is None:
            generators = [RkPoly.from_vector(r, params) for r in R.tolist()]
        code = cls(params, generators, R, piv)
        code._assert_closed()
        return code

    def _assert_closed(self):
        p, k, n = self.params.p, self.params.k, self.params.n
        for row in self.footprint:
            assert linalg.in_rowspace(self.footprint, self.pivots, _shift_x(row, k), p), \
                "footprint not closed under the cyclic shift"
            assert linalg.in_rowspace(self.footprint, self.pivots, _shift_u(row, n, k), p), \
                "footprint not closed under u-multiplication"

    # -- identity --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def footprint_bytes(self) -> bytes:
        """Canonical byte serialization of the footprint (entries fit 16 bits)."""
        k, n = self.params.k, self.params.n
        head = f"{self.params.p}:{k}:{n}:{self.dim};".encode()
        return head + self.footprint.astype(">u2").tobytes()

    def __eq__(self, other) -> bool:
        return (isinstance(other, CyclicCode) and self.params == other.params
                and self.dim == other.dim
                and bool(np.array_equal(self.footprint, other.footprint)))

    def __hash__(self):
        return hash(self.footprint_bytes())

    def __repr__(self):
        return (f"CyclicCode(p={self.params.p}, k={self.params.k}, "
                f"n={self.params.n}, dim={self.dim})")

    # -- queries ----------------------------------------------------------

    def contains(self, w: RkPoly) -> bool:
        if w.params != self.params:
            raise ValueError("parameter mismatch")
        vec = np.array(w.to_vector(), dtype=np.int64)
        return linalg.in_rowspace(self.footprint, self.pivots, vec, self.params.p)

    def _torsion_rows(self, i: int) -> np.ndarray:
        """Basis rows of Tor_i: layer-i parts of codewords with valuation >= i."""
        p, k, n = self.params.p, self.params.k, self.params.n
        if self.dim == 0:
            return np.zeros((0, n), dtype=np.int64)
        F = self.footprint
        low = [c for c in range(k * n) if c % k < i]
        lam = linalg.nullspace(F[:, low].T, p)
        V = (lam @ F) % p
        return V[:, [c for c in range(k * n) if c % k == i]]

    def torsion_tower(self) -> TorsionTower:
        if self._tower is not None:
            return self._tower
        p, k, n = self.params.p, self.params.k, self.params.n
        xn1 = FpPoly.xn_minus_1(n, p)
        gens = []
        for i in range(k):
            g = xn1
            for row in self._torsion_rows(i):
                g = poly_gcd(g, FpPoly(row.tolist(), p))
            gens.append(g.monic())
        for i in range(k - 1):
            assert (gens[i] % gens[i + 1]).is_zero, "torsion divisibility chain broken"
        assert (xn1 % gens[0]).is_zero
        assert sum(n - g.degree for g in gens) == self.dim, \
            "torsion degrees inconsistent with code dimension"
        self._tower = TorsionTower(self.params, tuple(gens))
        return self._tower

    def dual(self) -> "CyclicCode":
        """Orthogonal code under the R_k-valued Euclidean inner product.

        v is orthogonal to the code iff all k u-layers of v . f vanish for
        every footprint row f; that is one F_p-linear system in v.
        """
        p, k, n = self.params.p, self.params.k, self.params.n
        kn = k * n
        if self.dim == 0:
            rows = np.eye(kn, dtype=np.int64)
        else:
            eqs = np.zeros((self.dim * k, kn), dtype=np.int64)
            for ridx in range(self.dim):
                f = self.footprint[ridx].reshape(n, k)
                for l in range(k):
                    eq = np.zeros((n, k), dtype=np.int64)
                    for a in range(l + 1):
                        eq[:, a] = f[:, l - a]
                    eqs[ridx * k + l] = eq.reshape(-1)
            rows = linalg.nullspace(eqs, p)
        return CyclicCode.from_rows(self.params, rows)

    # -- distance ----------------------------------------------------------

    def min_distance_bruteforce(self, budget: int = 1 << 24) -> int:
        """Minimum Hamming weight by exhausting all p^dim codewords.

        A coordinate is nonzero when any of its k layers is.
        """
        if self.dim == 0:
            raise ValueError("zero code has no minimum distance")
        return linalg.min_nonzero_weight(self.footprint, self.params.p,
                                         group=self.params.k, budget=budget)

    def min_distance(self, budget: int = 1 << 24) -> int:
        """Minimum Hamming weight via the top torsion code over F_p.

        The weight of the code equals the weight of Tor_(k-1): scaling any
        codeword by a power of u lands in u^(k-1) * Tor_(k-1) without
        increasing its weight.
        """
        if self.dim == 0:
            raise ValueError("zero code has no minimum distance")
        top = self.torsion_tower().gens[-1]
        return fp_cyclic_min_weight(top, self.params, budget=budget)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        p, k, n = self.params.p, self.params.k, self.params.n
        gens = []
        for g in self.generators:
            vec = g.to_vector()
            gens.append([[int(vec[i * k + j]) for j in range(k)] for i in range(n)])
        return {"p": p, "k": k, "n": n, "generators": gens}


def code_from_generators(params: PrimeParams, gens) -> CyclicCode:
    """The ideal generated by the given polynomials, reduced mod x^n - 1.

    The footprint spans {x^i * u^j * g : i < n, j < k, g in gens}.
    """
    k, n = params.k, params.n
    reduced = []
    for g in gens:
        if g.params != params:
            raise ValueError("parameter mismatch among generators")
        reduced.append(g.mod_xn())
    rows = []
    for g in reduced:
        v = np.array(g.to_vector(), dtype=np.int64)
        for _ in range(k):
            w = v
            for _ in range(n):
                rows.append(w)
                w = _shift_x(w, k)
            v = _shift_u(v, n, k)
    return CyclicCode.from_rows(params, rows, generators=reduced)


def _validate_digits(entry, k: int, p: int) -> list[int]:
    if not isinstance(entry, list) or len(entry) != k:
        raise ValueError(f"coefficient entry must be a list of {k} digits")
    digits = []
    for d in entry:
        if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d < p:
            raise ValueError(f"digit out of range [0, {p})")
        digits.append(d)
    return digits


def code_from_json_dict(doc: dict) -> CyclicCode:
    """Parse the canonical interchange document.

    {"p": int, "k": int, "n": int, "generators": [[[d_0..d_{k-1}] x n], ...]}
    with no extra fields.  Generators of degree >= n are rejected.
    """
    if not isinstance(doc, dict):
        raise ValueError("code document must be a JSON object")
    if set(doc) != {"p", "k", "n", "generators"}:
        raise ValueError("code document must have exactly the fields p, k, n, generators")
    params = PrimeParams(doc["p"], doc["k"], doc["n"])
    k, n = params.k, params.n
    gens = []
    for entries in doc["generators"]:
        if not isinstance(entries, list):
            raise ValueError("generator must be a list of coefficient entries")
        for idx, entry in enumerate(entries):
            digits = _validate_digits(entry, k, params.p)
            if idx >= n and any(digits):
                raise ValueError("generator degree >= n; reduce modulo x^n - 1 first")
        layers = [[entries[i][j] if i < len(entries) else 0 for i in range(n)]
                  for j in range(k)]
        gens.append(RkPoly(layers, params))
    return code_from_generators(params, gens)


def code_to_json(code: CyclicCode) -> str:
    return json.dumps(code.to_json_dict(), indent=2) + "\n"


def code_from_json(text: str) -> CyclicCode:
    return code_from_json_dict(json.loads(text))


def load_code_file(path) -> CyclicCode:
    with open(path, "r", encoding="utf-8") as fh:
        return code_from_json(fh.read())
