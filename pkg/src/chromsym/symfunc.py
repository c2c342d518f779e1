"""Sparse symmetric and quasisymmetric function values with exact coefficients.

Symmetric functions are held in monomial coordinates (partition -> int),
quasisymmetric ones in monomial (M) or fundamental (F) coordinates
(composition -> polynomial in t).  All values are homogeneous of an
explicit degree and zero coefficients are never stored, so equality of
mappings is equality of functions.

Basis changes are exact:

* m -> s and m -> e go through unitriangular Kostka systems solved in
  the canonical (descending) partition order,
* M <-> F uses the refinement order on compositions, with the signed
  inversion checked by round-trip tests rather than trusted.
"""

from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

from .partitions import (
    Composition,
    Partition,
    check_composition,
    check_partition,
    composition_from_descents,
    conjugate,
    descents_from_composition,
    multiplicities,
    partition_of,
    partitions_of,
)
from .tableaux import ides, kostka, reading_word, standard_tableaux
from .tpoly import TPoly


def _as_poly(value) -> TPoly:
    return value if isinstance(value, TPoly) else TPoly((int(value),))


class SymmetricFunctionM:
    """A homogeneous symmetric function in monomial coordinates."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        cleaned: dict[Partition, int] = {}
        for lam, c in dict(coeffs).items():
            lam = check_partition(lam)
            if sum(lam) != degree:
                raise ValueError(f"key {lam} is not a partition of {degree}")
            c = int(c)
            if c:
                cleaned[lam] = c
        self.degree = degree
        self.coeffs = cleaned

    def coefficient(self, lam) -> int:
        return self.coeffs.get(tuple(lam), 0)

    def __eq__(self, other):
        return (
            isinstance(other, SymmetricFunctionM)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"SymmetricFunctionM({self.degree}, {self.coeffs!r})"


class _QuasisymmetricBase:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        cleaned: dict[Composition, TPoly] = {}
        for alpha, c in dict(coeffs).items():
            alpha = check_composition(alpha)
            if sum(alpha) != degree:
                raise ValueError(f"key {alpha} is not a composition of {degree}")
            poly = _as_poly(c)
            if poly:
                cleaned[alpha] = poly
        self.degree = degree
        self.coeffs = cleaned

    def coefficient(self, alpha) -> TPoly:
        return self.coeffs.get(tuple(alpha), TPoly())

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((type(self).__name__, self.degree, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"{type(self).__name__}({self.degree}, {self.coeffs!r})"


class QuasisymmetricM(_QuasisymmetricBase):
    """Monomial-basis quasisymmetric value, composition -> t-polynomial."""


class QuasisymmetricF(_QuasisymmetricBase):
    """Fundamental-basis quasisymmetric value, composition -> t-polynomial."""


# ---------------------------------------------------------------------------
# symmetric basis changes


def m_to_s(f: SymmetricFunctionM) -> dict[Partition, int]:
    """Schur coefficients of f, by the unitriangular Kostka solve."""
    n = f.degree
    out: dict[Partition, int] = {}
    for lam in partitions_of(n):
        acc = f.coefficient(lam)
        for mu, c in out.items():
            if c:
                acc -= kostka(mu, lam) * c
        out[lam] = acc
    return {lam: c for lam, c in out.items() if c}


def schur_m_expansion(schur_coeffs, degree: int) -> SymmetricFunctionM:
    """Re-expand a Schur coefficient vector into monomial coordinates."""
    acc: Counter = Counter()
    for mu, c in dict(schur_coeffs).items():
        mu = check_partition(mu)
        for lam in partitions_of(degree):
            acc[lam] += c * kostka(mu, lam)
    return SymmetricFunctionM(degree, acc)


@lru_cache(maxsize=None)
def _e_to_m_matrix(n: int) -> dict[Partition, dict[Partition, int]]:
    """Coefficient of m_lam in e_mu, for all partitions of n."""
    parts = partitions_of(n)
    matrix: dict[Partition, dict[Partition, int]] = {}
    for mu in parts:
        row = {}
        for lam in parts:
            row[lam] = sum(kostka(nu, mu) * kostka(conjugate(nu), lam) for nu in parts)
        matrix[mu] = row
    return matrix


def m_to_e(f: SymmetricFunctionM) -> dict[Partition, int]:
    """Elementary coefficients of f.

    The system r_lam = sum_mu [m_lam](e_mu) * b_mu is triangular with ones
    on the lam = conjugate(mu) diagonal, so it is solved by scanning mu
    upward in the canonical order.
    """
    n = f.degree
    matrix = _e_to_m_matrix(n)
    out: dict[Partition, int] = {}
    for mu in reversed(partitions_of(n)):
        pivot = conjugate(mu)
        acc = f.coefficient(pivot)
        for nu, b in out.items():
            if b:
                acc -= matrix[nu][pivot] * b
        out[mu] = acc
    return {mu: b for mu, b in out.items() if b}


def elementary_m_expansion(e_coeffs, degree: int) -> SymmetricFunctionM:
    """Re-expand an elementary coefficient vector into monomial coordinates."""
    matrix = _e_to_m_matrix(degree)
    acc: Counter = Counter()
    for mu, b in dict(e_coeffs).items():
        mu = check_partition(mu)
        for lam, c in matrix[mu].items():
            acc[lam] += b * c
    return SymmetricFunctionM(degree, acc)


# ---------------------------------------------------------------------------
# quasisymmetric basis changes


def qsym_M_to_F(f: QuasisymmetricM) -> QuasisymmetricF:
    """Fundamental coordinates of f, by signed refinement inversion."""
    n = f.degree
    out: dict[Composition, TPoly] = {}
    for beta, poly in f.coeffs.items():
        base = set(descents_from_composition(beta))
        others = [i for i in range(1, n) if i not in base]
        for r in range(len(others) + 1):
            sign = 1 if r % 2 == 0 else -1
            for extra in combinations(others, r):
                alpha = composition_from_descents(base.union(extra), n)
                out[alpha] = out.get(alpha, TPoly()) + sign * poly
    return QuasisymmetricF(n, out)


def qsym_F_to_M(f: QuasisymmetricF) -> QuasisymmetricM:
    """Monomial coordinates of f: each F spreads over its refinements."""
    n = f.degree
    out: dict[Composition, TPoly] = {}
    for alpha, poly in f.coeffs.items():
        base = set(descents_from_composition(alpha))
        others = [i for i in range(1, n) if i not in base]
        for r in range(len(others) + 1):
            for extra in combinations(others, r):
                beta = composition_from_descents(base.union(extra), n)
                out[beta] = out.get(beta, TPoly()) + poly
    return QuasisymmetricM(n, out)


def is_symmetric(f: QuasisymmetricM) -> bool:
    """Whether rearranged compositions always carry equal coefficients."""
    seen: set[Partition] = set()
    for alpha in f.coeffs:
        seen.add(partition_of(alpha))
    for lam in seen:
        reference = None
        for alpha in set(permutations(lam)):
            poly = f.coefficient(alpha)
            if reference is None:
                reference = poly
            elif poly != reference:
                return False
    return True


def monomial_to_quasi(f: SymmetricFunctionM) -> QuasisymmetricM:
    """Reinterpret m-coordinates quasisymmetrically: m_lam spreads over
    the distinct rearrangements of lam."""
    out: dict[Composition, TPoly] = {}
    for lam, c in f.coeffs.items():
        for alpha in set(permutations(lam)):
            out[alpha] = TPoly((c,))
    return QuasisymmetricM(f.degree, out)


def collapse_t(f):
    """Substitute t = 1 in every coefficient, preserving the type."""
    return type(f)(f.degree, {a: TPoly((p.subs(1),)) for a, p in f.coeffs.items()})


def specialize_w_k(f: SymmetricFunctionM, k: int) -> int:
    """Evaluate f at x_1 = ... = x_k = 1 and all other variables 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = 0
    for lam, c in f.coeffs.items():
        ell = len(lam)
        if ell > k:
            continue
        ways = factorial(k) // factorial(k - ell)
        for m in multiplicities(lam).values():
            ways //= factorial(m)
        total += c * ways
    return total


def hook_coefficient_of_F(f, k: int) -> TPoly:
    """Coefficient at the hook composition (k, 1, ..., 1)."""
    n = f.degree
    if not 1 <= k <= n:
        raise ValueError(f"hook arm length must be in 1..{n}, got {k}")
    return f.coefficient((k,) + (1,) * (n - k))


def gessel_schur_F(lam) -> QuasisymmetricF:
    """Fundamental expansion of the Schur function s_lam.

    One term per standard tableau of shape lam, indexed by the descent
    composition of the inverse of its reading word.
    """
    lam = check_partition(lam)
    n = sum(lam)
    counts: Counter = Counter()
    for t in standard_tableaux(lam):
        counts[composition_from_descents(ides(reading_word(t)), n)] += 1
    return QuasisymmetricF(n, {a: TPoly((c,)) for a, c in counts.items()})


# ---------------------------------------------------------------------------
# canonical serialization


def canonical_items(f) -> list:
    """(key, coefficient) pairs in canonical descending key order."""
    if isinstance(f, SymmetricFunctionM):
        return [(lam, f.coeffs[lam]) for lam in sorted(f.coeffs, reverse=True)]
    return [(a, f.coeffs[a]) for a in sorted(f.coeffs, reverse=True)]


def serialize(f) -> str:
    """Canonical text form: JSON list of [parts, poly-coefficients] pairs."""
    pairs = []
    for key, c in canonical_items(f):
        coeffs = [c] if isinstance(c, int) else list(c.coeffs)
        pairs.append([list(key), coeffs])
    return json.dumps(pairs, separators=(",", ":"))
