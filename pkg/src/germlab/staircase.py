"""Combinatorics of monomial ideals: Krull dimension, staircase counting and
Hilbert series numerators.

Everything here works on plain exponent tuples (the leading-term ideal of a
computed basis).  The Hilbert numerator N(T) satisfies

    sum_i dim_K (K[x]/M)_i T^i  =  N(T) / (1-T)^n

and is computed by the classical colon recursion
N(M + (m)) = N(M) - T^{deg m} N(M : m).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import PreconditionError
from .orders import mono_divides, mono_gcd


def minimalize(monos):
    """Minimal generating set of the monomial ideal spanned by `monos`."""
    out = []
    for m in sorted(set(monos), key=lambda t: (sum(t), t)):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def krull_dimension(monos, nvars):
    """dim K[x]/M = nvars - (minimum support hitting set).

    A subset S of variables survives iff no generator's support lies inside
    S, i.e. the complement of S hits every generator's support.
    Returns -1 when 1 is in the ideal (empty variety).
    """
    gens = minimalize(monos)
    if any(sum(m) == 0 for m in gens):
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
    if not supports:
        return nvars
    # branch and bound over hitting sets, smallest first
    best = len(set().union(*supports))

    def search(remaining, chosen):
        nonlocal best
        if chosen >= best:
            return
        if not remaining:
            best = chosen
            return
        sup = min(remaining, key=len)
        for v in sorted(sup):
            rest = [s for s in remaining if v not in s]
            search(rest, chosen + 1)

    search(supports, 0)
    return nvars - best


def staircase_count(monos, nvars):
    """Number of monomials outside the ideal (the colength); requires a
    zero-dimensional staircase, i.e. a pure power of every variable."""
    gens = minimalize(monos)
    if any(sum(m) == 0 for m in gens):
        return 0
    bounds = [None] * nvars
    for m in gens:
        sup = [i for i, e in enumerate(m) if e]
        if len(sup) == 1:
            i = sup[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        raise PreconditionError(
            "staircase is not zero-dimensional (missing a pure power)"
        )
    count = 0
    for point in product(*(range(b) for b in bounds)):
        if not any(mono_divides(g, point) for g in gens):
            count += 1
    return count


def hilbert_numerator(monos, nvars):
    """Coefficient list of N(T) for the monomial ideal (lowest degree first)."""
    gens = tuple(minimalize(monos))
    cache = {}

    def rec(gs):
        if not gs:
            return [1]
        if len(gs) == 1:
            out = [0] * (sum(gs[0]) + 1)
            out[0] = 1
            out[-1] -= 1
            return out
        hit = cache.get(gs)
        if hit is not None:
            return hit
        # pivot on the generator of largest degree; colon shrinks it fast
        pivot = max(gs, key=lambda m: (sum(m), m))
        rest = tuple(m for m in gs if m != pivot)
        colon = tuple(
            minimalize(
                tuple(e - g for e, g in zip(m, mono_gcd(m, pivot)))
                for m in rest
            )
        )
        a = rec(rest)
        b = rec(colon)
        out = list(a) + [0] * max(0, len(b) + sum(pivot) - len(a))
        shift = sum(pivot)
        for i, c in enumerate(b):
            out[shift + i] -= c
        while out and out[-1] == 0:
            out.pop()
        cache[gs] = out
        return out

    if any(sum(m) == 0 for m in gens):
        return []  # unit ideal: zero quotient
    return rec(gens)


def _poly_divide_1mt(coeffs):
    """Divide a Z[T] coefficient list exactly by (1 - T); None if not exact."""
    if not coeffs:
        return None
    # synthetic division: q_i = c_i + q_{i-1}; exact iff the final sum is 0
    q = []
    prev = 0
    for c in coeffs:
        prev = c + prev
        q.append(prev)
    if q[-1] != 0:
        return None
    q.pop()
    return q


@dataclass
class HilbertData:
    """Hilbert series data of a graded quotient: numerator N(T) over
    (1-T)^n, Krull dimension, reduced numerator Q(T) with Q(1) the
    multiplicity (equal to the colength in dimension zero)."""

    numerator_N: list
    dimension_d: int
    reduced_Q: list
    multiplicity_e: int

    @property
    def degree(self):
        return self.multiplicity_e


def hilbert_from_leading_ideal(monos, nvars):
    """HilbertData of K[x]/M for the monomial ideal M."""
    N = hilbert_numerator(monos, nvars)
    if not N:
        return HilbertData([], -1, [], 0)
    Q = list(N)
    divisions = 0
    while divisions < nvars:
        q = _poly_divide_1mt(Q)
        if q is None:
            break
        Q = q
        divisions += 1
    d = nvars - divisions
    e = sum(Q)
    return HilbertData(N, d, Q, e)
