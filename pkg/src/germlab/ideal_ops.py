"""Elimination, intersection, colon ideals and saturation.

Elimination uses a block order on a ring where the block variables come
first.  Intersections and colons go through one auxiliary variable; the
saturation loop is the iterated stabilizing quotient I : J : J : ... with
stabilization detected by ideal equality.
"""

from __future__ import annotations

from .basis import compute_basis, exact_divide
from .errors import PreconditionError
from .ideal import Ideal
from .orders import block, degrevlex
from .poly import Polynomial, RingContext


def migrate(p, target):
    """Re-express p in `target`, matching variables by name.  Every variable
    actually used by p must exist in the target ring."""
    if p.ring == target:
        return p
    pos = []
    for i, v in enumerate(p.ring.variables):
        pos.append(target.variables.index(v) if v in target.variables else None)
    n = target.nvars
    terms = {}
    for m, c in p.terms.items():
        expo = [0] * n
        for i, e in enumerate(m):
            if e:
                if pos[i] is None:
                    raise PreconditionError(
                        f"variable {p.ring.variables[i]!r} does not exist in target ring"
                    )
                expo[pos[i]] = e
        terms[tuple(expo)] = c
    return Polynomial(target, terms)


def _fresh_name(ring, stem="_t"):
    k = 0
    while f"{stem}{k}" in ring.variables:
        k += 1
    return f"{stem}{k}"


def eliminate(I, block_vars, budget=None):
    """Generators of I ∩ K[vars without block_vars].

    Eliminating nothing returns I itself.  The computation runs in an
    affine/global setting (block orders are global)."""
    block_vars = list(block_vars)
    if not block_vars:
        return I
    ring = I.ring
    idx = [ring.var_index(v) for v in block_vars]
    order = block(idx, ring.nvars)
    basis = compute_basis(I.generators, order, budget=budget)
    keep = []
    for g in basis.basis:
        if all(all(m[i] == 0 for i in idx) for m in g.terms):
            keep.append(g)
    if not keep:
        return Ideal(ring, [ring.zero()], allow_zero_prune=False) if False else None
    return Ideal(ring, keep)


def restrict_to_subring(I, sub_ring):
    """Rewrite an ideal whose generators avoid the dropped variables."""
    return Ideal(sub_ring, [migrate(g, sub_ring) for g in I.generators])


def intersect(I, J, budget=None):
    """I ∩ J via one auxiliary variable: (t·I + (1−t)·J) ∩ K[x]."""
    ring = I.ring
    if J.ring != ring:
        raise PreconditionError("intersection across rings")
    t_name = _fresh_name(ring)
    ext = RingContext((t_name,) + ring.variables, ring.marked_axis, "affine")
    t = ext.variable(t_name)
    gens = [t * migrate(g, ext) for g in I.generators]
    gens += [(ext.one() - t) * migrate(g, ext) for g in J.generators]
    K = Ideal(ext, gens)
    elim = eliminate(K, [t_name], budget=budget)
    if elim is None:
        return None  # zero intersection
    return restrict_to_subring(elim, ring)


def colon_principal(I, g, budget=None):
    """I : (g) = (I ∩ (g)) / g."""
    if not g.terms:
        raise PreconditionError("colon by the zero polynomial")
    if I.contains(g, order=degrevlex(), budget=budget):
        one = I.ring.one()
        return Ideal(I.ring, [one])
    meet = intersect(I, Ideal(I.ring, [g]), budget=budget)
    if meet is None:
        return Ideal(I.ring, [I.ring.zero()], allow_zero_prune=False)
    return Ideal(I.ring, [exact_divide(h, g) for h in meet.generators])


def colon(I, J, budget=None):
    """I : J = ∩ over generators g of I : (g)."""
    result = None
    for g in J.generators:
        part = colon_principal(I, g, budget=budget)
        if result is None:
            result = part
        else:
            lead = part.generators
            if len(lead) == 1 and not lead[0].degree():
                continue  # (1) is neutral for intersection
            if len(result.generators) == 1 and not result.generators[0].degree():
                result = part
                continue
            result = intersect(result, part, budget=budget)
            if result is None:
                raise PreconditionError("colon produced the zero ideal")
    return result


def saturate(I, J, budget=None):
    """I : J^∞ as a stabilized chain of quotients.

    Stabilization is detected by ideal equality of successive quotients.
    Generators of J already lying in I contribute I : g = (1) and are
    skipped up front."""
    if J.ring != I.ring:
        raise PreconditionError("saturation across rings")
    targets = [g for g in J.generators if g.terms]
    if not targets:
        raise PreconditionError("saturating by the zero ideal")
    current = I
    while True:
        nxt = colon(current, Ideal(J.ring, targets), budget=budget)
        if nxt.equals(current, order=degrevlex(), budget=budget):
            return current
        current = nxt
