"""Finitely generated ideals with cached bases and membership tests.

Membership semantics follow the ring's locus: in a local context f ∈ I
means membership in the localization at the origin (decided by a Mora
normal form against a standard basis); in affine/projective contexts it is
ordinary polynomial ideal membership via a Gröbner basis.
"""

from __future__ import annotations

from .basis import compute_basis, normal_form
from .errors import PreconditionError, RingMismatchError
from .orders import degrevlex, negdegrevlex


class Ideal:
    __slots__ = ("ring", "generators", "_bases")

    def __init__(self, ring, generators, _allow_empty=False):
        gens = [g for g in generators if g.terms]
        if not gens and not _allow_empty:
            raise PreconditionError("ideal needs a nonzero generator")
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
        if ring.locus == "projective":
            for g in gens:
                if not g.is_homogeneous():
                    raise PreconditionError(
                        "inhomogeneous generator in projective context"
                    )
        self.ring = ring
        self.generators = tuple(gens)
        self._bases = {}

    @classmethod
    def zero(cls, ring):
        return cls(ring, [], _allow_empty=True)

    @property
    def is_zero(self):
        return not self.generators

    def __repr__(self):
        gens = ", ".join(g.to_string() for g in self.generators) or "0"
        return f"<ideal ({gens})>"

    # -- bases ---------------------------------------------------------------

    def basis(self, order=None, budget=None):
        if self.is_zero:
            raise PreconditionError("cannot compute a basis of the zero ideal")
        order = order or self.ring.default_order()
        hit = self._bases.get(order)
        if hit is None:
            hit = compute_basis(self.generators, order, budget=budget)
            self._bases[order] = hit
        return hit

    def groebner(self, order=None, budget=None):
        return self.basis(order or degrevlex(), budget=budget)

    def standard_basis(self, budget=None):
        return self.basis(negdegrevlex(), budget=budget)

    def leading_ideal(self, order=None, budget=None):
        b = self.basis(order, budget=budget)
        return b.leading_monomials()

    # -- membership and equality ----------------------------------------------

    def contains(self, f, order=None, budget=None):
        if f.ring != self.ring:
            raise RingMismatchError("membership across rings")
        if not f.terms:
            return True
        if self.is_zero:
            return False
        b = self.basis(order, budget=budget)
        return not normal_form(f, b.basis, b.order, budget).terms

    def contains_ideal(self, other, order=None, budget=None):
        return all(self.contains(g, order, budget=budget) for g in other.generators)

    def equals(self, other, order=None, budget=None):
        if self.ring != other.ring:
            raise RingMismatchError("comparing ideals across rings")
        return self.contains_ideal(other, order, budget=budget) and other.contains_ideal(
            self, order, budget=budget
        )

    def is_unit_local(self, budget=None):
        """True when the ideal is the whole local ring at the origin, i.e.
        the germ is empty (a standard-basis element is a unit)."""
        b = self.standard_basis(budget=budget)
        zero = (0,) * self.ring.nvars
        return any(g.leading_monomial(b.order) == zero for g in b.basis)

    def with_ring(self, ring):
        """Same generators re-read in a compatible ring (variables matched
        by name; extra ring variables allowed)."""
        from .ideal_ops import migrate

        return Ideal(ring, [migrate(g, ring) for g in self.generators])
