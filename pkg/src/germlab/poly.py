"""Sparse exact multivariate polynomials over the rationals.

A Polynomial is a term map {exponent tuple: coefficient} attached to a
RingContext.  Coefficients are exact rationals; internally they may be
Python ints (the basis engine keeps polynomials integer-primitive for
speed) or fractions.Fraction — both compare and hash consistently, so the
canonical-form invariant (no stored zeros, equality = term-map equality)
holds across the mix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import orders
from .errors import PreconditionError, RingMismatchError
from .orders import mono_mul


@dataclass(frozen=True)
class RingContext:
    """Ambient polynomial ring: variable names, marked axis variables and a
    locus flag deciding the default monomial order (local germs vs global)."""

    variables: tuple
    marked_axis: tuple = ()
    locus: str = "local"  # local | projective | affine

    def __post_init__(self):
        vs = tuple(self.variables)
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "marked_axis", tuple(self.marked_axis))
        if len(set(vs)) != len(vs):
            raise PreconditionError(f"duplicate variable names in {vs}")
        for a in self.marked_axis:
            if a not in vs:
                raise PreconditionError(f"axis variable {a!r} not in ring")
        if self.locus not in ("local", "projective", "affine"):
            raise PreconditionError(f"unknown locus {self.locus!r}")

    @property
    def nvars(self):
        return len(self.variables)

    def var_index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise PreconditionError(f"unknown variable {name!r}") from None

    def default_order(self):
        if self.locus == "local":
            return orders.negdegrevlex()
        return orders.degrevlex()

    def variable(self, name):
        i = self.var_index(name)
        expo = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {expo: 1})

    def constant(self, c):
        c = Fraction(c)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def with_variables(self, extra, locus=None, position="append"):
        """A new ring with extra variable names (prepended or appended)."""
        for v in extra:
            if v in self.variables:
                raise PreconditionError(f"variable {v!r} already in ring")
        if position == "append":
            vs = self.variables + tuple(extra)
        else:
            vs = tuple(extra) + self.variables
        return RingContext(vs, self.marked_axis, locus or self.locus)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms, *, normalize=True):
        self.ring = ring
        if normalize:
            clean = {}
            n = ring.nvars
            for m, c in terms.items():
                if c:
                    if len(m) != n:
                        raise PreconditionError(
                            f"exponent tuple {m} has wrong length for {ring.variables}"
                        )
                    clean[m] = c
            self.terms = clean
        else:
            self.terms = terms

    # -- basics ------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"operands in different rings: {self.ring.variables} vs {other.ring.variables}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._check_ring(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial(self.ring, res, normalize=False)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Polynomial(
            self.ring, {m: -c for m, c in self.terms.items()}, normalize=False
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return (self.__neg__()).__add__(self.ring.constant(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero()
            return Polynomial(
                self.ring,
                {m: c * other for m, c in self.terms.items()},
                normalize=False,
            )
        self._check_ring(other)
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        res = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                mp = mono_mul(m1, m2)
                s = res.get(mp, 0) + c1 * c2
                if s:
                    res[mp] = s
                else:
                    del res[mp]
        return Polynomial(self.ring, res, normalize=False)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k):
        if k < 0:
            raise PreconditionError("negative polynomial power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def term_mul(self, coeff, mono):
        """coeff * x^mono * self, in one pass."""
        if not coeff:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {mono_mul(m, mono): c * coeff for m, c in self.terms.items()},
            normalize=False,
        )

    # -- degrees and leading data -------------------------------------------

    def degree(self):
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def order_at_origin(self):
        """Min total degree of a term (the m-adic order); None for zero."""
        if not self.terms:
            return None
        return min(sum(m) for m in self.terms)

    def leading_monomial(self, order):
        if not self.terms:
            raise PreconditionError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_term(self, order):
        m = self.leading_monomial(order)
        return m, self.terms[m]

    def is_homogeneous(self):
        if not self.terms:
            return True
        it = iter(self.terms)
        d = sum(next(it))
        return all(sum(m) == d for m in it)

    def homogeneous_part(self, d):
        return Polynomial(
            self.ring,
            {m: c for m, c in self.terms.items() if sum(m) == d},
            normalize=False,
        )

    # -- normalization -------------------------------------------------------

    def primitive(self):
        """Integer content-free scalar multiple of self (sign fixed so the
        lexicographically largest monomial has positive coefficient)."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        g = 0
        ints = {}
        for m, c in self.terms.items():
            v = int(c * den)
            ints[m] = v
            g = gcd(g, v)
        if ints[max(ints)] < 0:
            g = -g
        return Polynomial(
            self.ring, {m: v // g for m, v in ints.items()}, normalize=False
        )

    def monic(self, order):
        m, c = self.leading_term(order)
        if c == 1:
            return self
        inv = Fraction(1, 1) / Fraction(c)
        return Polynomial(
            self.ring,
            {mm: cc * inv for mm, cc in self.terms.items()},
            normalize=False,
        )

    # -- substitution ---------------------------------------------------------

    def substitute(self, assignment):
        """Exact substitution {var name: Polynomial}; unassigned variables map
        to the same-named variable of the target ring."""
        if not assignment:
            return self
        target = next(iter(assignment.values())).ring
        for name in assignment:
            self.ring.var_index(name)  # raises on unknown variable
        images = []
        for name in self.ring.variables:
            if name in assignment:
                img = assignment[name]
                if img.ring != target:
                    raise RingMismatchError("substitution images in mixed rings")
                images.append(img)
            else:
                images.append(target.variable(name))
        result = target.zero()
        # power cache per variable keeps repeated exponents cheap
        pows = [dict() for _ in images]
        for m, c in self.terms.items():
            acc = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    p = pows[i].get(e)
                    if p is None:
                        p = images[i] ** e
                        pows[i][e] = p
                    acc = acc * p
            result = result + acc
        return result

    # -- initial forms ----------------------------------------------------------

    def initial_form(self, filtration="point"):
        """Lowest-order part of the polynomial for the given filtration:
        'point' (total degree), ('subspace', J variable names), or
        ('weights', vector)."""
        if not self.terms:
            raise PreconditionError("zero polynomial has no initial form")
        if filtration == "point":
            weight = lambda m: sum(m)
        elif filtration[0] == "subspace":
            idx = {self.ring.var_index(v) for v in filtration[1]}
            weight = lambda m: sum(m[i] for i in idx)
        elif filtration[0] == "weights":
            w = tuple(filtration[1])
            weight = lambda m: sum(wi * ei for wi, ei in zip(w, m))
        else:
            raise PreconditionError(f"unknown filtration {filtration!r}")
        nu = min(weight(m) for m in self.terms)
        return Polynomial(
            self.ring,
            {m: c for m, c in self.terms.items() if weight(m) == nu},
            normalize=False,
        )

    # -- printing -----------------------------------------------------------------

    def to_string(self, order=None):
        if not self.terms:
            return "0"
        order = order or self.ring.default_order()
        parts = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = Fraction(self.terms[m])
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.ring.variables, m)
                if e
            )
            if mono:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"<poly {self.to_string()}>"


def poly_arith(p, q, op):
    """add | sub | mul with exact arithmetic and ring checking."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise PreconditionError(f"unknown operation {op!r}")


def jacobian_row(f):
    """Tuple of partial derivatives of f, one per ring variable."""
    ring = f.ring
    out = []
    for i in range(ring.nvars):
        terms = {}
        for m, c in f.terms.items():
            e = m[i]
            if e:
                dm = tuple(x - 1 if j == i else x for j, x in enumerate(m))
                terms[dm] = terms.get(dm, 0) + c * e
        out.append(Polynomial(ring, terms))
    return tuple(out)
