"""Monomial orders.

Monomials are plain tuples of non-negative integer exponents.  An order is
wrapped in a MonomialOrder object whose ``key`` maps a monomial to a tuple
such that bigger key == bigger monomial under Python's tuple comparison.
Every key is additive-compatible (a semigroup order), which is what the
division and Mora algorithms require.

Supported kinds:
  degrevlex      global degree reverse lexicographic
  lex            lexicographic (global)
  negdegrevlex   local: 1 > x_i, degree-anticompatible, revlex ties
  weighted       primary comparison by a weight vector, degrevlex ties
  block          elimination order: degrevlex on a leading block of
                 variables, then degrevlex on the rest
"""

from __future__ import annotations


def total_degree(mono):
    return sum(mono)


def _revlex_tail(mono):
    # shared tie-break of the degrevlex family: last nonzero of a-b negative
    return tuple(-e for e in reversed(mono))


class MonomialOrder:
    __slots__ = ("kind", "params", "key")

    def __init__(self, kind, params, key):
        self.kind = kind
        self.params = params
        self.key = key

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.params!r})"

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.params == other.params
        )

    def __hash__(self):
        return hash((self.kind, self.params))

    def is_local(self, nvars):
        """True when 1 beats every variable (germ-at-origin orders)."""
        one = (0,) * nvars
        k1 = self.key(one)
        for i in range(nvars):
            x = tuple(1 if j == i else 0 for j in range(nvars))
            if self.key(x) > k1:
                return False
        return True

    def is_global(self, nvars):
        one = (0,) * nvars
        k1 = self.key(one)
        return all(
            self.key(tuple(1 if j == i else 0 for j in range(nvars))) > k1
            for i in range(nvars)
        )


def degrevlex():
    def key(m):
        return (sum(m), _revlex_tail(m))

    return MonomialOrder("degrevlex", (), key)


def lex():
    def key(m):
        return m

    return MonomialOrder("lex", (), key)


def negdegrevlex():
    # 1 > x_i for every variable; ties within a degree as in degrevlex
    def key(m):
        return (-sum(m), _revlex_tail(m))

    return MonomialOrder("negdegrevlex", (), key)


def weighted(weights, tie="negdegrevlex"):
    """Primary comparison by weight (bigger weighted degree = bigger monomial),
    ties broken by the named degree order."""
    w = tuple(weights)
    if tie == "negdegrevlex":
        def key(m):
            return (sum(wi * ei for wi, ei in zip(w, m)), -sum(m), _revlex_tail(m))
    elif tie == "degrevlex":
        def key(m):
            return (sum(wi * ei for wi, ei in zip(w, m)), sum(m), _revlex_tail(m))
    else:
        raise ValueError(f"unknown tie-break {tie!r}")
    return MonomialOrder("weighted", (w, tie), key)


def block(block_indices, nvars):
    """Elimination order for the given variable indices: any monomial using a
    block variable beats any monomial that does not."""
    idx = tuple(sorted(block_indices))
    rest = tuple(i for i in range(nvars) if i not in set(idx))

    def key(m):
        b = tuple(m[i] for i in idx)
        r = tuple(m[i] for i in rest)
        return (sum(b), _revlex_tail(b), sum(r), _revlex_tail(r))

    return MonomialOrder("block", (idx, nvars), key)


def subspace_local(j_indices, nvars):
    """Order adapted to the filtration by degree in the variables `j_indices`:
    smaller J-degree is bigger (local along the complementary subspace),
    ties by negdegrevlex.  Used for normal-cone standard bases."""
    idx = frozenset(j_indices)

    def key(m):
        jdeg = sum(m[i] for i in idx)
        return (-jdeg, -sum(m), _revlex_tail(m))

    return MonomialOrder("subspace-local", (tuple(sorted(idx)), nvars), key)


# --- tuple-level monomial helpers -----------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))
