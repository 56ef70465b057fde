"""Gröbner bases (global orders) and standard bases (local/mixed orders).

Global orders use classical Buchberger division; local and mixed orders use
Mora's tangent-cone normal form with écart control, which terminates where
naive division would not.  Pair management uses the normal strategy (lowest
lcm degree first) with the Gebauer-Möller product and chain criteria.

All reductions keep polynomials integer-primitive to avoid rational
arithmetic in the inner loops; results are exact up to the documented unit
ambiguity of local normal forms.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .budget import Budget, ensure_budget
from .errors import PreconditionError, RingMismatchError
from .orders import (
    MonomialOrder,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)
from .poly import Polynomial


@dataclass
class BasisResult:
    """A confluent basis: every S-polynomial reduces to zero under the
    matching normal form.  `reduced` means monic and lead-interreduced;
    for global orders tails are fully reduced as well."""

    basis: list
    order: MonomialOrder
    kind: str  # "groebner" | "standard"
    reduced: bool = True

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.basis]


def _check_same_ring(polys):
    rings = {p.ring for p in polys}
    if len(rings) > 1:
        raise RingMismatchError("polynomials from different rings")


def _spoly(f, g, order):
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    L = mono_lcm(mf, mg)
    a = f.term_mul(cg, mono_div(L, mf))
    b = g.term_mul(cf, mono_div(L, mg))
    return (a - b).primitive() if a.terms != b.terms else f.ring.zero()


def _ecart(p, order):
    return p.degree() - sum(p.leading_monomial(order))


def normal_form(p, G, order, budget=None):
    """Normal form of p w.r.t. G.

    Global orders: the exact remainder of full multivariate division (no
    term of the result is divisible by any leading monomial of G).  Local
    or mixed orders: Mora's weak normal form, unique only up to a unit of
    the local ring, with u*p - r in <G>.
    """
    budget = ensure_budget(budget)
    if p.ring.nvars and not order.is_global(p.ring.nvars):
        return _mora_nf(p, G, order, budget)
    return _division_nf(p, G, order, budget)


def _division_nf(p, G, order, budget):
    if not p.terms:
        return p
    _check_same_ring([p] + list(G))
    G = [g.primitive() for g in G if g.terms]
    lms = [(g.leading_monomial(order), g) for g in G]
    lms.sort(key=lambda t: order.key(t[0]))
    ring = p.ring
    den = 1
    for c in p.terms.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    work = {m: int(c * den) for m, c in p.terms.items()}
    remainder = {}
    scale = Fraction(den)  # work and remainder hold scale * (true value)
    steps = 0
    # lazy max-heap over live monomials of `work`
    heap = []
    key = order.key
    for m in work:
        heapq.heappush(heap, (_neg(key(m)), m))
    while heap:
        nk, m = heapq.heappop(heap)
        c = work.get(m)
        if not c or _neg(key(m)) != nk:
            continue  # stale heap entry
        budget.tick()
        for lm, g in lms:
            if mono_divides(lm, m):
                lc = g.terms[lm]
                # scale everything by lc, then subtract c * (m/lm) * g
                if lc != 1:
                    for mm in work:
                        work[mm] *= lc
                    for mm in remainder:
                        remainder[mm] *= lc
                    scale *= lc
                    c *= lc
                shift = mono_div(m, lm)
                for mm, cc in g.terms.items():
                    tgt = mono_mul(mm, shift)
                    s = work.get(tgt, 0) - c * cc
                    if s:
                        work[tgt] = s
                        heapq.heappush(heap, (_neg(key(tgt)), tgt))
                    else:
                        work.pop(tgt, None)
                steps += 1
                if steps % 64 == 0:
                    scale = _strip_content(work, remainder, scale)
                break
        else:
            remainder[m] = work.pop(m)
    if scale == 1:
        return Polynomial(ring, remainder, normalize=False)
    inv = 1 / scale
    return Polynomial(ring, {m: c * inv for m, c in remainder.items()})


def _strip_content(work, remainder, scale):
    # keep coefficients small during long division chains
    g = 0
    for c in work.values():
        g = gcd(g, c)
        if g == 1:
            return scale
    for c in remainder.values():
        g = gcd(g, c)
        if g == 1:
            return scale
    if g in (0, 1):
        return scale
    for mm in work:
        work[mm] //= g
    for mm in remainder:
        remainder[mm] //= g
    return scale / g


def _neg(k):
    # negate an order key so the min-heap pops the largest monomial first
    return tuple(-x if not isinstance(x, tuple) else _neg(x) for x in k)


def _mora_nf(p, G, order, budget):
    """Mora's weak normal form with écart-guided reducer selection."""
    if not p.terms:
        return p
    _check_same_ring([p] + list(G))
    T = [
        (g.leading_monomial(order), _ecart(g, order), g.primitive())
        for g in G
        if g.terms
    ]
    h = p.primitive()
    while h.terms:
        budget.tick()
        lm_h = h.leading_monomial(order)
        candidates = [t for t in T if mono_divides(t[0], lm_h)]
        if not candidates:
            return h
        ec_h = h.degree() - sum(lm_h)
        lm_g, ec_g, g = min(
            candidates, key=lambda t: (t[1], order.key(t[0]))
        )
        if ec_g > ec_h:
            T.append((lm_h, ec_h, h))
        ch = h.terms[lm_h]
        cg = g.terms[lm_g]
        h = (h.term_mul(cg, (0,) * h.ring.nvars) - g.term_mul(ch, mono_div(lm_h, lm_g)))
        h = h.primitive()
    return h


# -- pair management (Gebauer-Möller) ----------------------------------------


def _update_pairs(pairs, lms, t):
    """Add pairs (i, t) for the new element with the Gebauer-Möller criteria,
    and prune old pairs by the chain criterion.  `pairs` maps (i, j) -> lcm."""
    lt = lms[t]
    new = {}
    for i in range(t):
        new[i] = mono_lcm(lms[i], lt)
    # chain criterion on new pairs: drop (i,t) when some (j,t) has a lcm
    # properly dividing lcm(i,t)
    keep = {}
    for i, L in new.items():
        dominated = False
        for j, Lj in new.items():
            if j == i:
                continue
            if Lj != L and mono_divides(Lj, L):
                dominated = True
                break
        if not dominated:
            keep[i] = L
    # among equal lcms keep a single representative (smallest index)
    by_lcm = {}
    for i, L in sorted(keep.items()):
        by_lcm.setdefault(L, i)
    # product criterion: coprime leading monomials reduce to zero
    survivors = {
        (i, t): L
        for L, i in by_lcm.items()
        if L != mono_mul(lms[i], lt)
    }
    # prune old pairs by the chain criterion through lt
    for (i, j), L in list(pairs.items()):
        if (
            mono_divides(lt, L)
            and mono_lcm(lms[i], lt) != L
            and mono_lcm(lms[j], lt) != L
        ):
            del pairs[(i, j)]
    pairs.update(survivors)


def compute_basis(generators, order, budget=None, reduced=True):
    """Reduced Gröbner basis (global order) or standard basis (local/mixed).

    Confluence holds by construction: the pair loop only stops when every
    remaining S-polynomial has normal form zero.
    """
    gens = [g for g in generators if g and g.terms]
    if not gens:
        raise PreconditionError("cannot compute a basis of the zero ideal")
    _check_same_ring(gens)
    ring = gens[0].ring
    budget = ensure_budget(budget)
    glob = order.is_global(ring.nvars)

    G = []
    lms = []
    pairs = {}

    def add(h):
        G.append(h.primitive())
        lms.append(h.leading_monomial(order))
        _update_pairs(pairs, lms, len(G) - 1)

    for g in sorted(gens, key=lambda q: order.key(q.leading_monomial(order))):
        h = normal_form(g, G, order, budget)
        if h.terms:
            add(h)

    while pairs:
        (i, j), L = min(pairs.items(), key=lambda kv: (sum(kv[1]), kv[0]))
        del pairs[(i, j)]
        s = _spoly(G[i], G[j], order)
        if not s.terms:
            continue
        h = normal_form(s, G, order, budget)
        if h.terms:
            add(h)

    kind = "groebner" if glob else "standard"
    basis = _interreduce(G, order, budget, tails=glob) if reduced else G
    return BasisResult(basis=basis, order=order, kind=kind, reduced=reduced)


def _interreduce(G, order, budget, tails):
    # minimal: drop elements whose lm is divisible by another lm
    items = sorted(
        ((g.leading_monomial(order), g) for g in G), key=lambda t: order.key(t[0])
    )
    minimal = []
    for lm, g in items:
        if not any(mono_divides(m, lm) for m, _ in minimal):
            minimal.append((lm, g))
    if tails:
        out = []
        for idx, (lm, g) in enumerate(minimal):
            others = [h for k, (_, h) in enumerate(minimal) if k != idx]
            r = _division_nf(g, others, order, budget)
            out.append(r.monic(order))
        out = [g for g in out if g.terms]
    else:
        out = [g.monic(order) for _, g in minimal]
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


def s_polynomials_reduce(result, budget=None):
    """Directly assert confluence: every S-polynomial of the basis has
    normal form zero.  Used by the property suites."""
    budget = ensure_budget(budget)
    G = result.basis
    for i in range(len(G)):
        for j in range(i):
            s = _spoly(G[i], G[j], result.order)
            if s.terms and normal_form(s, G, result.order, budget).terms:
                return False
    return True


def exact_divide(f, g):
    """f / g when g divides f exactly; errors otherwise."""
    if not f.terms:
        return f
    from .orders import degrevlex

    o = degrevlex()  # exact division works against a global order
    mg, cg = g.leading_term(o)
    q_terms = {}
    rest = f
    while rest.terms:
        m, c = rest.leading_term(o)
        if not mono_divides(mg, m):
            raise PreconditionError("division is not exact")
        shift = mono_div(m, mg)
        coeff = Fraction(c) / Fraction(cg)
        q_terms[shift] = coeff
        rest = rest - g.term_mul(coeff, shift)
    return Polynomial(f.ring, q_terms)
