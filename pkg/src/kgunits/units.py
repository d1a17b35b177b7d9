"""Unit-group structure: order spectra, abelian invariants, dihedral shapes.

Abelian invariants are recovered purely from order statistics: for each prime
r dividing |U|, the counts N_i of solutions of u^(r^i) = 1 determine the
partition of the r-primary component, and the recovered partition is checked
by reproducing the counts.  Nothing here assumes any structure theory of the
algebra; it only multiplies units.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm

from .algebra import Algebra, AlgebraElement, enumerate_units
from .fields import prime_factors


def _int_log(base: int, n: int) -> int:
    """Exact logarithm; raises if n is not a power of base."""
    e = 0
    while n > 1:
        if n % base:
            raise ValueError(f"{n} is not a power of {base}")
        n //= base
        e += 1
    return e


def partition_from_power_counts(r: int, counts: list[int]) -> tuple[int, ...]:
    """Recover the partition of an abelian r-group from solution counts.

    counts[i] must be the number of elements killed by r^i (counts[0] = 1).
    If the r-group has invariants r^l1 >= r^l2 >= ..., then
    counts[i] = r ** sum(min(lj, i)), which pins the partition uniquely.
    """
    s = [_int_log(r, c) for c in counts]
    conj = [s[i + 1] - s[i] for i in range(len(s) - 1)]
    if any(c < 0 for c in conj) or any(conj[i] < conj[i + 1] for i in range(len(conj) - 1)):
        raise ValueError(f"inconsistent solution counts {counts} for prime {r}")
    parts = tuple(sorted((sum(1 for c in conj if c >= j) for j in range(1, (conj[0] if conj else 0) + 1)),
                         reverse=True))
    # round trip: the partition must reproduce every count
    for i in range(len(s)):
        if sum(min(l, i) for l in parts) != s[i]:
            raise ValueError(f"partition {parts} does not reproduce counts {counts}")
    return parts


@dataclass(frozen=True)
class AbelianType:
    """Isomorphism type of a finite abelian group: partitions per prime."""

    primary: tuple[tuple[int, tuple[int, ...]], ...]  # ((prime, descending partition), ...)

    @classmethod
    def from_primary(cls, parts: dict[int, tuple[int, ...]]) -> "AbelianType":
        clean = []
        for p in sorted(parts):
            lam = tuple(sorted((e for e in parts[p] if e > 0), reverse=True))
            if lam:
                clean.append((p, lam))
        return cls(tuple(clean))

    @classmethod
    def from_cyclic_orders(cls, orders) -> "AbelianType":
        parts: dict[int, list[int]] = {}
        for n in orders:
            if n < 1:
                raise ValueError("cyclic factor orders must be positive")
            for p in prime_factors(n):
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                parts.setdefault(p, []).append(e)
        return cls.from_primary({p: tuple(v) for p, v in parts.items()})

    def order(self) -> int:
        n = 1
        for p, lam in self.primary:
            for e in lam:
                n *= p ** e
        return n

    def exponent(self) -> int:
        if not self.primary:
            return 1
        return reduce(lcm, (p ** lam[0] for p, lam in self.primary))

    def render(self) -> str:
        """Canonical string: primes ascending, exponents ascending, e.g. C2^5 x C4."""
        if not self.primary:
            return "C1"
        factors = []
        for p, lam in self.primary:
            mults: dict[int, int] = {}
            for e in lam:
                mults[e] = mults.get(e, 0) + 1
            for e in sorted(mults):
                base = f"C{p ** e}"
                factors.append(base if mults[e] == 1 else f"{base}^{mults[e]}")
        return " x ".join(factors)

    def __str__(self):
        return self.render()


class UnitGroup:
    """The group of invertible elements of a group algebra, fully enumerated."""

    def __init__(self, algebra: Algebra):
        self.algebra = algebra
        self.units = tuple(enumerate_units(algebra))
        self.order = len(self.units)
        self.index = {u.key(): i for i, u in enumerate(self.units)}
        self._orders = None

    def __repr__(self):
        return f"UnitGroup({self.algebra.label()}, order={self.order})"

    def position(self, u: AlgebraElement) -> int:
        return self.index[u.key()]

    def is_abelian(self) -> bool:
        # the group-element basis sits inside U, so U is abelian exactly when
        # the algebra is commutative, i.e. when G is
        return self.algebra.group.is_abelian()

    def element_order(self, u: AlgebraElement) -> int:
        """Multiplicative order, by divisor descent from |U| (Lagrange)."""
        one = self.algebra.one()
        o = self.order
        for r in prime_factors(o):
            while o % r == 0 and u ** (o // r) == one:
                o //= r
        if u ** o != one:
            raise ValueError("element order does not divide the group order; not a unit?")
        return o

    def _order_list(self):
        if self._orders is None:
            self._orders = tuple(self.element_order(u) for u in self.units)
        return self._orders

    def unit_order_spectrum(self) -> dict[int, int]:
        spec: dict[int, int] = {}
        for o in self._order_list():
            spec[o] = spec.get(o, 0) + 1
        return spec

    def exponent(self) -> int:
        return lcm(*self.unit_order_spectrum())

    def abelian_invariants(self) -> AbelianType:
        """Primary decomposition of an abelian unit group from order counts."""
        if not self.is_abelian():
            raise ValueError(f"{self.algebra.label()} has a nonabelian unit group")
        spec = self.unit_order_spectrum()
        parts: dict[int, tuple[int, ...]] = {}
        for r in prime_factors(self.order):
            max_e = 0
            o = self.order
            while o % r == 0:
                o //= r
                max_e += 1
            counts = []
            for i in range(max_e + 1):
                cap = r ** i
                counts.append(sum(c for d, c in spec.items() if cap % d == 0))
            parts[r] = partition_from_power_counts(r, counts)
        out = AbelianType.from_primary(parts)
        if out.order() != self.order:
            raise RuntimeError("abelian invariants do not multiply up to |U|")  # unreachable
        return out

    def recognize_dihedral(self):
        """(True, (r, s)) if U is dihedral of its order, witnessed; else (False, None).

        Only defined for |U| >= 6; the Klein four group is reported as
        abelian C2^2, not as a degenerate dihedral group.
        """
        if self.order < 6:
            raise ValueError("dihedral recognition needs |U| >= 6")
        if self.order % 2 or self.is_abelian():
            return (False, None)
        m = self.order // 2
        orders = self._order_list()
        one = self.algebra.one()
        for i, r in enumerate(self.units):
            if orders[i] != m:
                continue
            powers = set()
            acc = one
            for _ in range(m):
                acc = acc * r
                powers.add(acc.key())
            r_inv = r.try_inverse()
            for j, s in enumerate(self.units):
                if orders[j] != 2 or s.key() in powers:
                    continue
                if s * r * s == r_inv:
                    return (True, (r, s))
        return (False, None)

    def closure(self, gens) -> int:
        """Size of the subgroup generated by the given units (BFS)."""
        gens = list(gens)
        for g in gens:
            self.algebra._check(g)
            if g.key() not in self.index:
                raise ValueError(f"generator {g} is not a unit of {self.algebra.label()}")
        seen = {self.algebra.one().key()}
        frontier = [self.algebra.one()]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = cur * g
                k = nxt.key()
                if k not in seen:
                    seen.add(k)
                    frontier.append(nxt)
        return len(seen)

    def verify_presentation_generators(self, images, relators) -> bool:
        """Do the images satisfy every relator and generate all of U?

        images: candidate generators, ordered as the presentation's
        generators; relators: words as tuples of signed 1-based indices.
        """
        images = list(images)
        inverses = []
        for g in images:
            inv = g.try_inverse()
            if inv is None:
                raise ValueError("presentation generator is not a unit")
            inverses.append(inv)
        one = self.algebra.one()
        for rel in relators:
            if evaluate_word(rel, images, inverses, one) != one:
                return False
        return self.closure(images) == self.order


def evaluate_word(word, images, inverses, one: AlgebraElement) -> AlgebraElement:
    """Evaluate a signed-index word: positive s means images[s-1], negative its inverse."""
    acc = one
    for s in word:
        acc = acc * (images[s - 1] if s > 0 else inverses[-s - 1])
    return acc


def structure_string(kind: str, payload) -> str:
    """Rendering grammar shared by catalog rows and reports."""
    if kind == "abelian":
        return payload.render()
    if kind == "dihedral":
        return f"D{payload}"
    if kind == "presented":
        return f"presented({payload})"
    if kind == "unclassified":
        return f"unclassified(order={payload})"
    raise ValueError(f"unknown structure kind {kind!r}")
