"""Group-algebra arithmetic: convolution products, augmentation, units.

An Algebra is K[G] for a FieldSpec K and a Group G.  Elements store one field
coefficient per group element.  Inversion goes through the regular
representation: build the left-multiplication matrix and solve against the
identity vector, so unit detection needs no structure theory at all.
"""

from __future__ import annotations

import itertools

from .fields import FieldElement, FieldSpec
from .groups import Group


class Algebra:
    """K[G]: the group algebra of G over the field K."""

    def __init__(self, field: FieldSpec, group: Group):
        self.field = field
        self.group = group
        self.size = field.q ** group.order
        self._zero = None
        self._one = None
        self._basis = None

    def label(self) -> str:
        return f"{self.field.label()}{self.group.label}"

    def __eq__(self, other):
        return (isinstance(other, Algebra)
                and self.field == other.field and self.group is other.group)

    def __hash__(self):
        return hash((self.field, id(self.group)))

    def __repr__(self):
        return f"Algebra({self.label()}, size={self.size})"

    def zero(self) -> "AlgebraElement":
        if self._zero is None:
            z = self.field.zero()
            self._zero = AlgebraElement(self, (z,) * self.group.order)
        return self._zero

    def one(self) -> "AlgebraElement":
        if self._one is None:
            self._one = self.basis_element(self.group.identity)
        return self._one

    def basis_element(self, i: int) -> "AlgebraElement":
        if self._basis is None:
            z, o, n = self.field.zero(), self.field.one(), self.group.order
            self._basis = tuple(
                AlgebraElement(self, tuple(o if j == k else z for j in range(n)))
                for k in range(n))
        return self._basis[i]

    def group_element(self, name: str) -> "AlgebraElement":
        """The basis element for the group element with this display name."""
        return self.basis_element(self.group.name_to_index[name])

    def from_coeffs(self, coeffs) -> "AlgebraElement":
        coeffs = tuple(coeffs)
        if len(coeffs) != self.group.order:
            raise ValueError("one coefficient per group element required")
        for c in coeffs:
            self.field._check(c)
        return AlgebraElement(self, coeffs)

    def scalar(self, c: FieldElement) -> "AlgebraElement":
        """The scalar c embedded as c * identity."""
        self.field._check(c)
        z, n = self.field.zero(), self.group.order
        return AlgebraElement(self, tuple(c if j == 0 else z for j in range(n)))

    def elements(self):
        """All q^|G| elements; coefficient tuples in base-q counting order."""
        for digits in itertools.product(self.field.elements(), repeat=self.group.order):
            yield AlgebraElement(self, digits[::-1])

    def _check(self, other: "AlgebraElement"):
        if other.algebra is not self and other.algebra != self:
            raise ValueError(f"mixed-algebra arithmetic: {self.label()} vs {other.algebra.label()}")


class AlgebraElement:
    """An element of K[G], one field coefficient per group element."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs: tuple[FieldElement, ...]):
        self.algebra = algebra
        self.coeffs = coeffs

    def key(self) -> tuple[int, ...]:
        """Hashable coefficient-code tuple, also the counting order key."""
        return tuple(c.code for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.key() == other.key()

    def __hash__(self):
        return hash((id(self.algebra.group), self.algebra.field.q, self.key()))

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self.algebra._check(other)
        return AlgebraElement(self.algebra,
                              tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self.algebra._check(other)
        return AlgebraElement(self.algebra,
                              tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        A = self.algebra
        A._check(other)
        table = A.group.table
        out = [A.field.zero()] * A.group.order
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            row = table[i]
            for j, b in enumerate(other.coeffs):
                if b:
                    k = row[j]
                    out[k] = out[k] + a * b
        return AlgebraElement(A, tuple(out))

    def scale(self, c: FieldElement) -> "AlgebraElement":
        self.algebra.field._check(c)
        return AlgebraElement(self.algebra, tuple(c * a for a in self.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            inv = self.try_inverse()
            if inv is None:
                raise ZeroDivisionError("negative power of a non-unit")
            return inv ** (-n)
        acc = self.algebra.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def augmentation(self) -> FieldElement:
        """Coefficient sum; a ring homomorphism onto K."""
        acc = self.algebra.field.zero()
        for c in self.coeffs:
            acc = acc + c
        return acc

    def left_mult_matrix(self):
        """Matrix of left multiplication by self on the group-element basis."""
        g = self.algebra.group
        n = g.order
        return [[self.coeffs[g.mul(i, g.inv(j))] for j in range(n)] for i in range(n)]

    def try_inverse(self):
        """The two-sided inverse, or None.  Non-units are a normal outcome."""
        A = self.algebra
        n = A.group.order
        m = self.left_mult_matrix()
        rhs = [A.field.one() if i == A.group.identity else A.field.zero() for i in range(n)]
        sol = solve_linear(m, rhs, A.field)
        if sol is None:
            return None
        beta = AlgebraElement(A, tuple(sol))
        if self * beta != A.one() or beta * self != A.one():
            raise RuntimeError("inverse verification failed")  # unreachable
        return beta

    def __str__(self):
        names = self.algebra.group.element_names
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if "+" in cs:
                cs = f"({cs})"
            if names[i] == "1":
                terms.append(cs)
            elif cs == "1":
                terms.append(names[i])
            else:
                terms.append(f"{cs}*{names[i]}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"{self.algebra.label()}<{self}>"


def solve_linear(matrix, rhs, field: FieldSpec):
    """Solve M x = b over the field by Gaussian elimination; None if singular."""
    n = len(matrix)
    aug = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [inv * v for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def matrix_rank(rows, field: FieldSpec) -> int:
    """Row rank over the field; destructive on a copy."""
    work = [list(r) for r in rows if any(r)]
    rank = 0
    cols = len(work[0]) if work else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = work[rank][col].inverse()
        work[rank] = [inv * v for v in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def enumerate_units(algebra: Algebra) -> list[AlgebraElement]:
    """All invertible elements, in coefficient counting order (brute force)."""
    return [a for a in algebra.elements() if a.try_inverse() is not None]


def p_power_collapse_check(algebra: Algebra) -> bool:
    """Local-ring criterion for modular p-group algebras, checked exhaustively.

    Requires |G| = p^m with p the field characteristic.  Verifies that units
    are exactly the elements of nonzero augmentation, and for abelian G that
    a^|G| collapses to augmentation(a)^|G|.
    """
    p = algebra.field.p
    n = algebra.group.order
    m = n
    while m % p == 0:
        m //= p
    if m != 1:
        raise ValueError(f"group order {n} is not a power of the characteristic {p}")
    abelian = algebra.group.is_abelian()
    for a in algebra.elements():
        aug = a.augmentation()
        if (a.try_inverse() is not None) != bool(aug):
            return False
        if abelian and a ** n != algebra.scalar(aug ** n):
            return False
    return True
