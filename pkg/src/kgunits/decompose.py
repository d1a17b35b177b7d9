"""Structure of commutative group algebras as sums of field blocks.

When the characteristic does not divide |G| (Maschke), KG splits into a
direct sum of finite fields.  Otherwise G is split as P x H with P the
Sylow subgroup for the characteristic, KH is decomposed into fields, and
each field summand F contributes a local block F[P].

Rendering grammar (fixed, used in reports and golden files):
field blocks as "F4", modular blocks as "F4[C2]" or "F2[C2^2]", equal
blocks grouped with "^m", summands joined with " + ", e.g. "F2 + F4^4".
"""

from dataclasses import dataclass
from functools import reduce

from .algebra import Algebra, AlgebraElement
from .fields import (FieldSpec, factor_monic, make_field, poly_divmod,
                     poly_ext_gcd, poly_mod, poly_mul, prime_factors,
                     prime_power_split, x_power_minus_one)
from .groups import Group
from .units import AbelianType, partition_from_power_counts


def is_semisimple(algebra: Algebra) -> bool:
    return algebra.group.order % algebra.field.p != 0


def primary_cyclic_orders(group: Group) -> dict[int, tuple[int, ...]]:
    """Per-prime partitions of an abelian group, from its order statistics.

    The count of elements killed by r^i determines the r-part partition;
    the product of the recovered cyclic orders must give back |G|.
    """
    if not group.is_abelian():
        raise ValueError(f"{group.label} is not abelian")
    spectrum = group.order_spectrum()
    parts: dict[int, tuple[int, ...]] = {}
    total = 1
    for r in prime_factors(group.order):
        max_e = 0
        o = group.order
        while o % r == 0:
            o //= r
            max_e += 1
        counts = []
        for i in range(max_e + 1):
            cap = r ** i
            counts.append(sum(c for d, c in spectrum.items() if cap % d == 0))
        lam = partition_from_power_counts(r, counts)
        parts[r] = lam
        for e in lam:
            total *= r ** e
    if total != group.order:
        raise RuntimeError("primary decomposition does not multiply up to |G|")
    return parts


@dataclass(frozen=True)
class FieldBlock:
    """One field summand F_{q_base^degree}."""

    q_base: int
    degree: int

    def field_size(self) -> int:
        return self.q_base ** self.degree

    def dimension(self) -> int:
        return self.degree

    def unit_order(self) -> int:
        return self.field_size() - 1

    def sort_key(self):
        return (0, self.degree, ())

    def render(self) -> str:
        return f"F{self.field_size()}"


@dataclass(frozen=True)
class ModularBlock:
    """A local block F_{q_base^degree}[P] with P a p-group for the characteristic."""

    q_base: int
    degree: int
    p_part: tuple[int, ...]  # cyclic orders of P, descending prime powers

    def __post_init__(self):
        p = prime_power_split(self.q_base)[0]
        for o in self.p_part:
            n = o
            while n % p == 0:
                n //= p
            if n != 1 or o < p:
                raise ValueError(f"p-part order {o} is not a power of {p}")

    def field_size(self) -> int:
        return self.q_base ** self.degree

    def group_size(self) -> int:
        return reduce(lambda a, b: a * b, self.p_part, 1)

    def dimension(self) -> int:
        return self.degree * self.group_size()

    def unit_order(self) -> int:
        # F[P] is local: units are the elements of nonzero augmentation
        s = self.field_size()
        return (s - 1) * s ** (self.group_size() - 1)

    def sort_key(self):
        return (1, self.degree, self.p_part)

    def render(self) -> str:
        ptype = AbelianType.from_cyclic_orders(self.p_part).render().replace(" ", "")
        return f"F{self.field_size()}[{ptype}]"


@dataclass(frozen=True)
class SummandList:
    """Multiset of blocks making up a commutative group algebra."""

    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks",
                           tuple(sorted(self.blocks, key=lambda b: b.sort_key())))

    def dimension(self) -> int:
        return sum(b.dimension() for b in self.blocks)

    def unit_order(self) -> int:
        n = 1
        for b in self.blocks:
            n *= b.unit_order()
        return n

    def all_fields(self) -> bool:
        return all(isinstance(b, FieldBlock) for b in self.blocks)

    def render(self) -> str:
        out = []
        i = 0
        while i < len(self.blocks):
            j = i
            while j < len(self.blocks) and self.blocks[j] == self.blocks[i]:
                j += 1
            name = self.blocks[i].render()
            out.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return " + ".join(out)

    def __str__(self):
        return self.render()


def decompose_abelian(algebra: Algebra) -> SummandList:
    """Split KG (G abelian) into field blocks, with the Sylow part attached.

    The coprime part H is processed one cyclic factor C_n at a time: every
    current field summand F refines along the irreducible factors of
    x^n - 1 over F, multiplying block degrees accordingly.
    """
    group = algebra.group
    if not group.is_abelian():
        raise ValueError(f"{group.label} is not abelian")
    field = algebra.field
    p = field.p
    primary = primary_cyclic_orders(group)
    p_part = tuple(p ** e for e in primary.get(p, ()))
    coprime = sorted(r ** e for r, lam in primary.items() if r != p for e in lam)

    degrees = [1]
    for n in coprime:
        refined = []
        for d in degrees:
            sub = make_field(p, field.k * d)
            for f, mult in factor_monic(x_power_minus_one(sub, n)):
                if mult != 1:
                    raise RuntimeError("repeated factor in a coprime cyclotomic split")
                refined.append(d * f.degree)
        degrees = refined
    if p_part:
        blocks = tuple(ModularBlock(field.q, d, p_part) for d in degrees)
    else:
        blocks = tuple(FieldBlock(field.q, d) for d in degrees)
    out = SummandList(blocks)
    if out.dimension() != group.order:
        raise RuntimeError("block dimensions do not sum to |G|")
    return out


def predicted_unit_structure(summands: SummandList) -> AbelianType | None:
    """Unit group implied by the blocks, or None when a P is not elementary.

    A field block of size s contributes C_{s-1}.  A modular block F[P]
    with F of size p^m and P elementary abelian of rank n contributes
    C_p^{m(p^n - 1)} on top of its field-unit factor.
    """
    orders: list[int] = []
    for block in summands.blocks:
        s = block.field_size()
        orders.append(s - 1)
        if isinstance(block, ModularBlock):
            p, k_base = prime_power_split(block.q_base)
            if any(o != p for o in block.p_part):
                return None
            m = k_base * block.degree
            n = len(block.p_part)
            orders.extend([p] * (m * (p ** n - 1)))
    return AbelianType.from_cyclic_orders(o for o in orders if o > 1)


def primitive_idempotents(algebra: Algebra) -> tuple[AlgebraElement, ...]:
    """CRT idempotents of K[x]/(x^n - 1) for a cyclic group of coprime order.

    For each irreducible factor f of x^n - 1 with cofactor c, the image of
    u*c is the identity of the f-block, where u inverts c modulo f.
    """
    group = algebra.group
    field = algebra.field
    if not group.is_abelian() or group.exponent() != group.order:
        raise ValueError(f"{group.label} is not cyclic")
    if group.order % field.p == 0:
        raise ValueError(f"{algebra.label()} is not semisimple")
    n = group.order
    gen = group.generators[0][1]
    power_index = [0] * n
    idx = 0
    for j in range(1, n):
        idx = group.mul(idx, gen)
        power_index[j] = idx

    modulus = x_power_minus_one(field, n)
    out = []
    for f, _ in factor_monic(modulus):
        cof = poly_divmod(modulus.coeffs, f.coeffs)[0]
        g, u, _ = poly_ext_gcd(cof, f.coeffs)
        if len(g) != 1:
            raise RuntimeError("cofactor shares a factor with its complement")
        e_poly = poly_mod(poly_mul(u, cof), modulus.coeffs)
        coeffs = [field.zero()] * n
        for j, c in enumerate(e_poly):
            coeffs[power_index[j]] = c
        out.append(algebra.from_coeffs(coeffs))

    total = algebra.zero()
    for i, e in enumerate(out):
        if e * e != e:
            raise RuntimeError("CRT idempotent is not idempotent")
        for e2 in out[i + 1:]:
            if e * e2:
                raise RuntimeError("CRT idempotents are not orthogonal")
        total = total + e
    if total != algebra.one():
        raise RuntimeError("CRT idempotents do not sum to 1")
    return tuple(out)


@dataclass(frozen=True)
class DecompositionCertificate:
    """A cyclic semisimple splitting together with its block identities."""

    algebra: Algebra
    summands: SummandList
    idempotents: tuple[AlgebraElement, ...]

    def validate(self) -> None:
        degrees = sorted(b.degree for b in self.summands.blocks)
        factored = sorted(f.degree for f, _ in
                          factor_monic(x_power_minus_one(self.algebra.field,
                                                         self.algebra.group.order)))
        if degrees != factored or len(self.idempotents) != len(degrees):
            raise RuntimeError("blocks do not match the factorization")
        basis = [self.algebra.basis_element(i)
                 for i in range(self.algebra.group.order)]
        for e in self.idempotents:
            for b in basis:
                if e * b != b * e:
                    raise RuntimeError("idempotent is not central")


def cyclic_decomposition_certificate(algebra: Algebra) -> DecompositionCertificate:
    cert = DecompositionCertificate(algebra, decompose_abelian(algebra),
                                    primitive_idempotents(algebra))
    cert.validate()
    return cert
