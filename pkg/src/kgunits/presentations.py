"""Finitely presented groups: words, a relator grammar, coset enumeration.

Words are tuples of signed 1-based generator indices (negative = inverse).
Commutators default to the convention [a, b] = a^-1 b^-1 a b, nested
left-normed, so [a, b, c] = [[a, b], c]; the right-handed convention
a b a^-1 b^-1 is available because published relator lists do not always
say which one they mean.

Coset enumeration is the HLT strategy over the trivial subgroup: scan and
fill every relator at every live coset, with coincidences processed through
a union-find table.  The enumeration either returns |G| exactly or raises
CosetLimitExceeded, which callers must treat as "possibly infinite or cap
too low", never as an order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping

from .units import UnitGroup, evaluate_word

Word = tuple[int, ...]

CONVENTIONS = ("left", "right")
DEFAULT_COSET_LIMIT = 20000


class CosetLimitExceeded(RuntimeError):
    """Raised when enumeration would define more cosets than the cap allows."""


# ---------------------------------------------------------------------------
# word algebra

def invert_word(w: Word) -> Word:
    return tuple(-s for s in reversed(w))


def free_reduce(w: Word) -> Word:
    out: list[int] = []
    for s in w:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def commutator_word(u: Word, v: Word, convention: str = "left") -> Word:
    if convention == "left":
        w = invert_word(u) + invert_word(v) + u + v
    elif convention == "right":
        w = u + v + invert_word(u) + invert_word(v)
    else:
        raise ValueError(f"unknown commutator convention {convention!r}")
    return free_reduce(w)


def power_word(w: Word, n: int) -> Word:
    if n < 0:
        return power_word(invert_word(w), -n)
    return free_reduce(w * n)


# ---------------------------------------------------------------------------
# presentation grammar
#
#   presentation := names '|' relators
#   relators     := item (',' item)*
#   item         := expr ('=' expr)?          -- R = S becomes R S^-1
#   expr         := factor ('*' factor)*
#   factor       := atom ('^' signed-int)?
#   atom         := name | '(' expr ')' | '[' expr (',' expr)+ ']'
#
# Commutator brackets nest left-normed: [a,b,c] = [[a,b],c].

def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif c == "-" or c.isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if text[i:j] == "-":
                raise ValueError(f"stray '-' at position {i} in {text!r}")
            tokens.append(("int", int(text[i:j])))
            i = j
        elif c in "^*,()[]=|":
            tokens.append((c, c))
            i += 1
        else:
            raise ValueError(f"unexpected character {c!r} at position {i} in {text!r}")
    tokens.append(("end", None))
    return tokens


class _WordParser:
    def __init__(self, tokens, names: list[str], convention: str):
        self.toks = tokens
        self.pos = 0
        self.names = names
        self.convention = convention

    def peek(self):
        return self.toks[self.pos][0]

    def take(self, kind=None):
        t = self.toks[self.pos]
        if kind is not None and t[0] != kind:
            raise ValueError(f"expected {kind!r}, found {t[0]!r}")
        self.pos += 1
        return t

    def expr(self) -> Word:
        w = self.factor()
        while self.peek() in ("*", "name", "(", "["):
            if self.peek() == "*":
                self.take()
            w = free_reduce(w + self.factor())
        return w

    def factor(self) -> Word:
        w = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take("int")
            w = power_word(w, tok[1])
        return w

    def atom(self) -> Word:
        kind = self.peek()
        if kind == "name":
            name = self.take()[1]
            if name not in self.names:
                raise ValueError(f"unknown generator {name!r}")
            return (self.names.index(name) + 1,)
        if kind == "(":
            self.take()
            w = self.expr()
            self.take(")")
            return w
        if kind == "[":
            self.take()
            args = [self.expr()]
            while self.peek() == ",":
                self.take()
                args.append(self.expr())
            self.take("]")
            if len(args) < 2:
                raise ValueError("commutator needs at least two arguments")
            w = args[0]
            for v in args[1:]:
                w = commutator_word(w, v, self.convention)
            return w
        raise ValueError(f"unexpected token {kind!r} in word")

    def relator_item(self) -> Word:
        lhs = self.expr()
        if self.peek() == "=":
            self.take()
            rhs = self.expr()
            return free_reduce(lhs + invert_word(rhs))
        return lhs


def parse_word(text: str, names, convention: str = "left") -> Word:
    parser = _WordParser(_tokenize(text), list(names), convention)
    w = parser.relator_item()
    parser.take("end")
    return w


def parse_presentation(text: str, convention: str = "left") -> "FpGroup":
    if "|" not in text:
        raise ValueError("presentation must look like 'gens | relators'")
    gen_part, rel_part = text.split("|", 1)
    names = [n.strip() for n in gen_part.split(",") if n.strip()]
    if not names or len(set(names)) != len(names):
        raise ValueError(f"bad generator list {gen_part!r}")
    parser = _WordParser(_tokenize(rel_part), names, convention)
    relators = []
    while True:
        w = parser.relator_item()
        if w:
            relators.append(w)
        if parser.peek() == ",":
            parser.take()
            continue
        parser.take("end")
        break
    return FpGroup(tuple(names), tuple(relators))


@dataclass(frozen=True)
class FpGroup:
    """A finite presentation: generator names and freely reduced relators."""

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.generator_names)
        for rel in self.relators:
            if rel != free_reduce(rel):
                raise ValueError(f"relator {rel} is not freely reduced")
            if any(s == 0 or abs(s) > n for s in rel):
                raise ValueError(f"relator {rel} uses an unknown generator index")

    def drop_relator(self, i: int) -> "FpGroup":
        rels = self.relators[:i] + self.relators[i + 1:]
        return replace(self, relators=rels)

    def describe(self) -> str:
        def show(w):
            parts = []
            for s in w:
                name = self.generator_names[abs(s) - 1]
                parts.append(name if s > 0 else f"{name}^-1")
            return "*".join(parts) if parts else "1"
        return f"< {', '.join(self.generator_names)} | {', '.join(show(r) for r in self.relators)} >"


# ---------------------------------------------------------------------------
# Todd-Coxeter

def coset_enumeration(pres: FpGroup, limit: int = DEFAULT_COSET_LIMIT) -> int:
    """Order of the presented group via HLT enumeration over the trivial subgroup."""
    ngens = len(pres.generator_names)
    ncols = 2 * ngens

    def col(s: int) -> int:
        # generator s>0 -> column 2(s-1); inverse -> 2(s-1)+1
        return 2 * (s - 1) if s > 0 else 2 * (-s - 1) + 1

    rel_cols = [tuple(col(s) for s in r) for r in pres.relators]

    table: list[list[int | None]] = [[None] * ncols]
    p = [0]  # union-find; p[i] <= i, live iff p[i] == i
    queue: list[int] = []

    def rep(k: int) -> int:
        r = k
        while p[r] != r:
            r = p[r]
        while p[k] != r:
            p[k], k = r, p[k]
        return r

    def define(a: int, c: int):
        if len(table) >= limit:
            raise CosetLimitExceeded(
                f"coset cap {limit} exceeded; group is possibly infinite or the cap too low")
        b = len(table)
        table.append([None] * ncols)
        p.append(b)
        table[a][c] = b
        table[b][c ^ 1] = a

    def merge(a: int, b: int):
        a, b = rep(a), rep(b)
        if a != b:
            a, b = min(a, b), max(a, b)
            p[b] = a
            queue.append(b)

    def coincidence(a: int, b: int):
        merge(a, b)
        while queue:
            g = queue.pop()
            row = table[g]
            for c in range(ncols):
                d = row[c]
                if d is None:
                    continue
                table[d][c ^ 1] = None
                mu, nu = rep(g), rep(d)
                if table[mu][c] is not None:
                    merge(nu, table[mu][c])
                elif table[nu][c ^ 1] is not None:
                    merge(mu, table[nu][c ^ 1])
                else:
                    table[mu][c] = nu
                    table[nu][c ^ 1] = mu

    def scan_and_fill(a: int, word):
        f, i = a, 0
        b, j = a, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            define(f, word[i])

    a = 0
    while a < len(table):
        if p[a] != a:
            a += 1
            continue
        for word in rel_cols:
            if not word:
                continue
            scan_and_fill(a, word)
            if p[a] != a:
                break
        if p[a] == a:
            for c in range(ncols):
                if table[a][c] is None:
                    define(a, c)
        a += 1

    live = [i for i in range(len(table)) if p[i] == i]
    # verification sweep: the table must be total, closed, and every relator
    # must trace back to its start at every live coset
    for i in live:
        for c in range(ncols):
            d = table[i][c]
            if d is None or p[d] != d or table[d][c ^ 1] != i:
                raise RuntimeError("coset table inconsistent after enumeration")
    for i in live:
        for word in rel_cols:
            cur = i
            for c in word:
                cur = table[cur][c]
            if cur != i:
                raise RuntimeError("relator fails to close on the finished table")
    return len(live)


# ---------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class Certificate:
    """A successful three-step check identifying U with the presented group."""

    presentation: FpGroup
    order: int
    convention: str

    def summary(self) -> str:
        return (f"certified: relators hold, generators generate, "
                f"presented order {self.order} matches |U| ({self.convention} commutators)")


@dataclass(frozen=True)
class Refutation:
    """A failed certification attempt, recording which step broke."""

    failed_step: int  # 1 relators, 2 generation, 3 presented order
    detail: str

    def summary(self) -> str:
        return f"refuted at step {self.failed_step}: {self.detail}"


def certify_unit_group_presentation(unit_group: UnitGroup,
                                    pres: FpGroup,
                                    gens: Mapping[str, object],
                                    limit: int = DEFAULT_COSET_LIMIT,
                                    convention: str = "left"):
    """Von Dyck certificate that unit_group is presented by pres via gens.

    Step 1: every relator evaluates to 1 on the named unit generators, so the
    assignment extends to a homomorphism from the presented group.  Step 2:
    the generators generate all of U, so it is onto.  Step 3: the presented
    group's order equals |U|, so it is an isomorphism.
    """
    try:
        images = [gens[name] for name in pres.generator_names]
    except KeyError as e:
        raise ValueError(f"missing generator image for {e.args[0]!r}") from None
    inverses = []
    for name, g in zip(pres.generator_names, images):
        inv = g.try_inverse()
        if inv is None:
            raise ValueError(f"generator {name} is not a unit")
        inverses.append(inv)
    one = unit_group.algebra.one()
    for idx, rel in enumerate(pres.relators):
        if evaluate_word(rel, images, inverses, one) != one:
            return Refutation(1, f"relator #{idx + 1} does not evaluate to 1 on the generators")
    span = unit_group.closure(images)
    if span != unit_group.order:
        return Refutation(2, f"generators span {span} of {unit_group.order} units")
    try:
        order = coset_enumeration(pres, limit)
    except CosetLimitExceeded as e:
        return Refutation(3, str(e))
    if order != unit_group.order:
        return Refutation(3, f"presented group has order {order}, |U| = {unit_group.order}")
    return Certificate(pres, order, convention)


def certify_from_source(unit_group: UnitGroup,
                        source: str,
                        gens: Mapping[str, object],
                        limit: int = DEFAULT_COSET_LIMIT):
    """Try both commutator conventions on a presentation source string.

    Returns the first Certificate, else the left-convention Refutation.
    """
    outcomes = []
    for convention in CONVENTIONS:
        pres = parse_presentation(source, convention)
        res = certify_unit_group_presentation(unit_group, pres, gens, limit, convention)
        if isinstance(res, Certificate):
            return res
        outcomes.append(res)
    return outcomes[0]
