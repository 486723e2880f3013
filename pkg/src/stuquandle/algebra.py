"""Finite stuquandles: operation tables, axiom checking, parametric families.

A stuquandle is a quandle (X, *) together with four extra binary maps
R1..R4.  Everything here works on carriers {0..n-1} with the five
operations stored as n x n tables, row = first argument, column = second
argument.  The inverse operation x ~* y (the preimage of x under the
column-y bijection of *) is always derived, never user supplied.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .errors import AxiomViolation, NonBijectiveColumn, NonUnit


class OperationTable:
    """Square table over {0..n-1}; entry [x][y] is the value of op(x, y)."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("operation table must be non-empty")
        for row in rows:
            if len(row) != n:
                raise ValueError("operation table must be square")
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"table entry {v} outside 0..{n - 1}")
        self.n = n
        self.rows = rows

    def __call__(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def __eq__(self, other):
        return isinstance(other, OperationTable) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"OperationTable({[list(r) for r in self.rows]})"

    def column_inverse(self) -> "OperationTable":
        """Invert every column map x -> T[x][y].

        Raises NonBijectiveColumn(y) on the first column that is not a
        permutation of the carrier.
        """
        n = self.n
        inv = [[0] * n for _ in range(n)]
        for y in range(n):
            seen = [False] * n
            for x in range(n):
                v = self.rows[x][y]
                if seen[v]:
                    raise NonBijectiveColumn(y)
                seen[v] = True
                inv[v][y] = x
        return OperationTable(inv)


def table_from(n: int, fn) -> OperationTable:
    """Tabulate fn(x, y) mod n over the carrier {0..n-1}."""
    return OperationTable([[fn(x, y) % n for y in range(n)] for x in range(n)])


def _as_table(n: int, table) -> OperationTable:
    t = table if isinstance(table, OperationTable) else OperationTable(table)
    if t.n != n:
        raise ValueError(f"expected a {n}x{n} table, got {t.n}x{t.n}")
    return t


def verify_quandle(star: OperationTable) -> OperationTable:
    """Check quandle axioms for *, returning the derived ~* table.

    Column bijectivity is checked first (it is structural: ~* needs it),
    then right distributivity, then idempotency.
    """
    star_inv = star.column_inverse()
    n = star.n
    for x, y, z in itertools.product(range(n), repeat=3):
        if star(star(x, y), z) != star(star(x, z), star(y, z)):
            raise AxiomViolation("quandle-i", (x, y, z))
    for x in range(n):
        if star(x, x) != x:
            raise AxiomViolation("quandle-iii", (x,))
    return star_inv


# Singquandle/stuquandle axioms over (x, y) pairs and (x, y, z) triples.
# Each entry: (axiom id, predicate); predicates close over the six tables.
def _pair_axioms(star, sinv, r1, r2, r3, r4):
    return (
        ("eq4", lambda x, y: r2(x, y) == r1(y, star(x, y))),
        ("eq5", lambda x, y: star(r1(x, y), r2(x, y)) == r2(y, star(x, y))),
        ("eq6", lambda x, y: star(r3(y, x), r4(y, x)) == r4(star(x, y), y)),
        ("eq7", lambda x, y: r4(y, x) == r3(star(x, y), y)),
    )


def _triple_axioms(star, sinv, r1, r2, r3, r4):
    return (
        ("eq1", lambda x, y, z: star(r1(sinv(x, y), z), y) == r1(x, star(z, y))),
        ("eq2", lambda x, y, z: r2(sinv(x, y), z) == sinv(r2(x, star(z, y)), y)),
        ("eq3", lambda x, y, z: star(sinv(y, r1(x, z)), x) == sinv(star(y, r2(x, z)), z)),
        ("eq8", lambda x, y, z: r3(star(y, x), z) == star(r3(y, sinv(z, x)), x)),
        ("eq9", lambda x, y, z: r4(y, sinv(z, x)) == sinv(r4(star(y, x), z), x)),
        ("eq10", lambda x, y, z: sinv(star(x, r4(y, z)), y) == star(sinv(x, r3(y, z)), z)),
    )


_AXIOM_ORDER = ("eq1", "eq2", "eq3", "eq4", "eq5", "eq6", "eq7", "eq8", "eq9", "eq10")


def _verify_stuquandle(star, sinv, r1, r2, r3, r4):
    n = star.n
    pair = dict(_pair_axioms(star, sinv, r1, r2, r3, r4))
    triple = dict(_triple_axioms(star, sinv, r1, r2, r3, r4))
    for axiom in _AXIOM_ORDER:
        if axiom in pair:
            ok = pair[axiom]
            for x, y in itertools.product(range(n), repeat=2):
                if not ok(x, y):
                    raise AxiomViolation(axiom, (x, y))
        else:
            ok = triple[axiom]
            for x, y, z in itertools.product(range(n), repeat=3):
                if not ok(x, y, z):
                    raise AxiomViolation(axiom, (x, y, z))


@dataclass(frozen=True)
class FiniteStuquandle:
    """A validated finite stuquandle; immutable after construction."""

    n: int
    star: OperationTable
    star_inv: OperationTable
    r1: OperationTable
    r2: OperationTable
    r3: OperationTable
    r4: OperationTable

    @property
    def elements(self) -> range:
        return range(self.n)

    def operations(self) -> dict[str, OperationTable]:
        """The five defining operations plus the derived ~*."""
        return {
            "*": self.star,
            "~*": self.star_inv,
            "R1": self.r1,
            "R2": self.r2,
            "R3": self.r3,
            "R4": self.r4,
        }

    def relabel(self, sigma) -> "FiniteStuquandle":
        """Transport the structure along a bijection of the carrier."""
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(self.n)):
            raise ValueError("relabeling must be a bijection of the carrier")

        def moved(t: OperationTable) -> list[list[int]]:
            out = [[0] * self.n for _ in range(self.n)]
            for x in range(self.n):
                for y in range(self.n):
                    out[sigma[x]][sigma[y]] = sigma[t(x, y)]
            return out

        return build_stuquandle(
            self.n, moved(self.star), moved(self.r1), moved(self.r2),
            moved(self.r3), moved(self.r4),
        )


def build_stuquandle(n: int, star, r1, r2, r3, r4) -> FiniteStuquandle:
    """Validate the five tables and return the structure.

    All thirteen axioms (quandle i-iii plus eq1..eq10) are checked
    exhaustively; the first failure is reported with its witness.
    """
    star = _as_table(n, star)
    r1, r2, r3, r4 = (_as_table(n, t) for t in (r1, r2, r3, r4))
    star_inv = verify_quandle(star)
    _verify_stuquandle(star, star_inv, r1, r2, r3, r4)
    return FiniteStuquandle(n, star, star_inv, r1, r2, r3, r4)


@dataclass(frozen=True)
class AffineParams:
    """Parameters (n, a, b, e) of the linear family over Z_n; a must be a unit."""

    n: int
    a: int
    b: int
    e: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be positive")
        if gcd(self.a % self.n, self.n) != 1:
            raise NonUnit(self.a, self.n)


def affine_stuquandle(p: AffineParams) -> FiniteStuquandle:
    """The linear stuquandle on Z_n:

        x * y   = a*x + (1-a)*y
        R1(x,y) = b*x + (1-b)*y
        R2(x,y) = a*(1-b)*x + (1 - a*(1-b))*y
        R3(x,y) = (1-e)*x + e*y
        R4(x,y) = (1 - a*(1-e))*x + a*(1-e)*y
    """
    n, a, b, e = p.n, p.a, p.b, p.e
    return build_stuquandle(
        n,
        table_from(n, lambda x, y: a * x + (1 - a) * y),
        table_from(n, lambda x, y: b * x + (1 - b) * y),
        table_from(n, lambda x, y: a * (1 - b) * x + (1 - a * (1 - b)) * y),
        table_from(n, lambda x, y: (1 - e) * x + e * y),
        table_from(n, lambda x, y: (1 - a * (1 - e)) * x + a * (1 - e) * y),
    )


@dataclass(frozen=True)
class AlexanderParams:
    """Parameters of the two-variable module family specialized to Z_n.

    t must be a unit of Z_n; the six coefficients feed the two derived
    weights that play the roles of b and e in the linear family.
    """

    n: int
    t: int
    v: int
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be positive")
        if gcd(self.t % self.n, self.n) != 1:
            raise NonUnit(self.t, self.n)

    @property
    def alpha_abc(self) -> int:
        """Weight a*t + b*v + c*t*v used by R1/R2."""
        return (self.a * self.t + self.b * self.v + self.c * self.t * self.v) % self.n

    @property
    def alpha_def(self) -> int:
        """Weight d*t + f*v + e*t*v used by R3/R4."""
        return (self.d * self.t + self.f * self.v + self.e * self.t * self.v) % self.n


def alexander_stuquandle(p: AlexanderParams) -> FiniteStuquandle:
    """Specialize the module family to Z_n; reduces to the linear family
    with a <- t, b <- alpha_abc, e <- alpha_def."""
    return affine_stuquandle(AffineParams(p.n, p.t, p.alpha_abc, p.alpha_def))


@dataclass(frozen=True)
class Subset:
    """A subset of a stuquandle's carrier, kept sorted and duplicate free."""

    parent: FiniteStuquandle
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(int(m) for m in self.members)))
        for m in members:
            if not 0 <= m < self.parent.n:
                raise ValueError(f"element {m} outside the carrier")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _closure_violation(s: Subset):
    """First (op, x, y, result) escaping the subset, or None if closed.

    Closure under ~* follows from closure under * on a finite carrier,
    but it is cheap to check alongside the rest.
    """
    inside = set(s.members)
    for name, op in s.parent.operations().items():
        for x in s.members:
            for y in s.members:
                v = op(x, y)
                if v not in inside:
                    return (name, x, y, v)
    return None


def is_substuquandle(s: Subset) -> bool:
    """True iff s is closed under *, ~*, R1, R2, R3 and R4."""
    return _closure_violation(s) is None


def substuquandle_closure(s: Subset) -> Subset:
    """Smallest superset of s closed under the five operations and ~*."""
    if not s.members:
        raise ValueError("closure of an empty subset is undefined")
    X = s.parent
    ops = tuple(X.operations().values())
    inside = set(s.members)
    frontier = list(s.members)
    while frontier:
        fresh = []
        current = tuple(inside)
        for op in ops:
            for x in current:
                for y in frontier:
                    for v in (op(x, y), op(y, x)):
                        if v not in inside:
                            inside.add(v)
                            fresh.append(v)
        frontier = fresh
    return Subset(X, tuple(inside))


def is_homomorphism(f, X: FiniteStuquandle, Y: FiniteStuquandle) -> bool:
    """True iff f carries each of *, R1..R4 on X to its counterpart on Y."""
    f = tuple(f)
    if len(f) != X.n or any(not 0 <= v < Y.n for v in f):
        return False
    pairs = (
        (X.star, Y.star), (X.r1, Y.r1), (X.r2, Y.r2), (X.r3, Y.r3), (X.r4, Y.r4),
    )
    for x, y in itertools.product(range(X.n), repeat=2):
        for opx, opy in pairs:
            if f[opx(x, y)] != opy(f[x], f[y]):
                return False
    return True


def is_isomorphic(X: FiniteStuquandle, Y: FiniteStuquandle):
    """A witness bijection X -> Y as a tuple, or None.

    The search is pruned by matching element profiles (they are preserved
    by isomorphisms); correctness does not depend on the prune because
    every returned witness is a fully checked homomorphism.
    """
    if X.n != Y.n:
        return None
    from .polynomial import element_profile

    px = [element_profile(X, x) for x in range(X.n)]
    py = [element_profile(Y, y) for y in range(Y.n)]
    if sorted(px) != sorted(py):
        return None
    candidates = [
        tuple(y for y in range(Y.n) if py[y] == px[x]) for x in range(X.n)
    ]
    pairs = (
        (X.star, Y.star), (X.r1, Y.r1), (X.r2, Y.r2), (X.r3, Y.r3), (X.r4, Y.r4),
    )

    f = [-1] * X.n
    used = [False] * Y.n

    def compatible(i: int) -> bool:
        # check every op equation whose arguments and image are all decided
        for j in range(i + 1):
            for opx, opy in pairs:
                for a, b in ((i, j), (j, i)):
                    k = opx(a, b)
                    if f[k] >= 0 and f[k] != opy(f[a], f[b]):
                        return False
        return True

    def search(i: int):
        if i == X.n:
            return tuple(f)
        for y in candidates[i]:
            if used[y]:
                continue
            f[i] = y
            used[y] = True
            if compatible(i):
                found = search(i + 1)
                if found is not None:
                    return found
            f[i] = -1
            used[y] = False
        return None

    witness = search(0)
    if witness is not None and is_homomorphism(witness, X, Y):
        return witness
    return None
