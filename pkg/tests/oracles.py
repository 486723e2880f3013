"""Reference implementations used as independent oracles by the tests.

Everything here works straight off the raw operation tables with plain
loops, sharing no code path with the module under test.
"""

import itertools

OP_TABLES = {
    "*": lambda X: X.star,
    "~*": lambda X: X.star_inv,
    "R1": lambda X: X.r1,
    "R2": lambda X: X.r2,
    "R3": lambda X: X.r3,
    "R4": lambda X: X.r4,
}


def sweep_colorings(pres, X):
    """Full |X|^g sweep, keeping assignments that satisfy every relation."""
    rels = [(r.out, OP_TABLES[r.op](X).rows, r.lhs, r.rhs) for r in pres.relations]
    found = []
    for assign in itertools.product(range(X.n), repeat=pres.generator_count):
        if all(assign[out] == rows[assign[lhs]][assign[rhs]] for out, rows, lhs, rhs in rels):
            found.append(assign)
    return found


def closure_by_iteration(X, seed):
    """Grow a subset to a fixpoint under all six operations."""
    members = set(seed)
    tables = [fn(X).rows for fn in OP_TABLES.values()]
    while True:
        grown = set(members)
        for rows in tables:
            for x in members:
                for y in members:
                    grown.add(rows[x][y])
        if grown == members:
            return tuple(sorted(members))
        members = grown


def is_closed(X, members):
    members = set(members)
    for fn in OP_TABLES.values():
        rows = fn(X).rows
        for x in members:
            for y in members:
                if rows[x][y] not in members:
                    return False
    return True


def count_profile(X, x):
    """(r, c) count vectors straight from the five tables."""
    tables = [X.star.rows, X.r1.rows, X.r2.rows, X.r3.rows, X.r4.rows]
    r = tuple(sum(1 for y in range(X.n) if rows[x][y] == x) for rows in tables)
    c = tuple(sum(1 for y in range(X.n) if rows[y][x] == y) for rows in tables)
    return r, c
