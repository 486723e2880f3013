"""Exception types shared across the package."""


class StuquandleError(Exception):
    """Base class for every error raised by this package."""


class NonBijectiveColumn(StuquandleError):
    """Some column of the * table is not a permutation of the carrier."""

    def __init__(self, column: int):
        self.column = column
        super().__init__(f"column {column} of the * table is not a bijection")


class AxiomViolation(StuquandleError):
    """An axiom fails; carries the axiom id and the first witness found.

    The witness tuple lists the quantified elements in order, so it has
    length 1 for idempotency, 2 for the pair axioms and 3 otherwise.
    """

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = tuple(witness)
        spot = ", ".join(f"{n}={v}" for n, v in zip("xyz", self.witness))
        super().__init__(f"axiom {axiom} fails at {spot}")


class NonUnit(StuquandleError):
    """A coefficient that must be invertible mod n is not."""

    def __init__(self, value: int, modulus: int):
        self.value = value
        self.modulus = modulus
        super().__init__(f"{value} is not invertible mod {modulus}")


class NotClosed(StuquandleError):
    """A subset is not closed under the five operations."""

    def __init__(self, members, op: str, x: int, y: int, result: int):
        self.members = tuple(members)
        self.op = op
        self.witness = (x, y, result)
        super().__init__(
            f"subset {set(members)} is not closed: {op}({x}, {y}) = {result}"
        )


class IndexOutOfRange(StuquandleError):
    """A generator or arc index points outside its carrier."""


class MalformedStripe(StuquandleError):
    """An arc diagram references bad strands or overlapping bond sites."""


class DanglingEnd(StuquandleError):
    """Self-closure was requested but there is no open strand end to close."""


class UnknownFixture(StuquandleError):
    """No catalog entry with the requested id."""

    def __init__(self, fixture_id: str):
        self.fixture_id = fixture_id
        super().__init__(f"unknown fixture: {fixture_id!r}")


class FormatError(StuquandleError):
    """An input document does not match the expected JSON schema."""
