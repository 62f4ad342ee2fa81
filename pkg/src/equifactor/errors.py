"""Exception types shared across the library.

All inputs are validated eagerly; computational identities that the library
promises to uphold raise ConsistencyError when they fail, which always
indicates a bug rather than bad input.
"""


class DimensionError(ValueError):
    """Matrix dimensions do not admit the requested operation."""


class SingularMatrixError(ValueError):
    """Matrix inversion hit a zero pivot.

    The attribute ``column`` names the 0-based column where no nonzero
    pivot could be found.
    """

    def __init__(self, column: int):
        self.column = column
        super().__init__(f"matrix is singular: no pivot available in column {column}")


class InexactDivisionError(ValueError):
    """Polynomial division left a nonzero remainder.

    Carries the offending remainder; a nonzero remainder in any of the
    factorization routines signals that a claimed divisibility identity
    does not hold for the given input.
    """

    def __init__(self, remainder, message: str = "polynomial division is not exact"):
        self.remainder = remainder
        super().__init__(f"{message}; remainder = {remainder}")


class DegreeBoundError(ValueError):
    """Stated degree bounds for an interpolated determinant were violated."""


class NotEquitableError(ValueError):
    """A (matrix, partition) pair failed the constant-block-row-sum test.

    ``witness`` is a triple (cell_i, cell_j, vertex) naming the first block
    and row whose sum deviates from the first row of that block.
    """

    def __init__(self, cell_i: int, cell_j: int, vertex):
        self.witness = (cell_i, cell_j, vertex)
        super().__init__(
            f"pair is not equitable: block ({cell_i}, {cell_j}) has a deviating "
            f"row sum at vertex {vertex}"
        )


class ConsistencyError(RuntimeError):
    """An internally verified identity failed; indicates a library bug."""


class ParseError(ValueError):
    """Input file could not be parsed; carries line and column numbers."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
