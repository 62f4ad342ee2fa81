"""Exact polynomial arithmetic: univariate over the rationals, bivariate in (u, t).

UniPoly stores dense ascending coefficients as Fractions; BiPoly stores a
sparse map from (u-degree, t-degree) to exact coefficients. Both types are
immutable by convention, support ordinary operator arithmetic, and never
round. Division helpers raise InexactDivisionError instead of truncating,
because every division performed by this library is backed by an identity
that guarantees exactness.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ConsistencyError, InexactDivisionError

Scalar = int | Fraction


def _frac(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


class UniPoly:
    """Univariate polynomial over exact rationals, coefficients ascending.

    The zero polynomial is represented by an empty coefficient tuple and has
    degree None (a sentinel, deliberately not -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "UniPoly":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "UniPoly":
        """Monic polynomial with the given roots (with multiplicity)."""
        p = cls.one()
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    @classmethod
    def interpolate(cls, points: Sequence[tuple[Scalar, Scalar]]) -> "UniPoly":
        """The unique interpolating polynomial through the given points.

        Computed in Newton form with exact divided differences, which is
        the same polynomial Lagrange's formula yields with fewer
        coefficient operations.
        """
        xs = [_frac(x) for x, _ in points]
        if len(set(xs)) != len(xs):
            raise ValueError("interpolation abscissae must be distinct")
        dd = [_frac(y) for _, y in points]
        k = len(dd)
        for level in range(1, k):
            for i in range(k - 1, level - 1, -1):
                dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
        result = cls.zero()
        basis = cls.one()
        for i in range(k):
            if dd[i] != 0:
                result = result + dd[i] * basis
            basis = basis * cls((-xs[i], 1))
        return result

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def __rmul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result, base = UniPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x0: Scalar) -> Fraction:
        """Evaluate by Horner's rule."""
        x0 = _frac(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def div_exact(self, den: "UniPoly") -> "UniPoly":
        """Long division that must leave no remainder.

        Raises InexactDivisionError carrying the remainder otherwise; a
        nonzero remainder signals a violated divisibility identity.
        """
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = den.degree
        assert dd is not None
        lead = den.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        while len(rem) > dd:
            c = rem[-1] / lead
            k = len(rem) - 1 - dd
            quot[k] = c
            for i, dc in enumerate(den.coeffs):
                rem[k + i] -= c * dc
            while rem and rem[-1] == 0:
                rem.pop()
        if rem:
            raise InexactDivisionError(UniPoly(rem))
        return UniPoly(quot)

    # -- comparison and display ----------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"

    def display(self, var: str = "x") -> str:
        """Human-readable form, highest degree first, e.g. 'x^2 - 2*x'."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xk = var if k == 1 else f"{var}^{k}"
                body = xk if mag == 1 else f"{mag}*{xk}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.display()


def poly_div_exact(num: UniPoly, den: UniPoly) -> UniPoly:
    """Exact quotient of num by den; InexactDivisionError on nonzero remainder."""
    return num.div_exact(den)


class BiPoly:
    """Sparse bivariate polynomial in the indeterminates u and t.

    Terms map (u_degree, t_degree) to exact coefficients; coefficients with
    denominator 1 are stored as int. Zero coefficients are never stored.
    All library-facing results are integer polynomials; rational coefficients
    appear only in intermediate objects such as the diagonal scaling matrix
    of the join determinant identities.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | Iterable = ()):
        norm: dict[tuple[int, int], Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (du, dt), c in items:
            if du < 0 or dt < 0:
                raise ValueError("negative exponents are not representable")
            c = _frac(c)
            if c == 0:
                continue
            norm[(du, dt)] = int(c) if c.denominator == 1 else c
        self.terms: dict[tuple[int, int], Scalar] = norm

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def u(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, du: int, dt: int, coeff: Scalar = 1) -> "BiPoly":
        return cls({(du, dt): coeff})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def coefficient(self, du: int, dt: int) -> Fraction:
        return _frac(self.terms.get((du, dt), 0))

    @property
    def deg_u(self) -> int | None:
        return max((du for du, _ in self.terms), default=None)

    @property
    def deg_t(self) -> int | None:
        return max((dt for _, dt in self.terms), default=None)

    def sorted_terms(self) -> list[tuple[int, int, Scalar]]:
        """Terms as (u_degree, t_degree, coeff), sorted by (t-degree, u-degree)."""
        return [
            (du, dt, self.terms[(du, dt)])
            for du, dt in sorted(self.terms, key=lambda k: (k[1], k[0]))
        ]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    def __radd__(self, other) -> "BiPoly":
        return self + other

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return (-self) + other

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], Scalar] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    def __rmul__(self, other) -> "BiPoly":
        return self * other

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result, base = BiPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, u0: Scalar, t0: Scalar):
        """Exact value at (u0, t0); stays in plain ints when everything is."""
        total = 0
        for (du, dt), c in self.terms.items():
            total += c * u0**du * t0**dt
        return total

    def substitute_u(self, u0: Scalar) -> UniPoly:
        """Specialize u = u0, returning a univariate polynomial in t."""
        u0 = _frac(u0)
        coeffs: dict[int, Fraction] = {}
        for (du, dt), c in self.terms.items():
            coeffs[dt] = coeffs.get(dt, Fraction(0)) + _frac(c) * u0**du
        if not coeffs:
            return UniPoly.zero()
        top = max(coeffs)
        return UniPoly([coeffs.get(k, Fraction(0)) for k in range(top + 1)])

    def substitute_t(self, t0: Scalar) -> UniPoly:
        """Specialize t = t0, returning a univariate polynomial in u."""
        t0 = _frac(t0)
        coeffs: dict[int, Fraction] = {}
        for (du, dt), c in self.terms.items():
            coeffs[du] = coeffs.get(du, Fraction(0)) + _frac(c) * t0**dt
        if not coeffs:
            return UniPoly.zero()
        top = max(coeffs)
        return UniPoly([coeffs.get(k, Fraction(0)) for k in range(top + 1)])

    def div_exact(self, den: "BiPoly") -> "BiPoly":
        """Exact multivariate division in lex order with t ranked above u.

        Repeatedly cancels the lex-leading term of the running remainder
        against the leading term of ``den``. When the input really is a
        multiple of ``den`` this terminates with remainder zero; otherwise
        InexactDivisionError carries whatever could not be cancelled.
        """
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")

        def lexkey(key: tuple[int, int]) -> tuple[int, int]:
            du, dt = key
            return (dt, du)

        lead_d = max(den.terms, key=lexkey)
        lead_dc = _frac(den.terms[lead_d])
        rem: dict[tuple[int, int], Fraction] = {
            k: _frac(c) for k, c in self.terms.items()
        }
        quot: dict[tuple[int, int], Fraction] = {}
        while rem:
            lead_r = max(rem, key=lexkey)
            du, dt = lead_r[0] - lead_d[0], lead_r[1] - lead_d[1]
            if du < 0 or dt < 0:
                raise InexactDivisionError(BiPoly(rem))
            c = rem[lead_r] / lead_dc
            quot[(du, dt)] = quot.get((du, dt), Fraction(0)) + c
            for (a, b), dc in den.terms.items():
                key = (a + du, b + dt)
                val = rem.get(key, Fraction(0)) - c * _frac(dc)
                if val == 0:
                    rem.pop(key, None)
                else:
                    rem[key] = val
        return BiPoly(quot)

    # -- comparison and display ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return {k: _frac(c) for k, c in self.terms.items()} == {
            k: _frac(c) for k, c in other.terms.items()
        }

    def __hash__(self) -> int:
        return hash(frozenset((k, _frac(c)) for k, c in self.terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self.terms!r})"

    def display(self) -> str:
        """Term-table form ordered by (t-degree, u-degree) ascending."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for du, dt, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors: list[str] = []
            if mag != 1 or (du == 0 and dt == 0):
                factors.append(str(mag))
            if du:
                factors.append("u" if du == 1 else f"u^{du}")
            if dt:
                factors.append("t" if dt == 1 else f"t^{dt}")
            body = "*".join(factors)
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.display()

    def as_integer(self) -> "BiPoly":
        """Return self, asserting every coefficient is an integer."""
        if not self.is_integral():
            raise ConsistencyError(f"expected integer coefficients, got {self.terms}")
        return self


# The two Bartholdi substitution polynomials: s1 = 1 - (1-u)^2 t^2 and
# s2 = (1-u) t^2. Every zeta-function determinant in the library is a
# polynomial in these and in -t times an adjacency entry.
U = BiPoly.u()
T = BiPoly.t()
ONE = BiPoly.one()
S1 = ONE - (ONE - U) ** 2 * T**2
S2 = (ONE - U) * T**2


def ring_det(rows: Sequence[Sequence], one):
    """Cofactor-expansion determinant over any commutative ring.

    Entries need +, -, * among themselves; ``one`` is the ring's unit,
    returned for the empty matrix. Exponential in the dimension, intended
    for the small (r x r) quotient-side determinants only.
    """
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("ring_det requires a square matrix")
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]

    def expand(r_idx: list[int], c_idx: list[int]):
        if len(r_idx) == 1:
            return rows[r_idx[0]][c_idx[0]]
        top = r_idx[0]
        rest = r_idx[1:]
        total = None
        for pos, j in enumerate(c_idx):
            term = rows[top][j] * expand(rest, c_idx[:pos] + c_idx[pos + 1 :])
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        return total

    return expand(list(range(n)), list(range(n)))
