# -*- coding: utf-8 -*-
"""
Polynomial ring
Sparse multivariate polynomials over cyclotomic coefficients, square matrices
of them, and the text grammar shared by the report writer and the fixtures.
"""

import re
from fractions import Fraction
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .exactnum import Cyclotomic, as_cyclotomic, zeta

Exponent = Tuple[int, ...]

MAX_DET_DIM = 8


class StructureMismatch(ValueError):
    """Operands do not share a structure (variable count, order, sign or size)"""


class MultiPoly:
    """
    Sparse polynomial in x0..x{nvars-1}.

    terms maps exponent tuples to non-zero Cyclotomic coefficients; the map is
    the canonical form, so equality never depends on term order.
    """

    __slots__ = ('nvars', 'terms')
    __hash__ = None

    def __init__(self, nvars: int, terms: Optional[Dict[Exponent, object]] = None):
        if nvars < 0:
            raise ValueError(f"nvars must be non-negative, got {nvars}")
        self.nvars = nvars
        self.terms: Dict[Exponent, Cyclotomic] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise StructureMismatch(f"exponent {exps} does not have {nvars} entries")
            coeff = as_cyclotomic(coeff)
            if coeff:
                self.terms[exps] = coeff

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, Cyclotomic]) -> 'MultiPoly':
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, nvars: int) -> 'MultiPoly':
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> 'MultiPoly':
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> 'MultiPoly':
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> 'MultiPoly':
        if not 0 <= index < nvars:
            raise IndexError(f"variable x{index} outside x0..x{nvars - 1}")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def variables(cls, nvars: int) -> List['MultiPoly']:
        return [cls.variable(nvars, i) for i in range(nvars)]

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other) -> 'MultiPoly':
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise StructureMismatch(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = terms[exps] + coeff if exps in terms else coeff
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        return MultiPoly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            if not other:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        terms: Dict[Exponent, Cyclotomic] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                if exps in terms:
                    prod = terms[exps] + prod
                terms[exps] = prod
        return MultiPoly._raw(self.nvars, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self * (1 / as_cyclotomic(other))
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = MultiPoly.one(self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.nvars != other.nvars or self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[e] for e, c in self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure ---------------------------------------------------------

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degrees = {sum(e) for e in self.terms}
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Cyclotomic:
        return self.terms.get((0,) * self.nvars, Cyclotomic.rational(0))

    def has_rational_coefficients(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def coefficient(self, exps: Sequence[int]) -> Cyclotomic:
        return self.terms.get(tuple(exps), Cyclotomic.rational(0))

    def ambient_order(self) -> int:
        order = 1
        for c in self.terms.values():
            if not c.is_rational():
                order = order * c.order // gcd(order, c.order)
        return order

    def map_coefficients(self, func: Callable[[Cyclotomic], Cyclotomic]) -> 'MultiPoly':
        return MultiPoly(self.nvars, {e: func(c) for e, c in self.terms.items()})

    # -- calculus and evaluation -------------------------------------------

    def partial_derivative(self, var: int) -> 'MultiPoly':
        if not 0 <= var < self.nvars:
            raise IndexError(f"variable x{var} outside x0..x{self.nvars - 1}")
        terms = {}
        for exps, coeff in self.terms.items():
            power = exps[var]
            if power:
                lowered = exps[:var] + (power - 1,) + exps[var + 1:]
                terms[lowered] = coeff * power
        return MultiPoly._raw(self.nvars, terms)

    def substitute(self, images: Sequence['MultiPoly']) -> 'MultiPoly':
        """Replace x_i by images[i]; all images share one variable count"""
        if len(images) != self.nvars:
            raise StructureMismatch(f"need {self.nvars} images, got {len(images)}")
        target = images[0].nvars if images else 0
        result = MultiPoly.zero(target)
        cache: Dict[Tuple[int, int], MultiPoly] = {}
        for exps, coeff in self.terms.items():
            term = MultiPoly.constant(target, coeff)
            for i, power in enumerate(exps):
                if power:
                    key = (i, power)
                    if key not in cache:
                        cache[key] = images[i] ** power
                    term = term * cache[key]
            result = result + term
        return result

    def evaluate(self, values: Sequence):
        """Exact when every value is exact, complex otherwise"""
        if len(values) != self.nvars:
            raise StructureMismatch(f"need {self.nvars} values, got {len(values)}")
        exact = all(isinstance(v, (int, Fraction, Cyclotomic)) for v in values)
        if exact:
            total = Cyclotomic.rational(0)
            for exps, coeff in self.terms.items():
                term = coeff
                for v, power in zip(values, exps):
                    if power:
                        term = term * as_cyclotomic(v) ** power
                total = total + term
            return total
        return complex(self.lambdify()(np.asarray(values)))

    def lambdify(self) -> Callable[[np.ndarray], np.ndarray]:
        """Vectorised float evaluator over the last axis of its argument"""
        exps = np.array(list(self.terms.keys()), dtype=float).reshape(len(self.terms), self.nvars)
        coeffs = np.array([c.to_complex() for c in self.terms.values()], dtype=complex)
        real = bool(np.all(coeffs.imag == 0))

        def evaluate(x):
            x = np.asarray(x)
            if not len(coeffs):
                return np.zeros(x.shape[:-1])
            monomials = np.prod(x[..., None, :] ** exps, axis=-1)
            value = monomials @ coeffs
            return value.real if real else value

        return evaluate

    # -- display -----------------------------------------------------------

    def sorted_terms(self) -> List[Tuple[Exponent, Cyclotomic]]:
        """Graded lexicographic: higher degree first, then x0 before x1"""
        return sorted(self.terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def render(self) -> str:
        return render_poly(self)

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, '{render_poly(self)}')"


def partial_derivative(p: MultiPoly, var: int) -> MultiPoly:
    return p.partial_derivative(var)


def _monomial_text(exps: Exponent, symbol: str) -> str:
    factors = []
    for i, power in enumerate(exps):
        if power == 1:
            factors.append(f'{symbol}{i}')
        elif power:
            factors.append(f'{symbol}{i}^{power}')
    return '*'.join(factors)


def render_poly(p: MultiPoly, symbol: str = 'x') -> str:
    """
    Render as "3*x0^2*x1 + (j^2)*x2".

    Non-rational coefficients are lifted to the polynomial's common order so
    that every j token refers to the same root of unity.
    """
    if not p.terms:
        return '0'
    order = p.ambient_order()
    pieces = []
    for exps, coeff in p.sorted_terms():
        monomial = _monomial_text(exps, symbol)
        negative = False
        if coeff.is_rational():
            value = coeff.to_fraction()
            negative = value < 0
            magnitude = abs(value)
            if not monomial:
                text = str(magnitude)
            elif magnitude == 1:
                text = monomial
            else:
                text = f'{magnitude}*{monomial}'
        else:
            lifted = coeff.lift(order) if coeff.order != order else coeff
            text = f'({lifted})' + (f'*{monomial}' if monomial else '')
        pieces.append((negative, text))
    first_negative, first_text = pieces[0]
    out = ('-' if first_negative else '') + first_text
    for negative, text in pieces[1:]:
        out += (' - ' if negative else ' + ') + text
    return out


_TOKEN = re.compile(r'\s*(?:(\d+)|([a-z]\d+)|(j)|(\^)|([-+*/()]))')


class _Parser:
    """Recursive-descent parser for the rendering grammar"""

    def __init__(self, text: str, nvars: int, order: int, symbol: str):
        self.tokens = self._tokenize(text)
        self.pos = 0
        self.nvars = nvars
        self.order = order
        self.symbol = symbol

    @staticmethod
    def _tokenize(text: str) -> List[str]:
        tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if not match or match.end() == pos:
                raise ValueError(f"unexpected character at {pos} in {text!r}")
            tokens.append(match.group(match.lastindex))
            pos = match.end()
        return tokens

    def _peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> str:
        token = self._peek()
        if token is None:
            raise ValueError("unexpected end of polynomial text")
        self.pos += 1
        return token

    def parse(self) -> MultiPoly:
        result = self._expression()
        if self._peek() is not None:
            raise ValueError(f"trailing token {self._peek()!r}")
        return result

    def _expression(self) -> MultiPoly:
        sign = 1
        if self._peek() in ('+', '-'):
            sign = -1 if self._next() == '-' else 1
        result = self._term() * sign
        while self._peek() in ('+', '-'):
            op = self._next()
            term = self._term()
            result = result + term if op == '+' else result - term
        return result

    def _term(self) -> MultiPoly:
        result = self._factor()
        while self._peek() in ('*', '/'):
            op = self._next()
            factor = self._factor()
            if op == '*':
                result = result * factor
            else:
                if not factor.is_constant():
                    raise ValueError("division only by constants")
                result = result / factor.constant_value()
        return result

    def _exponent(self) -> int:
        if self._peek() == '^':
            self._next()
            token = self._next()
            if not token.isdigit():
                raise ValueError(f"bad exponent {token!r}")
            return int(token)
        return 1

    def _factor(self) -> MultiPoly:
        token = self._next()
        if token.isdigit():
            base = MultiPoly.constant(self.nvars, int(token))
        elif token == 'j':
            return MultiPoly.constant(self.nvars, zeta(self.order, self._exponent()))
        elif token == '(':
            base = self._expression()
            if self._next() != ')':
                raise ValueError("missing closing parenthesis")
        elif token == '-':
            return -self._factor()
        elif token[0] == self.symbol and token[1:].isdigit():
            base = MultiPoly.variable(self.nvars, int(token[1:]))
        else:
            raise ValueError(f"unexpected token {token!r}")
        return base ** self._exponent()


def parse_poly(text: str, nvars: int, order: int = 1, symbol: str = 'x') -> MultiPoly:
    """Parse the rendering grammar; j tokens are bound to zeta_order"""
    return _Parser(text, nvars, order, symbol).parse()


class PolyMatrix:
    """Square matrix of MultiPoly entries sharing one variable count"""

    def __init__(self, entries, nvars: Optional[int] = None):
        rows = [list(row) for row in entries]
        dim = len(rows)
        if any(len(row) != dim for row in rows):
            raise StructureMismatch("PolyMatrix must be square")
        if nvars is None:
            found = [e.nvars for row in rows for e in row if isinstance(e, MultiPoly)]
            if not found:
                raise StructureMismatch("cannot infer nvars from scalar entries")
            nvars = found[0]
        self.dim = dim
        self.nvars = nvars
        self.entries = np.empty((dim, dim), dtype=object)
        for r, row in enumerate(rows):
            for c, value in enumerate(row):
                if not isinstance(value, MultiPoly):
                    value = MultiPoly.constant(nvars, value)
                elif value.nvars != nvars:
                    raise StructureMismatch("entry nvars disagree")
                self.entries[r, c] = value

    @classmethod
    def identity(cls, dim: int, nvars: int) -> 'PolyMatrix':
        return cls([[1 if r == c else 0 for c in range(dim)] for r in range(dim)], nvars)

    @classmethod
    def _wrap(cls, array: np.ndarray, nvars: int) -> 'PolyMatrix':
        obj = object.__new__(cls)
        obj.dim = array.shape[0]
        obj.nvars = nvars
        obj.entries = array
        return obj

    def __getitem__(self, index):
        return self.entries[index]

    def _check(self, other: 'PolyMatrix') -> None:
        if self.dim != other.dim or self.nvars != other.nvars:
            raise StructureMismatch("PolyMatrix shapes disagree")

    def __add__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        self._check(other)
        return PolyMatrix._wrap(self.entries + other.entries, self.nvars)

    def __sub__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        self._check(other)
        return PolyMatrix._wrap(self.entries - other.entries, self.nvars)

    def __matmul__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        self._check(other)
        dim = self.dim
        out = np.empty((dim, dim), dtype=object)
        for r in range(dim):
            for c in range(dim):
                acc = MultiPoly.zero(self.nvars)
                for k in range(dim):
                    a, b = self.entries[r, k], other.entries[k, c]
                    if a and b:
                        acc = acc + a * b
                out[r, c] = acc
        return PolyMatrix._wrap(out, self.nvars)

    def scale(self, factor) -> 'PolyMatrix':
        out = np.empty((self.dim, self.dim), dtype=object)
        for index, value in np.ndenumerate(self.entries):
            out[index] = value * factor
        return PolyMatrix._wrap(out, self.nvars)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.dim != other.dim or self.nvars != other.nvars:
            return False
        return all(a == b for a, b in zip(self.entries.flat, other.entries.flat))

    __hash__ = None

    def scalar_part(self) -> Optional[MultiPoly]:
        """Return p when the matrix equals p times the identity, else None"""
        diagonal = self.entries[0, 0]
        for (r, c), value in np.ndenumerate(self.entries):
            if r == c and not value == diagonal:
                return None
            if r != c and value:
                return None
        return diagonal

    def rows(self) -> List[List[MultiPoly]]:
        return [list(row) for row in self.entries]

    def __repr__(self) -> str:
        return 'PolyMatrix([' + ', '.join('[' + ', '.join(str(e) for e in row) + ']' for row in self.entries) + '])'


def matrix_power(m: PolyMatrix, k: int) -> PolyMatrix:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"matrix_power needs k >= 1, got {k!r}")
    result = None
    base = m
    while k:
        if k & 1:
            result = base if result is None else result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def cofactor_det(entries, zero, max_dim: int = MAX_DET_DIM):
    """
    Determinant of a square array over any commutative ring.

    Laplace expansion down the rows, memoised on the set of remaining columns.
    """
    array = np.asarray(entries, dtype=object)
    dim = array.shape[0]
    if array.shape != (dim, dim):
        raise StructureMismatch("determinant needs a square matrix")
    if dim > max_dim:
        raise ValueError(f"cofactor determinant limited to dim <= {max_dim}, got {dim}")
    if dim == 0:
        return zero + 1
    memo = {}

    def expand(row: int, columns: Tuple[int, ...]):
        if row == dim - 1:
            return array[row, columns[0]]
        if columns in memo:
            return memo[columns]
        total = zero
        for pos, col in enumerate(columns):
            entry = array[row, col]
            if not entry:
                continue
            minor = expand(row + 1, columns[:pos] + columns[pos + 1:])
            if not minor:
                continue
            term = entry * minor
            total = total - term if pos % 2 else total + term
        memo[columns] = total
        return total

    return expand(0, tuple(range(dim)))


def poly_det(m: PolyMatrix) -> MultiPoly:
    return cofactor_det(m.entries, MultiPoly.zero(m.nvars))


def exact_matrix(rows) -> np.ndarray:
    """Object array of exact scalars (int, Fraction, Cyclotomic)"""
    data = [list(row) for row in rows]
    out = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for r, row in enumerate(data):
        for c, value in enumerate(row):
            out[r, c] = value
    return out


def exact_identity(dim: int) -> np.ndarray:
    return exact_matrix([[1 if r == c else 0 for c in range(dim)] for r in range(dim)])


def exact_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def exact_scalar_part(a: np.ndarray):
    """Return s when a equals s times the identity, else None"""
    s = a[0, 0]
    for (r, c), value in np.ndenumerate(a):
        if (r == c and not value == s) or (r != c and value):
            return None
    return s
