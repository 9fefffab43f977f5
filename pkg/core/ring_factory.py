# -*- coding: utf-8 -*-
"""
Ring Factory - coefficient rings for C_N numbers
Hands out the capability set (zero, one, coerce) that lets one multiplication
routine serve rational, cyclotomic, symbolic and floating coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from .exactnum import Cyclotomic, as_cyclotomic


@dataclass(frozen=True)
class CoefficientRing:
    """Capability set of a commutative coefficient ring"""
    name: str
    zero: Any
    one: Any
    coerce: Callable[[Any], Any]
    exact: bool = True

    def is_zero(self, value) -> bool:
        if self.exact:
            return not value
        return abs(value) == 0.0


def _to_fraction(value) -> Fraction:
    if isinstance(value, Cyclotomic):
        return value.to_fraction()
    return Fraction(value)


class RingFactory:
    """Factory for creating the appropriate coefficient ring"""

    KINDS = ('rational', 'cyclotomic', 'poly', 'float', 'complex')

    @staticmethod
    def create_ring(kind: Optional[str] = None, nvars: int = 0) -> CoefficientRing:
        """Create coefficient ring based on kind; 'poly' needs the variable count"""
        if not kind:
            from utils.settings import get_setting
            kind = get_setting('algebra/ring', 'rational')

        if kind == 'rational':
            return CoefficientRing('rational', Fraction(0), Fraction(1), _to_fraction)
        elif kind == 'cyclotomic':
            return CoefficientRing('cyclotomic', Cyclotomic.rational(0), Cyclotomic.rational(1), as_cyclotomic)
        elif kind == 'poly':
            from .polyring import MultiPoly

            def coerce(value):
                if isinstance(value, MultiPoly):
                    return value
                return MultiPoly.constant(nvars, value)

            return CoefficientRing('poly', MultiPoly.zero(nvars), MultiPoly.one(nvars), coerce)
        elif kind == 'float':
            return CoefficientRing('float', 0.0, 1.0, float, exact=False)
        elif kind == 'complex':
            return CoefficientRing('complex', 0j, 1 + 0j, complex, exact=False)
        raise ValueError(f"unknown coefficient ring {kind!r}; expected one of {RingFactory.KINDS}")

