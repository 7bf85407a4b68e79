"""Ground fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Optional, Union

from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ

from exceptions import DimensionMismatchError, FormatError


class FieldKind(str, Enum):
    """Supported ground field families."""

    RATIONALS = "rationals"
    PRIME = "prime-field"


@lru_cache(maxsize=None)
def _domain(kind: FieldKind, characteristic: Optional[int]):
    if kind == FieldKind.RATIONALS:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class FieldSpec:
    """Exact ground field; elements are sympy domain elements of `domain`."""

    kind: FieldKind
    characteristic: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == FieldKind.PRIME:
            if self.characteristic is None or not isprime(self.characteristic):
                raise FormatError(f"prime field needs a prime characteristic, got {self.characteristic!r}")
        elif self.characteristic is not None:
            raise FormatError("the rationals carry no characteristic")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME, p)

    @classmethod
    def parse(cls, label: str) -> "FieldSpec":
        """Parse the CLI labels `q`, `gf5`, `gf7`, ... ."""
        text = label.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls.rationals()
        if text.startswith("gf") and text[2:].isdigit():
            return cls.prime(int(text[2:]))
        raise FormatError(f"unknown field label '{label}' (expected q or gf<p>)")

    @property
    def label(self) -> str:
        return "q" if self.kind == FieldKind.RATIONALS else f"gf{self.characteristic}"

    @property
    def domain(self):
        return _domain(self.kind, self.characteristic)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def convert(self, value: Union[str, int, Any]):
        """Convert an int, a "a/b" string or a sympy Rational into a field element."""
        domain = self.domain
        if isinstance(value, int):
            return domain.convert(value)
        try:
            rational = Rational(value) if isinstance(value, str) else Rational(str(value))
        except (TypeError, ValueError) as exc:
            raise FormatError(f"not an exact scalar: {value!r}") from exc
        numerator = domain.convert(int(rational.p))
        denominator = domain.convert(int(rational.q))
        if not denominator:
            raise FormatError(f"denominator of {value!r} vanishes in {self.label}")
        return domain.quo(numerator, denominator)

    def to_str(self, element) -> str:
        return str(self.domain.to_sympy(element))

    def require_same(self, other: "FieldSpec") -> None:
        if self != other:
            raise DimensionMismatchError(f"field mismatch: {self.label} vs {other.label}")

    def primitive_root_of_unity(self, order: int):
        """Return an element of exact multiplicative order `order`, or raise."""
        if self.kind == FieldKind.RATIONALS and order in (1, 2):
            return self.one if order == 1 else -self.one
        if self.kind != FieldKind.PRIME or (self.characteristic - 1) % order:
            raise FormatError(f"{self.label} has no primitive root of unity of order {order}")
        one = self.one
        for candidate in range(2, self.characteristic):
            element = self.convert(candidate)
            power = one
            exact = True
            for step in range(1, order + 1):
                power = power * element
                if power == one and step < order:
                    exact = False
                    break
            if exact and power == one:
                return element
        if order == 1:
            return one
        raise FormatError(f"{self.label} has no primitive root of unity of order {order}")
