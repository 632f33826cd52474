from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

# Rat is the standard-library Fraction: always in lowest terms with a positive
# denominator, and 0 is 0/1.
Rat = Fraction
RatLike = Union[Fraction, int, str]
Vector = Tuple[Fraction, ...]


def to_rat(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot read {type(value).__name__} as an exact rational")


def parse_rat(text: str) -> Fraction:
    """Parse "p" or "p/q". Decimal and exponent notation is rejected."""
    cleaned = text.strip()
    if not cleaned or any(ch in cleaned for ch in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        value = Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc
    return value


def format_rat(value: Fraction) -> str:
    return str(Fraction(value))


def vector(values: Iterable[RatLike]) -> Vector:
    return tuple(to_rat(v) for v in values)


def zero_vector(n: int) -> Vector:
    return tuple(Fraction(0) for _ in range(n))


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def add_vectors(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def scale_vector(s: Fraction, x: Sequence[Fraction]) -> Vector:
    return tuple(s * a for a in x)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))
