"""
Hit and sample records

A Hit is a verified good example (|k| small against sqrt(x)) together with
where it was found. A RatioSample is one observation of |k|/sqrt(x) for the
distribution analysis.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from ..arith.exact import HallPoint, inverse_ratio_decimal, ratio_decimal
from .enums import HitSource


@dataclass(frozen=True, slots=True)
class Hit:
    """
    A verified (x, y, k) with its provenance

    Attributes:
        point: The verified point
        r_display: sqrt(x)/|k| to two decimals
        b: Denominator of the search cell (search hits only)
        c2: 2C of the search cell (search hits only)
        a: Numerator a of t = a/b (search hits only)
        source: Discovery provenance
    """

    point: HallPoint
    r_display: str
    b: Optional[int] = None
    c2: Optional[int] = None
    a: Optional[int] = None
    source: HitSource = HitSource.SEARCH

    @classmethod
    def from_point(
        cls,
        point: HallPoint,
        source: HitSource,
        b: Optional[int] = None,
        c2: Optional[int] = None,
        a: Optional[int] = None,
    ) -> "Hit":
        return cls(
            point=point,
            r_display=ratio_decimal(point.x, point.k, 2),
            b=b,
            c2=c2,
            a=a,
            source=source,
        )

    @property
    def x(self) -> int:
        return self.point.x

    @property
    def y(self) -> int:
        return self.point.y

    @property
    def k(self) -> int:
        return self.point.k

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary (the JSON-lines schema)"""
        return {
            "x": self.x,
            "y": self.y,
            "k": self.k,
            "r": self.r_display,
            "b": self.b,
            "C2": self.c2,
            "a": self.a,
            "source": self.source.value,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Hit":
        """Create from dictionary"""

        def optional_int(value: Any) -> Optional[int]:
            return None if value in (None, "", "-") else int(value)

        return cls(
            point=HallPoint(x=int(data["x"]), y=int(data["y"]), k=int(data["k"])),
            r_display=str(data["r"]),
            b=optional_int(data.get("b")),
            c2=optional_int(data.get("C2")),
            a=optional_int(data.get("a")),
            source=HitSource(data["source"]),
        )


@dataclass(frozen=True, slots=True)
class RatioSample:
    """
    One observation of |k|/sqrt(x)

    The ratio is kept exactly as the pair (k^2, x); `ratio` is its
    six-decimal rendering.
    """

    x: int
    k: int
    ratio: str

    @classmethod
    def from_point(cls, x: int, k: int, digits: int = 6) -> "RatioSample":
        return cls(x=x, k=k, ratio=inverse_ratio_decimal(x, k, digits))

    @property
    def k_squared(self) -> int:
        return self.k * self.k
