import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CertifiedValue:
    """
    Real quantity known to lie in ``[lo, hi]``.

    ``exact`` marks values computed without rounding (``lo == hi`` then holds the
    value). ``provenance`` records how the value was obtained (levels, radii, sample
    counts) and does not take part in comparisons.
    """

    lo: float
    hi: float
    exact: bool = False
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not (self.lo <= self.hi):
            raise ValueError(f"Certified bounds out of order: [{self.lo}, {self.hi}].")

    @property
    def mid(self):
        if math.isinf(self.hi):
            return self.hi
        return (self.lo + self.hi) / 2

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def finite(self):
        return math.isfinite(self.hi)

    def to_dict(self):
        out = {
            "lo": self.lo,
            "hi": self.hi if math.isfinite(self.hi) else None,
            "exact": self.exact,
        }
        out.update(self.provenance)
        return out

    def __repr__(self):
        from .._display import AlignedText, draw_title

        aligned = AlignedText()
        aligned.add_item("lo", self.lo)
        aligned.add_item("hi", self.hi)
        aligned.add_item("exact", self.exact)
        for k, v in self.provenance.items():
            aligned.add_item(k, v)
        return draw_title("Certified value") + aligned.draw()
