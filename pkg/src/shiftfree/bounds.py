"""Lower and upper bounds on the forced-translate threshold N.

For a finite abelian group G and a nonempty pattern S with stabilizer H (so S
is a union of H-cosets, h = |H| divides s = |S| divides nothing in particular,
and h divides g = |G|), N is the least size at which every subset of G of that
size contains some translate of S.  Four bounds are computed, all in exact
integer arithmetic:

  thm1_lower   g - g/h + 1        puncture one element of every H-coset
  lemma_lower  ceil(h^(1/s) g^(1-1/s))      probabilistic counting
  thm2_lower   g - g/h + ceil((g/h)^(1-h/s))  avoider lifted from the quotient
  upper        floor((s-1) g / s) + 1       each element lies in s translates

Ceilings of fractional powers are never taken in floating point: the helper
ceil_root_power finds the least integer t with t**root >= mantissa**exponent
by big-int binary search, so lemma_lower is the least t with t**s >= h*g**(s-1)
and the thm2 ceiling is the least t with t**s >= (g/h)**(s-h).

The real-valued inequality behind thm2_lower >= lemma_lower (for g >= h >= 1,
s >= 1: (h-1)/h*g + (g/h)**(1-h/s) >= h**(1/s) * g**(1-1/s)) is checked
numerically, pointwise and on dense grids; it has no symbolic proof here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DivisibilityError, EmptySetError
from .groups import GroupSubset, stabilizer

__all__ = [
    "thm1_lower",
    "upper_bound",
    "ceil_root_power",
    "lemma_lower",
    "thm2_lower",
    "BoundsReport",
    "bounds_report",
    "proposition_check",
    "proposition_margin_grid",
]


def thm1_lower(g: int, h: int) -> int:
    """Lower bound g - g/h + 1 from excluding one element per stabilizer coset."""
    if g < 1 or h < 1:
        raise ValueError(f"group and stabilizer orders must be >= 1, got g={g}, h={h}")
    if g % h != 0:
        raise DivisibilityError(f"stabilizer order {h} does not divide group order {g}")
    return g - g // h + 1


def upper_bound(g: int, s: int) -> int:
    """Upper bound floor((s-1)*g/s) + 1; every element lies in exactly s translates."""
    if g < 1:
        raise ValueError(f"group order must be >= 1, got {g}")
    if not 1 <= s <= g:
        raise ValueError(f"pattern size must satisfy 1 <= s <= {g}, got {s}")
    return (s - 1) * g // s + 1


def ceil_root_power(mantissa: int, exponent: int, root: int) -> int:
    """Least integer t >= 1 with t**root >= mantissa**exponent.

    Equals ceil(mantissa**(exponent/root)) except at exact powers, where the
    float ceiling can misround; everything here stays in big ints.
    """
    if mantissa < 1:
        raise ValueError(f"mantissa must be >= 1, got {mantissa}")
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    if root < 1:
        raise ValueError(f"root must be >= 1, got {root}")
    target = mantissa**exponent
    if target <= 1:
        return 1
    lo = 1
    hi = 1 << -(-target.bit_length() // root)  # 2**ceil(bits/root), so hi**root > target
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**root >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def lemma_lower(g: int, h: int, s: int) -> int:
    """Probabilistic lower bound: least t with t**s >= h * g**(s-1)."""
    _check_triple(g, h, s)
    return ceil_root_power(h * g ** (s - 1), 1, s)


def thm2_lower(g: int, h: int, s: int) -> int:
    """Quotient-construction lower bound g - g/h + ceil((g/h)**(1-h/s))."""
    _check_triple(g, h, s)
    return g - g // h + ceil_root_power(g // h, s - h, s)


def _check_triple(g: int, h: int, s: int) -> None:
    if g < 1 or h < 1 or s < 1:
        raise ValueError(f"orders must be >= 1, got g={g}, h={h}, s={s}")
    if g % h != 0:
        raise DivisibilityError(f"stabilizer order {h} does not divide group order {g}")
    if s % h != 0:
        raise DivisibilityError(f"stabilizer order {h} does not divide pattern size {s}")
    if s > g:
        raise ValueError(f"pattern size {s} exceeds group order {g}")


@dataclass(frozen=True)
class BoundsReport:
    """All four bounds for one (G, S) instance, plus the structural orders."""

    group_size: int
    s: int
    h: int
    thm1_lower: int
    lemma_lower: int
    thm2_lower: int
    upper: int
    best_lower: int

    @property
    def transversal_size(self) -> int:
        return self.group_size // self.h

    @property
    def exact_value(self) -> int | None:
        """N itself when the lower and upper bounds meet, else None."""
        return self.best_lower if self.best_lower == self.upper else None


def bounds_report(subset: GroupSubset) -> BoundsReport:
    """Compute every bound for the subset's group, sizes taken from its stabilizer."""
    if subset.bits == 0:
        raise EmptySetError("bounds need a nonempty pattern set")
    g = subset.group.size
    s = subset.size
    h = stabilizer(subset).order
    t1 = thm1_lower(g, h)
    t2 = thm2_lower(g, h, s)
    lm = lemma_lower(g, h, s)
    return BoundsReport(
        group_size=g,
        s=s,
        h=h,
        thm1_lower=t1,
        lemma_lower=lm,
        thm2_lower=t2,
        upper=upper_bound(g, s),
        best_lower=max(t1, lm, t2),
    )


def proposition_check(g: float, h: float, s: float, tolerance: float = 1e-9) -> bool:
    """Check (h-1)/h*g + (g/h)**(1-h/s) >= h**(1/s)*g**(1-1/s) - tolerance.

    Real-valued inputs with g >= h >= 1 and s >= 1; this is the floating-point
    margin test, not a proof.
    """
    if h < 1 or s < 1:
        raise ValueError(f"need h >= 1 and s >= 1, got h={h}, s={s}")
    if g < h:
        raise ValueError(f"need g >= h, got g={g}, h={h}")
    return _margin(float(g), float(h), float(s)) >= -tolerance


def proposition_margin_grid(
    h: int,
    g_max: int,
    s_values: "np.ndarray",
    chunk: int = 256,
) -> float:
    """Minimum margin of the thm2-vs-lemma real inequality over a dense grid.

    Evaluates every g in {h, 2h, ..., <= g_max} against every s in s_values
    for one integer h, vectorized and chunked to bound memory.  Returns the
    minimum of LHS - RHS over the grid; the inequality holds at tolerance tol
    iff the result is >= -tol.
    """
    if h < 1:
        raise ValueError(f"need h >= 1, got {h}")
    s = np.asarray(s_values, dtype=np.float64)
    if s.size == 0 or float(s.min()) < 1.0:
        raise ValueError("s_values must be nonempty with every entry >= 1")
    g_all = np.arange(h, g_max + 1, h, dtype=np.float64)
    worst = np.inf
    for start in range(0, g_all.size, chunk):
        g = g_all[start : start + chunk][:, None]
        margin = _margin(g, float(h), s[None, :])
        worst = min(worst, float(margin.min()))
    return worst


def _margin(g, h, s):
    return (h - 1.0) / h * g + (g / h) ** (1.0 - h / s) - h ** (1.0 / s) * g ** (1.0 - 1.0 / s)
